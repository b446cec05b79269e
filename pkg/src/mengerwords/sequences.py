"""Coherent word sequences over the tower of levels.

A sequence stores one word per level starting at level 1, coherent under
projection.  Infinite objects are represented by finite prefixes plus a
provenance tag; every "for sufficiently large k" clause is made
operational by computing at the two deepest stored levels and certifying
on agreement (deepening never invalidates a certificate, by the
cancellation monotonicity of reduced-chain projections).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .words import EMPTY, Word, LETTERS, invert_word, parse_word, reduce_word
from .graph import is_loop
from .projection import (
    _project_codes,
    decode_word,
    encode_word,
    project,
    project_chain,
    project_chain_codes,
    stabilized_projection,
)


def _chain_all_levels(w: Word, depth: int) -> list[Word]:
    """Projections of a level-`depth` word to every level, one pass."""
    out = [w]
    cs, pt = encode_word(w)
    for lvl in range(depth, 1, -1):
        cs, pt = _project_codes(cs, pt, lvl)
        out.append(decode_word(cs, pt))
    out.reverse()
    return out


@dataclass(frozen=True)
class CoherentSequence:
    """Words for levels 1..depth plus stabilization certificates:
    certificates[n] = smallest stored k witnessing that the unreduced
    chain projection of reduce(word k) equals word n."""

    words: tuple[Word, ...]
    certificates: dict[int, int] = field(default_factory=dict)
    provenance: str = "raw"
    kind: str = "loop"  # "loop" for group elements, "path" otherwise

    @property
    def depth(self) -> int:
        return len(self.words)

    def word_at(self, n: int) -> Word:
        return self.words[n - 1]

    def certified(self, n: int) -> bool:
        return n in self.certificates

    def to_json(self) -> dict:
        return {
            "levels": [
                {"n": i + 1, "word": str(w)} for i, w in enumerate(self.words)
            ],
            "certificates": {str(n): k for n, k in sorted(self.certificates.items())},
            "provenance": self.provenance,
            "kind": self.kind,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CoherentSequence":
        levels = sorted(data["levels"], key=lambda d: d["n"])
        if [d["n"] for d in levels] != list(range(1, len(levels) + 1)):
            raise ValueError("levels must cover 1..N")
        words = tuple(parse_word(d["word"]) for d in levels)
        certs = {int(n): int(k) for n, k in data.get("certificates", {}).items()}
        return cls(words, certs, data.get("provenance", "raw"), data.get("kind", "loop"))


def identity_sequence(depth: int) -> CoherentSequence:
    return CoherentSequence(
        (EMPTY,) * depth,
        {n: n + 1 for n in range(1, depth)},
        provenance="identity",
    )


@dataclass
class ValidationReport:
    ok: bool
    errors: list[str]


def validate(seq: CoherentSequence) -> ValidationReport:
    """Check coherence at every stored level, loop membership for group
    elements, and every stored certificate."""
    errors: list[str] = []
    for n in range(1, seq.depth):
        if project(seq.word_at(n + 1), n + 1) != seq.word_at(n):
            errors.append(f"level {n}: word {n + 1} does not project to word {n}")
            break
    if seq.kind == "loop":
        for n in range(1, seq.depth + 1):
            w = seq.word_at(n)
            if w.partial or not is_loop(w, n):
                errors.append(f"level {n}: word is not a based loop")
                break
    for n, k in sorted(seq.certificates.items()):
        if not (1 <= n < k <= seq.depth):
            errors.append(f"certificate {n}->{k} out of range")
            continue
        if stabilized_projection(seq.word_at(k), k, n) != seq.word_at(n):
            errors.append(f"certificate {n}->{k} fails")
    return ValidationReport(not errors, errors)


def stabilize_prefix(
    reduced_words: list[Word] | tuple[Word, ...],
    provenance: str = "stabilized",
    kind: str = "loop",
) -> CoherentSequence:
    """Stabilization of a reduced coherent prefix (g_1..g_N): level n gets
    the unreduced chain projection of g_N, certified at the smallest depth
    from which those chains are constant through N."""
    g = tuple(reduced_words)
    depth = len(g)
    chains: dict[tuple[int, int], Word] = {}  # (n, k) -> chain of g_k to level n
    for k in range(1, depth + 1):
        w = g[k - 1]
        chains[(k, k)] = w
        for n in range(k - 1, 0, -1):
            w = project(w, n + 1)
            chains[(n, k)] = w
    words = tuple(chains[(n, depth)] for n in range(1, depth + 1))
    certs: dict[int, int] = {}
    for n in range(1, depth - 1):
        if chains[(n, depth - 1)] != words[n - 1]:
            continue  # still growing at the deepest pair: uncertified
        k = depth - 1
        while k - 1 > n and chains[(n, k - 1)] == words[n - 1]:
            k -= 1
        certs[n] = k
    return CoherentSequence(words, certs, provenance, kind)


def invert_sequence(a: CoherentSequence) -> CoherentSequence:
    """Termwise inverse; reduction and coherence are preserved termwise."""
    return CoherentSequence(
        tuple(invert_word(w) for w in a.words),
        dict(a.certificates),
        f"inverse({a.provenance})",
        a.kind,
    )


def star(a: CoherentSequence, b: CoherentSequence) -> CoherentSequence:
    """Group operation: termwise concatenation, reduction, and
    restabilization from the deepest common stored level.  The result's
    depth and missing certificates say how far it is determined; no
    deeper knowledge is pretended."""
    depth = min(a.depth, b.depth)
    h = [reduce_word(a.word_at(n).concat(b.word_at(n))) for n in range(1, depth + 1)]
    out = stabilize_prefix(h, f"star({a.provenance},{b.provenance})")
    return out


def word_cap(w: Word, v: Word) -> Word:
    """Stable initial match of two words: the longest common prefix of
    their letters, slash-separated exactly when the shorter word ends
    there inside an edge."""
    m = 0
    while m < len(w.letters) and m < len(v.letters) and w.letters[m] == v.letters[m]:
        m += 1
    partial = (m == len(w.letters) and w.partial) or (m == len(v.letters) and v.partial)
    if m == 0:
        return EMPTY
    return Word(w.letters[:m], partial)


def _completion_codes(codes: list[int], pend: int | None, k: int, n: int) -> list[int]:
    """Detour insertion for the completion of a level-k word down to level
    n: after every position whose running exponent sum is +-1 modulo
    2^(k-n) while neither neighboring position sits on a multiple, the
    letter is repeated with its inverse.  The pending letter only feeds
    the final neighbor condition."""
    mod = 1 << (k - n)
    p = len(codes)
    sums = [0]
    for c in codes:
        sums.append(sums[-1] + (-1 if c & 1 else 1))
    if pend is not None:
        sums.append(sums[-1] + (-1 if pend & 1 else 1))
    out: list[int] = []
    for i in range(1, p + 1):
        c = codes[i - 1]
        out.append(c)
        if mod == 1 or sums[i] % mod not in (1, mod - 1):
            continue
        if sums[i - 1] % mod == 0:
            continue
        if i + 1 < len(sums) and sums[i + 1] % mod == 0:
            continue
        out.append(c)
        out.append(c ^ 1)
    return out


def completion_word(w: Word, k: int, n: int) -> Word:
    codes, partial = encode_word(w)
    body, pend = (codes[:-1], codes[-1]) if partial else (codes, None)
    return decode_word(_completion_codes(body, pend, k, n), False)


def complete(seq: CoherentSequence) -> CoherentSequence:
    """Completion: level n is the chain projection of the detour-inserted
    deepest word; certified when the second-deepest level agrees."""
    N = seq.depth
    if N < 3:
        raise ValueError("completion needs stored depth >= 3")
    out_depth = N - 2
    words = []
    certs: dict[int, int] = {}
    deep_codes, deep_partial = encode_word(seq.word_at(N))
    if deep_partial:
        deep_body, deep_pend = deep_codes[:-1], deep_codes[-1]
    else:
        deep_body, deep_pend = deep_codes, None
    prev_codes, prev_partial = encode_word(seq.word_at(N - 1))
    if prev_partial:
        prev_body, prev_pend = prev_codes[:-1], prev_codes[-1]
    else:
        prev_body, prev_pend = prev_codes, None
    # chains of the detour-free words are shared across target levels
    plain_deep = _chain_all_levels(decode_word(deep_body, False), N)
    plain_prev = _chain_all_levels(decode_word(prev_body, False), N - 1)
    for n in range(1, out_depth + 1):
        eta = _completion_codes(deep_body, deep_pend, N, n)
        if eta == deep_body:
            deep = plain_deep[n - 1]
        else:
            cs, pt = project_chain_codes(eta, False, N, n)
            deep = decode_word(cs, pt)
        words.append(deep)
        if N - 1 > n + 1:
            eta_p = _completion_codes(prev_body, prev_pend, N - 1, n)
            if eta_p == prev_body:
                prev = plain_prev[n - 1]
            else:
                cs_p, pt_p = project_chain_codes(eta_p, False, N - 1, n)
                prev = decode_word(cs_p, pt_p)
            if prev == deep:
                certs[n] = N
    return CoherentSequence(
        tuple(words), certs, f"completion({seq.provenance})", seq.kind
    )


def cap(a: CoherentSequence, b: CoherentSequence) -> CoherentSequence:
    """Stable initial match of two sequences: chain projections of the
    deepest termwise word match, certified on two-depth agreement."""
    depth = min(a.depth, b.depth)
    words = _chain_all_levels(word_cap(a.word_at(depth), b.word_at(depth)), depth)
    certs: dict[int, int] = {}
    if depth >= 2:
        prev = _chain_all_levels(
            word_cap(a.word_at(depth - 1), b.word_at(depth - 1)), depth - 1
        )
        for n in range(1, depth - 1):
            if prev[n - 1] == words[n - 1]:
                certs[n] = depth
    return CoherentSequence(
        tuple(words), certs, f"cap({a.provenance},{b.provenance})", "path"
    )


def is_terminating(seq: CoherentSequence) -> bool:
    return not seq.word_at(seq.depth).partial


def _project_variant(deepest: Word, depth: int) -> CoherentSequence:
    return CoherentSequence(
        tuple(_chain_all_levels(deepest, depth)), {}, "equivalence-variant", "path"
    )


@dataclass
class EquivalenceClass:
    classification: str  # "terminating" or "singleton"
    representative: CoherentSequence
    members: list[CoherentSequence]


def equivalence_class(seq: CoherentSequence) -> EquivalenceClass:
    """The members of seq's equivalence class constructible at stored
    depth: the terminating representative, the pick-up-withheld variant,
    and the four set-down extensions; singletons otherwise."""
    N = seq.depth
    deepest = seq.word_at(N)
    if deepest.partial:
        return EquivalenceClass("singleton", seq, [seq])
    members = [seq]
    if len(deepest) > 0:
        withheld = Word(deepest.letters, True)
        members.append(_project_variant(withheld, N))
    for z in LETTERS:
        extended = Word(deepest.letters + (z,), True)
        members.append(_project_variant(extended, N))
    return EquivalenceClass("terminating", seq, members)


def equivalent(a: CoherentSequence, b: CoherentSequence) -> bool:
    """Termwise test of the word-sequence equivalence on stored data."""
    depth = min(a.depth, b.depth)
    if depth == 0:
        return True
    a_words = a.words[:depth]
    b_words = b.words[:depth]
    if a_words == b_words:
        return True
    # equivalent sequences differ only in trailing pickup/set-down
    # bookkeeping: deepest letter lists must be prefix-compatible
    wa, wb = a_words[-1], b_words[-1]
    if abs(len(wa.letters) - len(wb.letters)) > 1:
        return False
    if wa.letters[: len(wb.letters)] != wb.letters[: len(wa.letters)]:
        return False
    for term in (a, b):
        if not is_terminating(term):
            continue
        cls = equivalence_class(
            CoherentSequence(term.words[:depth], {}, term.provenance, term.kind)
        )
        for member in cls.members:
            if member.words[:depth] == (b_words if term is a else a_words):
                return True
    return False
