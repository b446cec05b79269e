"""Randomized construction of generic group elements.

Level 1 starts from a reduced word in the nine standard free generators,
wrapped in reverse cancellations.  Each later level lifts the current loop
one level up (two letters per edge, staying on the white copy), splices a
free-group word over the three small generators into each block, and adds
more reverse cancellations, all without disturbing the block structure:
inside a block consecutive letters cancel in pairs, so cuts land exactly
at the block junctions and the new word projects back onto the old one.
Deadlines K(n) force the reduced chain projections to stabilize on
schedule; every random choice is logged so runs are replayable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .words import EMPTY, Letter, Word, LETTERS, X_NEG, X_POS, Y_NEG, Y_POS, invert_word, parse_word, reduce_word
from .graph import is_loop
from .projection import project, stabilized_projection
from .sequences import CoherentSequence, validate


GENERATORS: dict[str, Word] = {
    "A1": parse_word("XyyX"),
    "B1": parse_word("YxyX"),
    "C1": parse_word("yXyX"),
    "A2": parse_word("xyyyyX"),
    "B2": parse_word("xyxxyX"),
    "C2": parse_word("xyXXyX"),
    "A3": parse_word("xxxyyX"),
    "B3": parse_word("xxyxyX"),
    "C3": parse_word("xxYXyX"),
}

SMALL_GENERATORS = ("A1", "B1", "C1")


def standard_generators() -> dict[str, Word]:
    return dict(GENERATORS)


def substitute(symbols: list[tuple[str, int]]) -> Word:
    """Spell out a word over named generators as plain letters, without
    reducing."""
    w = EMPTY
    for name, exp in symbols:
        g = GENERATORS[name]
        w = w.concat(g if exp > 0 else invert_word(g))
    return w


def lift_loop(w: Word, n: int) -> Word:
    """The one-level lift of a loop: trace it while keeping the new
    smallest disk white, recording two letters per original letter.  Each
    half-step is an x exactly when the disk exposed on the traversed edge
    shows white, matching the color of the new disk."""
    if w.partial:
        raise ValueError("cannot lift a partial word")
    if n < 1:
        raise ValueError("lift needs level >= 1")
    if not is_loop(w, n):
        raise ValueError("lift_loop needs a based loop")
    from .graph import _d_of, _step

    bits = n + 1
    num, mask = 0, 0
    out: list[Letter] = []
    for a in w.letters:
        eps = a.exp
        d_t = _d_of(num, bits)
        num2, mask2 = _step(num, mask, bits, eps, 1 if a.is_y else 0)
        d_s = _d_of(num2, bits)
        edge_at_t = (mask2 >> (bits - d_t)) & 1  # color the far end shows at d(t)
        edge_at_s = (mask >> (bits - d_s)) & 1   # color this end shows at d(s)
        out.append(_letter("x" if edge_at_t == 0 else "y", eps))
        out.append(_letter("x" if edge_at_s == 0 else "y", eps))
        num, mask = num2, mask2
    return Word(tuple(out))


@dataclass
class LevelChoice:
    w_symbols: list[list[tuple[str, int]]]
    insertions: list[list[tuple[int, Letter]]]
    K: int
    fallback: bool = False


@dataclass
class GeneratorChoice:
    """Replayable log of every random decision."""

    seed: int
    g1_symbols: list[tuple[str, int]] = field(default_factory=list)
    g1_insertions: list[tuple[int, Letter]] = field(default_factory=list)
    K1: int = 2
    levels: dict[int, LevelChoice] = field(default_factory=dict)


class ConstraintError(ValueError):
    """A supplied choice violates one of the construction rules."""


def _insert_pair(letters: list[Letter], p: int, z: Letter) -> None:
    if not 1 <= p <= len(letters) + 1:
        raise ConstraintError(f"insertion position {p} out of range")
    letters[p - 1:p - 1] = [z, z.inverse()]


def _insert_paired(
    letters: list[Letter], p: int, z: Letter, prefix: Letter | None
) -> None:
    """Insertion that preserves the opposite-exponent pairing of the block
    read in context (prefix letter counts toward the parity)."""
    if not 1 <= p <= len(letters) + 1:
        raise ConstraintError(f"insertion position {p} out of range")
    before = (p - 1) + (1 if prefix is not None else 0)
    if before % 2 == 1:
        prev = letters[p - 2] if p >= 2 else prefix
        assert prev is not None
        if z.exp != -prev.exp:
            raise ConstraintError("mid-pair insertion must cancel the exponent")
    letters[p - 1:p - 1] = [z, z.inverse()]


def _random_paired_insertions(
    rng: random.Random, letters: list[Letter], count: int, prefix: Letter | None
) -> list[tuple[int, Letter]]:
    log = []
    for _ in range(count):
        p = rng.randint(1, len(letters) + 1)
        before = (p - 1) + (1 if prefix is not None else 0)
        if before % 2 == 1:
            prev = letters[p - 2] if p >= 2 else prefix
            assert prev is not None
            base = rng.choice("xy")
            z = _letter(base, -prev.exp)
        else:
            z = rng.choice(LETTERS)
        _insert_paired(letters, p, z, prefix)
        log.append((p, z))
    return log


def _letter(base: str, exp: int) -> Letter:
    if base == "x":
        return X_POS if exp > 0 else X_NEG
    return Y_POS if exp > 0 else Y_NEG


def extend_level(
    omega: Word,
    n: int,
    w_symbols: list[list[tuple[str, int]]],
    insertions: list[list[tuple[int, Letter]]] | None = None,
    rng: random.Random | None = None,
    insertion_budget: int = 0,
    force_nonempty_on_collision: bool = False,
) -> tuple[Word, LevelChoice]:
    """One recursion step: build a level-(n+1) loop over omega from the
    block words w_symbols (one per block, over A1/B1/C1) and reverse
    cancellations.  Raises ConstraintError on rule violations."""
    k = len(omega) + 1
    if len(w_symbols) != k:
        raise ConstraintError(f"need {k} block words, got {len(w_symbols)}")
    for sym in w_symbols:
        for j, (name, exp) in enumerate(sym):
            if name not in SMALL_GENERATORS:
                raise ConstraintError(f"{name} is not one of {SMALL_GENERATORS}")
            if j and sym[j - 1][0] == name and sym[j - 1][1] == -exp:
                raise ConstraintError("block word is not reduced over the generators")
    lift = lift_loop(omega, n)
    us = list(lift.letters[0::2])
    vs = list(lift.letters[1::2])
    if force_nonempty_on_collision:
        for i in range(1, k - 1):
            if vs[i - 1] == us[i].inverse() and not w_symbols[i]:
                raise ConstraintError(
                    f"block {i + 1}: cancelling junction needs a nonempty word"
                )
    blocks: list[list[Letter]] = []
    prefixes: list[Letter | None] = []
    for i in range(k):
        parts: list[Letter] = []
        if i > 0:
            parts.append(vs[i - 1])
        parts.extend(substitute(w_symbols[i]).letters)
        if i < k - 1:
            parts.append(us[i])
        blocks.append(list(reduce_word(Word(tuple(parts))).letters))
        prefixes.append(vs[i - 1].inverse() if i > 0 else None)
    chosen: list[list[tuple[int, Letter]]] = []
    if insertions is not None:
        if len(insertions) != k:
            raise ConstraintError(f"need {k} insertion lists")
        for i, ins in enumerate(insertions):
            if not blocks[i] and not ins and k > 1:
                # a cancelled junction with no explicit choice: splice the
                # junction letters back (the canonical reverse
                # cancellation), so empty choices degenerate to the lift
                blocks[i] = [vs[i - 1], us[i]]
            for p, z in ins:
                _insert_paired(blocks[i], p, z, prefixes[i])
            chosen.append(list(ins))
    else:
        assert rng is not None
        budget = insertion_budget
        for i in range(k):
            count = 0
            if not blocks[i]:
                count = 1 + rng.randrange(2)
            elif budget > 0 and rng.random() < 0.5:
                count = rng.randint(1, budget)
            budget -= count
            chosen.append(
                _random_paired_insertions(rng, blocks[i], count, prefixes[i])
            )
    letters: list[Letter] = []
    for b in blocks:
        letters.extend(b)
    out = Word(tuple(letters))
    if project(out, n + 1) != omega:
        raise AssertionError("construction broke the projection contract")
    return out, LevelChoice(w_symbols, chosen, K=0)


@dataclass
class GeneratorParams:
    g1_max_symbols: int = 6
    max_insertions: int = 3
    w_max_symbols: int = 2
    w_max_blocks: int = 3
    k_mean_gap: int = 2


def _random_generator_word(
    rng: random.Random, names: tuple[str, ...], max_len: int
) -> list[tuple[str, int]]:
    out: list[tuple[str, int]] = []
    for _ in range(rng.randint(0, max_len)):
        while True:
            sym = (rng.choice(names), rng.choice((1, -1)))
            if not out or not (out[-1][0] == sym[0] and out[-1][1] == -sym[1]):
                out.append(sym)
                break
    return out


def _random_K(rng: random.Random, n: int, depth: int, mean_gap: int) -> int:
    gap = 1
    while gap < mean_gap + 2 and rng.random() > 1.0 / mean_gap:
        gap += 1
    return min(n + gap, depth) if depth > n else n + gap


def random_element(
    seed: int, depth: int, params: GeneratorParams | None = None
) -> tuple[CoherentSequence, GeneratorChoice]:
    """A generic certified group element of the given depth; identical
    seeds give identical output."""
    params = params or GeneratorParams()
    rng = random.Random(seed)
    choice = GeneratorChoice(seed)
    choice.g1_symbols = _random_generator_word(
        rng, tuple(GENERATORS), params.g1_max_symbols
    )
    g1 = reduce_word(substitute(choice.g1_symbols))
    letters = list(g1.letters)
    for _ in range(rng.randint(0, params.max_insertions)):
        p = rng.randint(1, len(letters) + 1)
        z = rng.choice(LETTERS)
        _insert_pair(letters, p, z)
        choice.g1_insertions.append((p, z))
    words = [Word(tuple(letters))]
    deadlines = {1: _random_K(rng, 1, depth, params.k_mean_gap)}
    choice.K1 = deadlines[1]
    for n in range(1, depth):
        omega = words[-1]
        k = len(omega) + 1
        due = [m for m, K in deadlines.items() if K == n + 1]
        for attempt in (False, True):
            w_symbols: list[list[tuple[str, int]]] = []
            live = set(rng.sample(range(k), min(params.w_max_blocks, k)))
            for i in range(k):
                if i in live and rng.random() < 0.7:
                    w_symbols.append(
                        _random_generator_word(rng, SMALL_GENERATORS, params.w_max_symbols)
                    )
                else:
                    w_symbols.append([])
            if attempt:
                # fallback: a cancelling junction must host a nonempty word
                lift = lift_loop(omega, n)
                us = lift.letters[0::2]
                vs = lift.letters[1::2]
                for i in range(1, k - 1):
                    if vs[i - 1] == us[i].inverse() and not w_symbols[i]:
                        w_symbols[i] = [
                            (rng.choice(SMALL_GENERATORS), rng.choice((1, -1)))
                        ]
            nxt, lc = extend_level(
                omega,
                n,
                w_symbols,
                rng=rng,
                insertion_budget=rng.randint(0, params.max_insertions),
            )
            if all(
                stabilized_projection(nxt, n + 1, m) == words[m - 1] for m in due
            ):
                break
            if attempt:
                raise AssertionError("fallback failed to stabilize on schedule")
        lc.K = deadlines.get(n + 1, 0)
        lc.fallback = attempt
        choice.levels[n + 1] = lc
        words.append(nxt)
        if n + 1 < depth:
            deadlines[n + 1] = _random_K(rng, n + 1, depth, params.k_mean_gap)
    # store the stabilization snapshot: every level is the unreduced chain
    # projection of the deepest reduced word, which by the deadline
    # enforcement reproduces the constructed words at certified levels
    from .sequences import stabilize_prefix

    snap = stabilize_prefix([reduce_word(w) for w in words], f"random:{seed}")
    certs = dict(snap.certificates)
    for m, K in deadlines.items():
        if K <= depth and stabilized_projection(snap.word_at(K), K, m) == snap.word_at(m):
            certs[m] = min(certs.get(m, K), K)
    seq = CoherentSequence(snap.words, certs, f"random:{seed}", "loop")
    report = validate(seq)
    if not report.ok:
        raise AssertionError(f"generated element fails validation: {report.errors}")
    return seq, choice
