"""Named word and sequence families used throughout the tests and CLI.

ell(k) is the loop that carries the whole stack across while turning the
k-th smallest disk over twice; the he1 element commutes deeper and deeper
ell loops and is the standard example of a coherent sequence that never
stabilizes at level 1.
"""

from __future__ import annotations

from .words import EMPTY, Word, X_NEG, X_POS, Y_NEG, invert_word
from .sequences import CoherentSequence


def _x_run(count: int) -> tuple:
    if count >= 0:
        return (X_POS,) * count
    return (X_NEG,) * (-count)


def ell(k: int, n: int | None = None) -> Word:
    """x^(2^(k-1)) y^-1 x^(2-2^k) y^-1 x^(2^(k-1)); a loop at every level
    n >= k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if n is not None and n < k:
        raise ValueError(f"ell({k}) needs level >= {k}")
    half = 1 << (k - 1)
    return Word(
        _x_run(half) + (Y_NEG,) + _x_run(2 - (1 << k)) + (Y_NEG,) + _x_run(half)
    )


def commutator(a: Word, b: Word) -> Word:
    return a.concat(b).concat(invert_word(a)).concat(invert_word(b))


def he1_level_word(n: int) -> Word:
    """[n,n-1][n,n-2]...[n,1] with [n,k] the commutator of ell(n), ell(k)."""
    if n == 1:
        return EMPTY
    w = EMPTY
    for k in range(n - 1, 0, -1):
        w = w.concat(commutator(ell(n), ell(k)))
    return w


def he1_element(depth: int) -> CoherentSequence:
    """The element with level words [n,n-1]...[n,1], stored as the chain
    snapshot of their reductions (the raw commutator words are coherent
    only after reduction).  Not locally eventually constant, so no level
    ever certifies."""
    from .words import reduce_word
    from .sequences import stabilize_prefix

    g = [reduce_word(he1_level_word(n)) for n in range(1, depth + 1)]
    seq = stabilize_prefix(g, "he1")
    return seq


def L_sequence(i: int, depth: int) -> CoherentSequence:
    """L_i: i-1 empty words followed by ell(1), ell(2), ...; a group
    element turning only the (i+1)-st disk."""
    if i < 1:
        raise ValueError("i must be >= 1")
    words = []
    for n in range(1, depth + 1):
        words.append(EMPTY if n < i else ell(n + 1 - i))
    certs = {n: n + 1 for n in range(1, depth)}
    return CoherentSequence(tuple(words), certs, f"L{i}", "loop")


def empty_sequence(depth: int) -> CoherentSequence:
    return CoherentSequence((EMPTY,) * depth, {n: n + 1 for n in range(1, depth)},
                            "empty", "loop")


def he3_substitute(n: int, spelling: list[tuple[int, int]]) -> Word:
    """Natural letter substitution for words over the loops alpha_{n,i} =
    ell(n+1-i): spelling is a list of (i, exponent) pairs."""
    w = EMPTY
    for i, exp in spelling:
        if not 1 <= i <= n:
            raise ValueError(f"alpha index {i} out of range at level {n}")
        a = ell(n + 1 - i)
        w = w.concat(a if exp > 0 else invert_word(a))
    return w


def make_fixture(name: str, depth: int) -> CoherentSequence:
    """Sequence fixtures by provenance-style name: 'empty', 'he1', 'L<i>'."""
    if name == "empty":
        return empty_sequence(depth)
    if name == "he1":
        return he1_element(depth)
    if name.startswith("L") and name[1:].isdigit():
        return L_sequence(int(name[1:]), depth)
    raise ValueError(f"unknown fixture {name!r}")
