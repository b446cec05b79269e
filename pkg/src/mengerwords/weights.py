"""Dynamic word length, norms and the pseudo-metric, in exact arithmetic.

A level-1 word receives the weights 1/2, 1/4, ... interleaved with its
letters.  Refining to the next level splits each parent weight across the
letters of the corresponding block: block 1 keeps a leading weight, each
block's first slot absorbs the previous block's terminal residue, and the
final block's residue is lost.  Everything is a Fraction with a power of
two denominator; no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .words import Word
from .projection import decompose_blocks, project


@dataclass(frozen=True)
class WeightedWord:
    """A word with its interleaved weights: slot i sits after letter i,
    slot 0 before the first letter.  A pending letter carries no weight,
    so there is always one more slot than full letters."""

    word: Word
    level: int
    slots: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.slots) != len(self.word.full_letters) + 1:
            raise ValueError("need one slot per letter plus one")

    def total(self) -> Fraction:
        return sum(self.slots, Fraction(0))


def weigh_level1(w: Word) -> WeightedWord:
    p = len(w.full_letters)
    slots = tuple(Fraction(1, 1 << (j + 1)) for j in range(p + 1))
    return WeightedWord(w, 1, slots)


def weigh_refine(parent: WeightedWord, child: Word) -> WeightedWord:
    """Weights of a child word over its projection.  The child's blocks
    must project to the parent word (one parent slot per block)."""
    level = parent.level + 1
    if project(child, level) != parent.word:
        raise ValueError("child does not project to the weighted parent")
    blk = decompose_blocks(child.full_letters, level)
    k = len(blk.blocks)
    rho = parent.slots
    if k != len(rho):
        raise AssertionError("block count must match parent slot count")
    slots: list[Fraction] = []
    m1 = len(blk.blocks[0])
    for j in range(1, m1 + 2):
        slots.append(rho[0] / (1 << j))
    carry = slots[-1]  # the leading block's terminal slot doubles as carry
    for i in range(1, k):
        m = len(blk.blocks[i])
        slots.append(carry + rho[i] / 2)
        for j in range(2, m + 1):
            slots.append(rho[i] / (1 << j))
        # a block's terminal slot is re-used as the next carry; the final
        # block's residue is simply lost
        carry = rho[i] / (1 << m)
    return WeightedWord(child, level, tuple(slots))


def weigh_sequence(words: list[Word]) -> list[WeightedWord]:
    """Weights of every level of a coherent sequence, starting at level 1."""
    out = [weigh_level1(words[0])]
    for w in words[1:]:
        out.append(weigh_refine(out[-1], w))
    return out


@dataclass(frozen=True)
class BoundInterval:
    """Certified enclosure lower <= value <= upper, exact endpoints."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError("empty interval")

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def __contains__(self, x) -> bool:
        return self.lower <= x <= self.upper

    def __add__(self, other: "BoundInterval") -> "BoundInterval":
        return BoundInterval(self.lower + other.lower, self.upper + other.upper)

    def __sub__(self, other: "BoundInterval") -> "BoundInterval":
        return BoundInterval(self.lower - other.upper, self.upper - other.lower)

    def scale(self, c: int) -> "BoundInterval":
        return BoundInterval(self.lower * c, self.upper * c)

    def clamp_nonneg(self) -> "BoundInterval":
        return BoundInterval(max(self.lower, Fraction(0)), max(self.upper, Fraction(0)))


def exact_zero() -> BoundInterval:
    return BoundInterval(Fraction(0), Fraction(0))


def norm_bounds_words(words: list[Word]) -> BoundInterval:
    """Enclosure of the norm from the deepest stored level: the norm lies
    between the deepest total minus its last two slots and the total."""
    ww = weigh_sequence(words)
    deepest = ww[-1]
    upper = deepest.total()
    tail = sum(deepest.slots[-2:], Fraction(0))
    lower = max(Fraction(0), upper - tail)
    return BoundInterval(lower, upper)


def norm_bounds(seq) -> BoundInterval:
    """Norm enclosure for a coherent sequence (complete first when the
    pseudo-metric calls for it)."""
    return norm_bounds_words(list(seq.words))


@dataclass(frozen=True)
class RhoResult:
    interval: BoundInterval
    achieved_width: Fraction
    ok: bool          # width within the requested tolerance
    equivalent: bool  # detected as the same point of the tree


def rho(a, b, tolerance: Fraction | None = None) -> RhoResult:
    """The pseudo-metric: complete both sequences, take norms of the
    completions and of their stable initial match, and combine the three
    enclosures.  Pairs detected as equivalent give an exact zero."""
    from .sequences import cap, complete, equivalent

    a_bar = complete(a)
    b_bar = complete(b)
    if equivalent(a_bar, b_bar):
        z = exact_zero()
        return RhoResult(z, Fraction(0), True, True)
    c = cap(a_bar, b_bar)
    val = norm_bounds(a_bar) + norm_bounds(b_bar) - norm_bounds(c).scale(2)
    val = val.clamp_nonneg()
    ok = tolerance is None or val.width <= tolerance
    return RhoResult(val, val.width, ok, False)


def format_dyadic(q: Fraction) -> str:
    """Render a dyadic rational as "p/2^k" plus a 12-digit decimal."""
    den = q.denominator
    k = den.bit_length() - 1
    if 1 << k != den:
        raise ValueError(f"{q} is not dyadic")
    body = f"{q.numerator}" if k == 0 else f"{q.numerator}/2^{k}"
    return f"{body} ({float(q):.12f})"
