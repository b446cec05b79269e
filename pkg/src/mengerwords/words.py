"""Alphabet, words, free reduction and the exponent/parity homomorphisms.

Words are finite sequences over the four letters x, x^-1, y, y^-1 and may
carry a trailing "partial" letter, written after a slash, for paths that
stop inside an edge.  The compact text form uses one character per letter:
x, X, y, Y with uppercase meaning exponent -1, e.g. "xYYx" or "xy/Y".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Letter:
    """One of the four generator letters; use the module constants."""

    base: str  # 'x' or 'y'
    exp: int   # +1 or -1
    code: int  # dense encoding used by the fast projection paths

    def inverse(self) -> "Letter":
        return _INVERSE[self]

    @property
    def is_y(self) -> bool:
        return self.base == "y"

    def __str__(self) -> str:
        ch = self.base
        return ch.upper() if self.exp < 0 else ch

    def __repr__(self) -> str:
        return f"Letter({self.base}{'+' if self.exp > 0 else '-'})"


X_POS = Letter("x", 1, 0)
X_NEG = Letter("x", -1, 1)
Y_POS = Letter("y", 1, 2)
Y_NEG = Letter("y", -1, 3)

LETTERS = (X_POS, X_NEG, Y_POS, Y_NEG)

_INVERSE = {X_POS: X_NEG, X_NEG: X_POS, Y_POS: Y_NEG, Y_NEG: Y_POS}
_BY_CHAR = {"x": X_POS, "X": X_NEG, "y": Y_POS, "Y": Y_NEG}


@dataclass(frozen=True)
class Word:
    """A finite word, optionally ending inside an edge (partial=True).

    When partial is True the final letter of ``letters`` is the pending one
    (the part after the slash in text form).
    """

    letters: tuple[Letter, ...] = ()
    partial: bool = False

    def __post_init__(self) -> None:
        if self.partial and not self.letters:
            raise ValueError("a partial word needs at least one letter")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    @property
    def full_letters(self) -> tuple[Letter, ...]:
        """The letters before the slash."""
        return self.letters[:-1] if self.partial else self.letters

    @property
    def pending(self) -> Letter | None:
        return self.letters[-1] if self.partial else None

    def concat(self, other: "Word") -> "Word":
        if self.partial:
            raise ValueError("cannot append to a partial word")
        return Word(self.letters + other.letters, other.partial)


EMPTY = Word()


def word(letters: Iterable[Letter], partial: bool = False) -> Word:
    return Word(tuple(letters), partial)


def reduce_word(w: Word) -> Word:
    """Fully reduce w: cancel adjacent inverse pairs, then resolve the
    slash boundary (… z / z^-1 becomes … / z).  Idempotent."""
    stack: list[Letter] = []
    for a in w.full_letters:
        if stack and stack[-1] == a.inverse():
            stack.pop()
        else:
            stack.append(a)
    if not w.partial:
        return Word(tuple(stack))
    p = w.pending
    assert p is not None
    if stack and stack[-1] == p.inverse():
        return Word(tuple(stack[:-1]) + (stack[-1],), True)
    return Word(tuple(stack) + (p,), True)


def is_reduced(w: Word) -> bool:
    return reduce_word(w) == w


def chi(w: Word) -> int:
    """Exponent-sum homomorphism (counts the pending letter too)."""
    return sum(a.exp for a in w.letters)


def psi(w: Word) -> int:
    """Parity of the number of y-letters, in {0, 1}."""
    return sum(1 for a in w.letters if a.is_y) & 1


def invert_word(w: Word) -> Word:
    """Reverse the word and invert each letter.  Rejects partial words."""
    if w.partial:
        raise ValueError("cannot invert a partial word")
    return Word(tuple(a.inverse() for a in reversed(w.letters)))


def parse_word(text: str) -> Word:
    """Parse the compact form ("xYYx", "xy/Y", "") or the verbose form
    ("x^+1 y^-1 ...", slash allowed before the final token)."""
    text = text.strip()
    if not text:
        return EMPTY
    if "^" in text:
        return _parse_verbose(text)
    letters: list[Letter] = []
    partial = False
    n = len(text)
    for i, ch in enumerate(text):
        if ch == "/":
            if partial or i != n - 2:
                raise ValueError(f"misplaced '/' in {text!r}")
            partial = True
            continue
        try:
            letters.append(_BY_CHAR[ch])
        except KeyError:
            raise ValueError(f"bad letter {ch!r} in {text!r}") from None
    return Word(tuple(letters), partial)


def _parse_verbose(text: str) -> Word:
    tokens = text.split()
    letters: list[Letter] = []
    partial = False
    for i, tok in enumerate(tokens):
        if tok.startswith("/"):
            if partial or i != len(tokens) - 1:
                raise ValueError(f"misplaced '/' in {text!r}")
            partial = True
            tok = tok[1:]
        base, _, exp = tok.partition("^")
        if base not in ("x", "y") or exp not in ("+1", "-1", "1"):
            raise ValueError(f"bad token {tok!r} in {text!r}")
        letters.append(_BY_CHAR[base if exp != "-1" else base.upper()])
    return Word(tuple(letters), partial)


def format_word(w: Word) -> str:
    """Compact text form; inverse of parse_word."""
    chars = [str(a) for a in w.letters]
    if w.partial:
        chars.insert(len(chars) - 1, "/")
    return "".join(chars)


def word_to_json(w: Word) -> dict:
    return {
        "letters": [{"base": a.base, "exp": a.exp} for a in w.letters],
        "partial": w.partial,
    }


def word_from_json(data: dict) -> Word:
    letters = tuple(
        _BY_CHAR[d["base"] if d["exp"] > 0 else d["base"].upper()]
        for d in data["letters"]
    )
    return Word(letters, bool(data.get("partial", False)))


@dataclass(frozen=True)
class DyadicStage:
    """A stage t = numerator / 2^bits taken modulo 1, kept exact.

    ``bits`` is the number of binary digits carried; a level-n graph uses
    stages with n+1 bits.
    """

    numerator: int
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 1:
            raise ValueError("bits must be positive")
        object.__setattr__(self, "numerator", self.numerator % (1 << self.bits))

    @classmethod
    def from_bits(cls, text: str) -> "DyadicStage":
        text = text.lstrip(".")
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"bad stage {text!r}")
        return cls(int(text, 2), len(text))

    def bits_str(self) -> str:
        return format(self.numerator, f"0{self.bits}b")

    def __str__(self) -> str:
        return "." + self.bits_str()

    def shifted(self, delta: int) -> "DyadicStage":
        return DyadicStage(self.numerator + delta, self.bits)

    def bit_length(self) -> int:
        """Position of the last 1 in the binary expansion; 1 for t=0."""
        if self.numerator == 0:
            return 1
        return self.bits - ((self.numerator & -self.numerator).bit_length() - 1)

    def is_zero(self) -> bool:
        return self.numerator == 0
