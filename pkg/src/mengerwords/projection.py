"""Combinatorial projection of level-(L) words down to level L-1.

A word is paired off as (a1 a2)(a3 a4)... and cut between the two letters
of every pair whose exponents do not cancel.  Each resulting block tracks
one disk (the bit length of the running exponent sum, taken modulo one);
the projected letter for a block compares the colors of its disk and the
next block's disk, where a block's parity of y-letters flips its disk's
color.  Partial words and odd lengths are handled by the four boundary
cases below.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Letter, Word, X_NEG, X_POS, Y_NEG, Y_POS, reduce_word


def _bitlen_mod(total: int, bits: int) -> int:
    """Bit length of (total / 2^bits) mod 1, i.e. of the stage it reaches."""
    num = total % (1 << bits)
    if num == 0:
        return 1
    return bits - ((num & -num).bit_length() - 1)


@dataclass(frozen=True)
class Blocks:
    """Raw block data for a letter sequence at a given source level.

    A trailing unpaired letter is folded into the final block, so the
    decomposition also serves odd-length words (used by the weights).
    """

    source_level: int
    blocks: tuple[tuple[Letter, ...], ...]
    eps: tuple[int, ...]    # exponent of the last letter of each block (0 if empty)
    disks: tuple[int, ...]  # d_1..d_k
    psis: tuple[int, ...]   # y-parity of each block


def decompose_blocks(letters: tuple[Letter, ...], source_level: int) -> Blocks:
    if source_level < 1:
        raise ValueError("source level must be >= 1")
    bits = source_level
    cuts = []
    for j in range(0, len(letters) - 1, 2):
        if letters[j].exp + letters[j + 1].exp != 0:
            cuts.append(j + 1)  # cut between positions j and j+1 (0-based)
    blocks: list[tuple[Letter, ...]] = []
    prev = 0
    for c in cuts:
        blocks.append(letters[prev:c])
        prev = c
    blocks.append(letters[prev:])
    eps = tuple(b[-1].exp if b else 0 for b in blocks)
    disks = []
    total = 0
    for i in range(len(blocks)):
        disks.append(1 if i == 0 else _bitlen_mod(total, bits))
        total += eps[i]
    psis = tuple(sum(1 for a in b if a.is_y) & 1 for b in blocks)
    return Blocks(source_level, tuple(blocks), eps, tuple(disks), psis)


@dataclass(frozen=True)
class BlockDecomposition:
    """Full decomposition of an even vertex-to-vertex word, with every
    intermediate value exposed: blocks, eps, disks, y-parities, the color
    state after each block, and the projected output word."""

    source_level: int
    blocks: tuple[tuple[Letter, ...], ...]
    eps: tuple[int, ...]
    disks: tuple[int, ...]
    psis: tuple[int, ...]
    colors_own: tuple[int, ...]  # color_i(d_i) for each block i (0=A, 1=B)
    output: Word

    @property
    def k(self) -> int:
        return len(self.blocks)

    def color(self, i: int, d: int) -> int:
        """color_i(d): parity of y-flips disk d has seen in blocks 1..i."""
        c = 0
        for j in range(i):
            if self.disks[j] == d:
                c ^= self.psis[j]
        return c

    def final_colors(self) -> dict[int, int]:
        """Color of every touched disk after the whole word."""
        colors: dict[int, int] = {}
        for d, p in zip(self.disks, self.psis):
            colors[d] = colors.get(d, 0) ^ p
        return colors

    def table(self) -> list[dict]:
        rows = []
        for i in range(self.k):
            row: dict = {
                "i": i + 1,
                "subword": str(Word(self.blocks[i])),
                "disk": self.disks[i],
                "psi": self.psis[i],
            }
            if i < self.k - 1:
                row["color"] = "AB"[self.colors_own[i]]
                row["eps"] = self.eps[i]
                row["edge"] = str(self.output.letters[i])
            else:
                row["color"] = ""
                row["eps"] = None
                row["edge"] = ""
            rows.append(row)
        return rows


def decompose(w: Word, source_level: int) -> BlockDecomposition:
    """Decompose an even, non-partial word at source_level (>= 2) and
    compute its projection to source_level - 1."""
    if source_level < 2:
        raise ValueError("decompose needs source level >= 2")
    if w.partial:
        raise ValueError("decompose needs a non-partial word")
    if len(w) % 2:
        raise ValueError("decompose needs an even-length word")
    blk = decompose_blocks(w.letters, source_level)
    k = len(blk.blocks)
    colors: dict[int, int] = {}
    colors_own = []
    out: list[Letter] = []
    for i in range(k):
        d_i = blk.disks[i]
        colors[d_i] = colors.get(d_i, 0) ^ blk.psis[i]
        colors_own.append(colors[d_i])
        if i < k - 1:
            d_next = blk.disks[i + 1]
            same = colors[d_i] == colors.get(d_next, 0)
            if blk.eps[i] > 0:
                out.append(X_POS if same else Y_POS)
            else:
                out.append(X_NEG if same else Y_NEG)
    return BlockDecomposition(
        source_level,
        blk.blocks,
        blk.eps,
        blk.disks,
        blk.psis,
        tuple(colors_own),
        Word(tuple(out)),
    )


# Fast path: letters as ints 0..3 (x+, x-, y+, y-); exponent is +1 for
# even codes, the y letters are the codes >= 2, inversion is code ^ 1.

_LETTER_OF = (X_POS, X_NEG, Y_POS, Y_NEG)


def encode_word(w: Word) -> tuple[list[int], bool]:
    return [a.code for a in w.letters], w.partial


def decode_word(codes: list[int], partial: bool) -> Word:
    return Word(tuple(_LETTER_OF[c] for c in codes), partial)


def _project_even_codes(codes: list[int], bits: int) -> list[int]:
    out: list[int] = []
    colors: dict[int, int] = {}
    total = 0
    mask = (1 << bits) - 1  # stage arithmetic is modulo 2^bits
    d_cur = 1
    psi = 0
    p = len(codes)
    for j in range(0, p, 2):
        c1, c2 = codes[j], codes[j + 1]
        if ((c1 & 1) + (c2 & 1)) != 1:  # matching exponents: cut inside
            # close the block at c1
            psi ^= 1 if c1 >= 2 else 0
            eps = -1 if c1 & 1 else 1
            colors[d_cur] = colors.get(d_cur, 0) ^ psi
            total = (total + eps) & mask
            if total == 0:
                d_next = 1
            else:
                d_next = bits - ((total & -total).bit_length() - 1)
            same = colors[d_cur] == colors.get(d_next, 0)
            if eps > 0:
                out.append(0 if same else 2)
            else:
                out.append(1 if same else 3)
            d_cur = d_next
            psi = 1 if c2 >= 2 else 0
        else:
            psi ^= (1 if c1 >= 2 else 0) ^ (1 if c2 >= 2 else 0)
    return out


def _project_codes(codes: list[int], partial: bool, bits: int) -> tuple[list[int], bool]:
    if not partial:
        if len(codes) % 2 == 0:
            return _project_even_codes(codes, bits), False
        b = _project_even_codes(codes + [codes[-1]], bits)
        return b, True
    if len(codes) % 2 == 0:
        return _project_codes(codes[:-1], False, bits)
    return _project_codes(list(codes), False, bits)


def project(w: Word, source_level: int) -> Word:
    """The bonding projection from source_level to source_level - 1,
    total on partial words and odd lengths."""
    if source_level < 2:
        raise ValueError("projection needs source level >= 2")
    codes, partial = encode_word(w)
    out, out_partial = _project_codes(codes, partial, source_level)
    return decode_word(out, out_partial)


def project_reduced(w: Word, source_level: int) -> Word:
    return reduce_word(project(w, source_level))


def reduce_codes(codes: list[int], partial: bool) -> tuple[list[int], bool]:
    body = codes[:-1] if partial else codes
    stack: list[int] = []
    for c in body:
        if stack and stack[-1] == c ^ 1:
            stack.pop()
        else:
            stack.append(c)
    if not partial:
        return stack, False
    pend = codes[-1]
    if stack and stack[-1] == pend ^ 1:
        return stack, True  # ... z / z^-1 becomes ... / z
    stack.append(pend)
    return stack, True


def project_chain_codes(
    codes: list[int], partial: bool, from_level: int, to_level: int,
    reduce_each: bool = False,
) -> tuple[list[int], bool]:
    if to_level < 1 or from_level < to_level:
        raise ValueError(f"bad chain {from_level} -> {to_level}")
    if reduce_each:
        codes, partial = reduce_codes(codes, partial)
    for lvl in range(from_level, to_level, -1):
        codes, partial = _project_codes(codes, partial, lvl)
        if reduce_each:
            codes, partial = reduce_codes(codes, partial)
    return codes, partial


def project_chain(
    w: Word, from_level: int, to_level: int, reduce_each: bool = False
) -> Word:
    """Compose projections from from_level down to to_level (>= 1).
    With reduce_each the word is reduced before and after every step,
    realizing the reduced-chain variant."""
    codes, partial = encode_word(w)
    codes, partial = project_chain_codes(codes, partial, from_level, to_level, reduce_each)
    return decode_word(codes, partial)


def stabilized_projection(w: Word, from_level: int, to_level: int) -> Word:
    """Unreduced projection chain applied to the reduced word: the value
    whose eventual constancy in from_level defines stabilization."""
    return project_chain(reduce_word(w), from_level, to_level, reduce_each=False)
