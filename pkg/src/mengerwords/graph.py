"""The level graphs: vertices, neighbors, edge labels, tracing and loops.

A level-n vertex is a stage t with n+1 binary digits together with a color
word of length n+1 over {A, B} that carries a hole (the box) at position
d(t), the bit length of t.  Text form: "(.101001,ABAAB_)" with "_" for the
box.  The graph is implicit: neighbor() is a pure function and adjacency is
only materialized for export at small levels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .words import (
    EMPTY,
    DyadicStage,
    Letter,
    Word,
    X_NEG,
    X_POS,
    Y_NEG,
    Y_POS,
    chi,
    psi,
)

BOX = "_"

DEFAULT_LEVEL_CAP = 10


def bit_length(t: DyadicStage) -> int:
    """Position of the last 1 of t, or 1 for t = 0."""
    return t.bit_length()


@dataclass(frozen=True)
class Vertex:
    stage: DyadicStage
    colors: tuple[str, ...]  # 'A'/'B' with BOX at position d(stage)

    def __post_init__(self) -> None:
        n1 = self.stage.bits
        if len(self.colors) != n1:
            raise ValueError("color word length must match stage bits")
        d = self.stage.bit_length()
        if self.colors[d - 1] != BOX or BOX in self.colors[:d - 1] + self.colors[d:]:
            raise ValueError(f"box must sit exactly at position {d}")

    @property
    def level(self) -> int:
        return self.stage.bits - 1

    def __str__(self) -> str:
        return f"({self.stage},{''.join(self.colors)})"

    @classmethod
    def parse(cls, text: str) -> "Vertex":
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise ValueError(f"bad vertex {text!r}")
        stage_s, _, colors_s = text[1:-1].partition(",")
        return cls(DyadicStage.from_bits(stage_s), tuple(colors_s.strip()))


def base_vertex(n: int) -> Vertex:
    """The base point: stage 0 with the box on disk 1 and all other colors A."""
    if n < 0:
        raise ValueError("level must be >= 0")
    return Vertex(DyadicStage(0, n + 1), (BOX,) + ("A",) * n)


# Internal fast form: a vertex is (num, mask) where num is the stage
# numerator and mask has bit (bits-1-p) set iff position p+1 shows B.
# The bit under the box is kept at 0.

def _to_int(v: Vertex) -> tuple[int, int]:
    mask = 0
    for c in v.colors:
        mask = (mask << 1) | (1 if c == "B" else 0)
    return v.stage.numerator, mask


def _from_int(num: int, mask: int, n: int) -> Vertex:
    stage = DyadicStage(num, n + 1)
    d = stage.bit_length()
    colors = []
    for p in range(1, n + 2):
        if p == d:
            colors.append(BOX)
        else:
            colors.append("B" if (mask >> (n + 1 - p)) & 1 else "A")
    return Vertex(stage, tuple(colors))


def _d_of(num: int, bits: int) -> int:
    if num == 0:
        return 1
    return bits - ((num & -num).bit_length() - 1)


def _step(num: int, mask: int, bits: int, exp: int, is_y: int) -> tuple[int, int]:
    """One neighbor step in the fast form."""
    d_t = _d_of(num, bits)
    num = (num + exp) & ((1 << bits) - 1)
    d_s = _d_of(num, bits)
    if d_s == d_t:  # level 0 only: the box swaps with itself
        return num, mask
    bit_s = bits - d_s
    bit_t = bits - d_t
    val = ((mask >> bit_s) & 1) ^ is_y
    mask &= ~(1 << bit_s)
    mask = (mask & ~(1 << bit_t)) | (val << bit_t)
    return num, mask


def neighbor(v: Vertex, a: Letter) -> Vertex:
    """The vertex reached from v along the directed letter a: the stage
    moves by the exponent, the box swaps with the letter at the new bit
    length, and the displaced letter flips exactly when a is a y-letter."""
    num, mask = _to_int(v)
    bits = v.stage.bits
    num, mask = _step(num, mask, bits, a.exp, 1 if a.is_y else 0)
    return _from_int(num, mask, v.level)


def label_between(v: Vertex, s: Vertex) -> str:
    """Label of the edge joining two adjacent vertices: 'x' when the two
    compared letters of the shared color word agree, else 'y'."""
    for a in (X_POS, Y_POS, X_NEG, Y_NEG):
        if neighbor(v, a) == s:
            return a.base
    raise ValueError(f"vertices {v} and {s} are not adjacent")


def letter_between(v: Vertex, s: Vertex) -> Letter:
    """The directed letter leading from v to s."""
    for a in (X_POS, Y_POS, X_NEG, Y_NEG):
        if neighbor(v, a) == s:
            return a
    raise ValueError(f"vertices {v} and {s} are not adjacent")


def trace(start: Vertex, w: Word) -> Vertex | tuple[Vertex, Letter]:
    """Fold neighbor over the letters of w.  For a partial word, returns
    (last full vertex, pending letter)."""
    num, mask = _to_int(start)
    bits = start.stage.bits
    for a in w.full_letters:
        num, mask = _step(num, mask, bits, a.exp, 1 if a.is_y else 0)
    v = _from_int(num, mask, start.level)
    if w.partial:
        p = w.pending
        assert p is not None
        return v, p
    return v


def trace_is_loop(w: Word, n: int) -> bool:
    """Loop test by explicit tracing from the base vertex."""
    if w.partial:
        raise ValueError("partial words are not loops")
    num, mask = 0, 0
    bits = n + 1
    for a in w.letters:
        num, mask = _step(num, mask, bits, a.exp, 1 if a.is_y else 0)
    return num == 0 and mask == 0


def is_loop(w: Word, n: int) -> bool:
    """Arithmetic loop test: the exponent sum must vanish modulo 2^(n+1)
    and, via the block decomposition, every disk color must return to A.
    Agrees with trace-based detection."""
    if w.partial:
        raise ValueError("partial words are not loops")
    if chi(w) % (1 << (n + 1)) != 0:
        return False
    if n == 0:
        return True
    if n == 1:
        return psi(w) == 0
    from .projection import decompose_blocks

    blocks = decompose_blocks(w.letters, n)
    colors: dict[int, int] = {}
    for blk, d in zip(blocks.blocks, blocks.disks):
        colors[d] = colors.get(d, 0) ^ (sum(1 for a in blk if a.is_y) & 1)
    return all(c == 0 for c in colors.values())


def vertex_count(n: int) -> int:
    return 1 << (2 * n + 1)


def edge_count(n: int) -> int:
    return 1 << (2 * n + 2)


@dataclass
class LevelGraph:
    level: int
    vertices: list[Vertex]
    edges: list[tuple[Vertex, Vertex, str]]  # (tail, head, label), directed forward


def enumerate_level(n: int, cap: int = DEFAULT_LEVEL_CAP) -> LevelGraph:
    """Materialize the full level-n graph by sweeping neighbor over every
    vertex.  Vertex count 2^(2n+1), edge count 2^(2n+2)."""
    if n > cap:
        raise ValueError(f"level {n} exceeds cap {cap}")
    verts: list[Vertex] = []
    for num in range(1 << (n + 1)):
        d = _d_of(num, n + 1)
        free = [p for p in range(1, n + 2) if p != d]
        for bitsel in range(1 << n):
            mask = 0
            for i, p in enumerate(free):
                if (bitsel >> i) & 1:
                    mask |= 1 << (n + 1 - p)
            verts.append(_from_int(num, mask, n))
    edges: list[tuple[Vertex, Vertex, str]] = []
    for v in verts:
        edges.append((v, neighbor(v, X_POS), "x"))
        edges.append((v, neighbor(v, Y_POS), "y"))
    return LevelGraph(n, verts, edges)


def graph_to_dot(g: LevelGraph) -> str:
    lines = [f"digraph X{g.level} {{"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for tail, head, label in g.edges:
        lines.append(f'  "{tail}" -> "{head}" [label={label}];')
    lines.append("}")
    return "\n".join(lines)


def graph_to_json(g: LevelGraph) -> dict:
    return {
        "level": g.level,
        "vertex_count": len(g.vertices),
        "edge_count": len(g.edges),
        "vertices": [str(v) for v in g.vertices],
        "edges": [
            {"from": str(t), "to": str(h), "label": l} for t, h, l in g.edges
        ],
    }


@lru_cache(maxsize=None)
def _base_tree(n: int) -> dict[tuple[int, int], Letter]:
    """BFS tree from the base vertex: for every other vertex, the letter
    of its tree edge toward the base (i.e. the last letter of a shortest
    base-to-vertex path, inverted)."""
    bits = n + 1
    base = (0, 0)
    toward: dict[tuple[int, int], Letter] = {}
    seen = {base}
    frontier = [base]
    while frontier:
        nxt = []
        for cur in frontier:
            for a in (X_POS, X_NEG, Y_POS, Y_NEG):
                t = _step(cur[0], cur[1], bits, a.exp, 1 if a.is_y else 0)
                if t not in seen:
                    seen.add(t)
                    toward[t] = a.inverse()
                    nxt.append(t)
        frontier = nxt
    return toward


def path_to_base(v: Vertex) -> Word:
    """A shortest word leading from v back to the base vertex."""
    n = v.level
    if n > DEFAULT_LEVEL_CAP:
        raise ValueError(f"level {n} exceeds cap {DEFAULT_LEVEL_CAP}")
    toward = _base_tree(n)
    bits = n + 1
    cur = _to_int(v)
    letters = []
    while cur != (0, 0):
        a = toward[cur]
        letters.append(a)
        cur = _step(cur[0], cur[1], bits, a.exp, 1 if a.is_y else 0)
    return Word(tuple(letters))
