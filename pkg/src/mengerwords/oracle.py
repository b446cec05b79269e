"""Independent construction of the level graphs by doubling.

Starting from the two-vertex seed graph, each level is built as two copies
of the barycentric subdivision of the previous level glued along all edge
midpoints.  Edge labels are derived purely locally: every edge remembers
the face color shown by the disk handled at each of its endpoints, a new
edge toward a midpoint shows the copy color on its midpoint side, and the
label compares the two end colors.  Nothing here consults the stage/color
vertex formulas, so the result serves as an oracle for them, including a
geometric projection and lift realized edge-by-edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .words import Letter, Word, X_NEG, X_POS, Y_NEG, Y_POS
from .graph import Vertex, base_vertex, neighbor


@dataclass
class ONode:
    """Oracle vertex.  kind 'v': a doubled copy (base, color); kind 'm':
    the midpoint of a previous-level edge."""

    kind: str
    base: int          # node id one level down ('v') or edge id ('m')
    color: str = ""    # copy color for 'v' nodes

    # incident edge ids by role, filled during construction
    out_x: int = -1
    out_y: int = -1
    in_x: int = -1
    in_y: int = -1


@dataclass
class OEdge:
    tail: int
    head: int
    label: str       # 'x' or 'y'
    tail_color: str  # face of the disk handled at the tail vertex
    head_color: str  # face of the disk handled at the head vertex


@dataclass
class OracleGraph:
    level: int
    nodes: list[ONode] = field(default_factory=list)
    edges: list[OEdge] = field(default_factory=list)
    base_node: int = 0

    def add_edge(
        self,
        tail: int,
        head: int,
        tail_color: str,
        head_color: str,
        label: str | None = None,
    ) -> int:
        if label is None:
            label = "x" if tail_color == head_color else "y"
        eid = len(self.edges)
        self.edges.append(OEdge(tail, head, label, tail_color, head_color))
        t, h = self.nodes[tail], self.nodes[head]
        if label == "x":
            assert t.out_x < 0 and h.in_x < 0, "duplicate letter role"
            t.out_x, h.in_x = eid, eid
        else:
            assert t.out_y < 0 and h.in_y < 0, "duplicate letter role"
            t.out_y, h.in_y = eid, eid
        return eid

    def step(self, node: int, a: Letter) -> tuple[int, int]:
        """Follow the directed letter a from a node: (next node, edge id)."""
        n = self.nodes[node]
        if a.exp > 0:
            eid = n.out_x if a.base == "x" else n.out_y
            return self.edges[eid].head, eid
        eid = n.in_x if a.base == "x" else n.in_y
        return self.edges[eid].tail, eid


def seed_graph() -> OracleGraph:
    """The level-0 block: two vertices joined by four edges, one of each
    face color per direction.  The single-disk label rule degenerates, so
    level-0 labels follow the arc-color convention (A arcs are x)."""
    g = OracleGraph(0)
    g.nodes = [ONode("v", 0), ONode("v", 1)]
    g.base_node = 0
    for color, label in (("A", "x"), ("B", "y")):
        g.add_edge(0, 1, color, color, label)  # lower arc
        g.add_edge(1, 0, color, color, label)  # upper arc
    return g


def double(g: OracleGraph) -> OracleGraph:
    """One doubling step: two copies of the subdivision of g glued along
    the midpoints of g's edges."""
    out = OracleGraph(g.level + 1)
    copy_id: dict[tuple[int, str], int] = {}
    mid_id: dict[int, int] = {}
    for i in range(len(g.nodes)):
        for color in ("A", "B"):
            copy_id[(i, color)] = len(out.nodes)
            out.nodes.append(ONode("v", i, color))
    for eid in range(len(g.edges)):
        mid_id[eid] = len(out.nodes)
        out.nodes.append(ONode("m", eid))
    for eid, e in enumerate(g.edges):
        m = mid_id[eid]
        for color in ("A", "B"):
            # the halved edge shows the smallest disk's face, the copy
            # color, on its midpoint end
            out.add_edge(copy_id[(e.tail, color)], m, e.tail_color, color)
            out.add_edge(m, copy_id[(e.head, color)], color, e.head_color)
    out.base_node = copy_id[(g.base_node, "A")]
    return out


def oracle_build(n: int, cap: int = 6) -> list[OracleGraph]:
    """All oracle graphs for levels 0..n."""
    if n > cap:
        raise ValueError(f"oracle level {n} exceeds cap {cap}")
    gs = [seed_graph()]
    for _ in range(n):
        gs.append(double(gs[-1]))
    return gs


def verify_isomorphism(g: OracleGraph, n: int) -> dict[int, Vertex]:
    """Check that the oracle graph is isomorphic to the neighbor-generated
    level-n graph, by propagating the base-vertex identification along all
    four letter roles.  Raises on any structural mismatch."""
    from .graph import edge_count, vertex_count

    if len(g.nodes) != vertex_count(n) or len(g.edges) != edge_count(n):
        raise AssertionError("vertex/edge counts differ")
    mapping: dict[int, Vertex] = {g.base_node: base_vertex(n)}
    frontier = [g.base_node]
    while frontier:
        nxt = []
        for node in frontier:
            v = mapping[node]
            for a in (X_POS, X_NEG, Y_POS, Y_NEG):
                o_next, _ = g.step(node, a)
                v_next = neighbor(v, a)
                if o_next in mapping:
                    if mapping[o_next] != v_next:
                        raise AssertionError(f"conflict at {v} via {a}")
                else:
                    mapping[o_next] = v_next
                    nxt.append(o_next)
        frontier = nxt
    if len(mapping) != len(g.nodes):
        raise AssertionError("oracle graph is not connected to the base")
    if len(set(mapping.values())) != len(mapping):
        raise AssertionError("mapping is not injective")
    return mapping


def project_node(g: OracleGraph, node: int) -> int:
    """The bonding map on oracle vertices: forget the copy color; a
    midpoint goes to (the midpoint of) its underlying edge."""
    return g.nodes[node].base


def geometric_project(gs: list[OracleGraph], w: Word, from_level: int) -> Word:
    """Project an edge path by walking it in the oracle graph and reading
    off the lower-level edges it completes.  Ends inside an edge exactly
    when the walk stops at a midpoint."""
    if w.partial:
        raise ValueError("geometric projection expects a non-partial path")
    g = gs[from_level]
    low = gs[from_level - 1]
    node = g.base_node
    anchor = project_node(g, node)  # current lower-level vertex
    letters: list[Letter] = []
    pending: Letter | None = None
    for a in w.letters:
        node, _ = g.step(node, a)
        nd = g.nodes[node]
        if nd.kind == "m":
            e = low.edges[nd.base]
            pending = _edge_letter(e, anchor)
        else:
            if nd.base != anchor:
                assert pending is not None
                letters.append(pending)
                anchor = nd.base
            pending = None
    if pending is not None:
        return Word(tuple(letters) + (pending,), True)
    return Word(tuple(letters))


def _edge_letter(e: OEdge, from_node: int) -> Letter:
    if e.tail == from_node:
        return X_POS if e.label == "x" else Y_POS
    assert e.head == from_node
    return X_NEG if e.label == "x" else Y_NEG


def geometric_lift(gs: list[OracleGraph], w: Word, level: int) -> Word:
    """Lift a loop one level up by tracing it inside the A-copy of the
    subdivision, reading off the traversed edge labels."""
    if w.partial:
        raise ValueError("lift needs a non-partial word")
    g = gs[level]
    up = gs[level + 1]
    # locate the A-copy of each lower node and the midpoint of each edge
    copy_a: dict[int, int] = {}
    mids: dict[int, int] = {}
    for i, nd in enumerate(up.nodes):
        if nd.kind == "v" and nd.color == "A":
            copy_a[nd.base] = i
        elif nd.kind == "m":
            mids[nd.base] = i
    node = g.base_node
    out: list[Letter] = []
    for a in w.letters:
        nxt, eid = g.step(node, a)
        out.append(_up_letter(up, copy_a[node], mids[eid]))
        out.append(_up_letter(up, mids[eid], copy_a[nxt]))
        node = nxt
    return Word(tuple(out))


def _up_letter(up: OracleGraph, frm: int, to: int) -> Letter:
    for a in (X_POS, X_NEG, Y_POS, Y_NEG):
        nxt, _ = up.step(frm, a)
        if nxt == to:
            return a
    raise AssertionError("nodes not adjacent in the doubled graph")
