import pytest

from mengerwords.graph import edge_count, vertex_count
from mengerwords.oracle import (
    geometric_lift,
    geometric_project,
    oracle_build,
    project_node,
    seed_graph,
    verify_isomorphism,
)
from mengerwords.projection import project
from mengerwords.generator import lift_loop

from conftest import random_loop


def test_counts_by_doubling():
    gs = oracle_build(5)
    for n, g in enumerate(gs):
        assert len(g.nodes) == vertex_count(n)
        assert len(g.edges) == edge_count(n)


def test_seed():
    g = seed_graph()
    assert len(g.nodes) == 2 and len(g.edges) == 4
    assert {e.label for e in g.edges} == {"x", "y"}


def test_isomorphism_levels_0_to_4():
    gs = oracle_build(4)
    for n, g in enumerate(gs):
        mapping = verify_isomorphism(g, n)
        assert len(mapping) == vertex_count(n)


def test_every_vertex_has_four_roles():
    gs = oracle_build(3)
    for g in gs:
        for nd in g.nodes:
            assert min(nd.out_x, nd.out_y, nd.in_x, nd.in_y) >= 0


def test_bonding_map_structure():
    gs = oracle_build(3)
    g_low, g_high = gs[2], gs[3]
    # preimage of an edge is a figure-X: one midpoint joined to the four
    # copies of its endpoints
    for eid, e in enumerate(g_low.edges):
        mids = [i for i, nd in enumerate(g_high.nodes) if nd.kind == "m" and nd.base == eid]
        assert len(mids) == 1
        incident = [
            ed for ed in g_high.edges if mids[0] in (ed.tail, ed.head)
        ]
        assert len(incident) == 4
        end_bases = {
            project_node(g_high, ed.tail if ed.head == mids[0] else ed.head)
            for ed in incident
        }
        assert end_bases == {e.tail, e.head}
    # every doubled vertex projects to its base vertex
    for i, nd in enumerate(g_high.nodes):
        if nd.kind == "v":
            assert project_node(g_high, i) == nd.base


def test_geometric_projection_matches_formula(rng):
    gs = oracle_build(4)
    for lvl in (2, 3, 4):
        for _ in range(200):
            w = random_loop(rng, lvl)
            assert geometric_project(gs, w, lvl) == project(w, lvl)


def test_geometric_lift_agrees_with_combinatorial(rng):
    gs = oracle_build(4)
    for lvl in (1, 2, 3):
        for _ in range(200):
            w = random_loop(rng, lvl)
            assert geometric_lift(gs, w, lvl) == lift_loop(w, lvl)


def test_oracle_cap():
    with pytest.raises(ValueError):
        oracle_build(7)
