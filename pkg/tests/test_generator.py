import random

import pytest

from mengerwords.words import EMPTY, chi, format_word, parse_word, psi, reduce_word
from mengerwords.graph import is_loop
from mengerwords.projection import decompose, project, stabilized_projection
from mengerwords.sequences import validate
from mengerwords.generator import (
    ConstraintError,
    GeneratorParams,
    extend_level,
    lift_loop,
    random_element,
    standard_generators,
    substitute,
)
from mengerwords.fixtures import L_sequence, ell, he1_element, he3_substitute

from conftest import random_loop


def test_standard_generator_table():
    g = standard_generators()
    assert format_word(g["A1"]) == "XyyX"
    assert format_word(g["B1"]) == "YxyX"
    assert format_word(g["C1"]) == "yXyX"
    assert format_word(g["A2"]) == "xyyyyX"
    assert format_word(g["B2"]) == "xyxxyX"
    assert format_word(g["C2"]) == "xyXXyX"
    assert format_word(g["A3"]) == "xxxyyX"
    assert format_word(g["B3"]) == "xxyxyX"
    assert format_word(g["C3"]) == "xxYXyX"
    for name, w in g.items():
        assert chi(w) % 4 == 0 and psi(w) == 0, name
        assert is_loop(w, 1), name


def test_lift_section_and_parenthetical(rng):
    # the lift halves mirror the block recipe: both halves carry the
    # projected letter's exponent and the second half's y-ness equals the
    # running color of the next block's disk
    for lvl in (1, 2, 3, 4):
        for _ in range(60):
            w = random_loop(rng, lvl)
            lifted = lift_loop(w, lvl)
            assert project(lifted, lvl + 1) == w
            if len(w) == 0:
                continue
            us = lifted.letters[0::2]
            vs = lifted.letters[1::2]
            dec = decompose(lifted, lvl + 1)
            assert dec.k == len(w) + 1
            for i, b in enumerate(w.letters):
                assert us[i].exp == vs[i].exp == b.exp
                assert psi(type(w)((vs[i],))) == dec.color(i + 1, dec.disks[i + 1])


def test_lift_rejects_non_loops():
    with pytest.raises(ValueError):
        lift_loop(parse_word("xy"), 2)
    with pytest.raises(ValueError):
        lift_loop(parse_word("x/y"), 2)


def test_lift_empty():
    assert lift_loop(EMPTY, 3) == EMPTY


def test_extend_level_degenerates_to_lift(rng):
    for lvl in (1, 2, 3):
        w = random_loop(rng, lvl)
        k = len(w) + 1
        out, _ = extend_level(w, lvl, [[] for _ in range(k)], [[] for _ in range(k)])
        assert out == lift_loop(w, lvl)
        assert project(out, lvl + 1) == w


def test_extend_level_projects_back(rng):
    for seed in range(8):
        r = random.Random(seed)
        lvl = r.randint(1, 3)
        w = random_loop(r, lvl)
        out, _ = extend_level(
            w, lvl,
            [[] for _ in range(len(w) + 1)],
            rng=r, insertion_budget=3,
        )
        assert project(out, lvl + 1) == w
        assert is_loop(out, lvl + 1)


def test_extend_level_rejects_bad_choices(rng):
    w = random_loop(rng, 2)
    k = len(w) + 1
    with pytest.raises(ConstraintError):
        extend_level(w, 2, [[] for _ in range(k - 1)])
    with pytest.raises(ConstraintError):
        extend_level(w, 2, [[("A2", 1)]] + [[] for _ in range(k - 1)])
    with pytest.raises(ConstraintError):
        extend_level(
            w, 2, [[("A1", 1), ("A1", -1)]] + [[] for _ in range(k - 1)]
        )


def test_substitute_small_generators():
    w = substitute([("A1", 1), ("B1", -1)])
    assert format_word(w) == "XyyX" + "xYXy"


def test_random_element_contract():
    seq, choice = random_element(42, 7)
    assert seq.depth == 7
    assert validate(seq).ok
    assert choice.seed == 42
    again, _ = random_element(42, 7)
    assert again.words == seq.words and again.certificates == seq.certificates
    other, _ = random_element(43, 7)
    assert other.words != seq.words
    # planted deadlines are honored by the data-derived certificates
    for lvl, lc in choice.levels.items():
        if lc.K and lc.K <= seq.depth:
            assert stabilized_projection(seq.word_at(lc.K), lc.K, lvl) == seq.word_at(lvl)


def test_random_elements_bulk():
    for seed in range(25):
        seq, _ = random_element(seed, 6)
        assert validate(seq).ok
        assert set(seq.certificates) == set(range(1, 6))


def test_identity_from_empty_choices(rng):
    out, _ = extend_level(EMPTY, 1, [[]], [[]])
    assert out == EMPTY


def test_he3_substitution():
    # alpha_{n,i} = ell(n+1-i); the substitution spells loops at level n
    w = he3_substitute(4, [(1, 1), (4, 1), (1, -1), (4, -1)])
    assert is_loop(w, 4)
    assert w.letters[: len(ell(4))] == ell(4).letters
    with pytest.raises(ValueError):
        he3_substitute(3, [(4, 1)])


def test_he3_projection_identities():
    # projecting drops the shortest loop and shifts the rest
    for n in (2, 3, 4):
        for i in range(1, n):
            assert project(he3_substitute(n, [(i, 1)]), n) == he3_substitute(n - 1, [(i, 1)])
        assert project(he3_substitute(n, [(n, 1)]), n) == EMPTY
