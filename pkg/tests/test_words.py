import pytest

from mengerwords.words import (
    EMPTY,
    DyadicStage,
    Word,
    X_NEG,
    X_POS,
    Y_NEG,
    Y_POS,
    chi,
    format_word,
    invert_word,
    parse_word,
    psi,
    reduce_word,
    word_from_json,
    word_to_json,
)

from conftest import random_word


def test_letter_inverses_are_involutions():
    for a in (X_POS, X_NEG, Y_POS, Y_NEG):
        assert a.inverse().inverse() is a
        assert a.inverse() != a


def test_reduce_inverse_pair():
    assert reduce_word(parse_word("xX")) == EMPTY


def test_reduce_slash_rule():
    # x+ y+ / y-  becomes  x+ / y+
    assert format_word(reduce_word(parse_word("xy/Y"))) == "x/y"
    # the rewrite does not cascade past a reduced prefix
    assert format_word(reduce_word(parse_word("Xx/X"))) == "/X"


def test_reduce_already_reduced():
    w = parse_word("xxYXXYxx")
    assert reduce_word(w) == w


def test_reduce_idempotent(rng):
    for _ in range(400):
        w = random_word(rng, partial_ok=True)
        assert reduce_word(reduce_word(w)) == reduce_word(w)


def test_chi_examples():
    assert chi(EMPTY) == 0
    assert chi(parse_word("xy")) == 2
    assert chi(parse_word("xYYx")) == 0


def test_psi_examples():
    assert psi(EMPTY) == 0
    assert psi(parse_word("yY")) == 0
    assert psi(parse_word("XyyX")) == 0
    assert psi(parse_word("xyx")) == 1


def test_homomorphisms_invariant_under_reduce(rng):
    for _ in range(300):
        w = random_word(rng)
        r = reduce_word(w)
        assert chi(w) == chi(r)
        assert psi(w) == psi(r)


def test_invert():
    assert format_word(invert_word(parse_word("xY"))) == "yX"
    assert invert_word(EMPTY) == EMPTY
    with pytest.raises(ValueError):
        invert_word(parse_word("x/y"))


def test_invert_involution_and_cancellation(rng):
    for _ in range(300):
        w = random_word(rng)
        assert invert_word(invert_word(w)) == w
        assert reduce_word(w.concat(invert_word(w))) == EMPTY
        assert chi(invert_word(w)) == -chi(w)
        assert psi(invert_word(w)) == psi(w)


def test_parse_format_round_trip(rng):
    assert parse_word("xYYx").letters == (X_POS, Y_NEG, Y_NEG, X_POS)
    w = parse_word("xy/Y")
    assert w.partial and w.pending == Y_NEG
    assert parse_word("") == EMPTY
    for _ in range(200):
        w = random_word(rng, partial_ok=True)
        assert parse_word(format_word(w)) == w


def test_parse_verbose():
    assert parse_word("x^+1 y^-1") == parse_word("xY")
    assert parse_word("x^+1 /y^-1") == parse_word("x/Y")


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_word("xz")
    with pytest.raises(ValueError):
        parse_word("x/yx")
    with pytest.raises(ValueError):
        parse_word("/")


def test_json_round_trip(rng):
    for _ in range(100):
        w = random_word(rng, partial_ok=True)
        assert word_from_json(word_to_json(w)) == w
    assert word_to_json(parse_word("xY")) == {
        "letters": [{"base": "x", "exp": 1}, {"base": "y", "exp": -1}],
        "partial": False,
    }


def test_partial_word_needs_letters():
    with pytest.raises(ValueError):
        Word((), True)


def test_dyadic_stage():
    t = DyadicStage.from_bits("101001")
    assert str(t) == ".101001"
    assert t.bit_length() == 6
    assert DyadicStage.from_bits("101000").bit_length() == 3
    assert DyadicStage(0, 3).bit_length() == 1
    assert DyadicStage(7, 3).shifted(1).numerator == 0  # wraps modulo one
    assert DyadicStage(0, 3).shifted(-1).numerator == 7
