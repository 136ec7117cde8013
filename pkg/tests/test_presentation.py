"""Unit tests for the generator translation and relation families."""

import random

import pytest

from triaut import (
    COMMUTATIVE,
    FREE,
    Phi,
    Polynomial,
    check_relation_family,
    evaluate_b_word,
    format_b_word,
    parse_b_word,
    sigma,
    to_b_generators,
)
from triaut.presentation import FAMILIES, Tau
from triaut.errors import (
    EqualIndices,
    ParseError,
    SideConditionViolated,
    VariableDependence,
)
from triaut.randgen import random_elementary, relation_instance


def test_phi_validation():
    with pytest.raises(VariableDependence):
        Phi(1, Polynomial.parse("x1", COMMUTATIVE, 2))
    with pytest.raises(EqualIndices):
        Tau(2, 2)


def test_translate_index_one_is_single_generator():
    e = sigma(COMMUTATIVE, 3, 1, 2, Polynomial.parse("x2*x3", COMMUTATIVE, 3))
    word = to_b_generators(e)
    assert len(word) == 1
    assert isinstance(word[0], Phi)
    assert evaluate_b_word(word, 3, COMMUTATIVE) == e.endo()


def test_translate_conjugates_by_swap():
    e = sigma(COMMUTATIVE, 3, 2, 1, Polynomial.parse("x3^2", COMMUTATIVE, 3))
    word = to_b_generators(e)
    assert [type(g) for g in word] == [Tau, Phi, Tau]
    assert evaluate_b_word(word, 3, COMMUTATIVE) == e.endo()


def test_translate_random_roundtrip():
    rng = random.Random(41)
    for mode in (COMMUTATIVE, FREE):
        for _ in range(30):
            n = rng.randint(2, 4)
            e = random_elementary(rng, mode, n)
            word = to_b_generators(e)
            assert evaluate_b_word(word, n, mode) == e.endo()


def test_word_text_roundtrip():
    e = sigma(COMMUTATIVE, 3, 3, -1, Polynomial.parse("2", COMMUTATIVE, 3))
    word = to_b_generators(e)
    text = format_b_word(word)
    parsed = parse_b_word(text, COMMUTATIVE, 3)
    assert evaluate_b_word(parsed, 3, COMMUTATIVE) == e.endo()


def test_parse_b_word_errors():
    with pytest.raises(ParseError):
        parse_b_word("t(1,2", COMMUTATIVE, 3)
    with pytest.raises(ParseError):
        parse_b_word("phi(2 x2)", COMMUTATIVE, 3)
    with pytest.raises(ParseError):
        parse_b_word("junk", COMMUTATIVE, 3)


def test_all_relation_families_hold():
    rng = random.Random(43)
    for family in FAMILIES:
        for mode in (COMMUTATIVE, FREE):
            for _ in range(15):
                params = relation_instance(family, rng, mode, 4)
                check = check_relation_family(family, mode, 4, **params)
                assert check.holds, (family, params)


def test_side_conditions_are_enforced():
    x1 = Polynomial.parse("x1", COMMUTATIVE, 3)
    with pytest.raises(SideConditionViolated):
        check_relation_family(
            "R1", COMMUTATIVE, 3, i=1, alpha=1, f=x1, beta=1, g=x1 * 0
        )
    with pytest.raises(SideConditionViolated):
        check_relation_family("R4", COMMUTATIVE, 3, k=1, s=2, l=2)
    with pytest.raises(SideConditionViolated):
        check_relation_family("bogus", COMMUTATIVE, 3)
