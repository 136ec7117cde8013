"""Unit tests for the polynomial kernel."""

import random

import pytest

from triaut import (
    COMMUTATIVE,
    FREE,
    NEG_INFINITY,
    Polynomial,
    Scalar,
    as_scalar,
    syllable_profile,
    term_budget,
)
from triaut.errors import (
    ArityMismatch,
    BudgetExceeded,
    IndexOutOfRange,
    ModeMismatch,
    ParseError,
)
from triaut.randgen import random_poly


def test_zero_and_constants():
    z = Polynomial.zero(COMMUTATIVE, 2)
    assert z.is_zero()
    assert z.degree() is NEG_INFINITY
    assert str(z) == "0"
    c = Polynomial.constant(COMMUTATIVE, 2, Scalar(3, 4))
    assert c.is_constant()
    assert c.constant_term() == Scalar(3, 4)
    assert str(c) == "3/4"


def test_variable_and_involves():
    x2 = Polynomial.variable(COMMUTATIVE, 3, 2)
    assert x2.involves(2)
    assert not x2.involves(1)
    assert x2.degree_in_var(2) == 1
    with pytest.raises(IndexOutOfRange):
        Polynomial.variable(COMMUTATIVE, 3, 4)


def test_arithmetic_commutative():
    x1, x2 = Polynomial.variables(COMMUTATIVE, 2)
    p = (x1 + x2) * (x1 - x2)
    assert p == x1 * x1 - x2 * x2
    assert (x1 + x2) ** 2 == x1 ** 2 + 2 * x1 * x2 + x2 ** 2
    assert (p - p).is_zero()
    assert str(x1 * Scalar(1, 2)) == "1/2*x1"


def test_arithmetic_free_noncommutative():
    x1, x2 = Polynomial.variables(FREE, 2)
    assert x1 * x2 != x2 * x1
    assert str(x1 * x2) == "x1*x2"
    sq = (x1 + x2) ** 2
    assert sq == x1 * x1 + x1 * x2 + x2 * x1 + x2 * x2


def test_mode_and_arity_guards():
    a = Polynomial.variable(COMMUTATIVE, 2, 1)
    b = Polynomial.variable(FREE, 2, 1)
    with pytest.raises(ModeMismatch):
        a + b
    c = Polynomial.variable(COMMUTATIVE, 3, 1)
    with pytest.raises(ArityMismatch):
        a + c
    with pytest.raises(TypeError):
        as_scalar(0.5)


def test_parse_print_roundtrip_random():
    rng = random.Random(7)
    for mode in (COMMUTATIVE, FREE):
        for _ in range(100):
            p = random_poly(rng, mode, 3, max_deg=4, max_terms=4)
            assert Polynomial.parse(str(p), mode, 3) == p


def test_parse_examples():
    p = Polynomial.parse("1/2*x1^2 - 1/2*x1", COMMUTATIVE, 2)
    x1 = Polynomial.variable(COMMUTATIVE, 2, 1)
    assert p == x1 ** 2 * Scalar(1, 2) - x1 * Scalar(1, 2)
    assert Polynomial.parse("x1 * x2", COMMUTATIVE, 2) == Polynomial.parse(
        "x1*x2", COMMUTATIVE, 2
    )
    w = Polynomial.parse("x1*x2*x1", FREE, 2)
    assert w.terms == {(1, 2, 1): Scalar(1)}
    assert Polynomial.parse("-1*x1 + x2^2", COMMUTATIVE, 2) == (
        x1 * -1 + Polynomial.variable(COMMUTATIVE, 2, 2) ** 2
    )


def test_parse_errors_carry_offsets():
    with pytest.raises(ParseError) as err:
        Polynomial.parse("x1 + ", COMMUTATIVE, 2)
    assert err.value.offset == 6
    with pytest.raises(ParseError) as err:
        Polynomial.parse("x9", COMMUTATIVE, 2)
    assert err.value.offset == 2
    with pytest.raises(ParseError) as err:
        Polynomial.parse("", COMMUTATIVE, 2)
    assert err.value.offset == 1
    with pytest.raises(ParseError) as err:
        Polynomial.parse("1/0", COMMUTATIVE, 2)
    assert err.value.offset == 3


def test_leading_negative_stays_parseable():
    x1 = Polynomial.variable(COMMUTATIVE, 2, 1)
    p = x1 * Scalar(-3, 2)
    assert str(p) == "-3/2*x1"
    assert Polynomial.parse(str(p), COMMUTATIVE, 2) == p


def test_substitute_commutative():
    x1, x2 = Polynomial.variables(COMMUTATIVE, 2)
    p = x1 ** 2 + x2
    q = p.substitute([x1 + x2, x2])
    assert q == x1 ** 2 + 2 * x1 * x2 + x2 ** 2 + x2


def test_substitute_free_order_preserved():
    x1, x2 = Polynomial.variables(FREE, 2)
    p = x1 * x2
    q = p.substitute([x1 + x2, x2])
    assert q == x1 * x2 + x2 * x2


def test_substitute_arity_guard():
    p = Polynomial.variable(COMMUTATIVE, 2, 1)
    with pytest.raises(ArityMismatch):
        p.substitute([p])


def test_abelianize():
    x1, x2 = Polynomial.variables(FREE, 2)
    p = x1 * x2 - x2 * x1
    assert p.abelianize().is_zero()
    with pytest.raises(ModeMismatch):
        Polynomial.variable(COMMUTATIVE, 2, 1).abelianize()


def test_syllable_profile():
    profile = syllable_profile((1, 1, 2, 1, 2, 2), 1)
    assert profile.degree == 3
    assert profile.syllables == 2
    assert profile.exponents == (2, 1)
    with pytest.raises(ModeMismatch):
        syllable_profile((1, 0), 1, mode=COMMUTATIVE)


def test_term_budget():
    x1, x2 = Polynomial.variables(COMMUTATIVE, 2)
    with term_budget(2):
        x1 + x2  # exactly at the limit
        with pytest.raises(BudgetExceeded):
            (x1 + x2) ** 3
    (x1 + x2) ** 3  # no budget outside the context


def test_degrees():
    x1, x2 = Polynomial.variables(COMMUTATIVE, 2)
    p = x1 ** 2 * x2 + x2
    assert p.degree() == 3
    assert p.min_degree() == 1
    assert p.degree_in_var(1) == 2
    assert p.degree_in_var(2) == 1
    assert Polynomial.zero(COMMUTATIVE, 2).degree_in_var(1) is NEG_INFINITY
