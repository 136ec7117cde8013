"""Unit tests for the antidifference solver and commutator structure theory."""

import random

import pytest

from triaut import (
    COMMUTATIVE,
    FREE,
    Polynomial,
    Scalar,
    commutator,
    compose,
    express_as_single_commutator,
    express_in_layer_commutator,
    factorize_unitriangular,
    identity,
    sigma,
    solve_difference,
)
from triaut.errors import (
    BadIndices,
    LayerViolation,
    NotInDerivedSubgroup,
    NotUnitriangular,
    ZeroShift,
)
from triaut.randgen import (
    random_layer_element,
    random_poly,
    random_scalar,
    random_unitriangular,
)


def shift_images(mode, n, i, a):
    images = list(Polynomial.variables(mode, n))
    images[i - 1] = images[i - 1] + Polynomial.constant(mode, n, a)
    return images


def check_solution(f, g, i, a):
    shifted = f.substitute(shift_images(g.mode, g.n, i, a))
    assert shifted - f == g
    # normalization: every monomial of f involves x_i
    for mono in f.terms:
        if g.mode == COMMUTATIVE:
            assert mono[i - 1] > 0
        else:
            assert i in mono


def test_solver_known_example():
    f = solve_difference(Polynomial.parse("x1", COMMUTATIVE, 2), 1, 1)
    assert str(f) == "1/2*x1^2 - 1/2*x1"


def test_solver_constant_input():
    g = Polynomial.constant(COMMUTATIVE, 2, Scalar(3))
    f = solve_difference(g, 2, Scalar(1, 2))
    check_solution(f, g, 2, Scalar(1, 2))
    assert f == Polynomial.parse("6*x2", COMMUTATIVE, 2)


def test_solver_rejects_zero_shift():
    g = Polynomial.variable(COMMUTATIVE, 2, 1)
    with pytest.raises(ZeroShift):
        solve_difference(g, 1, 0)


def test_solver_random_both_modes():
    rng = random.Random(23)
    shifts = [Scalar(1), Scalar(-1), Scalar(2), Scalar(1, 2)]
    for mode in (COMMUTATIVE, FREE):
        for _ in range(50):
            n = rng.randint(1, 3)
            i = rng.randint(1, n)
            g = random_poly(rng, mode, n, max_deg=4, max_terms=4)
            a = rng.choice(shifts)
            f = solve_difference(g, i, a)
            check_solution(f, g, i, a)


def test_solver_free_interleaved_word():
    g = Polynomial.parse("x1*x2*x1 + x2*x1^2*x2", FREE, 2)
    f = solve_difference(g, 1, 1)
    check_solution(f, g, 1, 1)


def test_factorize_roundtrip_and_layers():
    rng = random.Random(29)
    for mode in (COMMUTATIVE, FREE):
        for _ in range(25):
            n = rng.randint(1, 4)
            phi = random_unitriangular(rng, mode, n, max_deg=3)
            fac = factorize_unitriangular(phi)
            assert fac.recompose() == phi
            indices = [factor.i for factor in fac.factors]
            assert indices == sorted(indices, reverse=True)
            for factor in fac.factors:
                assert factor.alpha == 1
                assert all(v > factor.i for v in factor.f.used_variables())


def test_factorize_rejects_dilations():
    phi = sigma(COMMUTATIVE, 2, 1, 2).endo()
    with pytest.raises(NotUnitriangular):
        factorize_unitriangular(phi)


def test_layer_commutator_random():
    rng = random.Random(31)
    for mode in (COMMUTATIVE, FREE):
        for _ in range(25):
            n = rng.randint(2, 3)
            i = rng.randint(1, n - 1)
            target = random_layer_element(rng, mode, n, i, nonzero_f=True)
            j = rng.randint(i + 1, n)
            h = random_scalar(rng, nonzero=True)
            phi, psi = express_in_layer_commutator(target, j, h)
            assert commutator(phi.endo(), psi.endo()) == target.endo()
            assert phi.i == i and psi.i == j


def test_layer_commutator_guards():
    target = sigma(COMMUTATIVE, 3, 1, 1, Polynomial.parse("x2", COMMUTATIVE, 3))
    with pytest.raises(ZeroShift):
        express_in_layer_commutator(target, 2, 0)
    with pytest.raises(BadIndices):
        express_in_layer_commutator(target, 1, 1)
    bad = sigma(COMMUTATIVE, 3, 2, 1, Polynomial.parse("x1", COMMUTATIVE, 3))
    with pytest.raises(LayerViolation):
        express_in_layer_commutator(bad, 3, 1)


def derived_element(rng, mode, n, max_deg=3):
    """A random unitriangular automorphism fixing x_n."""
    phi = random_unitriangular(rng, mode, n, max_deg=max_deg)
    images = list(phi.images)
    images[n - 1] = Polynomial.variable(mode, n, n)
    from triaut.endo import Endomorphism

    return Endomorphism(images)


def test_single_commutator_small_example():
    omega = compose(
        sigma(COMMUTATIVE, 2, 1, 1, Polynomial.parse("x2", COMMUTATIVE, 2)).endo()
    )
    expr = express_as_single_commutator(omega)
    assert expr.evaluate() == omega


def test_single_commutator_random():
    rng = random.Random(37)
    for mode in (COMMUTATIVE, FREE):
        for _ in range(15):
            n = rng.choice([2, 3])
            omega = derived_element(rng, mode, n)
            expr = express_as_single_commutator(omega)
            assert expr.evaluate() == omega
            for part in expr.parts:
                assert part.alpha == 1
                assert all(v > part.i for v in part.f.used_variables())


def test_single_commutator_rejects_moved_last_variable():
    omega = sigma(COMMUTATIVE, 2, 2, 1, Polynomial.parse("1", COMMUTATIVE, 2)).endo()
    with pytest.raises(NotInDerivedSubgroup):
        express_as_single_commutator(omega)
    with pytest.raises(NotInDerivedSubgroup):
        express_as_single_commutator(identity(COMMUTATIVE, 1))
