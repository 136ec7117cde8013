"""Unit tests for endomorphisms and the elementary/triangular families."""

import random

import pytest

from triaut import (
    COMMUTATIVE,
    FREE,
    Elementary,
    Polynomial,
    classify,
    commutator,
    compose,
    conjugate,
    from_json,
    identity,
    invert,
    invert_triangular,
    power,
    sigma,
    split_triangular,
    to_json,
    transposition,
)
from triaut.endo import (
    LABEL_DIAGONAL,
    LABEL_ELEMENTARY,
    LABEL_IDENTITY,
    LABEL_PERMUTATION,
    LABEL_TRIANGULAR,
    LABEL_UNITRIANGULAR,
    as_elementary,
)
from triaut.errors import (
    NotTriangular,
    ParseError,
    VariableDependence,
    ZeroAlpha,
)
from triaut.randgen import random_elementary, random_triangular, random_unitriangular


def poly(text, mode=COMMUTATIVE, n=2):
    return Polynomial.parse(text, mode, n)


def test_composition_is_left_to_right():
    # x^(phi.psi) = (x^phi)^psi
    phi = sigma(COMMUTATIVE, 2, 1, 1, poly("x2")).endo()
    psi = sigma(COMMUTATIVE, 2, 2, 1, poly("1")).endo()
    both = compose(phi, psi)
    x1 = Polynomial.variable(COMMUTATIVE, 2, 1)
    assert both.images[0] == psi.apply(phi.apply(x1))
    assert both.images[0] == poly("x1 + x2 + 1")


def test_elementary_product_identity():
    # sigma(i,a,f) . sigma(i,b,g) = sigma(i,ab,f+a*g)
    rng = random.Random(3)
    for mode in (COMMUTATIVE, FREE):
        for _ in range(25):
            n = rng.randint(2, 3)
            e1 = random_elementary(rng, mode, n)
            # second elementary with the same target index
            a2 = random_elementary(rng, mode, n)
            e2 = Elementary(mode, n, e1.i, a2.alpha, _avoid(rng, mode, n, e1.i))
            lhs = compose(e1.endo(), e2.endo())
            rhs = sigma(
                mode, n, e1.i, e1.alpha * e2.alpha, e1.f + e2.f * e1.alpha
            ).endo()
            assert lhs == rhs


def _avoid(rng, mode, n, i):
    from triaut.randgen import random_poly

    variables = [v for v in range(1, n + 1) if v != i]
    if variables:
        return random_poly(rng, mode, n, max_deg=2, variables=variables)
    return Polynomial.constant(mode, n, rng.randint(-3, 3))


def test_elementary_validation():
    with pytest.raises(ZeroAlpha):
        sigma(COMMUTATIVE, 2, 1, 0)
    with pytest.raises(VariableDependence):
        sigma(COMMUTATIVE, 2, 1, 1, poly("x1"))


def test_elementary_inverse_and_power():
    rng = random.Random(11)
    for _ in range(30):
        e = random_elementary(rng, COMMUTATIVE, 3)
        assert compose(e.endo(), e.inverse().endo()).is_identity()
        for k in (-3, -1, 0, 2, 4):
            assert e.power(k).endo() == power(e.endo(), k)


def test_invert_triangular():
    rng = random.Random(5)
    for mode in (COMMUTATIVE, FREE):
        for _ in range(20):
            phi = random_triangular(rng, mode, 3, max_deg=3)
            inv = invert_triangular(phi)
            assert compose(phi, inv).is_identity()
            assert compose(inv, phi).is_identity()


def test_invert_rejects_nontriangular():
    swap = transposition(COMMUTATIVE, 2, 1, 2)
    with pytest.raises(NotTriangular):
        invert_triangular(swap)
    # the generic inverse falls back to the elementary form for non-triangular
    e = sigma(COMMUTATIVE, 2, 2, 1, poly("x1"))
    assert compose(e.endo(), invert(e.endo())).is_identity()


def test_commutator_and_conjugate():
    phi = sigma(COMMUTATIVE, 2, 1, 1, poly("x2^2")).endo()
    psi = sigma(COMMUTATIVE, 2, 2, 1, poly("1")).endo()
    c = commutator(phi, psi)
    expected = compose(invert(phi), invert(psi), phi, psi)
    assert c == expected
    assert conjugate(phi, psi) == compose(invert(psi), phi, psi)


def test_split_triangular_contract():
    rng = random.Random(9)
    for _ in range(20):
        phi = random_triangular(rng, COMMUTATIVE, 3)
        u, d = split_triangular(phi)
        assert LABEL_UNITRIANGULAR in classify(u)
        assert LABEL_DIAGONAL in classify(d)
        assert compose(u, d) == phi


def test_classify_labels():
    n = 3
    assert LABEL_IDENTITY in classify(identity(COMMUTATIVE, n))
    assert LABEL_PERMUTATION in classify(transposition(COMMUTATIVE, n, 1, 3))
    e = sigma(COMMUTATIVE, n, 1, 2, poly("x2", n=n)).endo()
    labels = classify(e)
    assert LABEL_ELEMENTARY in labels
    assert LABEL_TRIANGULAR in labels
    assert LABEL_UNITRIANGULAR not in labels


def test_as_elementary_roundtrip():
    rng = random.Random(13)
    for mode in (COMMUTATIVE, FREE):
        for _ in range(20):
            e = random_elementary(rng, mode, 3)
            back = as_elementary(e.endo())
            assert back is not None
            assert back.endo() == e.endo()
    assert as_elementary(transposition(COMMUTATIVE, 3, 1, 2)) is None


def test_json_roundtrip():
    rng = random.Random(17)
    for mode in (COMMUTATIVE, FREE):
        for _ in range(20):
            phi = random_unitriangular(rng, mode, 3)
            assert from_json(to_json(phi)) == phi


def test_json_schema_errors():
    with pytest.raises(ParseError):
        from_json("not json")
    with pytest.raises(ParseError):
        from_json('{"algebra": "weird", "n": 1, "images": ["x1"]}')
    with pytest.raises(ParseError):
        from_json('{"algebra": "poly", "n": 1}')
