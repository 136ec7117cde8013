"""Seeded random generators for polynomials, automorphisms and relation instances.

Used by the property-style tests and the ``check-relations`` CLI verifier;
everything is driven by an explicit random.Random so runs are reproducible.
"""

from __future__ import annotations

import random

from .endo import Elementary
from .poly import COMMUTATIVE, Polynomial, Scalar


def random_scalar(rng, nonzero=False):
    while True:
        value = Scalar(rng.randint(-4, 4), rng.randint(1, 3))
        if value or not nonzero:
            return value


def random_monomial(rng, mode, n, max_deg, variables=None):
    variables = list(range(1, n + 1)) if variables is None else list(variables)
    degree = rng.randint(0, max_deg)
    if mode == COMMUTATIVE:
        exps = [0] * n
        for _ in range(degree):
            exps[rng.choice(variables) - 1] += 1
        return tuple(exps)
    return tuple(rng.choice(variables) for _ in range(degree))


def random_poly(rng, mode, n, max_deg=3, max_terms=3, variables=None, nonzero=False):
    while True:
        terms = {}
        for _ in range(rng.randint(0, max_terms)):
            mono = random_monomial(rng, mode, n, max_deg, variables)
            coeff = random_scalar(rng, nonzero=True)
            terms[mono] = terms.get(mono, Scalar(0)) + coeff
        p = Polynomial(mode, n, terms)
        if not p.is_zero() or not nonzero:
            return p


def random_elementary(rng, mode, n, max_deg=3, unit=False, nonzero_f=False):
    i = rng.randint(1, n)
    alpha = Scalar(1) if unit else random_scalar(rng, nonzero=True)
    variables = [v for v in range(1, n + 1) if v != i]
    if variables:
        f = random_poly(rng, mode, n, max_deg=max_deg, variables=variables, nonzero=nonzero_f)
    else:
        f = Polynomial.constant(mode, n, random_scalar(rng, nonzero=nonzero_f))
    return Elementary(mode, n, i, alpha, f)


def random_layer_element(rng, mode, n, i, max_deg=3, nonzero_f=False):
    """A random element of G_i: sigma(i, 1, f) with f = f(x_{i+1},...,x_n)."""
    variables = list(range(i + 1, n + 1))
    if variables:
        f = random_poly(rng, mode, n, max_deg=max_deg, variables=variables, nonzero=nonzero_f)
    else:
        f = Polynomial.constant(mode, n, random_scalar(rng, nonzero=nonzero_f))
    return Elementary(mode, n, i, 1, f)


def random_unitriangular(rng, mode, n, max_deg=3):
    from .endo import Endomorphism

    images = []
    for i in range(1, n + 1):
        variables = list(range(i + 1, n + 1))
        if variables:
            f = random_poly(rng, mode, n, max_deg=max_deg, variables=variables)
        else:
            f = Polynomial.constant(mode, n, random_scalar(rng))
        images.append(Polynomial.variable(mode, n, i) + f)
    return Endomorphism(images)


def random_triangular(rng, mode, n, max_deg=3):
    from .endo import Endomorphism

    images = []
    for i in range(1, n + 1):
        variables = list(range(i + 1, n + 1))
        if variables:
            f = random_poly(rng, mode, n, max_deg=max_deg, variables=variables)
        else:
            f = Polynomial.constant(mode, n, random_scalar(rng))
        alpha = random_scalar(rng, nonzero=True)
        images.append(Polynomial.variable(mode, n, i) * alpha + f)
    return Endomorphism(images)


def random_reduced_word(rng, max_pairs=3, max_exp=2):
    pairs = rng.randint(1, max_pairs)
    word = []
    for _ in range(pairs):
        for tag in ("a", "b"):
            exp = 0
            while exp == 0:
                exp = rng.randint(-max_exp, max_exp)
            word.append((tag, exp))
    return tuple(word)


def _avoiding(rng, mode, n, forbidden, max_deg=2):
    variables = [v for v in range(1, n + 1) if v not in forbidden]
    if variables:
        return random_poly(rng, mode, n, max_deg=max_deg, variables=variables)
    return Polynomial.constant(mode, n, random_scalar(rng))


def relation_instance(family, rng, mode, n):
    """Admissible random parameters for one relation family."""
    if family == "R1":
        i = rng.randint(1, n)
        return dict(
            i=i,
            alpha=random_scalar(rng, nonzero=True),
            f=_avoiding(rng, mode, n, {i}),
            beta=random_scalar(rng, nonzero=True),
            g=_avoiding(rng, mode, n, {i}),
        )
    if family == "R2_1":
        i, k, s = rng.sample(range(1, n + 1), 3)
        return dict(
            k=k,
            s=s,
            i=i,
            alpha=random_scalar(rng, nonzero=True),
            f=_avoiding(rng, mode, n, {i}),
        )
    if family == "R2_2":
        i, s = rng.sample(range(1, n + 1), 2)
        return dict(
            i=i,
            s=s,
            alpha=random_scalar(rng, nonzero=True),
            f=_avoiding(rng, mode, n, {i}),
        )
    if family == "R3":
        i, j = rng.sample(range(1, n + 1), 2)
        return dict(
            i=i,
            alpha=random_scalar(rng, nonzero=True),
            f=_avoiding(rng, mode, n, {i, j}),
            j=j,
            beta=random_scalar(rng, nonzero=True),
            g=_avoiding(rng, mode, n, {j}),
        )
    if family == "R4":
        shape = rng.choice(["square", "braid", "commute"] if n >= 4 else ["square", "braid"])
        if shape == "square":
            k, s = rng.sample(range(1, n + 1), 2)
            return dict(k=k, s=s)
        if shape == "braid":
            k, s, l = rng.sample(range(1, n + 1), 3)
            return dict(k=k, s=s, l=l)
        k, s, l, m = rng.sample(range(1, n + 1), 4)
        return dict(k=k, s=s, l=l, m=m)
    if family == "R5":
        return dict(
            alpha=random_scalar(rng, nonzero=True),
            f=_avoiding(rng, mode, n, {1}),
            beta=random_scalar(rng, nonzero=True),
            g=_avoiding(rng, mode, n, {1}),
        )
    if family == "R6":
        k, s = rng.sample(range(2, n + 1), 2)
        return dict(
            k=k,
            s=s,
            alpha=random_scalar(rng, nonzero=True),
            g=_avoiding(rng, mode, n, {1}),
        )
    if family == "R7":
        i = rng.randint(2, n)
        return dict(
            i=i,
            alpha=random_scalar(rng, nonzero=True),
            g=_avoiding(rng, mode, n, {1, i}),
            beta=random_scalar(rng, nonzero=True),
            f=_avoiding(rng, mode, n, {1}),
        )
    raise ValueError(f"unknown relation family {family!r}")
