"""Constructive structure theory of the unitriangular group U_n.

Contains the antidifference solver (given g and a nonzero shift a, find f
with f(x_i+a) - f(x_i) = g), the factorization of a unitriangular
automorphism into abelian layers G_n, ..., G_1, and the two commutator
constructions: hitting a single layer element, and expressing an arbitrary
element of the derived subgroup as one commutator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .endo import (
    Elementary,
    Endomorphism,
    classify,
    commutator,
    compose,
    identity,
    invert_triangular,
    sigma,
    LABEL_UNITRIANGULAR,
)
from .errors import (
    BadIndices,
    IndexOutOfRange,
    LayerViolation,
    NotInDerivedSubgroup,
    NotUnitriangular,
    ZeroShift,
)
from .poly import (
    COMMUTATIVE,
    Polynomial,
    as_scalar,
    syllable_profile,
)


def _shift_images(mode, n, i, a):
    images = list(Polynomial.variables(mode, n))
    images[i - 1] = images[i - 1] + Polynomial.constant(mode, n, a)
    return images


def _order_key(mode, mono, i):
    """(degree, syllable count, exponent vector) of a monomial in x_i."""
    if mode == COMMUTATIVE:
        e = mono[i - 1]
        return (e, 1 if e else 0, (e,) if e else ())
    profile = syllable_profile(mono, i)
    return (profile.degree, profile.syllables, profile.exponents)


def _raise_first_syllable(mode, mono, i):
    """Insert one extra x_i into the first syllable; returns (mono', k1).

    A monomial free of x_i gets x_i prepended (empty leading block, k1 = 0).
    """
    if mode == COMMUTATIVE:
        k = mono[i - 1]
        raised = tuple(e + 1 if idx == i - 1 else e for idx, e in enumerate(mono))
        return raised, k
    first = next((pos for pos, letter in enumerate(mono) if letter == i), None)
    if first is None:
        return (i,) + mono, 0
    k = 0
    pos = first
    while pos < len(mono) and mono[pos] == i:
        k += 1
        pos += 1
    return mono[:first] + (i,) + mono[first:], k


def solve_difference(g, i, a):
    """Find f with f(..., x_i + a, ...) - f(..., x_i, ...) = g exactly.

    Works in both algebra modes; the recursion peels the maximal monomial
    under the (degree, syllable count, exponent vector) order and is
    normalized so that every monomial of f involves x_i.
    """
    a = as_scalar(a)
    if not a:
        raise ZeroShift("shift must be nonzero")
    if not 1 <= i <= g.n:
        raise IndexOutOfRange(f"variable index {i} not in 1..{g.n}")
    mode, n = g.mode, g.n
    shift = _shift_images(mode, n, i, a)
    f = Polynomial.zero(mode, n)
    remainder = g
    while not remainder.is_zero():
        mono = max(
            remainder.terms, key=lambda m: (_order_key(mode, m, i), m)
        )
        coeff = remainder.terms[mono]
        raised, k1 = _raise_first_syllable(mode, mono, i)
        piece = Polynomial(mode, n, {raised: coeff / ((k1 + 1) * a)})
        f = f + piece
        remainder = remainder - (piece.substitute(shift) - piece)
    return f


@dataclass(frozen=True)
class LayerFactorization:
    """Ordered elementary factors, G_n layer first, zero layers omitted."""

    mode: str
    n: int
    factors: tuple

    def recompose(self):
        result = identity(self.mode, self.n)
        for factor in self.factors:
            result = compose(result, factor.endo())
        return result


def factorize_unitriangular(phi):
    """Peel a unitriangular automorphism into abelian layer factors.

    Factor k lies in G_{i_k} with strictly decreasing indices; left-to-right
    composition of the factors reproduces phi exactly.
    """
    if LABEL_UNITRIANGULAR not in classify(phi):
        raise NotUnitriangular("input is not a unitriangular automorphism")
    mode, n = phi.mode, phi.n
    residual = phi
    factors = []
    for i in range(n, 0, -1):
        g = residual.images[i - 1] - Polynomial.variable(mode, n, i)
        if g.is_zero():
            continue
        factor = Elementary(mode, n, i, 1, g)
        factors.append(factor)
        residual = compose(factor.inverse().endo(), residual)
    if not residual.is_identity():  # pragma: no cover - structural invariant
        raise NotUnitriangular("peeling left a nontrivial residual")
    return LayerFactorization(mode, n, tuple(factors))


def express_in_layer_commutator(target, j, h):
    """Write sigma(i,1,g) in G_i as [sigma(i,1,f), sigma(j,1,h)] with j > i.

    f comes from the antidifference solver in variable x_j with shift h; the
    result is validated by evaluating the commutator.
    """
    h = as_scalar(h)
    if not h:
        raise ZeroShift("h must be nonzero")
    mode, n = target.mode, target.n
    i = target.i
    if not i < j <= n:
        raise BadIndices(f"need {i} < j <= {n}, got j={j}")
    if target.alpha != 1:
        raise LayerViolation("target must have alpha = 1")
    if any(v <= i for v in target.f.used_variables()):
        raise LayerViolation(
            f"target polynomial depends on a variable of index <= {i}"
        )
    psi = sigma(mode, n, j, 1, Polynomial.constant(mode, n, h))
    for g in (target.f, -target.f):
        f = solve_difference(g, j, h) if not g.is_zero() else g
        phi = Elementary(mode, n, i, 1, f)
        if commutator(phi.endo(), psi.endo()) == target.endo():
            return phi, psi
    # unreachable under the fixed composition convention
    raise LayerViolation("no sign choice reproduces the target")


@dataclass(frozen=True)
class CommutatorExpression:
    """omega = [left, right] with left the G_n part, right = parts[0]...parts[n-2]."""

    left: Endomorphism
    right: Endomorphism
    parts: tuple

    def evaluate(self):
        return commutator(self.left, self.right)


def express_as_single_commutator(omega):
    """Express an element of the derived subgroup of U_n as one commutator.

    Requires omega unitriangular with x_n fixed.  Solves for the layer
    polynomials top-down, re-expressing each equation through the change of
    variables y_m = x_m + f_m before calling the antidifference solver in
    the last variable with shift 1.
    """
    mode, n = omega.mode, omega.n
    if LABEL_UNITRIANGULAR not in classify(omega):
        raise NotInDerivedSubgroup("input is not unitriangular")
    if n < 2:
        raise NotInDerivedSubgroup("the derived subgroup is trivial for n = 1")
    x_n = Polynomial.variable(mode, n, n)
    if omega.images[n - 1] != x_n:
        raise NotInDerivedSubgroup("x_n is not fixed")
    variables = Polynomial.variables(mode, n)
    gs = [omega.images[k - 1] - variables[k - 1] for k in range(1, n)]
    fs = [None] * (n + 1)  # 1-based; fs[n] = 1
    fs[n] = Polynomial.one(mode, n)
    for k in range(n - 1, 0, -1):
        change = list(variables)
        for m in range(k + 1, n):
            change[m - 1] = variables[m - 1] + fs[m]
        theta_inv = invert_triangular(Endomorphism(change))
        g_tilde = gs[k - 1].substitute(theta_inv.images)
        if g_tilde.is_zero():
            fs[k] = Polynomial.zero(mode, n)
        else:
            fs[k] = solve_difference(-g_tilde, n, 1)
    parts = tuple(Elementary(mode, n, k, 1, fs[k]) for k in range(1, n + 1))
    right = identity(mode, n)
    for part in parts[: n - 1]:
        right = compose(right, part.endo())
    left = parts[n - 1].endo()
    expression = CommutatorExpression(left, right, parts)
    if expression.evaluate() != omega:  # pragma: no cover - structural invariant
        raise NotInDerivedSubgroup("commutator expression failed to recompose")
    return expression
