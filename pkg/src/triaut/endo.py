"""Endomorphisms of the polynomial / free associative algebra as values.

An endomorphism is the list of images of the generators; automorphism
families from the triangular world (elementary, diagonal, permutation,
triangular, unitriangular) are recognized by predicates rather than by
subclassing.  The composition convention is fixed left-to-right:
``x^(phi.psi) = (x^phi)^psi``, the unique orientation under which the
elementary-product identity sigma(i,a,f).sigma(i,b,g) = sigma(i,ab,f+a*g)
holds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    ArityMismatch,
    EqualIndices,
    IndexOutOfRange,
    ModeMismatch,
    NotTriangular,
    ParseError,
    VariableDependence,
    ZeroAlpha,
)
from .poly import COMMUTATIVE, FREE, Polynomial, Scalar, as_scalar, scalar_pow

_ONE = Scalar(1)

LABEL_IDENTITY = "Identity"
LABEL_ELEMENTARY = "Elementary"
LABEL_DIAGONAL = "Diagonal"
LABEL_PERMUTATION = "Permutation"
LABEL_UNITRIANGULAR = "Unitriangular"
LABEL_TRIANGULAR = "Triangular"
LABEL_AFFINE = "Affine"


class Endomorphism:
    """Algebra endomorphism given by generator images; immutable."""

    __slots__ = ("mode", "n", "images", "_hash")

    def __init__(self, images, mode=None, n=None):
        images = tuple(images)
        if not images:
            raise ArityMismatch("an endomorphism needs at least one image")
        mode = images[0].mode if mode is None else mode
        n = images[0].n if n is None else n
        if len(images) != n:
            raise ArityMismatch(f"expected {n} images, got {len(images)}")
        for img in images:
            if img.mode != mode:
                raise ModeMismatch("images disagree on algebra mode")
            if img.n != n:
                raise ArityMismatch("images disagree on variable count")
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Endomorphism is immutable")

    def apply(self, p):
        """The action p^phi."""
        return p.substitute(self.images)

    def is_identity(self):
        return self == identity(self.mode, self.n)

    def __eq__(self, other):
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return (
            self.mode == other.mode
            and self.n == other.n
            and self.images == other.images
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.mode, self.n, self.images))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        return to_json(self)

    def __repr__(self):
        return f"Endomorphism({self.mode!r}, n={self.n}, {[str(p) for p in self.images]})"


def identity(mode, n):
    return Endomorphism(Polynomial.variables(mode, n))


@dataclass(frozen=True)
class Elementary:
    """The elementary automorphism sigma(i, alpha, f): x_i -> alpha*x_i + f."""

    mode: str
    n: int
    i: int
    alpha: object
    f: Polynomial

    def __post_init__(self):
        if not 1 <= self.i <= self.n:
            raise IndexOutOfRange(f"target index {self.i} not in 1..{self.n}")
        object.__setattr__(self, "alpha", as_scalar(self.alpha))
        if not self.alpha:
            raise ZeroAlpha("alpha must be nonzero")
        f = self.f
        if not isinstance(f, Polynomial):
            f = Polynomial.constant(self.mode, self.n, f)
            object.__setattr__(self, "f", f)
        if f.mode != self.mode:
            raise ModeMismatch("f has the wrong algebra mode")
        if f.n != self.n:
            raise ArityMismatch("f has the wrong variable count")
        if f.involves(self.i):
            raise VariableDependence(f"f must not involve x{self.i}")

    def endo(self):
        images = list(Polynomial.variables(self.mode, self.n))
        images[self.i - 1] = images[self.i - 1] * self.alpha + self.f
        return Endomorphism(images)

    def inverse(self):
        inv = _ONE / self.alpha
        return Elementary(self.mode, self.n, self.i, inv, self.f * (-inv))

    def power(self, k):
        """Closed-form power: sigma(i,a,f)^k = sigma(i,a^k,(1+a+...+a^(k-1))f)."""
        if k == 0:
            return Elementary(self.mode, self.n, self.i, 1, self.f * 0)
        if k < 0:
            return self.inverse().power(-k)
        if self.alpha == 1:
            return Elementary(self.mode, self.n, self.i, 1, self.f * k)
        geometric = (scalar_pow(self.alpha, k) - 1) / (self.alpha - 1)
        return Elementary(
            self.mode, self.n, self.i, scalar_pow(self.alpha, k), self.f * geometric
        )

    def __str__(self):
        return f"sigma({self.i}, {self.alpha}, {self.f})"


def sigma(mode, n, i, alpha, f=0):
    """Convenience constructor for elementary automorphisms."""
    if not isinstance(f, Polynomial):
        f = Polynomial.constant(mode, n, f)
    return Elementary(mode, n, i, alpha, f)


def elementary(mode, n, i, alpha, f=0):
    """The elementary automorphism as an Endomorphism."""
    return sigma(mode, n, i, alpha, f).endo()


def transposition(mode, n, k, s):
    """The automorphism swapping x_k and x_s."""
    if not (1 <= k <= n and 1 <= s <= n):
        raise IndexOutOfRange(f"indices {k},{s} not in 1..{n}")
    if k == s:
        raise EqualIndices("transposition indices must differ")
    images = list(Polynomial.variables(mode, n))
    images[k - 1], images[s - 1] = images[s - 1], images[k - 1]
    return Endomorphism(images)


def compose(*phis):
    """Left-to-right composition: x^(compose(phi,psi)) = (x^phi)^psi."""
    if not phis:
        raise ArityMismatch("compose needs at least one endomorphism")
    result = phis[0]
    for psi in phis[1:]:
        if result.mode != psi.mode:
            raise ModeMismatch("cannot compose across algebra modes")
        if result.n != psi.n:
            raise ArityMismatch("cannot compose across variable counts")
        result = Endomorphism(
            [img.substitute(psi.images) for img in result.images]
        )
    return result


def triangular_shape(phi):
    """Split each image as alpha_i*x_i + f_i(x_{i+1},...,x_n) or raise.

    Raises NotTriangular when an image fails the upper-triangular shape.
    """
    alphas = []
    fs = []
    for i in range(1, phi.n + 1):
        x_i = Polynomial.variable(phi.mode, phi.n, i)
        img = phi.images[i - 1]
        alpha = img.coefficient(next(iter(x_i.terms)))
        if not alpha:
            raise NotTriangular(f"image of x{i} has no x{i} term")
        f = img - x_i * alpha
        if any(v <= i for v in f.used_variables()):
            raise NotTriangular(
                f"image of x{i} depends on a variable of index <= {i}"
            )
        alphas.append(alpha)
        fs.append(f)
    return alphas, fs


def is_triangular(phi):
    try:
        triangular_shape(phi)
        return True
    except NotTriangular:
        return False


def invert_triangular(phi):
    """Inverse of a triangular automorphism by back-substitution from x_n."""
    alphas, fs = triangular_shape(phi)
    inv_images = list(Polynomial.variables(phi.mode, phi.n))
    for i in range(phi.n, 0, -1):
        shifted = fs[i - 1].substitute(inv_images)
        x_i = Polynomial.variable(phi.mode, phi.n, i)
        inv_images[i - 1] = (x_i - shifted) * (_ONE / alphas[i - 1])
    return Endomorphism(inv_images)


def as_elementary(phi):
    """Recover (i, alpha, f) data when phi is elementary, else None."""
    moved = [
        i
        for i in range(1, phi.n + 1)
        if phi.images[i - 1] != Polynomial.variable(phi.mode, phi.n, i)
    ]
    if not moved:
        return Elementary(phi.mode, phi.n, 1, 1, Polynomial.zero(phi.mode, phi.n))
    if len(moved) != 1:
        return None
    i = moved[0]
    x_i = Polynomial.variable(phi.mode, phi.n, i)
    alpha = phi.images[i - 1].coefficient(next(iter(x_i.terms)))
    if not alpha:
        return None
    f = phi.images[i - 1] - x_i * alpha
    if f.involves(i):
        return None
    return Elementary(phi.mode, phi.n, i, alpha, f)


def invert(phi):
    """Inverse via the triangular shape, falling back to elementary form."""
    try:
        return invert_triangular(phi)
    except NotTriangular:
        e = as_elementary(phi)
        if e is not None:
            return e.inverse().endo()
        raise


def power(phi, k, inverse=None):
    """k-fold composition; negative k needs a triangular phi or an inverse."""
    if k == 0:
        return identity(phi.mode, phi.n)
    base = phi
    if k < 0:
        base = inverse if inverse is not None else invert(phi)
        k = -k
    result = base
    for _ in range(k - 1):
        result = compose(result, base)
    return result


def commutator(phi, psi, phi_inv=None, psi_inv=None):
    """[phi, psi] = phi^-1 psi^-1 phi psi under left-to-right composition."""
    phi_inv = invert(phi) if phi_inv is None else phi_inv
    psi_inv = invert(psi) if psi_inv is None else psi_inv
    return compose(phi_inv, psi_inv, phi, psi)


def conjugate(phi, by, by_inv=None):
    """by^-1 . phi . by."""
    by_inv = invert(by) if by_inv is None else by_inv
    return compose(by_inv, phi, by)


def split_triangular(phi):
    """Factor a triangular phi as compose(u, d): u unitriangular, d diagonal."""
    alphas, _ = triangular_shape(phi)
    d = Endomorphism(
        [
            Polynomial.variable(phi.mode, phi.n, i) * alphas[i - 1]
            for i in range(1, phi.n + 1)
        ]
    )
    u = compose(phi, invert_triangular(d))
    return u, d


def _linear_part(phi):
    """Matrix a[i][j] of x_j-coefficients of the images, or None if nonlinear."""
    matrix = []
    for img in phi.images:
        if img.degree() > 1:
            return None
        row = []
        for j in range(1, phi.n + 1):
            x_j = Polynomial.variable(phi.mode, phi.n, j)
            row.append(img.coefficient(next(iter(x_j.terms))))
        matrix.append(row)
    return matrix


def _det(matrix):
    m = [row[:] for row in matrix]
    size = len(m)
    det = _ONE
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col]), None)
        if pivot is None:
            return Scalar(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = _ONE / m[col][col]
        for r in range(col + 1, size):
            factor = m[r][col] * inv
            if factor:
                for c in range(col, size):
                    m[r][c] -= factor * m[col][c]
    return det


def classify(phi):
    """All applicable labels from the named automorphism families."""
    labels = set()
    n = phi.n
    variables = Polynomial.variables(phi.mode, n)
    if phi.images == variables:
        labels.add(LABEL_IDENTITY)
    if as_elementary(phi) is not None:
        labels.add(LABEL_ELEMENTARY)
    if all(
        phi.images[i] == variables[i] * phi.images[i].coefficient(
            next(iter(variables[i].terms))
        )
        and not phi.images[i].is_zero()
        for i in range(n)
    ):
        labels.add(LABEL_DIAGONAL)
    if sorted(phi.images, key=str) == sorted(variables, key=str) and set(
        phi.images
    ) == set(variables):
        labels.add(LABEL_PERMUTATION)
    try:
        alphas, _ = triangular_shape(phi)
        labels.add(LABEL_TRIANGULAR)
        if all(a == 1 for a in alphas):
            labels.add(LABEL_UNITRIANGULAR)
    except NotTriangular:
        pass
    matrix = _linear_part(phi)
    if matrix is not None and _det(matrix):
        labels.add(LABEL_AFFINE)
    return labels


# -- JSON document interface -------------------------------------------------


def to_document(phi):
    return {
        "algebra": phi.mode,
        "n": phi.n,
        "images": [str(img) for img in phi.images],
    }


def from_document(doc):
    if not isinstance(doc, dict):
        raise ParseError(1, "automorphism document must be a JSON object")
    for key in ("algebra", "n", "images"):
        if key not in doc:
            raise ParseError(1, f"automorphism document is missing {key!r}")
    mode = doc["algebra"]
    if mode not in (COMMUTATIVE, FREE):
        raise ParseError(1, f"algebra must be 'poly' or 'free', got {mode!r}")
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError(1, "n must be a positive integer")
    images = doc["images"]
    if not isinstance(images, list) or len(images) != n:
        raise ArityMismatch(f"expected {n} images, got {len(images)}")
    return Endomorphism([Polynomial.parse(text, mode, n) for text in images])


def to_json(phi):
    return json.dumps(to_document(phi), separators=(", ", ": "))


def from_json(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.pos + 1, f"invalid JSON: {exc.msg}") from exc
    return from_document(doc)
