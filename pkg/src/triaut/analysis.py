"""Subgroup and element analysis.

Free-product degree certificates for two-generator subgroups, the
classification of pairs of elementary automorphisms, the iterated
commutator witnessing non-linearity, element orders over Q,
diagonalization of elementary automorphisms, IA filtration levels, and
the eigen split of a polynomial under an involution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .endo import (
    classify,
    commutator,
    compose,
    conjugate,
    sigma,
    LABEL_DIAGONAL,
)
from .errors import (
    ArityMismatch,
    DegreeTooSmall,
    ModeMismatch,
    NotInvolution,
    ParseError,
    TrivialInput,
    UnreducedWord,
    UnsupportedIndices,
)
from .poly import COMMUTATIVE, FREE, NEG_INFINITY, Polynomial, Scalar, as_scalar

# -- group words over two abstract generators --------------------------------


def validate_word(word):
    """A reduced word: alternating tags in {a, b} with nonzero exponents."""
    word = tuple((tag, int(exp)) for tag, exp in word)
    previous = None
    for tag, exp in word:
        if tag not in ("a", "b"):
            raise UnreducedWord(f"unknown generator tag {tag!r}")
        if exp == 0:
            raise UnreducedWord("zero exponents are not reduced")
        if tag == previous:
            raise UnreducedWord("adjacent syllables share a generator")
        previous = tag
    return word


def parse_group_word(text):
    """Parse the text form, e.g. ``a^2 b^-1 a b^3``."""
    word = []
    for offset, token in _tokens(text):
        if "^" in token:
            tag, exp_str = token.split("^", 1)
            try:
                exp = int(exp_str)
            except ValueError as exc:
                raise ParseError(offset, f"bad exponent {exp_str!r}") from exc
        else:
            tag, exp = token, 1
        if tag not in ("a", "b"):
            raise ParseError(offset, f"unknown generator tag {tag!r}")
        word.append((tag, exp))
    return validate_word(word)


def _tokens(text):
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        end = pos
        while end < len(text) and not text[end].isspace():
            end += 1
        yield pos + 1, text[pos:end]
        pos = end


def format_group_word(word):
    return " ".join(
        tag if exp == 1 else f"{tag}^{exp}" for tag, exp in word
    )


def normalize_word(word):
    """Cyclically reduce and rotate into the a-first, b-last form.

    Cyclic conjugation preserves nontriviality; a word that collapses into
    a single cyclic factor has no pair form and is rejected.
    """
    word = list(validate_word(word))
    # merge matching first/last syllables (conjugation by the last syllable)
    while len(word) > 1 and word[0][0] == word[-1][0]:
        tag, last_exp = word.pop()
        first_tag, first_exp = word[0]
        merged = first_exp + last_exp
        if merged:
            word[0] = (first_tag, merged)
        else:
            word.pop(0)
    tags = {tag for tag, _ in word}
    if tags != {"a", "b"}:
        raise UnreducedWord("word lies in a single cyclic factor")
    if word[0][0] == "b":
        word.append(word.pop(0))
    return tuple(word)


@dataclass(frozen=True)
class FreePairCertificate:
    """Degree-growth certificate that a word acts nontrivially."""

    p: int
    q: int
    original_word: tuple
    word: tuple
    syllable_pairs: int
    observed_degree: int
    expected_degree: int
    valid: bool


def free_pair_check(f, g, word):
    """Certify nontriviality of a word in sigma(1,1,f) and sigma(2,1,g).

    Needs p = deg_{x2} f >= 1, q = deg_{x1} g >= 1 and p*q >= 2.  Free-mode
    inputs are pushed through abelianization first; the probe polynomial is
    x_1 and a valid certificate observes degree (p*q)^m.
    """
    if f.mode != g.mode or f.n != g.n:
        raise ModeMismatch("f and g must share mode and variable count")
    if f.n < 2:
        raise ArityMismatch("the free-pair check needs at least two variables")
    if f.mode == FREE:
        f, g = f.abelianize(), g.abelianize()
    p = f.degree_in_var(2)
    q = g.degree_in_var(1)
    if p is NEG_INFINITY or q is NEG_INFINITY or p < 1 or q < 1 or p * q < 2:
        raise DegreeTooSmall(
            f"need deg_x2(f) * deg_x1(g) >= 2, got p={p}, q={q}"
        )
    original = validate_word(word)
    normalized = normalize_word(original)
    pairs = len(normalized) // 2
    mode, n = f.mode, f.n
    probe = Polynomial.variable(mode, n, 1)
    for tag, exp in normalized:
        base = f if tag == "a" else g
        index = 1 if tag == "a" else 2
        step = sigma(mode, n, index, 1, base * exp)  # sigma(i,1,f)^k = sigma(i,1,k*f)
        probe = probe.substitute(step.endo().images)
    observed = probe.degree_in_var(1)
    expected = (p * q) ** pairs
    return FreePairCertificate(
        p=p,
        q=q,
        original_word=original,
        word=normalized,
        syllable_pairs=pairs,
        observed_degree=observed,
        expected_degree=expected,
        valid=observed == expected,
    )


# -- two-generator classification --------------------------------------------

FREE_PRODUCT = "FreeProduct"
METABELIAN = "Metabelian"
Z_CROSS_Z = "ZxZ"
Z = "Z"
UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class PairClass:
    kind: str
    reason: str


def _proportional(f, g):
    """True when f = c * g for some rational c."""
    if g.is_zero():
        return f.is_zero()
    mono, coeff = next(iter(g.terms.items()))
    c = f.terms.get(mono)
    if c is None:
        return False
    return f == g * (c / coeff)


def classify_pair(e1, e2):
    """Classify the subgroup generated by two elementary automorphisms.

    Covered index patterns: both act on x_1, or they act on x_1 and x_2.
    """
    if e1.mode != e2.mode or e1.n != e2.n:
        raise ModeMismatch("the two automorphisms must share mode and n")
    if (e1.i, e2.i) == (1, 1):
        if e1.f.is_zero() or e2.f.is_zero():
            return PairClass(UNDETERMINED, "a zero polynomial leaves the covered cases")
        if e1.alpha != 1 or e2.alpha != 1:
            return PairClass(
                METABELIAN, "same target index with a dilation: commutators land in G_1"
            )
        if _proportional(e1.f, e2.f):
            return PairClass(Z, "translation polynomials are rationally proportional")
        return PairClass(Z_CROSS_Z, "translation polynomials are not proportional")
    if (e1.i, e2.i) == (1, 2):
        if e2.f.is_constant():
            return PairClass(
                METABELIAN, "second generator translates by a constant"
            )
        f, g = e1.f, e2.f
        if f.mode == FREE:
            f, g = f.abelianize(), g.abelianize()
        p, q = f.degree_in_var(2), g.degree_in_var(1)
        if p is not NEG_INFINITY and q is not NEG_INFINITY and p >= 1 and q >= 1 and p * q >= 2:
            return PairClass(
                FREE_PRODUCT, f"degree product p*q = {p * q} >= 2 forces a free product"
            )
        return PairClass(UNDETERMINED, "degree product below 2 is an open case")
    raise UnsupportedIndices(
        f"only index patterns (1,1) and (1,2) are classified, got ({e1.i},{e2.i})"
    )


# -- the non-linearity witness ------------------------------------------------


def nonlinearity_witness(p, l, m):
    """The added polynomial of the iterated commutator in U_3.

    Builds [phi_p^l, _m [chi^l, psi^l]] literally, with phi_p: x1 -> x1+x2^p,
    chi: x2 -> x2+x3, psi: x3 -> x3+1, and returns x1's image minus x1.
    """
    if p < 1 or l < 1 or m < 1:
        raise TrivialInput("p, l and m must be positive")
    mode, n = COMMUTATIVE, 3
    x2 = Polynomial.variable(mode, n, 2)
    phi_l = sigma(mode, n, 1, 1, (x2 ** p) * l).endo()
    chi_l = sigma(mode, n, 2, 1, Polynomial.variable(mode, n, 3) * l).endo()
    psi_l = sigma(mode, n, 3, 1, Polynomial.constant(mode, n, l)).endo()
    inner = commutator(chi_l, psi_l)
    witness = commutator(phi_l, inner)
    for _ in range(m - 1):
        witness = commutator(witness, inner)
    return witness.images[0] - Polynomial.variable(mode, n, 1)


def witness_value_at_zero(p, l, m):
    """The witness polynomial evaluated at x2 = 0; a plain rational."""
    w = nonlinearity_witness(p, l, m)
    at_zero = w.substitute(
        [
            Polynomial.variable(COMMUTATIVE, 3, 1),
            Polynomial.zero(COMMUTATIVE, 3),
            Polynomial.variable(COMMUTATIVE, 3, 3),
        ]
    )
    return at_zero.constant_term()


# -- orders, diagonalization, IA levels, eigen splits -------------------------


def element_order(e):
    """Order of an elementary automorphism over Q: 1, 2 or infinite (None).

    The only finite multiplicative orders in Q* are 1 and 2, so the answer
    is closed-form; finite claims are re-verified through the power map.
    """
    if e.endo().is_identity():
        return 1
    if e.alpha == -1:
        assert e.power(2).endo().is_identity()
        return 2
    return None


def diagonalize_elementary(e):
    """Conjugate sigma(i, alpha, f) to a diagonal automorphism when alpha != 1.

    Returns (conjugator, diagonal) or None when alpha = 1 with f nonzero,
    which is never diagonalizable.  The identity is rejected as trivial.
    """
    if e.endo().is_identity():
        raise TrivialInput("the identity is already diagonal")
    if e.alpha == 1:
        return None
    scale = -(Scalar(1) / (as_scalar(e.alpha) - 1))
    c = sigma(e.mode, e.n, e.i, 1, e.f * scale).endo()
    d = conjugate(e.endo(), c)
    assert LABEL_DIAGONAL in classify(d)
    return c, d


def ia_level(phi):
    """Level k of the IA filtration, None when not an IA automorphism.

    k + 1 is the minimal total degree of a monomial in any x_i^phi - x_i;
    a monomial of degree <= 1 breaks membership.  The identity sits at
    every level and reports math.inf.
    """
    min_degree = None
    for i in range(1, phi.n + 1):
        diff = phi.images[i - 1] - Polynomial.variable(phi.mode, phi.n, i)
        d = diff.min_degree()
        if d is NEG_INFINITY:
            continue
        if min_degree is None or d < min_degree:
            min_degree = d
    if min_degree is None:
        return math.inf
    if min_degree <= 1:
        return None
    return min_degree - 1


def fix_ifix_split(f, phi):
    """Split f = f1 + f2 with f1 fixed and f2 negated by the involution phi."""
    if f.mode != phi.mode or f.n != phi.n:
        raise ModeMismatch("polynomial and involution must share mode and n")
    if not compose(phi, phi).is_identity():
        raise NotInvolution("the automorphism must square to the identity")
    f_phi = f.substitute(phi.images)
    half = Scalar(1, 2)
    return (f + f_phi) * half, (f - f_phi) * half
