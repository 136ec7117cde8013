"""Sparse polynomials with exact rational coefficients.

Two algebra modes share one representation: COMMUTATIVE monomials are
exponent vectors of fixed length n, FREE monomials are words of variable
indices.  Coefficients are exact rationals (gmpy2.mpq when available,
fractions.Fraction otherwise); all operations are pure and values are
immutable, so polynomials are safe to share between threads.
"""

from __future__ import annotations

import contextlib
from typing import NamedTuple

try:
    from gmpy2 import mpq as Scalar
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    from fractions import Fraction as Scalar

from .errors import (
    ArityMismatch,
    BudgetExceeded,
    IndexOutOfRange,
    ModeMismatch,
    ParseError,
)

COMMUTATIVE = "poly"
FREE = "free"

#: Degree of the zero polynomial; a real sentinel, never -1.
NEG_INFINITY = float("-inf")

_ZERO = Scalar(0)
_ONE = Scalar(1)

_term_budget = None


@contextlib.contextmanager
def term_budget(limit):
    """Cap the term count of any intermediate result while the context is active.

    Compositions of triangular automorphisms can blow up doubly
    exponentially; the budget turns memory exhaustion into BudgetExceeded.
    """
    global _term_budget
    if limit is not None and limit < 1:
        raise ValueError("budget must be at least 1")
    previous = _term_budget
    _term_budget = limit
    try:
        yield
    finally:
        _term_budget = previous


def _check_budget(count):
    if _term_budget is not None and count > _term_budget:
        raise BudgetExceeded(f"result has {count} terms, budget is {_term_budget}")


def as_scalar(value):
    """Coerce ints, strings, Fractions and Scalars to the coefficient type."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not supported")
    return Scalar(value)


def scalar_pow(a, k):
    a = as_scalar(a)
    if k >= 0:
        return a ** k
    return (_ONE / a) ** (-k)


def _mono_degree(mode, mono):
    return sum(mono) if mode == COMMUTATIVE else len(mono)


def _mono_mul(mode, a, b):
    if mode == COMMUTATIVE:
        return tuple(x + y for x, y in zip(a, b))
    return a + b


def _mono_str(mode, mono):
    if mode == COMMUTATIVE:
        parts = []
        for idx, e in enumerate(mono):
            if e == 1:
                parts.append(f"x{idx + 1}")
            elif e > 1:
                parts.append(f"x{idx + 1}^{e}")
        return "*".join(parts)
    parts = []
    for letter, count in _runs(mono):
        parts.append(f"x{letter}" if count == 1 else f"x{letter}^{count}")
    return "*".join(parts)


def _runs(word):
    """Maximal constant runs of a word as (letter, count) pairs."""
    runs = []
    for letter in word:
        if runs and runs[-1][0] == letter:
            runs[-1][1] += 1
        else:
            runs.append([letter, 1])
    return [(letter, count) for letter, count in runs]


class SyllableProfile(NamedTuple):
    """Decomposition data of a free monomial with respect to one variable."""

    degree: int
    syllables: int
    exponents: tuple


def syllable_profile(mono, i, mode=FREE):
    """Degree, syllable count and exponent vector of ``mono`` in variable i.

    Only meaningful for free-mode words; commutative monomials have at most
    one syllable and are rejected.
    """
    if mode != FREE:
        raise ModeMismatch("syllable profiles are defined for free monomials")
    exponents = tuple(count for letter, count in _runs(mono) if letter == i)
    return SyllableProfile(sum(exponents), len(exponents), exponents)


def _iadd(dest, terms, coeff):
    """dest += coeff * terms, dropping cancellations in place."""
    get = dest.get
    for mono, c in terms.items():
        v = get(mono)
        v = coeff * c if v is None else v + coeff * c
        if v:
            dest[mono] = v
        elif mono in dest:
            del dest[mono]


class Polynomial:
    """Immutable sparse polynomial tagged with its algebra mode and arity."""

    __slots__ = ("mode", "n", "terms", "_hash")

    def __init__(self, mode, n, terms=()):
        if mode not in (COMMUTATIVE, FREE):
            raise ModeMismatch(f"unknown algebra mode {mode!r}")
        if n < 1:
            raise ArityMismatch("variable count must be at least 1")
        clean = {}
        for mono, coeff in dict(terms).items():
            mono = tuple(mono)
            if mode == COMMUTATIVE:
                if len(mono) != n or any(e < 0 for e in mono):
                    raise ArityMismatch(f"bad exponent vector {mono} for n={n}")
            else:
                if any(not 1 <= letter <= n for letter in mono):
                    raise IndexOutOfRange(f"bad word {mono} for n={n}")
            coeff = as_scalar(coeff)
            if coeff:
                clean[mono] = coeff
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, mode, n, terms):
        """Trusted constructor: terms is an already-clean dict, not copied."""
        self = object.__new__(cls)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, mode, n):
        return cls._raw(mode, n, {})

    @classmethod
    def one(cls, mode, n):
        return cls.constant(mode, n, 1)

    @classmethod
    def constant(cls, mode, n, value):
        value = as_scalar(value)
        unit = (0,) * n if mode == COMMUTATIVE else ()
        return cls._raw(mode, n, {unit: value} if value else {})

    @classmethod
    def variable(cls, mode, n, i):
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"variable index {i} not in 1..{n}")
        if mode == COMMUTATIVE:
            mono = tuple(1 if k == i - 1 else 0 for k in range(n))
        else:
            mono = (i,)
        return cls._raw(mode, n, {mono: _ONE})

    @classmethod
    def variables(cls, mode, n):
        return tuple(cls.variable(mode, n, i) for i in range(1, n + 1))

    # -- queries ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(_mono_degree(self.mode, m) == 0 for m in self.terms)

    def constant_term(self):
        unit = (0,) * self.n if self.mode == COMMUTATIVE else ()
        return self.terms.get(unit, _ZERO)

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), _ZERO)

    def involves(self, i):
        """True if some monomial contains x_i."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"variable index {i} not in 1..{self.n}")
        if self.mode == COMMUTATIVE:
            return any(m[i - 1] for m in self.terms)
        return any(i in m for m in self.terms)

    def used_variables(self):
        used = set()
        for m in self.terms:
            if self.mode == COMMUTATIVE:
                used.update(idx + 1 for idx, e in enumerate(m) if e)
            else:
                used.update(m)
        return used

    def degree_in_var(self, i):
        """Total exponent of x_i, maximized over monomials; NEG_INFINITY for 0."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"variable index {i} not in 1..{self.n}")
        if not self.terms:
            return NEG_INFINITY
        if self.mode == COMMUTATIVE:
            return max(m[i - 1] for m in self.terms)
        return max(m.count(i) for m in self.terms)

    def degree(self):
        """Maximal total degree; NEG_INFINITY for the zero polynomial."""
        if not self.terms:
            return NEG_INFINITY
        return max(_mono_degree(self.mode, m) for m in self.terms)

    def min_degree(self):
        """Minimal total degree over monomials; NEG_INFINITY for zero."""
        if not self.terms:
            return NEG_INFINITY
        return min(_mono_degree(self.mode, m) for m in self.terms)

    # -- arithmetic ------------------------------------------------------

    def _compat(self, other):
        if self.mode != other.mode:
            raise ModeMismatch(f"cannot mix {self.mode} and {other.mode} polynomials")
        if self.n != other.n:
            raise ArityMismatch(f"cannot mix n={self.n} and n={other.n} polynomials")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._compat(other)
        out = dict(self.terms)
        _iadd(out, other.terms, _ONE)
        _check_budget(len(out))
        return Polynomial._raw(self.mode, self.n, out)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._compat(other)
        out = dict(self.terms)
        _iadd(out, other.terms, -_ONE)
        _check_budget(len(out))
        return Polynomial._raw(self.mode, self.n, out)

    def __neg__(self):
        return Polynomial._raw(
            self.mode, self.n, {m: -c for m, c in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._compat(other)
            mode = self.mode
            out = {}
            get = out.get
            commutative = mode == COMMUTATIVE
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = tuple(x + y for x, y in zip(m1, m2)) if commutative else m1 + m2
                    v = get(m)
                    v = c1 * c2 if v is None else v + c1 * c2
                    if v:
                        out[m] = v
                    elif m in out:
                        del out[m]
            _check_budget(len(out))
            return Polynomial._raw(mode, self.n, out)
        coeff = as_scalar(other)
        if not coeff:
            return Polynomial.zero(self.mode, self.n)
        return Polynomial._raw(
            self.mode, self.n, {m: coeff * c for m, c in self.terms.items()}
        )

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers take non-negative integers")
        result = Polynomial.one(self.mode, self.n)
        for _ in range(k):
            result = result * self
        return result

    def _mul_mono(self, mono, coeff=_ONE):
        """Right-multiplication by a single (monomial, coefficient) term."""
        if self.mode == COMMUTATIVE:
            out = {
                tuple(x + y for x, y in zip(m, mono)): c * coeff
                for m, c in self.terms.items()
            }
        else:
            out = {m + mono: c * coeff for m, c in self.terms.items()}
        return Polynomial._raw(self.mode, self.n, out)

    # -- the substitution homomorphism ----------------------------------

    def substitute(self, images):
        """Apply the endomorphism x_i -> images[i-1] to this polynomial.

        In free mode a word maps to the ordered product of the images.
        """
        images = tuple(images)
        if len(images) != self.n:
            raise ArityMismatch(
                f"expected {self.n} substitution images, got {len(images)}"
            )
        for im in images:
            self._compat(im)
        mode, n = self.mode, self.n
        var_monos = [
            Polynomial.variable(mode, n, i).terms for i in range(1, n + 1)
        ]
        trivial = [
            images[idx].terms == var_monos[idx] for idx in range(n)
        ]
        pow_cache = [[Polynomial.one(mode, n), images[idx]] for idx in range(n)]

        def power(idx, e):
            cache = pow_cache[idx]
            while len(cache) <= e:
                cache.append(cache[-1] * images[idx])
            return cache[e]

        out = {}
        if mode == COMMUTATIVE:
            for mono, c in self.terms.items():
                base = [0] * n
                acc = None
                for idx, e in enumerate(mono):
                    if not e:
                        continue
                    if trivial[idx]:
                        base[idx] = e
                    else:
                        pw = power(idx, e)
                        acc = pw if acc is None else acc * pw
                if acc is None:
                    _iadd(out, {tuple(base): _ONE}, c)
                elif any(base):
                    basem = tuple(base)
                    for m2, c2 in acc.terms.items():
                        _iadd(
                            out,
                            {tuple(x + y for x, y in zip(m2, basem)): _ONE},
                            c * c2,
                        )
                else:
                    _iadd(out, acc.terms, c)
                _check_budget(len(out))
        else:
            for word, c in self.terms.items():
                acc = None
                pending = []
                for letter, count in _runs(word):
                    if trivial[letter - 1]:
                        pending.extend((letter,) * count)
                    else:
                        if pending:
                            acc = (
                                Polynomial._raw(mode, n, {tuple(pending): _ONE})
                                if acc is None
                                else acc._mul_mono(tuple(pending))
                            )
                            pending = []
                        pw = power(letter - 1, count)
                        acc = pw if acc is None else acc * pw
                if pending:
                    acc = (
                        Polynomial._raw(mode, n, {tuple(pending): _ONE})
                        if acc is None
                        else acc._mul_mono(tuple(pending))
                    )
                if acc is None:
                    _iadd(out, {(): _ONE}, c)
                else:
                    _iadd(out, acc.terms, c)
                _check_budget(len(out))
        _check_budget(len(out))
        return Polynomial._raw(mode, n, out)

    def abelianize(self):
        """Project a free polynomial onto the commutative algebra."""
        if self.mode != FREE:
            raise ModeMismatch("abelianize takes a free-mode polynomial")
        out = {}
        for word, c in self.terms.items():
            exps = [0] * self.n
            for letter in word:
                exps[letter - 1] += 1
            _iadd(out, {tuple(exps): _ONE}, c)
        return Polynomial._raw(COMMUTATIVE, self.n, out)

    # -- equality, hashing, printing ------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.mode == other.mode
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.mode, self.n, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def sorted_terms(self):
        """Terms in canonical order: graded lexicographic, leading term first."""
        return sorted(
            self.terms.items(),
            key=lambda kv: (_mono_degree(self.mode, kv[0]), kv[0]),
            reverse=True,
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for idx, (mono, coeff) in enumerate(self.sorted_terms()):
            negative = coeff < 0
            mag = -coeff if negative else coeff
            ms = _mono_str(self.mode, mono)
            if not ms:
                body = str(mag)
            elif mag == 1:
                body = ms
            else:
                body = f"{mag}*{ms}"
            if idx == 0:
                if negative:
                    # a leading minus must ride on a rational to stay parseable
                    parts.append(f"{coeff}*{ms}" if ms else str(coeff))
                else:
                    parts.append(body)
            else:
                parts.append(" - " if negative else " + ")
                parts.append(body)
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self.mode!r}, n={self.n}, {str(self)!r})"

    # -- parsing ---------------------------------------------------------

    @classmethod
    def parse(cls, text, mode, n):
        """Parse the ASCII polynomial grammar; errors carry 1-based offsets."""
        return _Parser(text, mode, n).parse()


class _Parser:
    """Recursive-descent parser for the polynomial text grammar."""

    def __init__(self, text, mode, n):
        self.text = text
        self.mode = mode
        self.n = n
        self.pos = 0

    def error(self, message, pos=None):
        raise ParseError((self.pos if pos is None else pos) + 1, message)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def digits(self, what):
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start:
            self.error(f"expected {what}")
        return int(self.text[start:self.pos])

    def rational(self):
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.pos += 1
        num = self.digits("digits")
        if self.peek() == "/":
            self.pos += 1
            den_pos = self.pos
            den = self.digits("denominator digits")
            if den == 0:
                self.error("zero denominator", den_pos)
            return Scalar(sign * num, den)
        return Scalar(sign * num)

    def power_factor(self):
        if self.peek() != "x":
            self.error("expected a variable")
        self.pos += 1
        idx_pos = self.pos
        index = self.digits("variable index")
        if not 1 <= index <= self.n:
            self.error(f"variable index {index} not in 1..{self.n}", idx_pos)
        exponent = 1
        if self.peek() == "^":
            self.pos += 1
            exponent = self.digits("exponent digits")
        return index, exponent

    def monomial(self):
        if self.mode == COMMUTATIVE:
            exps = [0] * self.n
        else:
            word = []
        index, exponent = self.power_factor()
        while True:
            if self.mode == COMMUTATIVE:
                exps[index - 1] += exponent
            else:
                word.extend((index,) * exponent)
            save = self.pos
            self.skip_ws()
            if self.peek() != "*":
                self.pos = save
                break
            self.pos += 1
            self.skip_ws()
            if self.peek() != "x":
                self.pos = save
                break
            index, exponent = self.power_factor()
        return tuple(exps) if self.mode == COMMUTATIVE else tuple(word)

    def term(self):
        ch = self.peek()
        if ch == "x":
            return _ONE, self.monomial()
        if ch == "-" or ch.isdigit():
            coeff = self.rational()
            save = self.pos
            self.skip_ws()
            if self.peek() == "*":
                self.pos += 1
                self.skip_ws()
                return coeff, self.monomial()
            self.pos = save
            unit = (0,) * self.n if self.mode == COMMUTATIVE else ()
            return coeff, unit
        self.error("expected a term")

    def parse(self):
        self.skip_ws()
        if not self.peek():
            self.error("empty input")
        out = {}
        coeff, mono = self.term()
        _iadd(out, {mono: _ONE}, coeff)
        while True:
            self.skip_ws()
            op = self.peek()
            if op not in ("+", "-"):
                break
            self.pos += 1
            self.skip_ws()
            coeff, mono = self.term()
            _iadd(out, {mono: _ONE}, coeff if op == "+" else -coeff)
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return Polynomial._raw(self.mode, self.n, out)
