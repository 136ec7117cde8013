"""Generator systems for the tame automorphism group.

Translates elementary generators into words over the Cohn-style set
{phi(alpha, f), t(k, s)} (phi acts on x_1 only, t swaps two variables) and
verifies the eight relation families semantically, by evaluating both
sides as endomorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .endo import (
    Endomorphism,
    compose,
    identity,
    invert,
    sigma,
    transposition,
)
from .errors import (
    EqualIndices,
    IndexOutOfRange,
    ParseError,
    SideConditionViolated,
    VariableDependence,
)
from .poly import Polynomial, as_scalar


@dataclass(frozen=True)
class Phi:
    """Generator phi(alpha, f) = sigma(1, alpha, f) with f = f(x_2,...,x_n)."""

    alpha: object
    f: Polynomial

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_scalar(self.alpha))
        if self.f.involves(1):
            raise VariableDependence("phi-generator polynomial must not involve x1")

    def endo(self, n, mode):
        return sigma(mode, n, 1, self.alpha, self.f).endo()

    def __str__(self):
        return f"phi({self.alpha}; {self.f})"


@dataclass(frozen=True)
class Tau:
    """Generator t(k, s): the transposition of x_k and x_s."""

    k: int
    s: int

    def __post_init__(self):
        if self.k == self.s:
            raise EqualIndices("transposition indices must differ")

    def endo(self, n, mode):
        return transposition(mode, n, self.k, self.s)

    def __str__(self):
        return f"t({self.k},{self.s})"


def to_b_generators(e):
    """Translate sigma(i, alpha, f) into a word of length at most 3.

    For i = 1 the word is the single phi-generator; otherwise conjugation
    by the swap t(1, i) moves the action onto x_1.
    """
    if e.i == 1:
        return [Phi(e.alpha, e.f)]
    swap = transposition(e.mode, e.n, 1, e.i)
    return [Tau(1, e.i), Phi(e.alpha, e.f.substitute(swap.images)), Tau(1, e.i)]


def evaluate_b_word(word, n, mode):
    """Left-to-right composition of the generators' endomorphisms."""
    result = identity(mode, n)
    for gen in word:
        if isinstance(gen, Tau) and not (1 <= gen.k <= n and 1 <= gen.s <= n):
            raise IndexOutOfRange(f"{gen} does not fit n={n}")
        result = compose(result, gen.endo(n, mode))
    return result


def format_b_word(word):
    return " ".join(str(gen) for gen in word)


def parse_b_word(text, mode, n):
    """Parse whitespace-separated tokens ``t(k,s)`` and ``phi(alpha; <poly>)``."""
    word = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        if text.startswith("t(", pos):
            end = text.find(")", pos)
            if end < 0:
                raise ParseError(pos + 1, "unterminated t(...) token")
            body = text[pos + 2 : end]
            try:
                k_str, s_str = body.split(",")
                word.append(Tau(int(k_str), int(s_str)))
            except ValueError as exc:
                raise ParseError(pos + 1, f"bad transposition token t({body})") from exc
            pos = end + 1
        elif text.startswith("phi(", pos):
            end = text.find(")", pos)
            if end < 0:
                raise ParseError(pos + 1, "unterminated phi(...) token")
            body = text[pos + 4 : end]
            if ";" not in body:
                raise ParseError(pos + 1, "phi token needs 'alpha; poly'")
            alpha_str, poly_str = body.split(";", 1)
            try:
                alpha = as_scalar(alpha_str.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(pos + 1, f"bad rational {alpha_str.strip()!r}") from exc
            word.append(Phi(alpha, Polynomial.parse(poly_str.strip(), mode, n)))
            pos = end + 1
        else:
            raise ParseError(pos + 1, "expected a t(...) or phi(...) token")
    return word


class RelationCheck(NamedTuple):
    """Outcome of one relation instance with both evaluated sides as witness."""

    holds: bool
    lhs: Endomorphism
    rhs: Endomorphism


FAMILIES = ("R1", "R2_1", "R2_2", "R3", "R4", "R5", "R6", "R7")


def _require(condition, message):
    if not condition:
        raise SideConditionViolated(message)


def check_relation_family(family, mode, n, **params):
    """Evaluate one instance of a relation family as an endomorphism identity.

    Side conditions (index distinctness and variable dependence) are checked
    first and raise SideConditionViolated naming the failed constraint.
    """
    p = params
    if family == "R1":
        i, alpha, f, beta, g = p["i"], p["alpha"], p["f"], p["beta"], p["g"]
        _require(not f.involves(i), f"f must not involve x{i}")
        _require(not g.involves(i), f"g must not involve x{i}")
        lhs = compose(sigma(mode, n, i, alpha, f).endo(), sigma(mode, n, i, beta, g).endo())
        rhs = sigma(mode, n, i, as_scalar(alpha) * as_scalar(beta), f + g * as_scalar(alpha)).endo()
    elif family == "R2_1":
        k, s, i, alpha, f = p["k"], p["s"], p["i"], p["alpha"], p["f"]
        _require(k != i and s != i, "swap indices must avoid the target index")
        _require(not f.involves(i), f"f must not involve x{i}")
        t = transposition(mode, n, k, s)
        e = sigma(mode, n, i, alpha, f).endo()
        lhs = compose(t, e, t)
        rhs = sigma(mode, n, i, alpha, f.substitute(t.images)).endo()
    elif family == "R2_2":
        i, s, alpha, f = p["i"], p["s"], p["alpha"], p["f"]
        _require(i != s, "swap indices must differ")
        _require(not f.involves(i), f"f must not involve x{i}")
        t = transposition(mode, n, i, s)
        lhs = compose(t, sigma(mode, n, i, alpha, f).endo(), t)
        rhs = sigma(mode, n, s, alpha, f.substitute(t.images)).endo()
    elif family == "R3":
        i, alpha, f = p["i"], p["alpha"], p["f"]
        j, beta, g = p["j"], p["beta"], p["g"]
        _require(i != j, "indices must differ")
        _require(not f.involves(i), f"f must not involve x{i}")
        _require(not f.involves(j), f"f must not involve x{j}")
        _require(not g.involves(j), f"g must not involve x{j}")
        conj = sigma(mode, n, i, alpha, f).endo()
        lhs = compose(invert(conj), sigma(mode, n, j, beta, g).endo(), conj)
        rhs = sigma(mode, n, j, beta, g.substitute(conj.images)).endo()
    elif family == "R4":
        k, s = p["k"], p["s"]
        l, m = p.get("l"), p.get("m")
        t_ks = transposition(mode, n, k, s)
        if l is not None and m is not None:
            _require(not {k, s} & {l, m}, "index pairs must be disjoint")
            t_lm = transposition(mode, n, l, m)
            lhs = compose(t_ks, t_lm)
            rhs = compose(t_lm, t_ks)
        elif l is not None:
            _require(l not in (k, s), "third index must be new")
            lhs = compose(t_ks, transposition(mode, n, l, k), t_ks)
            rhs = transposition(mode, n, l, s)
        else:
            lhs = compose(t_ks, t_ks)
            rhs = identity(mode, n)
    elif family == "R5":
        alpha, f, beta, g = p["alpha"], p["f"], p["beta"], p["g"]
        lhs = compose(Phi(alpha, f).endo(n, mode), Phi(beta, g).endo(n, mode))
        rhs = Phi(as_scalar(alpha) * as_scalar(beta), g * as_scalar(alpha) + f).endo(n, mode)
    elif family == "R6":
        k, s, alpha, g = p["k"], p["s"], p["alpha"], p["g"]
        _require(k != 1 and s != 1, "swap must not touch x1")
        t = transposition(mode, n, k, s)
        lhs = compose(t, Phi(alpha, g).endo(n, mode), t)
        rhs = Phi(alpha, g.substitute(t.images)).endo(n, mode)
    elif family == "R7":
        i, alpha, g, beta, f = p["i"], p["alpha"], p["g"], p["beta"], p["f"]
        _require(i != 1, "conjugating swap must move x1")
        _require(not g.involves(i), f"g must not involve x{i}")
        t = transposition(mode, n, 1, i)
        phi_g = Phi(alpha, g).endo(n, mode)
        conj = compose(t, phi_g, t)
        lhs = compose(compose(t, invert(phi_g), t), Phi(beta, f).endo(n, mode), conj)
        rhs = Phi(beta, f.substitute(conj.images)).endo(n, mode)
    else:
        raise SideConditionViolated(f"unknown relation family {family!r}")
    return RelationCheck(lhs == rhs, lhs, rhs)
