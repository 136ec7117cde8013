"""Command-line front end.

Every library operation is reachable as a subcommand with bit-exact text
input and output.  Exit codes: 0 success, 1 domain/precondition error,
2 parse error (the message carries a 1-based byte offset).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import analysis, endo, presentation, randgen, structure
from .errors import ParseError, TriautError, UnsupportedIndices
from .poly import COMMUTATIVE, FREE, Polynomial, as_scalar, term_budget


def _scalar_arg(text):
    try:
        return as_scalar(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ParseError(1, f"bad rational {text!r}") from exc


def _sigma_dict(e):
    return {"i": e.i, "alpha": str(e.alpha), "f": str(e.f)}


def _elementary_from_auto(args, ctx):
    phi = endo.from_json(args.auto)
    e = endo.as_elementary(phi)
    if e is None:
        raise UnsupportedIndices("automorphism is not elementary")
    return e


class Context:
    def __init__(self, args):
        self.mode = args.algebra
        self.n = args.n


def _auto_out(phi):
    return [endo.to_json(phi)], endo.to_document(phi)


def cmd_compose(args, ctx):
    phis = [endo.from_json(doc) for doc in args.auto]
    return _auto_out(endo.compose(*phis))


def cmd_invert(args, ctx):
    return _auto_out(endo.invert_triangular(endo.from_json(args.auto)))


def cmd_power(args, ctx):
    return _auto_out(endo.power(endo.from_json(args.auto), args.k))


def cmd_commutator(args, ctx):
    a, b = (endo.from_json(doc) for doc in args.auto)
    return _auto_out(endo.commutator(a, b))


def cmd_factorize(args, ctx):
    phi = endo.from_json(args.auto)
    factorization = structure.factorize_unitriangular(phi)
    if args.check and factorization.recompose() != phi:
        raise TriautError("factorization failed to recompose")
    lines = [str(f) for f in factorization.factors] or ["identity"]
    return lines, {"factors": [_sigma_dict(f) for f in factorization.factors]}


def cmd_comm_express(args, ctx):
    omega = endo.from_json(args.auto)
    expr = structure.express_as_single_commutator(omega)
    if args.check and expr.evaluate() != omega:
        raise TriautError("commutator expression failed to recompose")
    lines = [
        f"left: {endo.to_json(expr.left)}",
        f"right: {endo.to_json(expr.right)}",
    ] + [f"part: {part}" for part in expr.parts]
    doc = {
        "left": endo.to_document(expr.left),
        "right": endo.to_document(expr.right),
        "parts": [_sigma_dict(part) for part in expr.parts],
    }
    return lines, doc


def cmd_layer_comm(args, ctx):
    g = Polynomial.parse(args.g, ctx.mode, ctx.n)
    target = endo.sigma(ctx.mode, ctx.n, args.target_i, 1, g)
    phi, psi = structure.express_in_layer_commutator(
        target, args.j, _scalar_arg(args.h)
    )
    return (
        [f"phi: {phi}", f"psi: {psi}"],
        {"phi": _sigma_dict(phi), "psi": _sigma_dict(psi)},
    )


def cmd_solve_diff(args, ctx):
    g = Polynomial.parse(args.g, ctx.mode, ctx.n)
    f = structure.solve_difference(g, args.var, _scalar_arg(args.shift))
    return [str(f)], {"f": str(f)}


def cmd_translate(args, ctx):
    f = Polynomial.parse(args.f, ctx.mode, ctx.n)
    e = endo.sigma(ctx.mode, ctx.n, args.i, _scalar_arg(args.alpha), f)
    word = presentation.to_b_generators(e)
    text = presentation.format_b_word(word)
    return [text], {"word": text}


def cmd_check_relations(args, ctx):
    rng = random.Random(args.seed)
    families = [args.family] if args.family else list(presentation.FAMILIES)
    lines = []
    results = {}
    failures = 0
    n = max(ctx.n, 3)  # several families need three distinct indices
    for family in families:
        passed = 0
        for _ in range(args.count):
            params = randgen.relation_instance(family, rng, ctx.mode, n)
            check = presentation.check_relation_family(family, ctx.mode, n, **params)
            passed += check.holds
        ok = passed == args.count
        failures += not ok
        lines.append(f"{family}: {passed}/{args.count} {'ok' if ok else 'FAILED'}")
        results[family] = {"passed": passed, "count": args.count, "ok": ok}
    if failures:
        raise TriautError(f"{failures} relation families failed")
    return lines, {"families": results, "seed": args.seed}


def cmd_free_check(args, ctx):
    f = Polynomial.parse(args.f, ctx.mode, ctx.n)
    g = Polynomial.parse(args.g, ctx.mode, ctx.n)
    word = analysis.parse_group_word(args.word)
    cert = analysis.free_pair_check(f, g, word)
    lines = [
        f"valid: {'yes' if cert.valid else 'no'}",
        f"p: {cert.p}",
        f"q: {cert.q}",
        f"pairs: {cert.syllable_pairs}",
        f"word: {analysis.format_group_word(cert.word)}",
        f"observed: {cert.observed_degree}",
        f"expected: {cert.expected_degree}",
    ]
    doc = {
        "valid": cert.valid,
        "p": cert.p,
        "q": cert.q,
        "pairs": cert.syllable_pairs,
        "word": analysis.format_group_word(cert.word),
        "observed": cert.observed_degree,
        "expected": cert.expected_degree,
    }
    return lines, doc


def cmd_classify_pair(args, ctx):
    e1 = endo.sigma(
        ctx.mode, ctx.n, args.i1, _scalar_arg(args.alpha1),
        Polynomial.parse(args.f1, ctx.mode, ctx.n),
    )
    e2 = endo.sigma(
        ctx.mode, ctx.n, args.i2, _scalar_arg(args.alpha2),
        Polynomial.parse(args.f2, ctx.mode, ctx.n),
    )
    result = analysis.classify_pair(e1, e2)
    return (
        [f"{result.kind} ({result.reason})"],
        {"class": result.kind, "reason": result.reason},
    )


def cmd_nonlin_witness(args, ctx):
    if args.at_zero:
        value = analysis.witness_value_at_zero(args.p, args.l, args.m)
        return [str(value)], {"value": str(value)}
    w = analysis.nonlinearity_witness(args.p, args.l, args.m)
    return [str(w)], {"witness": str(w)}


def cmd_order(args, ctx):
    e = _elementary_from_auto(args, ctx)
    order = analysis.element_order(e)
    text = "infinite" if order is None else f"finite {order}"
    return [text], {"order": order}


def cmd_diag(args, ctx):
    e = _elementary_from_auto(args, ctx)
    result = analysis.diagonalize_elementary(e)
    if result is None:
        return ["not diagonalizable"], {"diagonalizable": False}
    c, d = result
    if args.check and endo.conjugate(e.endo(), c) != d:
        raise TriautError("diagonalization failed to verify")
    return (
        [f"conjugator: {endo.to_json(c)}", f"diagonal: {endo.to_json(d)}"],
        {
            "diagonalizable": True,
            "conjugator": endo.to_document(c),
            "diagonal": endo.to_document(d),
        },
    )


def cmd_ia_level(args, ctx):
    phi = endo.from_json(args.auto)
    level = analysis.ia_level(phi)
    if level is None:
        return ["not IA"], {"ia": False}
    return [f"level {level}"], {"ia": True, "level": None if level == float("inf") else level}


def cmd_fix_split(args, ctx):
    phi = endo.from_json(args.auto)
    f = Polynomial.parse(args.f, phi.mode, phi.n)
    fixed, flipped = analysis.fix_ifix_split(f, phi)
    return (
        [f"fix: {fixed}", f"ifix: {flipped}"],
        {"fix": str(fixed), "ifix": str(flipped)},
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="triaut",
        description="Exact algebra of triangular automorphisms over Q.",
    )
    parser.add_argument(
        "--algebra", choices=[COMMUTATIVE, FREE], default=COMMUTATIVE,
        help="algebra mode for textual polynomial arguments",
    )
    parser.add_argument("--n", type=int, default=2, help="number of variables")
    parser.add_argument(
        "--budget", type=int, default=None,
        help="maximum term count before aborting with a budget error",
    )
    parser.add_argument(
        "--output", choices=["text", "json"], default="text",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        return p

    p = add("compose", cmd_compose, help="compose automorphisms left to right")
    p.add_argument("--auto", action="append", required=True)
    p = add("invert", cmd_invert, help="invert a triangular automorphism")
    p.add_argument("--auto", required=True)
    p = add("power", cmd_power, help="integer power of an automorphism")
    p.add_argument("--auto", required=True)
    p.add_argument("--k", type=int, required=True)
    p = add("commutator", cmd_commutator, help="[a, b] = a^-1 b^-1 a b")
    p.add_argument("--auto", action="append", required=True)
    p = add("factorize", cmd_factorize, help="layer factorization of a unitriangular map")
    p.add_argument("--auto", required=True)
    p.add_argument("--check", action="store_true")
    p = add("comm-express", cmd_comm_express, help="write a derived-subgroup element as one commutator")
    p.add_argument("--auto", required=True)
    p.add_argument("--check", action="store_true")
    p = add("layer-comm", cmd_layer_comm, help="hit a layer element as a two-layer commutator")
    p.add_argument("--target-i", type=int, required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--h", required=True)
    p = add("solve-diff", cmd_solve_diff, help="antidifference: f(x+a) - f(x) = g")
    p.add_argument("--var", type=int, required=True)
    p.add_argument("--shift", required=True)
    p.add_argument("--g", required=True)
    p = add("translate", cmd_translate, help="rewrite sigma(i, alpha, f) over the phi/t generators")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--f", required=True)
    p = add("check-relations", cmd_check_relations, help="randomized relation verifier")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--family", choices=list(presentation.FAMILIES))
    p = add("free-check", cmd_free_check, help="free-product degree certificate")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--word", required=True)
    p = add("classify-pair", cmd_classify_pair, help="classify a two-generator subgroup")
    p.add_argument("--i1", type=int, required=True)
    p.add_argument("--alpha1", required=True)
    p.add_argument("--f1", required=True)
    p.add_argument("--i2", type=int, required=True)
    p.add_argument("--alpha2", required=True)
    p.add_argument("--f2", required=True)
    p = add("nonlin-witness", cmd_nonlin_witness, help="iterated-commutator witness polynomial")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--at-zero", action="store_true")
    p = add("order", cmd_order, help="order of an elementary automorphism")
    p.add_argument("--auto", required=True)
    p = add("diag", cmd_diag, help="diagonalize an elementary automorphism")
    p.add_argument("--auto", required=True)
    p.add_argument("--check", action="store_true")
    p = add("ia-level", cmd_ia_level, help="IA filtration level")
    p.add_argument("--auto", required=True)
    p = add("fix-split", cmd_fix_split, help="eigen split of a polynomial under an involution")
    p.add_argument("--auto", required=True)
    p.add_argument("--f", required=True)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    ctx = Context(args)
    try:
        with term_budget(args.budget):
            lines, doc = args.handler(args, ctx)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TriautError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.output == "json":
        print(json.dumps(doc))
    else:
        for line in lines:
            print(line)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
