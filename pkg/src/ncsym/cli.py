"""Command line front end.

Exit codes: 0 on success, 1 when a property check fails, 2 on usage, parse,
or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .expressions import convert, coproduct, product
from .graphs import (
    MultipartiteGraph,
    chromatic_polynomial,
    count_acyclic_unique_sink,
    count_acyclic_unique_sink_by_enumeration,
    stable_partitions,
)
from .lattice import mobius
from .limits import DegreeLimitError, max_degree
from .parsing import (
    ParseError,
    format_ncsym,
    format_nctensor,
    format_species,
    format_species_tensor,
    format_sym,
    ncsym_json,
    nctensor_json,
    parse_ncsym,
    parse_species,
    parse_sym,
    species_json,
    species_tensor_json,
    sym_json,
)
from .partitions import SetPartition
from .species import SpeciesElement, species_delta, species_mu
from .sym import convert_sym, product_sym

BASIS_CHOICES = ("m", "p", "e", "x")


def _parse_int_set(text: str) -> frozenset:
    s = text.strip()
    if s in ("", "()"):
        return frozenset()
    try:
        return frozenset(int(piece) for piece in s.split(","))
    except ValueError:
        raise ParseError(f"malformed element set {text!r}", 0) from None


def _emit(args, text_value: str, json_value) -> None:
    if getattr(args, "json", False):
        print(json.dumps(json_value, indent=2, sort_keys=True))
    else:
        print(text_value)


def _cmd_convert(args) -> int:
    if args.sym:
        expr = convert_sym(parse_sym(args.expr), args.to)
        _emit(args, format_sym(expr), sym_json(expr))
    else:
        expr = convert(parse_ncsym(args.expr), args.to)
        _emit(args, format_ncsym(expr), ncsym_json(expr))
    return 0


def _cmd_product(args) -> int:
    if args.sym:
        result = product_sym(parse_sym(args.left), parse_sym(args.right))
        _emit(args, format_sym(result), sym_json(result))
    else:
        result = product(parse_ncsym(args.left), parse_ncsym(args.right))
        _emit(args, format_ncsym(result), ncsym_json(result))
    return 0


def _cmd_coproduct(args) -> int:
    expr = parse_ncsym(args.expr)
    if args.split is None:
        t = coproduct(expr)
        _emit(args, format_nctensor(t), nctensor_json(t))
        return 0
    grounds = {pi.ground for pi in expr.terms}
    if len(grounds) > 1:
        raise ValueError("--split needs a homogeneous expression on one ground set")
    ground = grounds.pop() if grounds else frozenset()
    s1 = _parse_int_set(args.split)
    v = SpeciesElement(ground, expr.basis, expr.terms)
    t = species_delta(v, s1, ground - s1)
    _emit(args, format_species_tensor(t), species_tensor_json(t))
    return 0


def _cmd_mobius(args) -> int:
    value = mobius(SetPartition.parse(args.finer), SetPartition.parse(args.coarser))
    _emit(args, str(value), {"value": value})
    return 0


def _cmd_species(args) -> int:
    if args.species_op == "mu":
        result = species_mu(parse_species(args.left), parse_species(args.right))
        _emit(args, format_species(result), species_json(result))
        return 0
    v = parse_species(args.expr)
    s1 = _parse_int_set(args.split)
    t = species_delta(v, s1, v.ground - s1)
    _emit(args, format_species_tensor(t), species_tensor_json(t))
    return 0


def _cmd_graph(args) -> int:
    sigma = SetPartition.parse(args.sigma)
    graph = MultipartiteGraph(sigma)
    if args.stable:
        taus = list(stable_partitions(graph))
        _emit(args, "\n".join(str(t) for t in taus), [str(t) for t in taus])
        return 0
    if args.orientations is not None:
        sink = args.orientations
        if args.method == "enumerate":
            count = count_acyclic_unique_sink_by_enumeration(sigma, sink)
        else:
            count = count_acyclic_unique_sink(sigma, sink)
        _emit(
            args,
            str(count),
            {"sink": sink, "method": args.method, "count": count},
        )
        return 0
    chi = chromatic_polynomial(graph)
    _emit(
        args,
        str(chi),
        {"coefficients": chi.coefficients(), "stable_counts": chi.counts},
    )
    return 0


def _cmd_conjecture(args) -> int:
    rows = checks.conjecture_report(args.max_n)
    ok = all(row["internal_agreement"] for row in rows)
    if args.json:
        print(json.dumps({"label": "CONJECTURE", "rows": rows}, indent=2, sort_keys=True))
    else:
        print(
            "CONJECTURE report (the tool reports sign data, it does not assert the"
            " conjecture): elementary expansion of the one-block extra element"
        )
        header = (
            f"{'n':>2}  {'predicted':>9}  {'nonzero':>7}  {'zeros':>5}  "
            f"{'min':>10}  {'max':>10}  {'internal':>8}  consistent"
        )
        print(header)
        for row in rows:
            print(
                f"{row['n']:>2}  {row['predicted_sign']:>9}  {row['nonzero_terms']:>7}  "
                f"{row['zero_terms']:>5}  {str(row['min_coeff']):>10}  "
                f"{str(row['max_coeff']):>10}  "
                f"{'ok' if row['internal_agreement'] else 'MISMATCH':>8}  "
                f"{'yes' if row['consistent_with_prediction'] else 'NO: ' + ', '.join(row['violations'])}"
            )
    return 0 if ok else 1


def _print_results(args, results) -> int:
    ok = all(r.passed for r in results)
    if args.json:
        print(
            json.dumps(
                {
                    "passed": ok,
                    "results": [
                        {"name": r.name, "passed": r.passed, "detail": r.detail}
                        for r in results
                    ],
                },
                indent=2,
                sort_keys=True,
            )
        )
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            detail = f"  [{r.detail}]" if r.detail else ""
            print(f"{status}  {r.name}{detail}")
        print(f"{'all checks passed' if ok else 'CHECKS FAILED'}")
    return 0 if ok else 1


def _cmd_check(args) -> int:
    results = checks.run_suite(args.suite, max_n=args.max_n, seed=args.seed)
    return _print_results(args, results)


def _cmd_verify(args) -> int:
    results = checks.run_oracle(max_n=args.max_n, seed=args.seed, k=args.vars)
    return _print_results(args, results)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncsym",
        description=(
            "Exact computer algebra for symmetric functions in noncommuting"
            " variables and the Hopf monoid of set partitions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="re-express an expression in another basis")
    p.add_argument("expr")
    p.add_argument("--to", required=True, choices=BASIS_CHOICES)
    p.add_argument("--sym", action="store_true", help="integer partition keys")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("product", help="multiply two expressions")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--sym", action="store_true", help="integer partition keys")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("coproduct", help="full coproduct, or one species component")
    p.add_argument("expr")
    p.add_argument("--split", help="comma separated first tensor leg, e.g. 1,2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_coproduct)

    p = sub.add_parser("mobius", help="Möbius value of a refinement pair")
    p.add_argument("finer")
    p.add_argument("coarser")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_mobius)

    p = sub.add_parser("species", help="Hopf monoid operations at explicit ground sets")
    species_sub = p.add_subparsers(dest="species_op", required=True)
    q = species_sub.add_parser("mu", help="product of two species elements")
    q.add_argument("left")
    q.add_argument("right")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=_cmd_species)
    q = species_sub.add_parser("delta", help="coproduct component at a split")
    q.add_argument("expr")
    q.add_argument("--split", required=True)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=_cmd_species)

    p = sub.add_parser("graph", help="complete multipartite graph computations")
    p.add_argument("sigma", help="defining set partition")
    p.add_argument("--stable", action="store_true", help="list stable partitions")
    p.add_argument(
        "--orientations",
        type=int,
        metavar="SINK",
        help="count acyclic orientations with a unique sink at SINK",
    )
    p.add_argument("--method", choices=("chromatic", "enumerate"), default="chromatic")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser(
        "conjecture", help="sign report for the elementary expansion (not an assertion)"
    )
    p.add_argument("--max-n", type=int, default=7, dest="max_n")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser("check", help="run a named verification suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=tuple(checks.SUITES) + ("all",),
    )
    p.add_argument("--max-n", type=int, default=5, dest="max_n")
    p.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("verify", help="certify conversions against monomial expansions")
    p.add_argument("--max-n", type=int, default=4, dest="max_n")
    p.add_argument("--vars", type=int, default=4, help="truncation variable count")
    p.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    max_n = getattr(args, "max_n", None)
    if max_n is not None and max_n > max_degree():
        print(
            f"error: --max-n {max_n} exceeds the degree cap {max_degree()}"
            " (set NCSYM_MAX_DEGREE to raise it)",
            file=sys.stderr,
        )
        return 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except DegreeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
