"""Command-line interface.

Exit status is 0 on success, 1 when an input violates a precondition (a
one-line JSON error goes to stderr), and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import charpoly as cp
from .coinvariants import (
    coinv_character_univariate,
    coinv_graded_dims,
    orbit_count,
    univariate_invariant_dim,
)
from .configuration import (
    ConfigParams,
    config_delta,
    config_ranges,
    derangement_count,
    euclidean_sharp_ranges,
    hersh_reiner_dim,
    sphere_dim,
)
from .errors import DomainError
from .partitions import Partition, partitions_of
from .ranges import (
    HypTriple,
    StableRanges,
    complex_generation_bound,
    hyper_invariants,
    literature_ranges,
    max_regularity,
    ranges_coinv,
    ranges_congruence,
    ranges_from_cg,
    ranges_from_hyper,
    ranges_from_hyper_chain,
    regularity_bound,
    t_bounds,
)
from .symchar import ClassFunction, trivial_character
from .verify import run_verification
from .witnesses import WitnessFamily, s_plus_i, sharpness_check, witness_dim, witness_profile

Result = tuple[object, str]  # (JSON payload, table text)


# argument types ---------------------------------------------------------

def natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def at_least_minus_one(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer >= -1, got {text!r}") from None
    if v < -1:
        raise argparse.ArgumentTypeError(f"expected an integer >= -1, got {v}")
    return v


def int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def partition_arg(text: str) -> Partition:
    try:
        return Partition(int_list(text))
    except (ValueError, argparse.ArgumentTypeError):
        raise argparse.ArgumentTypeError(
            f"expected a weakly decreasing list of positive integers, got {text!r}"
        ) from None


# rendering ----------------------------------------------------------------

def fmt(v) -> str:
    if v is None:
        return "undetermined"
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float) and v == float("-inf"):
        return "-inf"
    return str(v)


def table(headers: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [list(headers)] + [[fmt(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    return "\n".join(
        "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells
    )


def ranges_result(R: StableRanges) -> Result:
    d = R.to_json()
    return d, table(list(d), [list(d.values())])


def poly_result(name: str, P: cp.CharPoly) -> Result:
    deg = cp.degree(P)
    payload = {"name": name, "degree": fmt(deg) if deg == cp.NEG_INF else deg, "terms": P.to_json(),
               "binomial_form": cp.render(P)}
    text = f"{name} = {cp.render(P)}\ndegree = {fmt(deg)}"
    return payload, text


def class_function_result(f: ClassFunction) -> Result:
    rows = [(str(list(lam)), v) for lam, v in f.values.items()]
    return f.to_json(), table(["cycle_type", "value"], rows)


# handlers -------------------------------------------------------------------

def h_ranges_cg(a) -> Result:
    return ranges_result(ranges_from_cg(HypTriple(a.c, a.g)))


def h_ranges_regularity(a) -> Result:
    t = HypTriple(a.c, a.g)
    t0, t1 = t_bounds(t)
    d = {"regularity": regularity_bound(t), "t0": t0, "t1": t1}
    return d, table(list(d), [list(d.values())])


def h_ranges_maxreg(a) -> Result:
    d = {"a": a.a, "b": a.b, "max_regularity": max_regularity(a.a, a.b)}
    return d, table(list(d), [list(d.values())])


def h_ranges_complex_gen(a) -> Result:
    d = {"generation_bound": complex_generation_bound(a.g_prev, a.g_k)}
    return d, table(list(d), [list(d.values())])


def h_ranges_hyper(a) -> Result:
    return ranges_result(ranges_from_hyper(a.theta_k, a.theta_k1))


def h_ranges_hyper_inv(a) -> Result:
    inv = hyper_invariants(a.theta_k, a.theta_k1)
    d = inv.to_json()
    rows = [(k, v if not isinstance(v, list) else ",".join(map(str, v))) for k, v in d.items()]
    return d, table(["invariant", "bound"], rows)


def h_ranges_hyper_chain(a) -> Result:
    return ranges_result(ranges_from_hyper_chain(a.theta, a.k))


def h_ranges_coinv(a) -> Result:
    return ranges_result(ranges_coinv(a.total))


def h_ranges_congruence(a) -> Result:
    return ranges_result(ranges_congruence(a.s, a.k))


def h_ranges_literature(a) -> Result:
    if a.kind == "cg":
        if a.c is None or a.g is None:
            raise _Usage("literature cg needs --c and --g")
        R = literature_ranges("cg", c=a.c, g=a.g, characteristic=a.characteristic)
    else:
        if a.s is None or a.k is None:
            raise _Usage("literature congruence needs --s and --k")
        R = literature_ranges("congruence", s=a.s, k=a.k, characteristic=a.characteristic)
    return ranges_result(R)


def _poly_from_args(a) -> tuple[str, cp.CharPoly]:
    if a.expr is not None:
        return a.expr, cp.parse_expr(a.expr)
    if a.series is not None and a.j is not None:
        series = cp.sym_series(a.j) if a.series == "sym" else cp.coinv_series(a.j)
        name = "S" if a.series == "sym" else "C"
        return f"{name}^({a.j})", series[a.j]
    if a.poly_json is not None:
        return "P", cp.CharPoly.from_json(json.loads(a.poly_json))
    raise _Usage("give --expr, --poly-json, or --series with --j")


def h_charpoly_eval(a) -> Result:
    name, P = _poly_from_args(a)
    value = cp.evaluate(P, a.cycle_type)
    d = {"poly": cp.render(P), "cycle_type": list(a.cycle_type), "value": str(value)}
    return d, f"{name} at {list(a.cycle_type)} = {value}"


def h_charpoly_sym(a) -> Result:
    return poly_result(f"S^({a.j})", cp.sym_series(a.j)[a.j])


def h_charpoly_coinv(a) -> Result:
    return poly_result(f"C^({a.j})", cp.coinv_series(a.j)[a.j])


def h_charpoly_umbral(a) -> Result:
    name, P = _poly_from_args(a)
    return poly_result(f"down({name})", cp.umbral_down(P))


def h_charpoly_defpoly(a) -> Result:
    if a.w_json is not None:
        W = [ClassFunction.from_json(w) for w in json.loads(a.w_json)]
    elif a.trivial is not None:
        W = [trivial_character(r) for r in range(a.trivial + 1)]
    else:
        raise _Usage("give --trivial DELTA or --w-json")
    return poly_result("P", cp.def_poly(W, a.h, characteristic=a.characteristic))


def _family(a):
    if a.family == "S+I":
        if a.param2 is None:
            raise _Usage("family S+I needs --param (c) and --param2 (g)")
        return s_plus_i(a.param, a.param2)
    return WitnessFamily(a.family, a.param)


def h_witness(a) -> Result:
    w = _family(a)
    prof = witness_profile(w)
    M = prof.stable_ranges.M
    report = sharpness_check(w, override_caps=a.override_caps, specht=M + 1 <= a.max_n)
    dims = [witness_dim(w, n) for n in range(a.max_n + 1)]
    payload = {"profile": prof.to_json(), "dims": dims, "sharpness": report.to_json()}
    R = prof.stable_ranges.to_json()
    lines = [
        f"family      {w}",
        f"t_0..t_6    {', '.join(map(str, prof.t_values()))}",
        f"regularity  {prof.regularity}",
        f"triple      c={prof.hyp_triple.c} g={prof.hyp_triple.g}",
        f"dims        {', '.join(map(str, dims))}",
        "",
        table(list(R), [list(R.values())]),
        "",
        table(["check", "result"], [(k, "pass" if v else "FAIL") for k, v in report.checks.items()]),
    ]
    if "M_sharp" not in report.checks:
        lines.append(f"(Specht check skipped: needs --max-n >= {M + 1})")
    return payload, "\n".join(lines)


def h_coinv_orbits(a) -> Result:
    c = orbit_count(a.J, a.n, override_caps=a.override_caps)
    d = {"J": list(a.J), "n": a.n, "orbits": c}
    return d, table(list(d), [[",".join(map(str, a.J)), a.n, c]])


def h_coinv_invariants(a) -> Result:
    d = {"j": a.j, "n": a.n, "dim": univariate_invariant_dim(a.j, a.n)}
    return d, table(list(d), [list(d.values())])


def h_coinv_dims(a) -> Result:
    dims = coinv_graded_dims(a.n, a.vars, a.max_total, override_caps=a.override_caps)
    payload = [{"J": list(J), "dim": v} for J, v in dims.items()]
    rows = [(",".join(map(str, J)), v) for J, v in dims.items()]
    text = table(["J", "dim"], rows) + f"\ntotal {sum(dims.values())}"
    return payload, text


def h_coinv_char(a) -> Result:
    return class_function_result(coinv_character_univariate(a.j, a.n, override_caps=a.override_caps))


def _config_params(a) -> ConfigParams:
    return ConfigParams(a.d, a.u, a.k, a.plane_exception)


def h_config_delta(a) -> Result:
    d = {"delta": config_delta(_config_params(a))}
    return d, table(list(d), [list(d.values())])


def h_config_ranges(a) -> Result:
    return ranges_result(config_ranges(_config_params(a)))


def h_config_euclidean(a) -> Result:
    return ranges_result(euclidean_sharp_ranges(a.i, a.d))


def h_config_derangements(a) -> Result:
    d = {"r": a.r, "l": a.l, "count": derangement_count(a.r, a.l)}
    return d, table(list(d), [list(d.values())])


def h_config_hr(a) -> Result:
    d = {"i": a.i, "n": a.n, "dim": hersh_reiner_dim(a.i, a.n)}
    return d, table(list(d), [list(d.values())])


def h_config_sphere(a) -> Result:
    d = {"n": a.n, "dim": sphere_dim(a.n)}
    return d, table(list(d), [list(d.values())])


class _Usage(Exception):
    pass


# parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--override-caps", action="store_true",
                        help="lift the enumeration size caps")

    parser = argparse.ArgumentParser(prog="repstab", description=__doc__.splitlines()[0])
    top = parser.add_subparsers(dest="command", required=True)

    def leaf(sub, name: str, handler: Callable, help: str):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(handler=handler)
        return p

    # ranges
    rg = top.add_parser("ranges", help="stable-range tuples and regularity bounds")
    rs = rg.add_subparsers(dest="op", required=True)
    p = leaf(rs, "cg", h_ranges_cg, "tuple from local degree c and stable degree g")
    p.add_argument("--c", type=at_least_minus_one, required=True)
    p.add_argument("--g", type=at_least_minus_one, required=True)
    p = leaf(rs, "regularity", h_ranges_regularity, "regularity and (t0, t1) bounds from (c, g)")
    p.add_argument("--c", type=at_least_minus_one, required=True)
    p.add_argument("--g", type=at_least_minus_one, required=True)
    p = leaf(rs, "max-regularity", h_ranges_maxreg, "largest regularity for presentation degrees (a, b)")
    p.add_argument("--a", type=natural, required=True)
    p.add_argument("--b", type=natural, required=True)
    p = leaf(rs, "complex-generation", h_ranges_complex_gen, "generation bound for homology of a complex")
    p.add_argument("--g-prev", type=natural, required=True)
    p.add_argument("--g-k", type=natural, required=True)
    p = leaf(rs, "hyper", h_ranges_hyper, "tuple from hyperhomology degrees")
    p.add_argument("--theta-k", type=natural, required=True)
    p.add_argument("--theta-k1", type=at_least_minus_one, required=True)
    p = leaf(rs, "hyper-invariants", h_ranges_hyper_inv, "invariant bounds from hyperhomology degrees")
    p.add_argument("--theta-k", type=at_least_minus_one, required=True)
    p.add_argument("--theta-k1", type=at_least_minus_one, required=True)
    p = leaf(rs, "hyper-chain", h_ranges_hyper_chain, "tuple from a strictly increasing degree sequence")
    p.add_argument("--theta", type=int_list, required=True, help="comma-separated, e.g. 0,2,4")
    p.add_argument("--k", type=natural, required=True)
    p = leaf(rs, "coinv", h_ranges_coinv, "tuple for coinvariants of total degree |J|")
    p.add_argument("--total", type=natural, required=True)
    p = leaf(rs, "congruence", h_ranges_congruence, "tuple for congruence subgroup homology")
    p.add_argument("--s", type=natural, required=True)
    p.add_argument("--k", type=natural, required=True)
    p = leaf(rs, "literature", h_ranges_literature, "previously known tuples, for comparison")
    p.add_argument("--kind", choices=("cg", "congruence"), required=True)
    p.add_argument("--c", type=at_least_minus_one)
    p.add_argument("--g", type=at_least_minus_one)
    p.add_argument("--s", type=natural)
    p.add_argument("--k", type=natural)
    p.add_argument("--characteristic", type=natural, default=None,
                   help="field characteristic; M is undetermined when omitted")

    # charpoly
    cg = top.add_parser("charpoly", help="character polynomials")
    cs = cg.add_subparsers(dest="op", required=True)

    def poly_source(p):
        p.add_argument("--expr", help="e.g. '(X1-1)**2/2 + binom(X2,2)'")
        p.add_argument("--poly-json", help="JSON list of {exponents, coeff}")
        p.add_argument("--series", choices=("sym", "coinv"))
        p.add_argument("--j", type=natural)

    p = leaf(cs, "eval", h_charpoly_eval, "evaluate on a cycle type")
    poly_source(p)
    p.add_argument("--cycle-type", type=partition_arg, required=True, help="e.g. 2,1,1")
    p = leaf(cs, "sym", h_charpoly_sym, "S^(j)")
    p.add_argument("--j", type=natural, required=True)
    p = leaf(cs, "coinv", h_charpoly_coinv, "C^(j)")
    p.add_argument("--j", type=natural, required=True)
    p = leaf(cs, "umbral", h_charpoly_umbral, "apply the umbral operator")
    poly_source(p)
    p = leaf(cs, "defpoly", h_charpoly_defpoly, "polynomial attached to class functions W_0..W_delta")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--trivial", type=natural, help="use trivial W_r for r <= DELTA")
    p.add_argument("--w-json", help="JSON list of class functions")
    p.add_argument("--characteristic", type=natural, default=0)

    # witness
    p = top.add_parser("witness", parents=[common], help="witness families and sharpness")
    p.set_defaults(handler=h_witness)
    p.add_argument("--family", choices=("I", "T", "S", "V", "S+I"), required=True)
    p.add_argument("--param", type=at_least_minus_one, required=True)
    p.add_argument("--param2", type=at_least_minus_one, help="g for the S+I family")
    p.add_argument("--max-n", type=natural, default=8)

    # coinv
    co = top.add_parser("coinv", help="diagonal invariants and coinvariants")
    css = co.add_subparsers(dest="op", required=True)
    p = leaf(css, "orbits", h_coinv_orbits, "number of monomial orbits of multidegree J")
    p.add_argument("--J", type=int_list, required=True, help="e.g. 2,1")
    p.add_argument("--n", type=natural, required=True)
    p = leaf(css, "invariants", h_coinv_invariants, "univariate invariant dimension")
    p.add_argument("--j", type=natural, required=True)
    p.add_argument("--n", type=natural, required=True)
    p = leaf(css, "dims", h_coinv_dims, "graded dimensions by exact row reduction")
    p.add_argument("--n", type=natural, required=True)
    p.add_argument("--vars", type=natural, default=1)
    p.add_argument("--max-total", type=natural, required=True)
    p = leaf(css, "char", h_coinv_char, "character of the degree-j univariate coinvariants")
    p.add_argument("--j", type=natural, required=True)
    p.add_argument("--n", type=natural, required=True)

    # config
    cf = top.add_parser("config", help="configuration spaces")
    cfs = cf.add_subparsers(dest="op", required=True)
    for name, handler, help_ in (
        ("delta", h_config_delta, "generation degree bound delta_k"),
        ("ranges", h_config_ranges, "stable-range tuple"),
    ):
        p = leaf(cfs, name, handler, help_)
        p.add_argument("--d", type=natural, required=True)
        p.add_argument("--u", type=natural, required=True)
        p.add_argument("--k", type=natural, required=True)
        p.add_argument("--plane-exception", action="store_true")
    p = leaf(cfs, "euclidean", h_config_euclidean, "sharp tuple for Euclidean space")
    p.add_argument("--i", type=natural, required=True)
    p.add_argument("--d", type=natural, required=True)
    p = leaf(cfs, "derangements", h_config_derangements, "D(r, l)")
    p.add_argument("--r", type=natural, required=True)
    p.add_argument("--l", type=natural, required=True)
    p = leaf(cfs, "hersh-reiner", h_config_hr, "Betti number of Euclidean configuration space")
    p.add_argument("--i", type=natural, required=True)
    p.add_argument("--n", type=natural, required=True)
    p = leaf(cfs, "sphere", h_config_sphere, "dimension for the even-dimensional sphere")
    p.add_argument("--n", type=natural, required=True)

    # verify
    p = top.add_parser("verify", parents=[common], help="run every oracle suite")
    p.set_defaults(handler=None)
    p.add_argument("--max-n", type=natural, default=6)
    return parser


def _emit(payload, text: str, fmt_: str) -> None:
    if fmt_ == "json":
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            results = run_verification(args.max_n)
            ok = all(not r.failed for r in results)
            rows = [(r.name, f"{r.passed}/{r.total}", "pass" if not r.failed else "FAIL") for r in results]
            text = table(["suite", "passed", "status"], rows)
            for r in results:
                for label in r.failed:
                    text += f"\nFAILED {r.name}: {label}"
            _emit({"suites": [r.to_json() for r in results], "passed": ok}, text, args.format)
            return 0 if ok else 1
        payload, text = args.handler(args)
    except _Usage as exc:
        parser.error(str(exc))
    except DomainError as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(err, separators=(",", ":")), file=sys.stderr)
        return 1
    _emit(payload, text, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
