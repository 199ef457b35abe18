"""Batch command line front end.

Four subcommands: `analyze` (JSON report for one parameter set), `scan`
(filtered sweep of hexagonal sextuples, TSV or JSON lines), `tilings`
(enumeration, signed totals, or SVG output) and `formula` (direct access to
the product formulas).  Identical invocations produce byte-identical output;
big integers are printed as decimal strings in JSON.

Exit codes: 0 success, 1 invalid input, 2 node budget exceeded, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import BudgetExceededError, InternalCheckError, ParameterError
from .formulas import (
    closed_det,
    det_poly_interpolate,
    f_even_factors,
    f_factors,
    f_odd_factors,
    f_value,
    format_factors,
    hyper_even,
    hyper_odd,
    hyperfactorial,
    mac,
    split_binom_det,
    symmetry_conjecture,
)
from .hilbert import h_vector, twin_peaks
from .linalg import (
    PERMANENT_CAP_DEFAULT,
    det_exact,
    is_certified_prime,
    permanent_exact,
    wlp_report,
)
from .matrices import build_N, build_Z
from .params import (
    AciParams,
    classify_puncture,
    derive_stats,
    socle_info,
)
from .render import render_region, render_tiling
from .splitting import (
    equivalence_report,
    generic_splitting_type,
    jumping_lines,
    wlp_holds,
)
from .tilings import (
    NODE_BUDGET_DEFAULT,
    build_region,
    enumerate_tilings,
    signed_enumeration,
)

BUDGET_ENV = "HEXWLP_BUDGET"


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad input; that slot is reserved for
    # exceeded budgets, so route parse failures through ParameterError.
    def error(self, message):
        raise ParameterError(message)


def _emit_error(kind: str, message: str, **extra) -> None:
    payload = {"schema": 1, "error": {"kind": kind, "message": message, **extra}}
    print(json.dumps(payload), file=sys.stderr)


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return NODE_BUDGET_DEFAULT
    try:
        value = int(raw)
    except ValueError:
        raise ParameterError(f"{BUDGET_ENV} must be an integer, got {raw!r}")
    if value <= 0:
        raise ParameterError(f"{BUDGET_ENV} must be positive, got {value}")
    return value


def _resolve_budget(args) -> int:
    if args.budget is not None:
        if args.budget <= 0:
            raise ParameterError("node budget must be positive")
        return args.budget
    return _default_budget()


def _params_from(args) -> AciParams:
    return AciParams(args.a, args.b, args.c, args.alpha, args.beta, args.gamma)


def _add_sextuple(parser) -> None:
    for name in ("a", "b", "c", "alpha", "beta", "gamma"):
        parser.add_argument(name, type=int)


# ---------------------------------------------------------------------------
# analyze


def _cmd_analyze(args) -> int:
    p = _params_from(args)
    st = derive_stats(p)
    soc = socle_info(p)
    hd = h_vector(p)
    report = {
        "schema": 1,
        "command": "analyze",
        "params": {
            "a": p.a, "b": p.b, "c": p.c,
            "alpha": p.alpha, "beta": p.beta, "gamma": p.gamma,
        },
        "triple_sum": p.triple_sum,
        "stats": {
            "s_plus_2": str(st.s_plus_2),
            "A": str(st.A), "B": str(st.B), "C": str(st.C), "M": str(st.M),
            "semistable": st.semistable,
            "hexagonal": st.hexagonal,
        },
        "socle": {
            "cm_type": soc.cm_type,
            "socle_degrees": list(soc.socle_degrees),
            "level": soc.level,
            "resolution_n": soc.resolution_n,
        },
        "h_vector": list(hd.h),
        "multiplicity": hd.multiplicity,
    }

    characteristic = args.char if args.char is not None else 0
    if characteristic and not st.hexagonal:
        raise ParameterError("characteristic verdicts require hexagonal parameters")

    if st.hexagonal:
        h_s, equal = twin_peaks(p)
        if not equal:
            raise InternalCheckError("twin peaks differ on hexagonal parameters")
        report["twin_peaks"] = {"h_s": h_s, "equal": equal}
        wr = wlp_report(p)
        perm = permanent_exact(build_Z(p), size_cap=args.permanent_cap)
        report["determinants"] = {
            "det_N": str(wr.det_N),
            "det_Z": str(wr.det_Z),
            "permanent_Z": str(perm) if perm is not None else None,
        }
        fact = wr.factorization
        report["factorization"] = {
            "sign": fact.sign,
            "factors": [[q, e] for q, e in fact.factors],
            "cofactor": str(fact.cofactor) if fact.cofactor is not None else None,
        }
        wlp_section = {
            "char0": wr.wlp_char0,
            "always_fails": wr.always_fails,
            "bad_primes": list(wr.bad_primes),
            "forced_primes": list(wr.forced_primes),
        }
        if characteristic:
            wlp_section["characteristic"] = characteristic
            wlp_section["wlp_at_char"] = wlp_holds(p, characteristic)
        report["wlp"] = wlp_section
        cd = closed_det(p)
        if cd.matched:
            report["closed_formula"] = {
                "case": cd.case,
                "value": str(cd.value),
                "signed": cd.signed,
                "relabeling": list(cd.relabeling),
            }
        else:
            report["closed_formula"] = {"case": "NONE"}
        if soc.cm_type == 3:
            pc = classify_puncture(p)
            report["puncture"] = {
                "axis_central": pc.axis_central,
                "gravity_central": pc.gravity_central,
                "gravity_t": pc.gravity_t,
            }
        eq = equivalence_report(p, characteristic)
        report["equivalence"] = {
            "wlp": eq.wlp,
            "reg_J": eq.reg_J,
            "det_nonzero_mod_char": eq.det_nonzero_mod_char,
            "characteristic": eq.characteristic,
        }
    else:
        # Outside the hexagonal case the property always holds over char 0:
        # non-semistable bundles and sums not divisible by 3 both force it.
        reason = (
            "triple sum not divisible by 3"
            if st.semistable
            else "syzygy bundle not semistable"
        )
        report["wlp"] = {"char0": True, "reason": reason}

    sp = generic_splitting_type(p, characteristic)
    report["splitting"] = {
        "type": list(sp.as_tuple()),
        "conditional": sp.conditional,
    }
    jl = jumping_lines(p)
    report["jumping_lines"] = {
        "z_line": list(jl.z_line.as_tuple()),
        "yz_line": list(jl.yz_line.as_tuple()) if jl.yz_line else None,
    }

    if args.figure:
        if not st.hexagonal:
            raise ParameterError("--figure requires hexagonal parameters")
        render_region(build_region(p), args.figure)
        report["figure"] = args.figure

    print(json.dumps(report, indent=2))
    return 0


# ---------------------------------------------------------------------------
# scan


def _iter_hexagonal(min_s2: int, max_s2: int):
    # Increasing triple sum, then lex on the sextuple: reproducible order.
    for total in range(3 * min_s2, 3 * max_s2 + 1, 3):
        for a in range(1, total + 1):
            for b in range(1, total - a + 1):
                for c in range(1, total - a - b + 1):
                    rest = total - a - b - c
                    if rest < 0:
                        continue
                    for alpha in range(min(a - 1, rest) + 1):
                        for beta in range(min(b - 1, rest - alpha) + 1):
                            gamma = rest - alpha - beta
                            if gamma >= c:
                                continue
                            if (alpha == 0) + (beta == 0) + (gamma == 0) > 1:
                                continue
                            p = AciParams(a, b, c, alpha, beta, gamma)
                            st = derive_stats(p)
                            if st.hexagonal:
                                yield p, st


_SCAN_COLUMNS = (
    "a", "b", "c", "alpha", "beta", "gamma", "s_plus_2", "cm_type", "level",
    "multiplicity", "det_N", "axis_central", "gravity_central",
)


def _scan_row(p: AciParams, st) -> dict:
    soc = socle_info(p)
    hd = h_vector(p)
    det = det_exact(build_N(p))
    axis = gravity = None
    if soc.cm_type == 3:
        pc = classify_puncture(p)
        axis, gravity = pc.axis_central, pc.gravity_central
    return {
        "a": p.a, "b": p.b, "c": p.c,
        "alpha": p.alpha, "beta": p.beta, "gamma": p.gamma,
        "s_plus_2": int(st.s_plus_2),
        "cm_type": soc.cm_type,
        "level": soc.level,
        "multiplicity": hd.multiplicity,
        "det_N": det,
        "axis_central": axis,
        "gravity_central": gravity,
    }


def _row_passes(row: dict, args) -> bool:
    if args.type is not None and row["cm_type"] != args.type:
        return False
    if args.level and not row["level"]:
        return False
    if args.nonlevel and row["level"]:
        return False
    det = row["det_N"]
    if args.det_zero and det != 0:
        return False
    if args.det_one and abs(det) != 1:
        return False
    if args.det_equals is not None and abs(det) != args.det_equals:
        return False
    if args.det_prime is not None and det % args.det_prime != 0:
        return False
    if args.axis_central and not row["axis_central"]:
        return False
    if args.gravity_central and not row["gravity_central"]:
        return False
    if args.max_multiplicity is not None and row["multiplicity"] > args.max_multiplicity:
        return False
    return True


def _print_row(row: dict, as_json: bool) -> None:
    if as_json:
        out = dict(row)
        out["det_N"] = str(out["det_N"])
        print(json.dumps(out))
        return
    cells = []
    for col in _SCAN_COLUMNS:
        v = row[col]
        if v is None:
            cells.append("-")
        elif isinstance(v, bool):
            cells.append("1" if v else "0")
        else:
            cells.append(str(v))
    print("\t".join(cells))


def _cmd_scan(args) -> int:
    if args.max_s2 is None:
        raise ParameterError("scan requires --max-s2 (the search space must be bounded)")
    if args.max_s2 < args.min_s2:
        raise ParameterError("--max-s2 must be at least --min-s2")
    if args.det_prime is not None and not is_certified_prime(args.det_prime):
        raise ParameterError(f"--det-prime {args.det_prime} is not prime")
    if not args.json:
        print("\t".join(_SCAN_COLUMNS))
    kept = []
    for p, st in _iter_hexagonal(args.min_s2, args.max_s2):
        row = _scan_row(p, st)
        if not _row_passes(row, args):
            continue
        if args.minimize:
            kept.append(row)
        else:
            _print_row(row, args.json)
    if args.minimize:
        if kept:
            best = min(r["multiplicity"] for r in kept)
            for row in kept:
                if row["multiplicity"] == best:
                    _print_row(row, args.json)
    return 0


# ---------------------------------------------------------------------------
# tilings


def _cmd_tilings(args) -> int:
    p = _params_from(args)
    budget = _resolve_budget(args)
    region = build_region(p)
    if args.count:
        total = sum(1 for _ in enumerate_tilings(region, budget))
        print(total)
    elif args.signed:
        se = signed_enumeration(p, budget)
        if args.json:
            payload = {
                "schema": 1,
                "command": "tilings",
                "unsigned": str(se.unsigned_total),
                "signed_paths": str(se.signed_total_paths),
                "signed_matchings": str(se.signed_total_matchings),
                "sign_constant": se.sign_constant,
                "buckets": [
                    {"k": k, "count": str(se.per_lambda_counts[k])}
                    for k in sorted(se.per_lambda_counts)
                ],
            }
            print(json.dumps(payload, indent=2))
        else:
            print(f"unsigned\t{se.unsigned_total}")
            print(f"signed_paths\t{se.signed_total_paths}")
            print(f"signed_matchings\t{se.signed_total_matchings}")
            print(f"sign_constant\t{se.sign_constant}")
            for k in sorted(se.per_lambda_counts):
                print(f"bucket_k={k}\t{se.per_lambda_counts[k]}")
    elif args.render:
        first = next(iter(enumerate_tilings(region, budget)), None)
        if first is None:
            render_region(region, args.render)
        else:
            render_tiling(first, args.render)
        print(f"wrote\t{args.render}")
    else:
        for idx, tiling in enumerate(enumerate_tilings(region, budget)):
            print(json.dumps({"tiling": idx, "lozenges": [list(l) for l in tiling.lozenges]}))
    return 0


# ---------------------------------------------------------------------------
# formula


def _int_args(raw, count, usage):
    if len(raw) != count:
        raise ParameterError(f"expected {usage}")
    out = []
    for item in raw:
        try:
            out.append(int(item))
        except ValueError:
            raise ParameterError(f"expected integer argument, got {item!r}")
    return out


def _eval_shift_factors(factors: dict, c: int) -> int:
    v = 1
    for shift, e in sorted(factors.items()):
        v *= (c + shift) ** e
    return v


def _cmd_formula(args) -> int:
    name = args.name
    raw = args.args
    if name == "mac":
        x, y, z = _int_args(raw, 3, "mac A B C")
        print(mac(x, y, z))
    elif name in ("hyper", "hyper-even", "hyper-odd"):
        (n,) = _int_args(raw, 1, f"{name} N")
        fn = {"hyper": hyperfactorial, "hyper-even": hyper_even, "hyper-odd": hyper_odd}[name]
        print(fn(n))
    elif name in ("f", "fe", "fo"):
        maker = {"f": f_factors, "fe": f_even_factors, "fo": f_odd_factors}[name]
        if len(raw) == 3:
            a, b, c = _int_args(raw, 3, f"{name} A B [C]")
            if name == "f":
                print(f_value(a, b, c))
            else:
                print(_eval_shift_factors(maker(a, b), c))
        else:
            a, b = _int_args(raw, 2, f"{name} A B [C]")
            print(format_factors(maker(a, b)))
    elif name == "split-binom":
        pp, q, r, m, n = _int_args(raw, 5, "split-binom P Q R M N")
        print(split_binom_det(pp, q, r, m, n))
    elif name == "closed-det":
        vals = _int_args(raw, 6, "closed-det A B C ALPHA BETA GAMMA")
        res = closed_det(AciParams(*vals))
        print(f"case\t{res.case}")
        if res.matched:
            print(f"value\t{res.value}")
            print(f"signed\t{1 if res.signed else 0}")
            print("relabeling\t" + ",".join(str(i) for i in res.relabeling))
    elif name == "symmetry-conjecture":
        vals = _int_args(raw, 6, "symmetry-conjecture A B C ALPHA BETA GAMMA")
        value = symmetry_conjecture(AciParams(*vals))
        print("CONJECTURE\tsymmetric-family")
        print(f"value\t{value}")
    elif name == "interpolate":
        vals = _int_args(raw, 7, "interpolate A B C ALPHA BETA PARITY DEGREE")
        av, bv, cv, alv, bev, parity, degree = vals
        poly = det_poly_interpolate(av, bv, cv, alv, bev, parity=parity, degree_bound=degree)
        print(f"parity\t{parity}")
        print(f"degree\t{poly.degree}")
        print("polynomial\t" + poly.format("M"))
    else:
        raise ParameterError(
            f"unknown formula {name!r}; known: mac, hyper, hyper-even, hyper-odd, "
            "f, fe, fo, split-binom, closed-det, symmetry-conjecture, interpolate"
        )
    return 0


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> _Parser:
    ap = _Parser(prog="hexwlp", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="JSON report for one parameter sextuple")
    _add_sextuple(pa)
    pa.add_argument("--char", type=int, default=None, metavar="P",
                    help="additionally report the verdict in characteristic P")
    pa.add_argument("--permanent-cap", type=int, default=PERMANENT_CAP_DEFAULT,
                    dest="permanent_cap", metavar="N",
                    help="compute the permanent only up to this matrix size")
    pa.add_argument("--figure", default=None, metavar="PATH",
                    help="also write the region as an SVG figure")

    ps = sub.add_parser("scan", help="sweep hexagonal sextuples, TSV or JSON lines")
    ps.add_argument("--min-s2", type=int, default=1, dest="min_s2", metavar="K")
    ps.add_argument("--max-s2", type=int, default=None, dest="max_s2", metavar="K",
                    help="bound on s+2 (required)")
    ps.add_argument("--type", type=int, choices=(2, 3), default=None)
    lv = ps.add_mutually_exclusive_group()
    lv.add_argument("--level", action="store_true")
    lv.add_argument("--nonlevel", action="store_true")
    dt = ps.add_mutually_exclusive_group()
    dt.add_argument("--det-zero", action="store_true", dest="det_zero")
    dt.add_argument("--det-one", action="store_true", dest="det_one")
    dt.add_argument("--det-equals", type=int, default=None, dest="det_equals",
                    metavar="N", help="match |det N| = N")
    dt.add_argument("--det-prime", type=int, default=None, dest="det_prime",
                    metavar="P", help="match P | det N")
    ps.add_argument("--axis-central", action="store_true", dest="axis_central")
    ps.add_argument("--gravity-central", action="store_true", dest="gravity_central")
    ps.add_argument("--max-multiplicity", type=int, default=None, dest="max_multiplicity")
    ps.add_argument("--minimize", choices=("multiplicity",), default=None,
                    help="keep only rows attaining the minimum")
    ps.add_argument("--json", action="store_true")

    pt = sub.add_parser("tilings", help="enumerate tilings of the punctured hexagon")
    _add_sextuple(pt)
    mode = pt.add_mutually_exclusive_group(required=True)
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--signed", action="store_true")
    mode.add_argument("--render", default=None, metavar="OUT.svg")
    mode.add_argument("--list", action="store_true", dest="list_tilings")
    pt.add_argument("--budget", type=int, default=None, metavar="B",
                    help=f"node budget (default ${BUDGET_ENV} or {NODE_BUDGET_DEFAULT})")
    pt.add_argument("--json", action="store_true")

    pf = sub.add_parser("formula", help="evaluate a product formula")
    pf.add_argument("name")
    pf.add_argument("args", nargs="*")

    return ap


_DISPATCH = {
    "analyze": _cmd_analyze,
    "scan": _cmd_scan,
    "tilings": _cmd_tilings,
    "formula": _cmd_formula,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _DISPATCH[args.command](args)
    except ParameterError as exc:
        _emit_error("parameter", str(exc))
        return 1
    except BudgetExceededError as exc:
        _emit_error("budget", str(exc), budget=exc.budget, nodes=exc.nodes)
        return 2
    except InternalCheckError as exc:
        _emit_error("internal", str(exc))
        return 3
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
