"""Command line front end.

Exit codes: 0 success, 1 domain error (invalid model, non-nef class, ...),
2 usage error, 3 oracle cross-check mismatch. All handlers resolve the
computational entry points through their modules at call time, so a test
harness can swap implementations in and out.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bounds, cycles, lattice, zariski
from .errors import CalculatorError, OracleMismatch
from .reporting import (
    curve_names,
    divisor_payload,
    exact_value,
    render_text,
    to_payload,
)
from .surface import SurfaceModel
from .surface_io import fixture_names, load_surface, parse_curve_list, parse_divisor


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surfbound",
        description=(
            "Exact thresholds for multiple linear systems n*A + T on a "
            "surface given by its intersection lattice and curve list."
        ),
        epilog=f"bundled surfaces: {', '.join(fixture_names())}",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    surface = argparse.ArgumentParser(add_help=False)
    surface.add_argument(
        "--surface",
        required=True,
        metavar="FILE_OR_NAME",
        help="surface model: a JSON file path or a bundled fixture name",
    )
    fmt = surface.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="machine-readable output")
    fmt.add_argument("--text", action="store_true", help="plain text output (default)")

    divisor = argparse.ArgumentParser(add_help=False)
    divisor.add_argument(
        "--divisor",
        required=True,
        metavar="EXPR",
        help="divisor class: coordinates like 2,1 or an expression like s+2*f",
    )

    twist = argparse.ArgumentParser(add_help=False)
    twist.add_argument(
        "-T",
        "--twist",
        default="0",
        metavar="EXPR",
        help="fixed summand T of the system n*A + T (default 0)",
    )

    level = argparse.ArgumentParser(add_help=False)
    level.add_argument(
        "-k",
        "--cluster",
        type=int,
        default=0,
        metavar="K",
        help="separation level: the system should be (k-1)-very ample (default 0)",
    )

    multiple = argparse.ArgumentParser(add_help=False)
    multiple.add_argument(
        "-n",
        "--multiple",
        type=int,
        default=None,
        metavar="N",
        help="concrete multiple n to evaluate (optional)",
    )

    asserts = argparse.ArgumentParser(add_help=False)
    asserts.add_argument(
        "--assert-no-fixed-part",
        action="store_true",
        help="caller asserts the system of the class itself has no fixed part",
    )
    asserts.add_argument(
        "--assert-base-point-free",
        action="store_true",
        help="caller asserts the system of the class itself is base point free",
    )

    oracle = argparse.ArgumentParser(add_help=False)
    oracle.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check the result against an independent brute-force method",
    )
    oracle.add_argument(
        "--box-margin",
        type=_fraction_arg,
        default=Fraction(2),
        metavar="M",
        help="inflation factor for the oracle's search box (default 2)",
    )

    p = sub.add_parser(
        "validate", parents=[surface], help="check a surface model file"
    )
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser(
        "zariski",
        parents=[surface, divisor, oracle],
        help="decompose a divisor into nef and negative parts",
    )
    p.set_defaults(handler=_cmd_zariski)

    p = sub.add_parser(
        "fundcycle",
        parents=[surface, oracle],
        help="fundamental cycle of a connected negative-definite curve set",
    )
    p.add_argument(
        "--curves",
        required=True,
        metavar="NAMES",
        help="comma-separated curve names forming the component",
    )
    p.set_defaults(handler=_cmd_fundcycle)

    p = sub.add_parser(
        "exceptional",
        parents=[surface, divisor],
        help="curves orthogonal to a nef and big class, by component",
    )
    p.set_defaults(handler=_cmd_exceptional)

    p = sub.add_parser(
        "tau",
        parents=[surface, divisor, twist],
        help="minimal obstruction value over the orthogonal curves",
    )
    p.set_defaults(handler=_cmd_tau)

    p = sub.add_parser(
        "obstructions",
        parents=[surface, divisor, twist, level, oracle],
        help="enumerate obstruction divisors up to a level",
    )
    p.set_defaults(handler=_cmd_obstructions)

    p = sub.add_parser(
        "ek",
        parents=[surface, divisor, twist, level],
        help="determinant-scaled correction divisor and the separating divisor",
    )
    p.set_defaults(handler=_cmd_ek)

    p = sub.add_parser(
        "bounds",
        parents=[surface, divisor, twist, level, multiple],
        help="vanishing threshold, obstruction quadratic, degree caps",
    )
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser(
        "thresholds",
        parents=[surface, divisor, twist, level, multiple, asserts],
        help="table of effective statements with exact n-thresholds",
    )
    p.set_defaults(handler=_cmd_thresholds)

    p = sub.add_parser(
        "compare-matsusaka",
        parents=[surface, divisor],
        help="compare against the classical general-surface bounds",
    )
    p.set_defaults(handler=_cmd_compare)

    p = sub.add_parser(
        "report",
        parents=[surface, divisor, twist, level, multiple, asserts],
        help="decompose, then run the full bound analysis on the nef part",
    )
    p.set_defaults(handler=_cmd_report)

    return parser


# -- handlers ---------------------------------------------------------------


def _cmd_validate(args) -> dict:
    model = load_surface(args.surface)
    sig = lattice.signature(model.gram)
    payload = {
        "surface": model.name,
        "valid": True,
        "rank": model.rank,
        "signature": {"positive": sig[0], "negative": sig[1], "zero": sig[2]},
        "canonical_self_intersection": exact_value(
            model.self_intersection(model.canonical_class)
        ),
        "curves": [
            {
                "name": c.name,
                "coords": list(c.coords),
                "self_intersection": exact_value(
                    model.self_intersection(model.curve_divisor(i))
                ),
                "genus": model.arithmetic_genus(model.curve_divisor(i)),
            }
            for i, c in enumerate(model.curves)
        ],
    }
    if model.ample_reference is not None:
        payload["ample_reference"] = divisor_payload(
            model.divisor(model.ample_reference)
        )
    return payload


def _cmd_zariski(args) -> dict:
    model = load_surface(args.surface)
    d = parse_divisor(model, args.divisor)
    dec = zariski.zariski_decompose(model, d)
    if args.oracle:
        ref = zariski.zariski_oracle(model, d)
        if ref.positive != dec.positive or ref.negative != dec.negative:
            raise OracleMismatch(
                f"support-growth gave positive part {dec.positive.coords}, "
                f"subset search gave {ref.positive.coords}"
            )
    correction = zariski.h1_correction(model, dec.negative)
    return {
        "surface": model.name,
        "input": divisor_payload(d),
        "positive": divisor_payload(dec.positive),
        "negative": divisor_payload(dec.negative),
        "support": curve_names(model, dec.support),
        "coefficients": {
            model.curves[i].name: exact_value(c)
            for i, c in zip(dec.support, dec.coefficients)
        },
        "positive_self_intersection": exact_value(
            model.self_intersection(dec.positive)
        ),
        "kappa_is_two": zariski.kappa_is_two(model, d),
        "h1_correction": {
            "c2": exact_value(correction.c2),
            "c1": exact_value(correction.c1),
            "c0_at_1": exact_value(correction.c0(1)),
        },
        "oracle_checked": bool(args.oracle),
    }


def _cmd_fundcycle(args) -> dict:
    model = load_surface(args.surface)
    component = parse_curve_list(model, args.curves)
    cycle = cycles.fundamental_cycle(model, component)
    if args.oracle:
        box = int(max(cycle.coefficients) * args.box_margin) + 1
        ref = cycles.cycle_bruteforce_oracle(model, component, box=box)
        if ref.coefficients != cycle.coefficients:
            raise OracleMismatch(
                f"stepwise construction gave {cycle.coefficients}, "
                f"level enumeration gave {ref.coefficients}"
            )
    return {
        "surface": model.name,
        "component": curve_names(model, cycle.component),
        "coefficients": {
            model.curves[i].name: c
            for i, c in zip(cycle.component, cycle.coefficients)
        },
        "divisor": divisor_payload(cycle.divisor),
        "multiplicity": cycle.multiplicity,
        "genus": cycle.genus,
        "rational": cycle.genus == 0,
        "oracle_checked": bool(args.oracle),
    }


def _cmd_exceptional(args) -> dict:
    model = load_surface(args.surface)
    a = parse_divisor(model, args.divisor)
    support = model.exceptional_curves(a)
    components = []
    for comp in model.connected_components(support):
        cycle = cycles.fundamental_cycle(model, comp)
        components.append({
            "curves": curve_names(model, comp),
            "rational": cycle.genus == 0,
            "multiplicity": cycle.multiplicity,
            "genus": cycle.genus,
        })
    return {
        "surface": model.name,
        "class": divisor_payload(a),
        "self_intersection": exact_value(model.self_intersection(a)),
        "orthogonal_curves": curve_names(model, support),
        "components": components,
        "all_rational": all(c["rational"] for c in components),
    }


def _cmd_tau(args) -> dict:
    model = load_surface(args.surface)
    a = parse_divisor(model, args.divisor)
    t = parse_divisor(model, args.twist)
    value = bounds.obstruction_minimum(model, a, t)
    return {
        "surface": model.name,
        "class": divisor_payload(a),
        "twist": divisor_payload(t),
        "tau": exact_value(value),
        "finite": not isinstance(value, bounds._PositiveInfinity),
        "orthogonal_curves": curve_names(model, model.exceptional_curves(a)),
    }


def _cmd_obstructions(args) -> dict:
    model = load_surface(args.surface)
    a = parse_divisor(model, args.divisor)
    t = parse_divisor(model, args.twist)
    obs = bounds.enumerate_obstructions(model, a, t, args.cluster)
    if args.oracle:
        ref = bounds.obstruction_oracle(model, a, t, args.cluster, margin=args.box_margin)
        if [e.coefficients for e in ref.entries] != [e.coefficients for e in obs.entries]:
            raise OracleMismatch(
                f"tight box found {len(obs.entries)} obstructions, "
                f"inflated box found {len(ref.entries)}"
            )
    payload = to_payload(obs, model)
    payload["support_names"] = curve_names(model, obs.support)
    payload["count"] = len(obs.entries)
    payload["witness_minimum"] = to_payload(obs.witness_minimum, model)
    payload["oracle_checked"] = bool(args.oracle)
    return {"surface": model.name, "class": divisor_payload(a),
            "twist": divisor_payload(t), "obstructions": payload}


def _cmd_ek(args) -> dict:
    model = load_surface(args.surface)
    a = parse_divisor(model, args.divisor)
    t = parse_divisor(model, args.twist)
    corr = bounds.correction_divisor(model, a, t, args.cluster)
    sep = bounds.separating_divisor(model, a)
    corr_payload = to_payload(corr, model)
    corr_payload["support_names"] = curve_names(model, corr.support)
    sep_payload = to_payload(sep, model)
    for piece, raw in zip(sep.pieces, sep_payload["pieces"]):
        raw["component_names"] = curve_names(model, piece.component)
    return {
        "surface": model.name,
        "class": divisor_payload(a),
        "twist": divisor_payload(t),
        "correction": corr_payload,
        "separating": sep_payload,
    }


def _cmd_bounds(args) -> dict:
    model = load_surface(args.surface)
    a = parse_divisor(model, args.divisor)
    t = parse_divisor(model, args.twist)
    k = args.cluster
    bounds._require_nef_big(model, a)
    payload = {
        "surface": model.name,
        "class": divisor_payload(a),
        "twist": divisor_payload(t),
        "k": k,
        "threshold": exact_value(bounds.vanishing_threshold(model, a, t)),
        "level": bounds.vanishing_level(model, a, t),
        "threshold_plus_k": exact_value(k + bounds.vanishing_threshold(model, a, t)),
        "canonical_threshold": exact_value(
            bounds.vanishing_threshold(model, a, model.canonical_class)
        ),
        "hodge": to_payload(bounds.hodge_defect(model, a, t), model),
        "tau": exact_value(bounds.obstruction_minimum(model, a, t)),
        "conditions": to_payload(bounds.condition_check(model, a, t, k), model),
        "degree_caps": {
            str(x): exact_value(bounds.degree_cap_threshold(model, a, t, k, x))
            for x in (1, 2, 3)
        },
    }
    if args.multiple is not None:
        payload["n"] = args.multiple
        payload["quadratic"] = to_payload(
            bounds.obstruction_quadratic(model, a, t, args.multiple, k), model
        )
        payload["check"] = to_payload(
            bounds.threshold_holds(model, a, t, args.multiple, k), model
        )
    return payload


def _cmd_thresholds(args) -> dict:
    model = load_surface(args.surface)
    a = parse_divisor(model, args.divisor)
    t = parse_divisor(model, args.twist)
    table = bounds.theorem_thresholds(
        model,
        a,
        t,
        k=args.cluster,
        n=args.multiple,
        no_fixed_part=args.assert_no_fixed_part,
        base_point_free=args.assert_base_point_free,
    )
    return {
        "surface": model.name,
        "class": divisor_payload(a),
        "twist": divisor_payload(t),
        "k": args.cluster,
        "thresholds": {key: to_payload(entry, model) for key, entry in table.items()},
    }


def _cmd_compare(args) -> dict:
    model = load_surface(args.surface)
    h = parse_divisor(model, args.divisor)
    cmp = bounds.matsusaka_compare(model, h)
    return {
        "surface": model.name,
        "class": divisor_payload(h),
        "k_plus_4h": {
            "bound": exact_value(cmp.bound_k_plus_4h),
            "least_n": cmp.least_n_k_plus_4h,
        },
        "k_plus_2h": {
            "bound": exact_value(cmp.bound_k_plus_2h),
            "least_n": cmp.least_n_k_plus_2h,
        },
        "here": {
            "bound": exact_value(cmp.bound_here),
            "least_n": cmp.least_n_here,
        },
    }


def _cmd_report(args) -> dict:
    model = load_surface(args.surface)
    d = parse_divisor(model, args.divisor)
    t = parse_divisor(model, args.twist)
    dec = zariski.zariski_decompose(model, d)
    payload = {
        "surface": model.name,
        "input": divisor_payload(d),
        "positive": divisor_payload(dec.positive),
        "negative": divisor_payload(dec.negative),
        "kappa_is_two": zariski.kappa_is_two(model, d),
    }
    if not payload["kappa_is_two"]:
        payload["note"] = (
            "the nef part has vanishing self-intersection, so the growth of "
            "the system is below the range these thresholds describe"
        )
        return payload
    report = bounds.build_bound_report(
        model,
        dec.positive,
        t,
        k=args.cluster,
        n=args.multiple,
        no_fixed_part=args.assert_no_fixed_part,
        base_point_free=args.assert_base_point_free,
    )
    payload["report"] = to_payload(report, model)
    return payload


# -- driver ------------------------------------------------------------------


def run_subcommand(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        payload = args.handler(args)
    except OracleMismatch as exc:
        print(f"oracle mismatch: {exc}", file=sys.stderr)
        return 3
    except CalculatorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(render_text(payload)))
    return 0


def main() -> None:
    sys.exit(run_subcommand(sys.argv[1:]))


if __name__ == "__main__":
    main()
