"""Command-line front end.

Exit codes: 0 = success, 1 = valid input but negative mathematical answer
(not isotone, not a classical threshold, not representable), 2 = input
error.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fdl
from .errors import LatthreshError
from .lattice_valued import (
    LValuedFunction,
    canonical_representation,
    cut_collection,
    quotient_lattice,
)
from .parsing import parse_expression, parse_truth_table
from .representability import (
    closure_system_from_json,
    synthesize_linear_representation,
)
from .threshold import (
    BooleanFunction,
    beta_bar,
    is_classical_threshold,
    is_isotone,
    isotonicity_witness,
    synthesize_threshold,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2


def _emit_json(data) -> None:
    print(json.dumps(data, sort_keys=True, indent=2))


def _load_function(args) -> BooleanFunction:
    sources = [s for s in (args.expr, args.table, args.file) if s is not None]
    if len(sources) != 1:
        raise LatthreshError("exactly one of --expr, --table, --file is required")
    if args.expr is not None:
        return parse_expression(args.expr)
    if args.table is not None:
        return parse_truth_table(args.table)
    with open(args.file, encoding="utf-8") as fh:
        text = fh.read().strip()
    if text and set(text) <= {"0", "1"}:
        return parse_truth_table(text)
    return parse_expression(text)


def _load_mu(path: str) -> LValuedFunction:
    with open(path, encoding="utf-8") as fh:
        return LValuedFunction.from_json(json.load(fh))


def _sorted_member(member) -> list[str]:
    return sorted(member)


def _sorted_members(members) -> list[list[str]]:
    return sorted((sorted(m) for m in members), key=lambda m: (len(m), m))


def cmd_synthesize(args) -> int:
    f = _load_function(args)
    if isotonicity_witness(f) is not None:
        x, y = isotonicity_witness(f)
        print(f"not isotone: f{x.coords()} = 1 but f{y.coords()} = 0", file=sys.stderr)
        return EXIT_NEGATIVE
    repr_ = synthesize_threshold(f)
    t_text = fdl.format_element(repr_.t)
    if args.format == "json":
        _emit_json({
            "n": f.n,
            "table": f.to_table(),
            "weights": [fdl.format_element(w) for w in repr_.weights],
            "t": t_text,
        })
    else:
        print(f"t = {t_text}")
        print("weights = " + ", ".join(fdl.format_element(w) for w in repr_.weights))
    return EXIT_OK


def cmd_check_isotone(args) -> int:
    f = _load_function(args)
    ok = is_isotone(f)
    if args.format == "json":
        witness = isotonicity_witness(f)
        _emit_json({
            "isotone": ok,
            "witness": [witness[0].label(), witness[1].label()] if witness else None,
        })
    else:
        if ok:
            print("isotone")
        else:
            x, y = isotonicity_witness(f)
            print(f"not isotone: f{x.coords()} = 1 but f{y.coords()} = 0")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_check_classical(args) -> int:
    f = _load_function(args)
    witness = is_classical_threshold(f)
    if args.format == "json":
        _emit_json({
            "classical": witness is not None,
            "weights": [str(w) for w in witness.weights] if witness else None,
            "t": str(witness.t) if witness else None,
        })
    else:
        if witness is None:
            print("not a classical threshold function")
        else:
            print(witness.format())
    return EXIT_OK if witness is not None else EXIT_NEGATIVE


def cmd_beta_cuts(args) -> int:
    mu = beta_bar(args.n)
    members = _sorted_members(cut_collection(mu).members)
    if args.format == "json":
        _emit_json({"n": args.n, "cuts": members})
    else:
        print(f"{len(members)} cuts")
        for m in members:
            print(" ".join(m) if m else "(empty)")
    return EXIT_OK


def cmd_representable(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        system, n = closure_system_from_json(json.load(fh))
    report = synthesize_linear_representation(system, n)
    if args.format == "json":
        _emit_json(report.to_json())
    elif args.format == "dot":
        if not report.representable:
            print("not representable", file=sys.stderr)
            return EXIT_NEGATIVE
        print(report.lattice.to_dot("representation"))
    else:
        if report.representable:
            print("representable")
            for i, w in enumerate(report.weights, start=1):
                print(f"w{i} = {w}")
        else:
            x, y = report.counterexample_i
            print("not representable")
            print(f"counterexample: x = {x.label()}, y = {y.label()}")
    if args.plot and report.representable:
        from .render import save_hasse_figure

        save_hasse_figure(report.lattice, args.plot, title="representation lattice")
    return EXIT_OK if report.representable else EXIT_NEGATIVE


def cmd_cuts(args) -> int:
    mu = _load_mu(args.file)
    members = _sorted_members(cut_collection(mu).members)
    if args.format == "json":
        _emit_json({"cuts": members})
    else:
        print(f"{len(members)} cuts")
        for m in members:
            print(" ".join(m) if m else "(empty)")
    return EXIT_OK


def cmd_canonical(args) -> int:
    mu = _load_mu(args.file)
    canon = canonical_representation(mu)
    if args.format == "json":
        _emit_json(canon.to_json())
    elif args.format == "dot":
        print(canon.codomain.to_dot("cut_lattice"))
    else:
        for x in canon.domain:
            print(f"{x} -> {canon.values[x]}")
    if args.plot:
        from .render import save_hasse_figure

        save_hasse_figure(canon.codomain, args.plot, title="cut lattice")
    return EXIT_OK


def cmd_quotient(args) -> int:
    mu = _load_mu(args.file)
    result = quotient_lattice(mu)
    if args.format == "json":
        _emit_json({
            "lattice": result.lattice.to_json(),
            "class_of": {p: result.class_of[p] for p in sorted(result.class_of)},
        })
    elif args.format == "dot":
        print(result.lattice.to_dot("quotient"))
    else:
        print("classes (labelled by supremum):")
        for p in sorted(result.class_of):
            print(f"  {p} -> {result.class_of[p]}")
        print("covers:")
        for a, b in result.lattice.covers():
            print(f"  {a} < {b}")
    if args.plot:
        from .render import save_hasse_figure

        save_hasse_figure(result.lattice, args.plot, title="quotient lattice")
    return EXIT_OK


def _add_function_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--expr", help="monotone expression, e.g. 'x1&x2 | x3&x4'")
    p.add_argument("--table", help="truth table string of 2^n 0/1 characters")
    p.add_argument("--file", help="file holding a table or expression")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latthresh",
        description="Threshold representations of monotone Boolean functions "
                    "over lattices, cut analysis, and representability checks.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=["text", "json", "dot"], default="text")
        return p

    p = add("synthesize", cmd_synthesize,
            "threshold representation over the free distributive lattice")
    _add_function_inputs(p)

    p = add("check-isotone", cmd_check_isotone, "test monotonicity")
    _add_function_inputs(p)

    p = add("check-classical", cmd_check_classical,
            "exact rational classical-threshold feasibility")
    _add_function_inputs(p)

    p = add("beta-cuts", cmd_beta_cuts,
            "cuts of the universal lattice-valued function (all up-sets)")
    p.add_argument("--n", type=int, required=True)

    p = add("representable", cmd_representable,
            "decide lattice linear-combination representability of a closure system")
    p.add_argument("--file", required=True, help="closure system JSON")
    p.add_argument("--plot", help="write the representation lattice as a figure")

    p = add("cuts", cmd_cuts, "cut collection of a lattice-valued function")
    p.add_argument("--file", required=True, help="lattice-valued function JSON")

    p = add("canonical", cmd_canonical,
            "canonical representation of a lattice-valued function")
    p.add_argument("--file", required=True, help="lattice-valued function JSON")
    p.add_argument("--plot", help="write the cut lattice as a figure")

    p = add("quotient", cmd_quotient,
            "quotient of the codomain by cut equality")
    p.add_argument("--file", required=True, help="lattice-valued function JSON")
    p.add_argument("--plot", help="write the quotient lattice as a figure")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except LatthreshError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
