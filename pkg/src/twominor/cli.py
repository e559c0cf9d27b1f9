"""Command-line interface.

Exit codes: 0 for success or a passing verdict, 1 for a non-passing verdict,
2 for usage, format, and resource-cap errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .boundedness import (
    check_profile_bounded,
    empirical_binding_profile,
    format_coefficients,
    nondecreasing_majorant,
    parse_coefficients,
    profile_to_csv,
)
from .errors import FormatError, ModelValidationError, ResourceLimitError
from .experiments import obs7_experiment, run_theorem5_suite, verify_lemma4
from .graphs import Graph, clique_number, wall
from .io import decode_graph, encode_graph, graph6_encode, to_dot
from .minors import (
    find_induced_minor_model,
    find_minor_model,
    lsg_canonical_model,
    minimize_minor_model,
    model_from_text,
    model_to_text,
)
from .treewidth import decomposition_to_pace, exact_treewidth


def _read_graph(path: str, fmt: str) -> Graph:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return decode_graph(text, fmt)


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _maybe_dot(args, g: Graph) -> None:
    if getattr(args, "dot", None):
        _write_text(args.dot, to_dot(g))


def _cmd_wall(args) -> int:
    g = wall(args.k)
    sys.stdout.write(encode_graph(g, args.format))
    _maybe_dot(args, g)
    return 0


def _cmd_treewidth(args) -> int:
    g = _read_graph(args.file, args.format)
    width, decomposition = exact_treewidth(g)
    if args.td:
        _write_text(args.td, decomposition_to_pace(decomposition, g.n))
    if args.json:
        payload = {"width": width, "td": decomposition_to_pace(decomposition, g.n)}
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(f"{width}\n")
    _maybe_dot(args, g)
    return 0


def _cmd_clique(args) -> int:
    g = _read_graph(args.file, args.format)
    omega = clique_number(g)
    if args.json:
        sys.stdout.write(json.dumps({"clique_number": omega}) + "\n")
    else:
        sys.stdout.write(f"{omega}\n")
    _maybe_dot(args, g)
    return 0


def _cmd_minor(args) -> int:
    host = _read_graph(args.host, args.format)
    pattern = _read_graph(args.pattern, args.format)
    finder = find_induced_minor_model if args.induced else find_minor_model
    model = finder(host, pattern)
    if args.json:
        payload = {"found": model is not None}
        if model is not None:
            payload["model"] = {
                "host": graph6_encode(host),
                "pattern": graph6_encode(pattern),
                "branch_sets": {
                    str(v): sorted(model.branch_sets[v]) for v in sorted(model.branch_sets)
                },
            }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    elif model is None:
        sys.stdout.write("no model found\n")
    else:
        sys.stdout.write(model_to_text(model))
    return 0


def _cmd_minimize(args) -> int:
    try:
        with open(args.model, "r", encoding="ascii") as fh:
            model = model_from_text(fh.read())
    except OSError as exc:
        raise FormatError(f"cannot read {args.model}: {exc}") from exc
    minimized = minimize_minor_model(model)
    sys.stdout.write(model_to_text(minimized))
    return 0


def _cmd_lsg(args) -> int:
    g = _read_graph(args.file, args.format)
    model = lsg_canonical_model(g)
    sys.stdout.write(model_to_text(model))
    _maybe_dot(args, model.host)
    return 0


def _cmd_profile(args) -> int:
    g = _read_graph(args.file, args.format)
    profile = empirical_binding_profile(g)
    csv_text = profile_to_csv(profile)
    if args.csv:
        _write_text(args.csv, csv_text)
    if args.json:
        payload = {
            "points": [list(p) for p in sorted(profile.points)],
            "envelope": {str(k): v for k, v in sorted(profile.envelope.items())},
        }
        if args.check_poly:
            f = parse_coefficients(args.check_poly)
            payload["violations"] = [list(v) for v in check_profile_bounded(profile, f)]
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    elif not args.csv:
        sys.stdout.write(csv_text)
    if args.plot:
        from .plotting import save_profile_figure

        save_profile_figure(profile, args.plot)
    return 0


def _cmd_majorant(args) -> int:
    p = parse_coefficients(args.poly)
    r = nondecreasing_majorant(p)
    if args.json:
        sys.stdout.write(json.dumps({"coefficients": list(r.coefficients)}) + "\n")
    else:
        sys.stdout.write(format_coefficients(r) + "\n")
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "lemma4":
        report = verify_lemma4(
            trials=args.trials, seed=args.seed, host_n=args.host_n, pattern_n=args.pattern_n
        )
    elif args.suite == "theorem5":
        names = None if args.instance == "all" else [args.instance]
        report = run_theorem5_suite(names)
    else:
        report = obs7_experiment(ell=args.ell, trials=args.trials, seed=args.seed)
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        for line in report.summary_lines():
            sys.stdout.write(line + "\n")
    if args.report:
        _write_text(args.report, report.to_json())
    if args.plot:
        from .plotting import save_report_figure

        save_report_figure(report, args.plot)
    return 0 if report.verdict == "pass" else 1


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("graph6", "edgelist"), default="graph6", help="graph file format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twominor",
        description="Exact treewidth, minor models, and clique-versus-treewidth experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wall", help="print the k-by-k wall graph")
    p.add_argument("k", type=int)
    _add_format(p)
    p.add_argument("--dot", metavar="PATH", help="also write a DOT rendering")
    p.set_defaults(func=_cmd_wall)

    p = sub.add_parser("treewidth", help="exact treewidth of a graph file")
    p.add_argument("file")
    _add_format(p)
    p.add_argument("--td", metavar="PATH", help="write the certifying decomposition (.td)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(func=_cmd_treewidth)

    p = sub.add_parser("clique", help="exact clique number of a graph file")
    p.add_argument("file")
    _add_format(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(func=_cmd_clique)

    p = sub.add_parser("minor", help="search for a (induced) minor model")
    p.add_argument("--pattern", required=True)
    p.add_argument("--host", required=True)
    p.add_argument("--induced", action="store_true")
    _add_format(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_minor)

    p = sub.add_parser("minimize", help="minimize a minor model given as a model file")
    p.add_argument("--model", required=True)
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("lsg", help="canonical model of g in the line graph of its subdivision")
    p.add_argument("file")
    _add_format(p)
    p.add_argument("--dot", metavar="PATH", help="DOT rendering of the host")
    p.set_defaults(func=_cmd_lsg)

    p = sub.add_parser("profile", help="treewidth-versus-clique profile over induced subgraphs")
    p.add_argument("file")
    _add_format(p)
    p.add_argument("--csv", metavar="PATH", help="write the CSV here instead of stdout")
    p.add_argument("--plot", metavar="PATH", help="render the profile figure")
    p.add_argument("--json", action="store_true")
    p.add_argument("--check-poly", metavar="COEFFS", help="report violations of this bound")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("majorant", help="nondecreasing majorant of an integer polynomial")
    p.add_argument("--poly", required=True, metavar="COEFFS", help="a0,a1,a2,...")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_majorant)

    p = sub.add_parser("verify", help="run a verification suite")
    vsub = p.add_subparsers(dest="suite", required=True)

    v = vsub.add_parser("lemma4", help="minimized branch sets stay clique-bounded by 3")
    v.add_argument("--trials", type=int, default=200)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--host-n", type=int, default=12)
    v.add_argument("--pattern-n", type=int, default=6)
    v.add_argument("--json", action="store_true")
    v.add_argument("--report", metavar="PATH", help="write the JSON report here")
    v.add_argument("--plot", metavar="PATH", help="render the report figure")
    v.set_defaults(func=_cmd_verify)

    v = vsub.add_parser("theorem5", help="bound-transfer pipeline on the stock instances")
    v.add_argument(
        "--instance",
        choices=("identity", "lsg", "subdivision", "all"),
        default="all",
    )
    v.add_argument("--json", action="store_true")
    v.add_argument("--report", metavar="PATH")
    v.add_argument("--plot", metavar="PATH")
    v.set_defaults(func=_cmd_verify)

    v = vsub.add_parser("obs7", help="triangle-free subgraphs of the line-of-subdivision host")
    v.add_argument("--ell", type=int, default=2)
    v.add_argument("--trials", type=int, default=0)
    v.add_argument("--seed", type=int, default=7)
    v.add_argument("--json", action="store_true")
    v.add_argument("--report", metavar="PATH")
    v.add_argument("--plot", metavar="PATH")
    v.set_defaults(func=_cmd_verify)

    return parser


def cli_dispatch(argv: list[str]) -> int:
    """Parse argv and run; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors; pass that through as our code.
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (FormatError, ModelValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
