"""Command-line front end.

Exit codes: 0 success (or negative verdict), 1 parse error, 2 invalid state
or bindings, 3 failed internal check, 10 overlap found, 11 orbit-invariance
failure.  Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .dirac import bind_params, parse_scalar, parse_state
from .errors import DiracParseError, InternalCheckError, StateError
from .inductive import (
    ALL_PARTITIONS,
    classify_all_partitions,
    classify_partition,
    detect_overlap,
    paper_demo,
    report_json_dict,
    slocc_invariance_check,
)
from .pencil import label_text
from .slocc_classes import classify2, classify3
from .states import QubitPartition

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_INTERNAL = 3
EXIT_OVERLAP = 10
EXIT_ORBIT = 11


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entfam",
        description="Exact SLOCC entanglement-family classification of 2-4 qubit states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_state_args(p, with_file=True):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--state", help="state expression, e.g. '|0000>+|1111>'")
        if with_file:
            group.add_argument(
                "--file", help="read one state expression per line ('#' comments)"
            )
            p.add_argument(
                "--parallel",
                action="store_true",
                help="process file lines concurrently (order preserved)",
            )
        p.add_argument(
            "--param",
            action="append",
            default=[],
            metavar="NAME=VALUE",
            help="bind a parameter, e.g. --param l1=2 --param l2=-1/3",
        )
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("classify", help="family label per singled-out qubit")
    add_state_args(p)
    p.add_argument(
        "--partition", default="all", choices=["all", "1", "2", "3", "4"],
        help="singled-out qubit (default: all four)",
    )
    p.add_argument(
        "--strict-k", action="store_true",
        help="keep the biseparable qubit index when comparing labels",
    )

    p = sub.add_parser("inventory", help="raw pencil census for one partition")
    add_state_args(p, with_file=False)
    p.add_argument("--partition", required=True, choices=["1", "2", "3", "4"])

    p = sub.add_parser("overlap", help="does the family depend on the partition?")
    add_state_args(p)
    p.add_argument("--strict-k", action="store_true")

    p = sub.add_parser("demo", help="run a bundled demonstration")
    p.add_argument("name", choices=["paper"], help="demonstration to run")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("orbit-check", help="fuzz labels with random SLOCC operators")
    add_state_args(p, with_file=False)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=7)

    p = sub.add_parser("classify3", help="SLOCC class of a 3-qubit state")
    add_state_args(p)

    p = sub.add_parser("classify2", help="SLOCC class of a 2-qubit state")
    add_state_args(p)

    return parser


def _parse_bindings(pairs) -> dict:
    bindings = {}
    for pair in pairs:
        name, sep, value = pair.partition("=")
        if not sep or not name:
            raise StateError(f"expected NAME=VALUE for --param, got {pair!r}")
        try:
            bindings[name.strip()] = parse_scalar(value.strip())
        except DiracParseError as exc:
            raise StateError(f"bad value for parameter {name.strip()!r}: {exc}") from None
    return bindings


def _state_lines(args):
    """Yield (line_number, text) of states to process for this invocation."""
    if getattr(args, "file", None):
        with open(args.file, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                text = raw.strip()
                if not text or text.startswith("#"):
                    continue
                yield lineno, text
    else:
        yield 0, args.state


def _bind(text, bindings):
    return bind_params(parse_state(text), bindings)


def _inventory_text(inv) -> str:
    d = inv.to_json_dict()
    bisep = ", ".join(f"k={k}: {v}" for k, v in d["biseparable_points"].items())
    return "\n".join(
        [
            f"product_points: {d['product_points']}",
            f"biseparable_points: {bisep}",
            f"w_points: {d['w_points']}",
            f"generic_type: {d['generic_type']}",
        ]
    )


def _report_text(report) -> str:
    lines = [f"state: {report.state_text}"]
    if report.params:
        lines.append(
            "params: " + ", ".join(f"{n}={v}" for n, v in report.params)
        )
    for o in report.outcomes:
        part = QubitPartition(4, (o.partition,)).label()
        lines.append(
            f"partition {part}: rank {o.rank}  {label_text(o.label, report.strict_k)}"
        )
    lines.append("distinct labels: " + ", ".join(report.distinct_labels))
    lines.append("overlap: " + ("yes" if report.overlap else "no"))
    return "\n".join(lines)


def _for_each_state(args, worker):
    """Run worker(text) over the input states, honoring --parallel; returns outputs."""
    items = list(_state_lines(args))
    if getattr(args, "parallel", False) and len(items) > 1:
        with ThreadPoolExecutor() as pool:
            return list(pool.map(lambda it: worker(it[1]), items))
    return [worker(text) for _, text in items]


def _cmd_classify(args) -> int:
    bindings = _parse_bindings(args.param)
    partitions = ALL_PARTITIONS if args.partition == "all" else (int(args.partition),)

    def worker(text):
        state = _bind(text, bindings)
        return classify_all_partitions(
            state, partitions, strict_k=args.strict_k, state_text=text, params=bindings
        )

    reports = _for_each_state(args, worker)
    for idx, report in enumerate(reports):
        if args.json:
            indent = None if len(reports) > 1 else 2
            print(json.dumps(report_json_dict(report), indent=indent))
        else:
            if idx:
                print()
            print(_report_text(report))
    return EXIT_OK


def _cmd_inventory(args) -> int:
    bindings = _parse_bindings(args.param)
    state = _bind(args.state, bindings)
    outcome = classify_partition(state, int(args.partition))
    if outcome.inventory is None:
        raise StateError(
            f"partition {args.partition} has a rank-1 coefficient matrix; "
            "no pencil to inventory (state factors as |e>|phi>)"
        )
    if args.json:
        print(json.dumps(outcome.inventory.to_json_dict(), indent=2))
    else:
        print(_inventory_text(outcome.inventory))
    return EXIT_OK


def _cmd_overlap(args) -> int:
    bindings = _parse_bindings(args.param)

    def worker(text):
        state = _bind(text, bindings)
        return text, detect_overlap(state, strict_k=args.strict_k)

    results = _for_each_state(args, worker)
    any_overlap = False
    for text, ev in results:
        any_overlap = any_overlap or ev.overlap
        if args.json:
            print(
                json.dumps(
                    {
                        "state": text,
                        "overlap": ev.overlap,
                        "labels": {str(i): lab for i, lab in ev.labels},
                        "distinct_labels": list(ev.distinct_labels),
                    }
                )
            )
        else:
            verdict = "overlap" if ev.overlap else "no overlap"
            detail = ", ".join(f"{i}: {lab}" for i, lab in ev.labels)
            print(f"{text}: {verdict} ({detail})")
    return EXIT_OVERLAP if any_overlap else EXIT_OK


def _cmd_demo(args) -> int:
    rows = paper_demo()
    if args.json:
        print(
            json.dumps(
                [{"name": r.name, **report_json_dict(r.report)} for r in rows],
                indent=2,
            )
        )
        return EXIT_OK
    header = f"{'state':<6} {'params':<14}" + "".join(
        f" {QubitPartition(4, (i,)).label():<16}" for i in ALL_PARTITIONS
    ) + " overlap"
    print(header)
    print("-" * len(header))
    for r in rows:
        params = ", ".join(f"{n}={v}" for n, v in r.report.params) or "-"
        cells = "".join(
            f" {label_text(r.report.outcome(i).label):<16}" for i in ALL_PARTITIONS
        )
        print(
            f"{r.name:<6} {params:<14}" + cells
            + (" yes" if r.report.overlap else " no")
        )
    return EXIT_OK


def _cmd_orbit_check(args) -> int:
    bindings = _parse_bindings(args.param)
    state = _bind(args.state, bindings)
    report = slocc_invariance_check(state, trials=args.trials, seed=args.seed)
    if args.json:
        print(
            json.dumps(
                {
                    "state": report.state_text,
                    "trials": report.trials,
                    "seed": report.seed,
                    "failures": [
                        {
                            "trial": f.trial,
                            "partition": f.partition,
                            "operator": f.operator,
                            "label_before": f.label_before,
                            "label_after": f.label_after,
                        }
                        for f in report.failures
                    ],
                },
                indent=2,
            )
        )
    else:
        print(
            f"trials: {report.trials}, seed: {report.seed}, "
            f"failures: {len(report.failures)}"
        )
        for f in report.failures:
            print(
                f"  trial {f.trial} partition {f.partition}: "
                f"{f.label_before} -> {f.label_after} under {f.operator}"
            )
    return EXIT_OK if report.passed else EXIT_ORBIT


def _cmd_point_class(args, classifier) -> int:
    bindings = _parse_bindings(args.param)

    def worker(text):
        return text, classifier(_bind(text, bindings)).value

    results = _for_each_state(args, worker)
    for text, name in results:
        if args.json:
            print(json.dumps({"state": text, "class": name}))
        else:
            print(name if len(results) == 1 else f"{text}: {name}")
    return EXIT_OK


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "classify": _cmd_classify,
        "inventory": _cmd_inventory,
        "overlap": _cmd_overlap,
        "demo": _cmd_demo,
        "orbit-check": _cmd_orbit_check,
        "classify3": lambda a: _cmd_point_class(a, classify3),
        "classify2": lambda a: _cmd_point_class(a, classify2),
    }
    try:
        return handlers[args.command](args)
    except DiracParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (StateError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (InternalCheckError, AssertionError) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
