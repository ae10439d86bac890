"""Command-line interface: validate, measure, check, gen.

Exit codes: 0 success, 1 validation failure, 2 property failure,
3 I/O or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import DNumber, Frame, belief_interval, complete
from .document import DocumentError, parse_document, serialize_document
from .measures import (
    UnknownModel,
    interval_distance_to_unit,
    total_uncertainty,
)
from .oracle import (
    ENUMERATION_CAP,
    CheckReport,
    GeneratorConfig,
    check_degeneration,
    check_monotonicity,
    check_oracle_equivalence,
    check_range,
    check_set_consistency,
    generate_raw,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_PROPERTY = 2
EXIT_USAGE = 3

SUITES = ("range", "monotonicity", "set-consistency", "degeneration", "oracle")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dnumbers",
                     description="D number validation, uncertainty measures, "
                                 "instance generation, and property suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[], help="validate a document")
    p.add_argument("path")

    p = sub.add_parser("measure", help="compute belief intervals and uncertainty")
    p.add_argument("path")
    p.add_argument("--unknown-model", default="coefficient",
                   choices=[m.value for m in UnknownModel])
    p.add_argument("--output", default="table", choices=["table", "csv", "json-lines"])
    p.add_argument("--subsets", default="singletons", choices=["singletons", "all"])

    p = sub.add_parser("check", help="run property suites")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--frame-size", type=int, default=3)
    p.add_argument("--counterexample-dir", default=None)

    p = sub.add_parser("gen", help="generate a random document")
    p.add_argument("--frame-size", type=int, default=3)
    p.add_argument("--focal-count", type=int, default=3)
    p.add_argument("--completeness", default="random",
                   choices=["complete", "incomplete", "random"])
    p.add_argument("--exclusivity", default="random-degrees",
                   choices=["exclusive", "random-degrees"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    return parser


def _load(path: str) -> tuple[Frame, DNumber]:
    try:
        text = Path(path).read_bytes()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    return parse_document(text)


def cmd_validate(args) -> int:
    try:
        _load(args.path)
    except DocumentError as exc:
        for message in exc.errors:
            print(message, file=sys.stderr)
        return EXIT_VALIDATION
    print("ok")
    return EXIT_OK


def cmd_measure(args) -> int:
    try:
        frame, raw = _load(args.path)
    except DocumentError as exc:
        for message in exc.errors:
            print(message, file=sys.stderr)
        return EXIT_VALIDATION
    d = complete(raw)
    injected = 0.0 if raw.completed else 1.0 - raw.total_mass
    model = UnknownModel(args.unknown_model)
    tu = total_uncertainty(d, model)

    rows = []
    for i, label in enumerate(frame.elements):
        interval = belief_interval(d, 1 << i)
        rows.append((label, interval.lower, interval.upper,
                     1.0 - interval_distance_to_unit(interval)))
    extra = []
    if args.subsets == "all":
        if frame.size > ENUMERATION_CAP:
            print(f"error: --subsets all limited to frames of size "
                  f"{ENUMERATION_CAP}", file=sys.stderr)
            return EXIT_USAGE
        for a in range(1, frame.full_mask + 1):
            interval = belief_interval(d, a)
            extra.append(("|".join(frame.labels_of(a)),
                          interval.lower, interval.upper))

    if args.output == "csv":
        print("element,bel,pl,term")
        for label, lo, hi, term in rows:
            print(f"{label},{lo!r},{hi!r},{term!r}")
        for name, lo, hi in extra:
            print(f"{name},{lo!r},{hi!r},")
    elif args.output == "json-lines":
        for label, lo, hi, term in rows:
            print(json.dumps({"element": label, "bel": lo, "pl": hi, "term": term}))
        for name, lo, hi in extra:
            print(json.dumps({"set": name, "bel": lo, "pl": hi}))
        summary = {"ku": tu.ku, "uu_coefficient": tu.uu_coefficient,
                   "uu_evaluated": tu.uu_evaluated, "completion_mass": injected}
        print(json.dumps(summary))
    else:
        width = max(len("element"), *(len(r[0]) for r in rows))
        print(f"{'element':<{width}}  {'bel':>9}  {'pl':>9}  {'term':>9}")
        for label, lo, hi, term in rows:
            print(f"{label:<{width}}  {lo:9.7f}  {hi:9.7f}  {term:9.7f}")
        if extra:
            print()
            print("subset intervals:")
            for name, lo, hi in extra:
                print(f"  {{{name}}}: [{lo:.7f}, {hi:.7f}]")
        print()
        if injected > 0.0:
            print(f"auto-completed: mass {injected:.7f} assigned to {{X}}")
        print(f"KU = {tu.ku:.7f}")
        print(f"UU coefficient = {tu.uu_coefficient:.7f}")
        if tu.uu_evaluated is not None:
            print(f"UU ({model.value}) = {tu.uu_evaluated:.7f}")
        print(f"TU = ({tu.ku:.7f}, {tu.uu_coefficient:.7f})")
    return EXIT_OK


def _run_suite(name: str, args) -> CheckReport:
    focal = min(3, 2 ** args.frame_size - 1)
    config = GeneratorConfig(frame_size=args.frame_size, focal_count=focal,
                             seed=args.seed)
    if name == "range":
        return check_range(args.trials, config)
    if name == "monotonicity":
        return check_monotonicity(args.trials, config)
    if name == "set-consistency":
        # seeded random degree matrix exercises the non-exclusive terms
        frame, _ = generate_raw(config)
        return check_set_consistency(frame)
    if name == "degeneration":
        return check_degeneration(
            args.trials,
            GeneratorConfig(frame_size=args.frame_size, focal_count=focal,
                            completeness="complete", exclusivity="exclusive",
                            seed=args.seed))
    return check_oracle_equivalence(args.trials, config)


def cmd_check(args) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    failed = False
    for name in suites:
        report = _run_suite(name, args)
        status = "PASS" if report.ok else "FAIL"
        print(f"{status} {report.name}: trials={report.trials} "
              f"failures={len(report.failures)} "
              f"max_violation={report.max_violation:.3e}")
        for note in report.notes:
            print(f"  note: {note}")
        if not report.ok:
            failed = True
            if args.counterexample_dir:
                out = Path(args.counterexample_dir)
                out.mkdir(parents=True, exist_ok=True)
                for k, doc in enumerate(report.failures):
                    path = out / f"{report.name}-{k:04d}.json"
                    path.write_text(json.dumps(doc, indent=2,
                                               ensure_ascii=False) + "\n")
    return EXIT_PROPERTY if failed else EXIT_OK


def cmd_gen(args) -> int:
    try:
        config = GeneratorConfig(frame_size=args.frame_size,
                                 focal_count=args.focal_count,
                                 completeness=args.completeness,
                                 exclusivity=args.exclusivity,
                                 seed=args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    frame, d = generate_raw(config)
    text = serialize_document(frame, d)
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"validate": cmd_validate, "measure": cmd_measure,
               "check": cmd_check, "gen": cmd_gen}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
