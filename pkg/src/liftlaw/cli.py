"""Command line interface: ``liftlaw {check,lift,unlift,roundtrip,linear-demo}``.

Exit status: 0 every check passed, 1 a violation was found, 2 the input is
malformed or a reference does not resolve, 3 an enumeration cap was hit.
"""
from __future__ import annotations

import argparse
import json
import sys

from .declare import dump_sections
from .distlaw import Caps
from .report import Report, fmt_id
from .runner import (
    RunReport,
    run_check,
    run_lift,
    run_linear_demo,
    run_roundtrip,
    run_unlift,
)

STATUS_WORDS = {0: "pass", 1: "violation", 2: "malformed input", 3: "cap exceeded"}


def _caps(text: str) -> Caps:
    try:
        return Caps.parse(text)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--caps", type=_caps, default=Caps(),
                        help="enumeration caps, e.g. index=16,hom=8,em=32")
    common.add_argument("--format", choices=("text", "machine"), default="text",
                        help="human-readable text or JSON")
    common.add_argument("--witnesses", choices=("on", "off"), default="on",
                        help="include counterexample data in violations")
    common.add_argument("--timing", action="store_true",
                        help="report wall-clock time (makes output non-reproducible)")

    p = argparse.ArgumentParser(prog="liftlaw", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check", parents=[common], help="check one declared object and what it depends on")
    c.add_argument("file")
    c.add_argument("target")
    c = sub.add_parser("lift", parents=[common], help="build the lifted action of a declared law")
    c.add_argument("file")
    c.add_argument("law")
    c = sub.add_parser("unlift", parents=[common], help="enumerate strict lifts and print the laws they give")
    c.add_argument("file")
    c.add_argument("action")
    c.add_argument("monad")
    c = sub.add_parser("roundtrip", parents=[common], help="compare laws and strict lifts by both constructions")
    c.add_argument("file")
    c.add_argument("action")
    c.add_argument("monad")
    sub.add_parser("linear-demo", parents=[common], help="run the F3 sign-action instance end to end")
    return p


def _violation_text(v, witnesses: bool) -> str:
    if witnesses and v.witness:
        wit = ", ".join(f"{k}={fmt_id(x)}" for k, x in v.witness)
        return f"[{v.check}] {v.message} ({wit})"
    return f"[{v.check}] {v.message}"


def _report_text(rep: Report, witnesses: bool) -> list[str]:
    head = f"{rep.subject or 'report'}: {'PASS' if rep.ok else 'FAIL'}"
    return [head] + [f"  {_violation_text(v, witnesses)}" for v in rep.violations]


def render_text(run: RunReport, witnesses: bool, timing: bool) -> str:
    out = [f"{run.command} {run.target}".rstrip()]
    for rep in run.reports:
        out += _report_text(rep, witnesses)
    for key, val in run.counts.items():
        out.append(f"{key}: {val}")
    out += run.lines
    if run.error:
        out.append(f"error: {run.error}")
    if timing:
        out.append(f"elapsed: {run.elapsed:.3f}s")
    out.append(f"status: {run.status} ({STATUS_WORDS[run.status]})")
    fragment = run.data.get("fragment")
    if fragment is None:
        return "\n".join(out) + "\n"
    # lift/unlift print a declaration fragment; the summary becomes YAML comments
    return "".join(f"# {line}\n" for line in out) + (dump_sections(fragment) if fragment else "")


def render_machine(run: RunReport, witnesses: bool, timing: bool) -> str:
    def vdict(v):
        d = v.as_dict()
        if not witnesses:
            d.pop("witness")
        return d

    doc = {
        "command": run.command,
        "target": run.target,
        "status": run.status,
        "ok": run.ok,
        "error": run.error,
        "reports": [{"subject": r.subject, "ok": r.ok, "violations": [vdict(v) for v in r.violations]}
                    for r in run.reports],
        "counts": run.counts,
        "lines": run.lines,
    }
    if "fragment" in run.data:
        doc["fragment"] = run.data["fragment"]
    if timing:
        doc["elapsed"] = run.elapsed
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"


def execute(args: argparse.Namespace) -> RunReport:
    if args.command == "check":
        return run_check(args.file, args.target)
    if args.command == "lift":
        return run_lift(args.file, args.law, args.caps)
    if args.command == "unlift":
        return run_unlift(args.file, args.action, args.monad, args.caps)
    if args.command == "roundtrip":
        return run_roundtrip(args.file, args.action, args.monad, args.caps)
    return run_linear_demo()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    run = execute(args)
    witnesses = args.witnesses == "on"
    render = render_machine if args.format == "machine" else render_text
    sys.stdout.write(render(run, witnesses, args.timing))
    return run.status


if __name__ == "__main__":
    sys.exit(main())
