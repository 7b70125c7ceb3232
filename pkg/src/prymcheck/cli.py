"""prymcheck <subcommand> [--json] [--seed N] [--out PATH]"""

import argparse
import json
import sys

from . import __version__, modular
from .checks import AMBIGUITY, FAIL, PASS, SUITES, run_suite

SUBCOMMANDS = list(SUITES) + ["all"]


def build_parser():
    parser = argparse.ArgumentParser(
        prog="prymcheck",
        description="Run exact verification suites for the degree-7 cyclic Prym map in genus 2.",
    )
    parser.add_argument("subcommand", choices=SUBCOMMANDS)
    parser.add_argument("--json", action="store_true", help="emit one JSON document")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    parser.add_argument("--out", help="write the report to this file instead of stdout")
    return parser


def run(subcommand, seed=0):
    names = list(SUITES) if subcommand == "all" else [subcommand]
    checks = [c for name in names for c in run_suite(name, seed)]
    ids = [c.id for c in checks]
    assert len(ids) == len(set(ids)), "check ids must be unique"
    summary = {
        "total": len(checks),
        "passed": sum(c.status == PASS for c in checks),
        "failed": sum(c.status == FAIL for c in checks),
        "ambiguities": sum(c.status == AMBIGUITY for c in checks),
        "seed": seed,
    }
    if "modular" in names:
        summary["total_degree"] = modular.total_degree()
    return {"version": __version__, "checks": [c.to_dict() for c in checks], "summary": summary}


def render_text(report):
    tags = {PASS: "PASS", FAIL: "FAIL", AMBIGUITY: "NOTE"}
    lines = []
    for c in report["checks"]:
        first, *rest = c["details"].splitlines() or [""]
        lines.append(f"[{tags[c['status']]}] {c['paper_anchor']} :: {c['id']}: {first}")
        lines.extend("        " + r for r in rest)
    s = report["summary"]
    tail = f"{s['passed']} passed, {s['failed']} failed, {s['ambiguities']} reported ambiguities"
    if "total_degree" in s:
        tail += f"; total degree {s['total_degree']}"
    lines.append(tail)
    return "\n".join(lines) + "\n"


def main(argv=None):
    args = build_parser().parse_args(argv)
    report = run(args.subcommand, args.seed)
    text = json.dumps(report, indent=2) + "\n" if args.json else render_text(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if report["summary"]["failed"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
