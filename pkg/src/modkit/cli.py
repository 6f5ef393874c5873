"""``modkit`` command line: analyze, verify, generate, product, corpus.

Exit codes: 0 success, 1 parse or validation error, 2 no checker applies,
3 a checker conclusion failed on valid data (CRITICAL).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence

from . import __version__
from .catalog import PRESETS, MetricGroup, deligne_product, metric_group_pointed, preset, standard_corpus
from .errors import ModkitError
from .mdio import dump, load, serialize
from .moddata import ModularData, balancing_check, global_invariants
from .structure import (
    adjoint_subcategory,
    invertibles,
    pointed_subcategory,
    universal_grading,
)
from .theorems import CHECKERS, TheoremReport, run_checkers

EXIT_OK, EXIT_INPUT, EXIT_NOT_APPLICABLE, EXIT_CRITICAL = 0, 1, 2, 3


@dataclass
class RunReport:
    command: str
    input: str
    invariants: Optional[dict] = None
    analysis: dict = field(default_factory=dict)
    theorems: list[TheoremReport] = field(default_factory=list)
    entries: list[dict] = field(default_factory=list)
    error: Optional[str] = None
    exit_status: int = EXIT_OK

    def to_json(self) -> dict:
        out: dict[str, Any] = {
            "tool": "modkit",
            "version": __version__,
            "command": self.command,
            "input": self.input,
            "exit_status": self.exit_status,
        }
        if self.error is not None:
            out["error"] = self.error
        if self.invariants is not None:
            out["global_invariants"] = self.invariants
        if self.analysis:
            out["analysis"] = self.analysis
        if self.theorems:
            out["theorems"] = [t.to_json() for t in self.theorems]
        if self.entries:
            out["entries"] = self.entries
        return out

    def to_text(self) -> str:
        lines = [f"modkit {__version__} {self.command} {self.input}"]
        if self.error is not None:
            lines.append(f"error: {self.error}")
        if self.invariants is not None:
            lines += [f"  {k}: {v}" for k, v in self.invariants.items()]
        for k, v in self.analysis.items():
            lines.append(f"  {k}: {v}")
        for t in self.theorems:
            lines.append(f"  {t.summary()}")
        for e in self.entries:
            verdicts = ", ".join(e.get("theorems", []))
            lines.append(f"  {e['name']} rank={e['rank']} FPdim={e['fpdim']}" + (f" [{verdicts}]" if verdicts else ""))
        lines.append(f"exit status {self.exit_status}")
        return "\n".join(lines)


def _analysis(md: ModularData) -> dict:
    grp = invertibles(md)
    gr = universal_grading(md)
    return {
        "rank": md.rank,
        "labels": list(md.labels),
        "conductor": md.conductor,
        "dual": list(md.dual),
        "invertibles": [md.labels[g] for g in grp.elements],
        "group": list(grp.invariant_factors),
        "grading_components": [[md.labels[i] for i in c] for c in gr.components],
        "adjoint": adjoint_subcategory(md).labels(),
        "pointed": pointed_subcategory(md).labels(),
        "balanced": balancing_check(md),
    }


def _finish(report: RunReport, as_json: bool) -> int:
    if as_json:
        print(json.dumps(report.to_json(), indent=2, sort_keys=False))
    else:
        print(report.to_text())
    return report.exit_status


def cmd_analyze(args) -> int:
    report = RunReport("analyze", str(args.file))
    try:
        md = load(args.file)
        report.invariants = global_invariants(md).to_json()
        report.analysis = _analysis(md)
    except (ModkitError, OSError) as exc:
        report.error, report.exit_status = f"{type(exc).__name__}: {exc}", EXIT_INPUT
    return _finish(report, args.json)


def _theorem_names(spec: str) -> list[str]:
    if spec == "all":
        return list(CHECKERS)
    names = [s.strip() for s in spec.split(",") if s.strip()]
    bad = [n for n in names if n not in CHECKERS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown theorem(s) {', '.join(bad)}; choose from {', '.join(CHECKERS)}")
    return names


def cmd_verify(args) -> int:
    report = RunReport("verify", str(args.file))
    try:
        md = load(args.file)
        report.invariants = global_invariants(md).to_json()
        report.theorems = run_checkers(md, args.theorems)
    except (ModkitError, OSError) as exc:
        report.error, report.exit_status = f"{type(exc).__name__}: {exc}", EXIT_INPUT
        return _finish(report, args.json)
    if any(t.critical for t in report.theorems):
        report.exit_status = EXIT_CRITICAL
    elif not report.theorems:
        report.exit_status = EXIT_NOT_APPLICABLE
    return _finish(report, args.json)


def parse_form(orders: Sequence[int], spec: str) -> MetricGroup:
    """``q_1,...,q_r[;i-j:b;...]``, e.g. ``0,0;0-1:1/2`` for the toric code."""
    head, *pairs = spec.split(";")
    q = [Fraction(x.strip()) for x in head.split(",")]
    b = {}
    for item in pairs:
        ij, val = item.split(":")
        i, j = (int(t) for t in ij.split("-"))
        b[(i, j)] = Fraction(val.strip())
    return MetricGroup(tuple(orders), tuple(q), b)


def _write(md: ModularData, out: Optional[str]) -> None:
    if out:
        dump(md, out)
    else:
        sys.stdout.write(serialize(md))


def cmd_generate(args) -> int:
    try:
        if args.preset:
            md = preset(args.preset)
        elif args.cyclic is not None:
            if args.coeff is None:
                raise ValueError("--cyclic needs --coeff")
            mg = MetricGroup.cyclic(args.cyclic, args.coeff)
            md = metric_group_pointed(mg, name=args.name or f"Z{args.cyclic}[a={args.coeff}]")
        else:
            if args.form is None:
                raise ValueError("--group needs --form")
            orders = [int(x) for x in args.group.split(",")]
            md = metric_group_pointed(parse_form(orders, args.form), name=args.name)
    except (ModkitError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _write(md, args.output)
    return EXIT_OK


def cmd_product(args) -> int:
    try:
        a, b = load(args.file_a), load(args.file_b)
        md = deligne_product(a, b)
    except (ModkitError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _write(md, args.output)
    return EXIT_OK


def _slug(name: str) -> str:
    keep = "".join(c if c.isalnum() else "_" for c in name)
    return "_".join(filter(None, keep.split("_")))


def cmd_corpus(args) -> int:
    report = RunReport("corpus", f"limit={args.limit}")
    corpus = standard_corpus(args.limit)
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for k, md in enumerate(corpus):
            dump(md, out / f"{k:04d}_{_slug(md.name or 'entry')}.md")
    critical = False
    for md in corpus:
        entry = {"name": md.name, "rank": md.rank, "fpdim": str(md.D2)}
        if args.verify:
            reps = run_checkers(md)
            entry["balanced"] = balancing_check(md)
            entry["theorems"] = [r.summary() for r in reps]
            critical |= any(r.critical for r in reps) or not entry["balanced"]
        report.entries.append(entry)
    if critical:
        report.exit_status = EXIT_CRITICAL
    return _finish(report, args.json)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="modkit", description="Exact toolkit for modular data.")
    ap.add_argument("--version", action="version", version=f"modkit {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="validate a file and print its invariants")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run theorem checkers on a file")
    p.add_argument("file")
    p.add_argument("--theorems", type=_theorem_names, default=list(CHECKERS), help="'all' or a comma list")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write pointed or preset modular data")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--cyclic", type=int, metavar="N")
    src.add_argument("--group", metavar="N1,N2,...")
    src.add_argument("--preset", choices=PRESETS)
    p.add_argument("--coeff", type=int, metavar="A")
    p.add_argument("--form", metavar="FORM", help="q values and pair values, e.g. '0,0;0-1:1/2'")
    p.add_argument("--name")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("product", help="Deligne product of two files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("corpus", help="emit or verify the standard corpus")
    p.add_argument("--limit", type=int, default=25, metavar="M")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out-dir")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_corpus)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
