"""Command-line front end: ``adw minimize|dsop|synth|analyze|reproduce``.

Exit codes: 0 clean, 1 findings (or an expected reproduction not met),
2 usage / input error, 3 exploration limit reached before a verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from . import analysis, boolean_core as bc, netlist as nl, synthesis as syn

EXIT_CLEAN, EXIT_FINDINGS, EXIT_ERROR, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text() if path != "-" else sys.stdin.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _uses_rails(text: str) -> bool:
    import re
    return bool(re.search(r"[A-Za-z]\([01]\)|[A-Za-z][01]\b", text))


# ---------------------------------------------------------------- minimize


def cmd_minimize(args) -> int:
    f = bc.parse_function_spec(_read(args.spec))
    on = bc.minimize_cover(f, "on")
    off = bc.minimize_cover(f, "off")
    if args.format == "json":
        print(json.dumps({"on": on.to_text(), "off": off.to_text(),
                          "on_factored": bc.factor_single_kernel(on).to_text(),
                          "off_factored": bc.factor_single_kernel(off).to_text(),
                          "drcl_false_rail": bc.demorgan_dual(on).to_text(rails=True)}, indent=2))
        return EXIT_CLEAN
    factored = bc.dual_rail_encode(f, "onoff", factor=True)
    print(f"ON  cover ({len(on)} terms, {on.literal_count()} literals): {on}")
    print(f"OFF cover ({len(off)} terms, {off.literal_count()} literals): {off}")
    fon = factored.true_rail
    print(f"ON  factored ({fon.literal_count()} literals): {fon}")
    print(f"OFF factored: {factored.false_rail}")
    print("dual-rail (ON/OFF covers):")
    print("  " + factored.to_text(parens=True).replace("\n", "\n  "))
    print("dual-rail (De Morgan false rail):")
    print("  " + bc.dual_rail_encode(f, "drcl").to_text(parens=True).replace("\n", "\n  "))
    return EXIT_CLEAN


# ---------------------------------------------------------------- dsop


def cmd_dsop(args) -> int:
    rails = _uses_rails(args.expr)
    expr = bc.parse_expression(args.expr, rails=rails)
    if args.mode == "check":
        verdict = bc.is_dsop(expr)
        if verdict:
            print("DSOP")
            return EXIT_CLEAN
        a, b = verdict.witness
        print(f"NOT-DSOP: {a.to_text(rails, rails)} and {b.to_text(rails, rails)} overlap "
              f"in {a.conjoin(b).to_text(rails, rails)}")
        return EXIT_FINDINGS
    out = bc.sop_to_dsop(expr)
    print(out.to_text(rails, rails))
    return EXIT_CLEAN


# ---------------------------------------------------------------- synth


def _options(args) -> syn.SynthesisOptions:
    try:
        return syn.SynthesisOptions(args.method, args.cd, args.max_fanin, args.decompose)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_synth(args) -> int:
    opts = _options(args)
    f = bc.parse_function_spec(_read(args.spec))
    n = syn.synthesize(f, opts)
    text = nl.serialize(n)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    counts = ", ".join(f"{k} {v}" for k, v in sorted(n.gate_counts().items()))
    cd = ""
    if n.cd_output:
        cd = f"; completion C-element fan-in {len(n.driver(n.cd_output).inputs)}"
    print(f"# {n.name}: {len(n.gates)} gates ({counts}){cd}", file=sys.stderr)
    return EXIT_CLEAN


# ---------------------------------------------------------------- analyze


def _codewords(spec: str, width: int) -> tuple[int, ...] | None:
    if spec == "all":
        return None
    try:
        words = tuple(int(w, 0) for w in spec.split(","))
    except ValueError:
        raise UsageError(f"--codewords expects 'all' or a comma list of integers, got {spec!r}") from None
    bad = [w for w in words if not 0 <= w < (1 << width)]
    if bad:
        raise UsageError(f"codewords {bad} out of range for {width} inputs")
    return words


def _waves(spec: str | None):
    if not spec:
        return None
    return tuple(tuple(p for p in grp.split(",") if p) for grp in spec.split(";"))


def _checks(spec: str) -> tuple[str, ...]:
    checks = tuple(c.strip() for c in spec.split(",") if c.strip())
    unknown = set(checks) - set(analysis.ALL_CHECKS)
    if unknown:
        raise UsageError(f"unknown checks {sorted(unknown)}; choose from {','.join(analysis.ALL_CHECKS)}")
    return checks


def _emit(report: analysis.AnalysisReport, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.narrative())


def _verdict(report: analysis.AnalysisReport, checks) -> int:
    if report.stats.get("truncated"):
        return EXIT_LIMIT
    bad = report.deadlocks or report.orphans or report.mcc_violations
    if "classify" in checks and report.indication_class == "not_self_timed":
        bad = True
    return EXIT_FINDINGS if bad else EXIT_CLEAN


def cmd_analyze(args) -> int:
    n = nl.parse(_read(args.netlist))
    problems = nl.errors(n)
    if problems:
        raise UsageError("invalid netlist:\n  " + "\n  ".join(map(str, problems)))
    checks = _checks(args.checks)
    env = analysis.EnvSpec(_codewords(args.codewords, len(n.inputs)),
                           _waves(args.valid_waves), _waves(args.rtz_waves))
    limits = analysis.Limits(max_states=args.limit_states) if args.limit_states else analysis.Limits()
    report = analysis.analyze(n, env, limits, checks)
    _emit(report, args.format)
    code = _verdict(report, checks)
    if code == EXIT_LIMIT:
        print(f"exploration stopped: {report.stats['truncated']}", file=sys.stderr)
    return code


# ---------------------------------------------------------------- reproduce


@dataclass(frozen=True)
class Case:
    title: str
    run: Callable[[str], bool]


def _snapshot_text(snapshot: dict[str, int], nets: Sequence[str]) -> str:
    return ", ".join(f"{nl.rail_label(k)}={snapshot[k]}" for k in nets)


def _orphan_case(n: nl.Netlist, env: analysis.EnvSpec, phase: str, want: set[tuple[str, str]]):
    def run(fmt: str) -> bool:
        report = analysis.analyze(n, env, checks=("orphans",))
        _emit(report, fmt)
        got = {(o.kind, o.net) for o in report.orphans if o.phase == phase}
        if fmt == "text":
            found = ", ".join(f"{k} orphan on {nl.rail_label(x)}" for k, x in sorted(got)) or "none"
            print(f"{phase}-phase orphans: {found}")
        return want <= got and all(k != "gate" or (k, x) in want for k, x in got)
    return run


def _deadlock_case(variant: str, want: dict[str, int]):
    def run(fmt: str) -> bool:
        f = syn.fig6_function()
        n = syn.synthesize_method1(f, variant)
        report = analysis.analyze(n, analysis.EnvSpec((13,)), checks=("deadlock",), method="method1")
        _emit(report, fmt)
        hits = [d for d in report.deadlocks if d.phase == "rtz" and d.cd_inputs(n) == want]
        if fmt == "text" and hits:
            d = hits[0]
            print(f"RTZ deadlock: C-element inputs {_snapshot_text(d.snapshot, list(want))}; "
                  f"D stuck at {d.snapshot['D']}")
        return bool(hits) and all(h.snapshot["D"] == 1 for h in hits)
    return run


def _dsop_f(fmt: str) -> bool:
    f = syn.fig6_function()
    true_rail = bc.minimize_cover(f, "on")
    candidates = ["a(0)b(1)c(1) + b(0)c(1) + c(0)d(1)", "a(0)c(1) + a(1)b(0)c(1) + c(0)d(1)"]
    ok = True
    rows = []
    for text in candidates:
        e = bc.parse_expression(text)
        d, eq = bool(bc.is_dsop(e)), bc.equivalent(e, true_rail, f.var_names)
        ok &= d and eq
        rows.append({"expression": text, "dsop": d, "equivalent": eq})
    conv = bc.sop_to_dsop(true_rail)
    d, eq = bool(bc.is_dsop(conv)), bc.equivalent(conv, true_rail, f.var_names)
    ok &= d and eq
    rows.append({"expression": conv.to_text(True, True), "dsop": d, "equivalent": eq, "generated": True})
    if fmt == "json":
        print(json.dumps({"true_rail": true_rail.to_text(True, True), "candidates": rows}, indent=2))
    else:
        print(f"true rail: {true_rail.to_text(True, True)}")
        for r in rows:
            tag = " (converter output)" if r.get("generated") else ""
            print(f"  {r['expression']}{tag}: {'DSOP' if r['dsop'] else 'NOT-DSOP'}, "
                  f"{'equivalent' if r['equivalent'] else 'NOT equivalent'}")
    return ok


def _dsop_kernel(fmt: str) -> bool:
    cases = [("[a(0)+b(0)]c(1)+c(0)d(1)", False), ("c(a+b)+dc'", False),
             ("ab'c+bc+dc'", True), ("ac+a'bc+dc'", True)]
    ok = True
    rows = []
    for text, want in cases:
        rails = _uses_rails(text)
        v = bc.is_dsop(bc.parse_expression(text))
        ok &= bool(v) == want
        wit = [t.to_text(rails, rails) for t in v.witness] if v.witness else None
        rows.append({"expression": text, "dsop": bool(v), "witness": wit})
    if fmt == "json":
        print(json.dumps(rows, indent=2))
    else:
        for r in rows:
            extra = f", overlapping terms {r['witness'][0]} and {r['witness'][1]}" if r["witness"] else ""
            print(f"{r['expression']}: {'DSOP' if r['dsop'] else 'NOT-DSOP'}{extra}")
    return ok


CASES: dict[str, Case] = {
    "fig5-wire": Case("DRCL Z = ab + cd; a(0), c(0) settle before b(0), d(0) arrive",
                      _orphan_case(syn.fig5_netlist(), analysis.EnvSpec.single(0, [["a", "c"], ["b", "d"]]),
                                   "valid", {("wire", "b.0"), ("wire", "d.0")})),
    "fig5-gate": Case("DRCL Z = ab + cd; a(1), b(1) settle before c(1), d(1) arrive",
                      _orphan_case(syn.fig5_netlist(), analysis.EnvSpec.single(15, [["a", "b"], ["c", "d"]]),
                                   "valid", {("gate", "Y.1")})),
    "fig6-or": Case("kernel-factored NAND realization of F with OR completion detection",
                    _deadlock_case("or", {"cd1": 0, "cd2": 0, "cd3": 0, "cd4": 0, "or2": 0, "or1": 1})),
    "fig6-nor": Case("kernel-factored NAND realization of F with NOR completion detection",
                     _deadlock_case("nor", {"cd1": 0, "cd2": 0, "cd3": 0, "cd4": 0, "nor1": 0, "nor2": 1})),
    "fig7": Case("NAND5 split into NAND4 + INV + NAND2; t returns to zero first",
                 _orphan_case(syn.fig7_netlist(), analysis.EnvSpec.single(31, None, [["t"], ["p", "q", "r", "s"]]),
                              "rtz", {("gate", "net2")})),
    "dsop-f": Case("corrected DSOP true rails for F", _dsop_f),
    "dsop-kernel": Case("DSOP verdicts on factored and kernel forms", _dsop_kernel),
}


def cmd_reproduce(args) -> int:
    case = CASES.get(args.case)
    if case is None:
        raise UsageError(f"unknown case {args.case!r}; known: {', '.join(CASES)}")
    if args.format == "text":
        print(f"== {args.case}: {case.title}")
    ok = case.run(args.format)
    if args.format == "text":
        print("expected finding reproduced" if ok else "expected finding NOT reproduced")
    return EXIT_CLEAN if ok else EXIT_FINDINGS


# ---------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="adw", description="Dual-rail asynchronous logic workbench.")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("minimize", help="minimize ON/OFF covers of a function spec")
    m.add_argument("spec")
    m.add_argument("--format", choices=("text", "json"), default="text")
    m.set_defaults(func=cmd_minimize)

    d = sub.add_parser("dsop", help="check or convert disjoint sum-of-products")
    d.add_argument("mode", choices=("check", "convert"))
    d.add_argument("expr")
    d.set_defaults(func=cmd_dsop)

    s = sub.add_parser("synth", help="synthesize a dual-rail netlist")
    s.add_argument("spec")
    s.add_argument("--method", choices=("drcl", "method1", "dsop", "dims"), default="dsop")
    s.add_argument("--cd", choices=("or", "nor", "none"), default="or")
    s.add_argument("--max-fanin", type=int)
    s.add_argument("--decompose", choices=("none", "naive"), default="none")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_synth)

    a = sub.add_parser("analyze", help="explore a netlist under unbounded delays")
    a.add_argument("netlist")
    a.add_argument("--checks", default=",".join(analysis.ALL_CHECKS))
    a.add_argument("--limit-states", type=int)
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.add_argument("--codewords", default="all")
    a.add_argument("--valid-waves", help="input groups for the valid phase, e.g. 'a,c;b,d'")
    a.add_argument("--rtz-waves", help="input groups for the return-to-zero phase")
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("reproduce", help="run a canned reproduction case")
    r.add_argument("case", help=", ".join(CASES))
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.set_defaults(func=cmd_reproduce)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_CLEAN
    try:
        return args.func(args)
    except (UsageError, bc.SpecSyntaxError, nl.NetlistSyntaxError, ValueError) as exc:
        print(f"adw: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
