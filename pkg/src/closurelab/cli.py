"""Command line front end: ``closure-lab run`` and ``closure-lab paper-examples``."""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .corpus import build_corpus, property_suite
from .dsl import ParseError, parse_script
from .errors import ClosureLabError, UnstabilizedError
from .runner import FORMAT_VERSION, RunConfig, RunResult, run_script

EXIT_OK, EXIT_ASSERT, EXIT_ENGINE, EXIT_PARSE = 0, 1, 2, 3

GOLDEN_SCRIPTS = (
    ("toric_order_dependence.cca", "iterated saturation depends on order in R4"),
    ("mixed_dimension_family.cca", "R2: closed ideal with e = 1 < colength 3"),
    ("lim_equals_m.cca", "R3: limit closure is m, e = 2"),
)


def bundled_script(name: str) -> str:
    return resources.files("closurelab").joinpath("scripts", name).read_text(encoding="utf-8")


def run_file(path: str, cfg: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        with open(path, encoding="utf-8") as fh:
            source = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ENGINE
    try:
        script = parse_script(source)
    except ParseError as exc:
        print(f"{path}:{exc}", file=err)
        return EXIT_PARSE
    result = run_script(script, cfg)
    out.write(result.to_json() if cfg.output == "json" else result.to_text())
    if result.error:
        print(f"{path}:{result.error}", file=err)
    return result.exit_code


def _script_row(name: str, about: str, result: RunResult) -> dict:
    asserts = [r for r in result.reports if r["kind"] == "assert"]
    passed = sum(r["verdict"] == "holds" for r in asserts)
    if result.exit_code == EXIT_ENGINE:
        status = "unstabilized" if any(r["quantities"].get("status") == "unstabilized"
                                       for r in result.reports) else "error"
    else:
        status = "pass" if result.exit_code == EXIT_OK else "fail"
    row = {"suite": name, "about": about, "assertions": len(asserts), "passed": passed, "status": status}
    diffs = [{"location": r["location"], "statement": r["statement"],
              "expected": r["quantities"].get("expected"), "computed": r["quantities"].get("computed")}
             for r in asserts if r["verdict"] != "holds"]
    if diffs:
        row["diffs"] = diffs
    if result.error:
        row["error"] = result.error
    return row


def paper_examples(cfg: RunConfig, out=None) -> int:
    """Run the bundled golden scripts and the corpus property suite; print a summary table.

    Exit 0 iff everything passes; 2 if an engine error (for instance an
    unstabilised chain) stopped a suite, 1 for mismatches.
    """
    out = out or sys.stdout
    cfg = RunConfig(**{**cfg.to_dict(), "policy": "collect"})
    rows, reports = [], []
    for name, about in GOLDEN_SCRIPTS:
        result = run_script(parse_script(bundled_script(name)), cfg)
        rows.append(_script_row(name, about, result))
        reports.extend({"script": name, **r} for r in result.reports)

    properties: list = []
    prop_row = {"suite": "corpus properties", "about": "closure and multiplicity properties over the corpus"}
    try:
        checks = property_suite(build_corpus(cfg.base_field, m_power=1), cfg.max_n, cfg.window)
    except ClosureLabError as exc:
        prop_row.update(assertions=len(properties), passed=0,
                        status="unstabilized" if isinstance(exc, UnstabilizedError) else "error",
                        error=str(exc))
    else:
        properties = [{"ring": c.ring, "property": c.prop, "subject": c.subject, "ok": c.ok,
                       "detail": json.loads(json.dumps(c.detail, default=str))} for c in checks]
        bad = [p for p in properties if not p["ok"]]
        prop_row.update(assertions=len(properties), passed=len(properties) - len(bad),
                        status="pass" if not bad else "fail")
        if bad:
            prop_row["diffs"] = bad
    rows.append(prop_row)

    statuses = {r["status"] for r in rows}
    code = EXIT_OK if statuses == {"pass"} else (EXIT_ENGINE if statuses & {"error", "unstabilized"}
                                                 else EXIT_ASSERT)
    if cfg.output == "json":
        doc = {"version": FORMAT_VERSION, "seed": cfg.seed, "config": cfg.to_dict(), "reports": reports,
               "suites": rows, "properties": properties, "exit_code": code}
        out.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(_table(rows))
        for r in rows:
            for d in r.get("diffs", []):
                out.write(f"  {r['suite']}: {json.dumps(d, ensure_ascii=False)}\n")
            if "error" in r:
                out.write(f"  {r['suite']}: {r['error']}\n")
        out.write("all suites pass\n" if code == EXIT_OK else f"FAILED (exit {code})\n")
    return code


def _table(rows: list) -> str:
    header = ("suite", "checks", "passed", "status")
    body = [(r["suite"], str(r["assertions"]), str(r["passed"]), r["status"]) for r in rows]
    widths = [max(len(x[i]) for x in [header] + body) for i in range(4)]
    line = lambda cells: "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip() + "\n"
    return line(header) + line(tuple("-" * w for w in widths)) + "".join(line(b) for b in body)


def _config_args(p: argparse.ArgumentParser):
    p.add_argument("--field", choices=("q", "fp"), default="q", help="coefficient field (default q)")
    p.add_argument("--prime", type=int, default=65537, help="characteristic for --field fp")
    p.add_argument("--seed", type=int, default=0, help="seed for random reductions")
    p.add_argument("--window", type=int, default=3, help="stabilisation window")
    p.add_argument("--max-n", type=int, default=None, help="cap for limit-closure and Hilbert-Samuel loops")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="closure-lab", description="Colength, multiplicity and closure checks.")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="execute a .cca script")
    run.add_argument("file")
    run.add_argument("--collect", action="store_true", help="keep going after a failed assertion")
    _config_args(run)
    ex = sub.add_parser("paper-examples", help="run the bundled golden scripts and corpus properties")
    _config_args(ex)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(field=args.field, prime=args.prime, seed=args.seed, window=args.window,
                        max_n=args.max_n, output="json" if args.json else "text",
                        policy="collect" if getattr(args, "collect", False) else "halt")
    except ClosureLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENGINE
    if args.command == "run":
        return run_file(args.file, cfg)
    return paper_examples(cfg)


if __name__ == "__main__":
    sys.exit(main())
