"""Command line entry point: ``matchcover <command> ...``.

Exit codes: 0 when the command completed and its property holds, 1 when it
completed and the property is falsified, 2 on bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import recipe as R
from .barriers import DEFAULT_CEILING, TooLarge, all_barriers, is_bicritical
from .canon import digest
from .families import DEFAULT_SAMPLES, EXHAUSTIVE_THRESHOLD, FAMILIES, generate_family
from .graph import GraphError, MultiGraph, find_claw
from .matching import has_perfect_matching, inadmissible_edge, is_matching_covered, removable_edges
from .mgio import MGFormatError, format_mg, read_mg
from .recognize import recognize, verify_thm13
from .tightcut import SCAN_THRESHOLD, decompose

SCHEMA = "matchcover.report/1"
EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load(path: str) -> MultiGraph:
    try:
        return read_mg(path)
    except FileNotFoundError:
        raise UsageError(f"{path}: no such file") from None
    except (MGFormatError, GraphError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _analyze(g: MultiGraph, opts) -> tuple[dict, int]:
    f: dict = {"n": g.n, "m": g.m, "simple": g.is_simple(), "connected": g.is_connected()}
    claw = find_claw(g)
    f["claw_free"] = claw is None
    if claw is not None:
        f["claw"] = list(claw)
    pm = has_perfect_matching(g)
    f["perfect_matching"] = pm
    mc = is_matching_covered(g)
    f["matching_covered"] = mc
    if pm and not mc:
        e = inadmissible_edge(g)
        if e is not None:
            f["witness"] = {"inadmissible_edge": e, "ends": list(g.edges[e])}
    if pm and g.n >= 4:
        f["bicritical"] = is_bicritical(g)
    if mc:
        re = removable_edges(g)
        f["removable"] = len(re)
        f["removable_edges"] = re
    if pm and opts.max_barrier_size > 0:
        try:
            bars = all_barriers(g, opts.max_barrier_size, ceiling=DEFAULT_CEILING)
        except TooLarge as exc:
            f["barriers"] = f"skipped: {exc}"
        else:
            f["barriers"] = [list(b.vertices) for b in bars]
    return f, EXIT_OK


def _decompose(g: MultiGraph, opts) -> tuple[dict, int]:
    if not is_matching_covered(g):
        raise UsageError("decompose needs a matching covered graph")
    tree = decompose(g, seed=opts.seed, scan_threshold=opts.scan_threshold)
    f = tree.to_dict()
    f["text"] = tree.to_text()
    return f, EXIT_OK


def _recognize(g: MultiGraph, opts) -> tuple[dict, int]:
    res = recognize(g)
    f = res.to_dict()
    if res.is_minimal and res.certificate is None and res.verdict != "minimal_special":
        f["certificate_missing"] = True
    return f, EXIT_OK if res.is_minimal else EXIT_FALSE


def _verify(g: MultiGraph, opts) -> tuple[dict, int]:
    try:
        rep = verify_thm13(g)
    except GraphError as exc:
        raise UsageError(f"precondition failed: {exc}") from None
    return rep.to_dict(), EXIT_OK if rep.holds else EXIT_FALSE


COMMANDS = {
    "analyze": _analyze,
    "decompose": _decompose,
    "recognize": _recognize,
    "verify-thm13": _verify,
}


def _run_one(command: str, path: str, opts) -> dict:
    report = {"schema": SCHEMA, "command": command, "input": path}
    try:
        g = _load(path)
        report["digest"] = digest(g)
        findings, code = COMMANDS[command](g, opts)
    except UsageError as exc:
        report["error"] = str(exc)
        report["exit_code"] = EXIT_USAGE
        return report
    report["findings"] = findings
    report["exit_code"] = code
    return report


def _text(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_text(report: dict) -> str:
    lines = [f"# {report['command']} {report['input']}"]
    for key in ("digest", "seed", "error"):
        if key in report:
            lines.append(f"{key}={_text(report[key])}")
    findings = dict(report.get("findings", {}))
    tree_text = findings.pop("text", None)
    findings.pop("root", None)
    for key in sorted(findings):
        lines.append(f"{key}={_text(findings[key])}")
    if tree_text:
        lines.append(tree_text)
    lines.append(f"exit_code={report['exit_code']}")
    return "\n".join(lines) + "\n"


def _emit(reports: list[dict], as_json: bool, out) -> None:
    if as_json:
        doc = reports[0] if len(reports) == 1 else {"schema": SCHEMA, "reports": reports}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write("".join(render_text(r) for r in reports))


def _file_command(command: str, opts, out) -> int:
    if opts.jobs > 1 and len(opts.paths) > 1:
        with ProcessPoolExecutor(max_workers=opts.jobs) as pool:
            reports = list(pool.map(_run_one, [command] * len(opts.paths), opts.paths, [opts] * len(opts.paths)))
    else:
        reports = [_run_one(command, p, opts) for p in opts.paths]
    if command == "decompose":
        for r in reports:
            r["seed"] = opts.seed
    _emit(reports, opts.json, out)
    return max(r["exit_code"] for r in reports)


def _generate(opts, out) -> int:
    outdir = Path(opts.out)
    outdir.mkdir(parents=True, exist_ok=True)
    index = []
    for i, m in enumerate(
        generate_family(
            opts.family,
            opts.max_n,
            seed=opts.seed,
            exhaustive_threshold=opts.exhaustive_threshold,
            samples=opts.samples,
        )
    ):
        stem = f"{opts.family}_{i:04d}"
        sexpr = R.to_sexpr(m.recipe)
        (outdir / f"{stem}.mg").write_text(format_mg(m.graph, comment=sexpr))
        (outdir / f"{stem}.recipe").write_text(sexpr + "\n")
        index.append({"id": stem, "n": m.n, "m": m.graph.m, "digest": digest(m.graph), "recipe": sexpr})
    doc = {
        "schema": SCHEMA,
        "command": "generate",
        "family": opts.family,
        "max_n": opts.max_n,
        "seed": opts.seed,
        "exhaustive_threshold": opts.exhaustive_threshold,
        "samples": opts.samples,
        "count": len(index),
        "members": index,
    }
    (outdir / "index.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    report = {
        "schema": SCHEMA,
        "command": "generate",
        "input": opts.family,
        "seed": opts.seed,
        "findings": {"count": len(index), "out": str(outdir)},
        "exit_code": EXIT_OK,
    }
    _emit([report], opts.json, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matchcover", description="Matching covered graph toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def file_cmd(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("paths", nargs="+", metavar="FILE.mg")
        sp.add_argument("--json", action="store_true", help="emit a JSON report")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes for several files")
        sp.set_defaults(seed=None, max_barrier_size=2, scan_threshold=SCAN_THRESHOLD)
        return sp

    a = file_cmd("analyze", "basic matching facts about a graph")
    a.add_argument(
        "--max-barrier-size", type=int, default=2, help="list barriers up to this size (0 to skip; default 2)"
    )
    d = file_cmd("decompose", "tight cut decomposition")
    d.add_argument("--seed", type=int, default=None, help="relabel vertices by a seeded permutation first")
    d.add_argument(
        "--scan-threshold",
        type=int,
        default=SCAN_THRESHOLD,
        help=f"exhaustive odd-set scan up to this order (default {SCAN_THRESHOLD})",
    )
    file_cmd("recognize", "claw-free minimal test with a construction certificate")
    file_cmd("verify-thm13", "removable edge count against brick orders (cubic claw-free input)")

    g = sub.add_parser("generate", help="write family members as .mg and recipe files")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("--max-n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--exhaustive-threshold", type=int, default=EXHAUSTIVE_THRESHOLD)
    g.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    g.add_argument("--out", required=True, help="output directory")
    g.add_argument("--json", action="store_true")
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        opts = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if opts.command == "generate":
        if opts.max_n < 4:
            print("matchcover: --max-n must be at least 4", file=sys.stderr)
            return EXIT_USAGE
        return _generate(opts, out)
    return _file_command(opts.command, opts, out)


if __name__ == "__main__":
    sys.exit(main())
