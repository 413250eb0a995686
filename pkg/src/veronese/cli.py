"""Command-line front end.

Exit codes: 0 success, 1 verdict mismatch, 2 invalid input, 3 refused by
the cost guard (rerun with --force).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import graded_algebra as ga
from . import resolutions as res
from .graded_algebra import AlgebraError, GradedAlgebra
from .rational_curve import check_example
from .secant_ideals import secant
from .selftest import ALL_SUITES, DEFAULT_SEED, run_selftest

log = logging.getLogger("veronese")

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_COST = 0, 1, 2, 3
DEFAULT_MAX_ROWS = 250_000


class UsageError(Exception):
    """Invalid input; maps to exit code 2."""


class CostRefused(Exception):
    """Estimated elimination too large; maps to exit code 3."""


@dataclass
class RunConfig:
    command: str
    ring: GradedAlgebra | None = None
    r: list[int] | None = None
    d: list[int] | None = None
    i: int | None = None
    i_max: int | None = None
    t_max: int | None = None
    fmt: str = "table"
    out: str | None = None
    seed: int = DEFAULT_SEED
    jobs: int = 1
    force: bool = False
    max_rows: int = DEFAULT_MAX_ROWS
    suites: list[str] | None = None


# ---------------------------------------------------------------------------
# argument parsing


def parse_ring(text: str) -> GradedAlgebra:
    """A ring description given inline (JSON) or as a path to a JSON file."""
    src = text.strip()
    if not src.startswith("{"):
        path = Path(text)
        if not path.is_file():
            raise UsageError(f"ring file not found: {text}")
        src = path.read_text()
    try:
        desc = json.loads(src)
    except json.JSONDecodeError as exc:
        raise UsageError(f"ring description is not valid JSON: {exc}") from exc
    try:
        return ga.from_description(desc)
    except AlgebraError as exc:
        raise UsageError(str(exc)) from exc


def parse_range(text: str, what: str) -> list[int]:
    """``5`` or ``2..6`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
            if lo > hi:
                raise UsageError(f"empty {what} range {text}")
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError as exc:
        raise UsageError(f"bad {what} value {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="veronese", description="Veronese category, secant ideals and Betti numbers.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, *, ring=True):
        if ring:
            sp.add_argument("--ring", required=True, help="ring file or inline JSON description")
        sp.add_argument("--format", dest="fmt", choices=("table", "csv", "json"), default="table")
        sp.add_argument("--out", help="write output here instead of stdout")

    def sizes(sp):
        sp.add_argument("--r", required=True, help="secant order, or a range a..b")
        sp.add_argument("--d", help="Veronese degree")
        sp.add_argument("--d-range", dest="d_range", help="degrees a..b")
        sp.add_argument("--jobs", type=int, default=1, help="worker threads")
        sp.add_argument("--force", action="store_true", help="skip the cost guard")
        sp.add_argument("--max-rows", dest="max_rows", type=int, default=DEFAULT_MAX_ROWS)

    sp = sub.add_parser("secant-dims", help="ideal dimensions per (r, d, m)")
    common(sp)
    sizes(sp)
    sp.add_argument("--tmax", type=int, required=True, help="largest width m")

    sp = sub.add_parser("betti", help="graded Betti table of Sec_{d,r}")
    common(sp)
    sizes(sp)
    sp.add_argument("--imax", type=int, required=True)
    sp.add_argument("--tmax", type=int, required=True)

    sp = sub.add_parser("scan-bounds", help="max Tor degree across d")
    common(sp)
    sizes(sp)
    sp.add_argument("--i", type=int, help="homological index (defaults to --imax)")
    sp.add_argument("--imax", type=int)
    sp.add_argument("--tmax", type=int, required=True)

    sp = sub.add_parser("check-example", help="reproduce the rational normal curve example")
    common(sp, ring=False)

    sp = sub.add_parser("selftest", help="seeded property suites")
    common(sp, ring=False)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--suites", help=f"comma list from {','.join(ALL_SUITES)}")
    return p


def make_config(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command, fmt=ns.fmt, out=ns.out)
    if ns.command in ("check-example",):
        return cfg
    if ns.command == "selftest":
        cfg.seed = ns.seed
        if ns.suites:
            names = [s.strip() for s in ns.suites.split(",") if s.strip()]
            unknown = [s for s in names if s not in ALL_SUITES]
            if unknown:
                raise UsageError(f"unknown suites: {', '.join(unknown)}")
            cfg.suites = names
        return cfg
    cfg.ring = parse_ring(ns.ring)
    cfg.r = parse_range(ns.r, "r")
    if min(cfg.r) < 1:
        raise UsageError("r must be at least 1")
    if ns.d is not None and ns.d_range is not None:
        raise UsageError("give --d or --d-range, not both")
    if ns.d is None and ns.d_range is None:
        raise UsageError("--d or --d-range is required")
    cfg.d = parse_range(ns.d if ns.d is not None else ns.d_range, "d")
    if min(cfg.d) < 0:
        raise UsageError("d must be nonnegative")
    cfg.t_max = ns.tmax
    if cfg.t_max < 0:
        raise UsageError("--tmax must be nonnegative")
    cfg.jobs = max(1, ns.jobs)
    cfg.force = ns.force
    cfg.max_rows = ns.max_rows
    if ns.command == "betti":
        cfg.i_max = ns.imax
        if cfg.i_max < 0:
            raise UsageError("--imax must be nonnegative")
    if ns.command == "scan-bounds":
        cfg.i = ns.i if ns.i is not None else ns.imax
        if cfg.i is None or cfg.i < 0:
            raise UsageError("scan-bounds needs --i (or --imax) >= 0")
        cfg.i_max = cfg.i
    if ns.command in ("betti", "scan-bounds") and len(cfg.r) != 1:
        raise UsageError(f"{ns.command} takes a single r")
    if ns.command == "betti" and len(cfg.d) != 1:
        raise UsageError("betti takes a single d; use scan-bounds for ranges")
    return cfg


# ---------------------------------------------------------------------------
# cost guard


def guard(cfg: RunConfig, rows: int) -> None:
    if rows > cfg.max_rows and not cfg.force:
        raise CostRefused(
            f"estimated elimination of {rows} rows exceeds the cap of {cfg.max_rows}; "
            "lower the ranges or pass --force"
        )


def secant_rows(B: GradedAlgebra, d: int, t_max: int) -> int:
    return ga.sym_dim(B.dim(d), t_max)


# ---------------------------------------------------------------------------
# commands


def cmd_secant_dims(cfg: RunConfig) -> tuple[int, str]:
    B = cfg.ring
    for d in cfg.d:
        guard(cfg, secant_rows(B, d, cfg.t_max))
    rows = []
    for r in cfg.r:
        for d in cfg.d:
            for m in range(cfg.t_max + 1):
                piece = secant(B, r, d, m)
                rows.append({"r": r, "d": d, "m": m, "sym_dim": piece.ambient_dim,
                             "ideal_dim": piece.dim, "quotient_dim": piece.codim})
    if cfg.fmt == "json":
        return EXIT_OK, json.dumps({"command": "secant-dims", "ring": B.description(), "rows": rows}, indent=2)
    if cfg.fmt == "csv":
        return EXIT_OK, _csv(rows)
    head = f"{'r':>3} {'d':>3} {'m':>3} {'sym':>10} {'ideal':>10} {'quotient':>10}"
    body = [f"{x['r']:>3} {x['d']:>3} {x['m']:>3} {x['sym_dim']:>10} {x['ideal_dim']:>10} {x['quotient_dim']:>10}"
            for x in rows]
    return EXIT_OK, "\n".join([f"secant ideal dimensions for {B}", head, *body])


def cmd_betti(cfg: RunConfig) -> tuple[int, str]:
    B = cfg.ring
    (r,), (d,) = cfg.r, cfg.d
    guard(cfg, res.estimated_rows(B, d, cfg.i_max, cfg.t_max))
    kc = res.complex_for(B, r, d)
    cells = [(i, t) for i in range(cfg.i_max + 1) for t in range(i, cfg.t_max + 1)]
    with ThreadPoolExecutor(cfg.jobs) as pool:
        values = list(pool.map(lambda c: kc.betti(*c), cells))
    table = res.BettiTable(str(B), d, r, cfg.i_max, cfg.t_max, dict(zip(cells, values)))
    if cfg.fmt == "csv":
        return EXIT_OK, table.to_csv()
    if cfg.fmt == "json":
        doc = {"command": "betti", **table.to_dict(), "ring": B.description()}
        return EXIT_OK, json.dumps(doc, indent=2)
    return EXIT_OK, table.render()


def cmd_scan_bounds(cfg: RunConfig) -> tuple[int, str]:
    B = cfg.ring
    (r,) = cfg.r
    for d in cfg.d:
        guard(cfg, res.estimated_rows(B, d, cfg.i, cfg.t_max))
    with ThreadPoolExecutor(cfg.jobs) as pool:
        report = res.bound_scan(B, r, cfg.i, cfg.d, cfg.t_max, mapper=pool.map)
    if cfg.fmt == "json":
        doc = report.to_dict()
        doc["ring"] = B.description()
        return EXIT_OK, json.dumps(doc, indent=2)
    if cfg.fmt == "csv":
        return EXIT_OK, _csv([{"d": p["d"], "max_degree": "" if p["max_degree"] is None else p["max_degree"]}
                              for p in report.per_d])
    lines = [f"max Tor_{cfg.i} degree of Sec_{{d,{r}}}({B}), t <= {cfg.t_max}"]
    for p in report.per_d:
        deg = "vanishes" if p["max_degree"] is None else p["max_degree"]
        lines.append(f"  d={p['d']:<3} {deg}")
    lines.append(f"constant: {report.constant_value}" if report.constant else "constant: no")
    return EXIT_OK, "\n".join(lines)


def cmd_check_example(cfg: RunConfig) -> tuple[int, str]:
    report = check_example()
    if cfg.fmt == "json":
        doc = {"command": "check-example", "ok": report.ok,
               "verdicts": [{"label": v.label, "expected": v.expected, "observed": v.observed}
                            for v in report.verdicts]}
        text = json.dumps(doc, indent=2)
    else:
        text = "\n".join(report.lines())
    if not report.ok:
        bad = [f"offending vector for {v.label}: {v.vector!r} {dict(v.vector.terms) if v.vector else ''}"
               for v in report.verdicts if not v.ok]
        text += "\n" + "\n".join(bad)
    return (EXIT_OK if report.ok else EXIT_MISMATCH), text


def cmd_selftest(cfg: RunConfig) -> tuple[int, str]:
    report = run_selftest(cfg.seed, cfg.suites)
    text = json.dumps(report.to_dict(), indent=2) if cfg.fmt == "json" else report.render()
    return (EXIT_OK if report.ok else EXIT_MISMATCH), text


COMMANDS = {
    "secant-dims": cmd_secant_dims,
    "betti": cmd_betti,
    "scan-bounds": cmd_scan_bounds,
    "check-example": cmd_check_example,
    "selftest": cmd_selftest,
}


def _csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if rows:
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    return buf.getvalue()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage, 0 on --help
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(message)s")
    try:
        cfg = make_config(ns)
        code, text = COMMANDS[cfg.command](cfg)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CostRefused as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_COST
    if not text.endswith("\n"):
        text += "\n"
    if cfg.out:
        Path(cfg.out).write_text(text)
        log.info("wrote %s", cfg.out)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
