"""Command line front end.

    qcongruence verify theorem1 --n 3 --m 1 --variant a
    qcongruence check conjecture1 --p 7 --r 1
    qcongruence sweep --config suite.json --jobs 4 --out report.json
    qcongruence sweep --preset paper --out paper.json

Exit status: 0 when every theorem-level task holds, 1 otherwise, 2 on
usage or validation errors.  Conjecture and informational outcomes never
change the exit status.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .report import Report
from .tasks import TaskError, paper_preset, run_task, validate

JOBS_ENV = "QCONG_JOBS"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_VERIFY = ("theorem1", "theorem2", "theorem3", "guozu3", "watson", "instance23", "proofchecks")
_CHECK = ("conjecture1", "conjecture2", "conjecture3", "classical")
_INT_FLAGS = ("p", "n", "m", "r", "terms", "base", "a", "b", "c", "d", "e")


class UsageError(Exception):
    pass


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        jobs = int(raw)
    except ValueError:
        raise UsageError(f"{JOBS_ENV} must be an integer, got {raw!r}") from None
    if jobs < 1:
        raise UsageError(f"{JOBS_ENV} must be positive, got {jobs}")
    return jobs


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qcongruence", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--jobs", type=int, default=None,
                       help=f"worker processes (default ${JOBS_ENV} or 1)")
        p.add_argument("--out", default=None, help="write the JSON report here")
        p.add_argument("--quiet", action="store_true", help="no text output")

    for name, choices in (("verify", _VERIFY), ("check", _CHECK)):
        p = sub.add_parser(name)
        p.add_argument("what", choices=choices)
        for flag in _INT_FLAGS:
            p.add_argument(f"--{flag}", type=int)
        p.add_argument("--variant", help="a/b for theorems, 1/2 for the others")
        p.add_argument("--id", help="classical statement id")
        common(p)

    p = sub.add_parser("sweep")
    p.add_argument("--config", help="JSON file with tasks, jobs and outputPath")
    p.add_argument("--preset", choices=("paper",))
    common(p)
    return ap


def _single_task(args) -> tuple[str, dict]:
    params = {k: getattr(args, k) for k in _INT_FLAGS if getattr(args, k) is not None}
    what = args.what
    if what in ("theorem1", "theorem2", "theorem3"):
        if args.variant not in ("a", "b"):
            raise UsageError(f"{what} needs --variant a or b")
        return what + args.variant, params
    if args.variant is not None:
        if args.variant not in ("1", "2"):
            raise UsageError(f"{what} takes --variant 1 or 2")
        params["variant"] = int(args.variant)
    if what == "classical":
        if not args.id:
            raise UsageError("classical needs --id")
        params = {"id": args.id, **params}
    return what, params


def _load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    if not isinstance(cfg, dict) or not isinstance(cfg.get("tasks"), list):
        raise UsageError("config must be an object with a 'tasks' list")
    specs = []
    for i, t in enumerate(cfg["tasks"]):
        if not isinstance(t, dict) or "kind" not in t:
            raise UsageError(f"task {i} needs a 'kind'")
        specs.append((t["kind"], t.get("parameters", t.get("params", {}))))
    cfg["tasks"] = specs
    return cfg


def run_all(specs: Sequence[tuple[str, dict]], jobs: int = 1) -> list[Report]:
    """Run tasks, ``jobs`` at a time; the result order is the input order."""
    if jobs <= 1 or len(specs) <= 1:
        return [run_task(s) for s in specs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_task, specs, chunksize=1))


def render_json(reports: Sequence[Report]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2) + "\n"


def parse_and_run(argv: Sequence[str] | None = None) -> int:
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        jobs = args.jobs if args.jobs is not None else None
        out = args.out
        if args.command == "sweep":
            if bool(args.config) == bool(args.preset):
                raise UsageError("sweep needs exactly one of --config or --preset")
            if args.preset:
                specs = paper_preset()
            else:
                cfg = _load_config(args.config)
                specs = cfg["tasks"]
                if jobs is None and "jobs" in cfg:
                    jobs = cfg["jobs"]
                if out is None:
                    out = cfg.get("outputPath")
        else:
            specs = [_single_task(args)]
        if jobs is None:
            jobs = _default_jobs()
        if not isinstance(jobs, int) or jobs < 1:
            raise UsageError(f"jobs must be a positive integer, got {jobs!r}")
        for kind, params in specs:
            validate(kind, params)
    except (UsageError, TaskError) as exc:
        print(f"qcongruence: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    reports = run_all(specs, jobs)
    if not args.quiet:
        for r in reports:
            print(r.line())
    if out:
        with open(out, "w") as fh:
            fh.write(render_json(reports))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def main() -> None:
    sys.exit(parse_and_run())
