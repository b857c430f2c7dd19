"""Sweep execution and report assembly."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List

from .. import __version__
from .config import SweepConfig
from .suites import enumerate_cases, run_case


def _timed(case: Dict) -> Dict:
    t0 = time.perf_counter()
    rec = run_case(case)
    rec["wall_time"] = round(time.perf_counter() - t0, 6)
    return rec


def run_suite(cfg: SweepConfig, jobs: int = None, timings: bool = False) -> Dict:
    """Run every case of ``cfg.suite`` and return the report document.

    Results are assembled in enumeration order whatever ``jobs`` is, so the
    report only depends on ``cfg`` (unless ``timings`` adds wall times).
    """
    jobs = cfg.parallelism if jobs is None else jobs
    cases = enumerate_cases(cfg)
    fn = _timed if timings else run_case
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records: List[Dict] = list(pool.map(fn, cases, chunksize=max(1, len(cases) // (8 * jobs))))
    else:
        records = [fn(c) for c in cases]
    for i, rec in enumerate(records):
        rec["id"] = i
    failed = sum(1 for r in records if not r["pass"])
    return {
        "tool": "qdyson",
        "version": __version__,
        "suite": cfg.suite,
        "config": cfg.as_dict(),
        "cases": records,
        "summary": {
            "total": len(records),
            "passed": len(records) - failed,
            "failed": failed,
            "pass": failed == 0,
        },
    }


def report_json(report: Dict) -> str:
    return json.dumps(report, sort_keys=True, indent=1) + "\n"


def report_text(report: Dict) -> str:
    lines = [f"suite {report['suite']}  config {json.dumps(report['config'], sort_keys=True)}"]
    for rec in report["cases"]:
        inputs = " ".join(f"{k}={_fmt(v)}" for k, v in rec["inputs"].items())
        lines.append(f"{'PASS' if rec['pass'] else 'FAIL'}  {rec['check']:<18} {inputs}")
    s = report["summary"]
    lines.append(f"{s['passed']}/{s['total']} passed, {s['failed']} failed")
    return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if isinstance(v, list):
        return "(" + ",".join(map(str, v)) + ")"
    return str(v)
