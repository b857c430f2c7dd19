"""Sweeps, reports and the command line interface."""

from .config import SUITES, SweepConfig, load_config
from .runner import report_json, report_text, run_suite
from .suites import enumerate_cases, run_case

__all__ = [
    "SUITES",
    "SweepConfig",
    "enumerate_cases",
    "load_config",
    "report_json",
    "report_text",
    "run_case",
    "run_suite",
]
