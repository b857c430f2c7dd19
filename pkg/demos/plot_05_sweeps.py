"""
Running verification sweeps from Python
=======================================

The same suites the command line exposes, driven directly.  Reports are
plain dicts and serialize to byte-identical JSON for a given configuration.
"""

from qdyson.ctharness import SweepConfig, run_suite
from qdyson.ctharness.runner import report_json, report_text

cfg = SweepConfig.for_suite("kadell", n_max=2, a_max=2, lambda_size_max=2)
report = run_suite(cfg)
print(report_text(report).splitlines()[-1])

# the parallel run assembles results in the same order
same = report_json(report) == report_json(run_suite(cfg, jobs=2))
print("parallel report identical:", same)

# every suite at small bounds
for suite in ("qdyson", "thm1", "lemma31", "lemma32", "prop41", "recursion", "cai", "section5"):
    s = run_suite(SweepConfig.for_suite(suite, n_max=2, a_max=1, lambda_size_max=2))["summary"]
    print("%-10s %4d cases  pass=%s" % (suite, s["total"], s["pass"]))
