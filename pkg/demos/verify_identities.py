"""
Checking identities among structure constants
=============================================

Each suite returns reports that keep every counterexample.  The same runner
backs ``eqrimhook verify``.
"""

from eqrimhook.identities import SUITES, format_table, run_suite

reports = []
for name in SUITES:
    reports.extend(run_suite(name, 2, 4))
print(format_table(reports))

# larger cases are sampled
print()
print(format_table(run_suite("recursion", 2, 5, sample=100, seed=1)))
