"""
Checking the characterizations over a catalog
=============================================

Every statement becomes a verdict with a group side (lhs) and a graph side
(rhs).  A sweep runs them over the shipped catalog.
"""

import json

from powergraphs.theorems import check_group, load_catalog, sweep

# One group, two statements.
for v in check_group("elementary_abelian 2 3", ["thm1", "thm2"]):
    print(v.statement_id, v.lhs, v.rhs, v.holds)

# Q_8 fails both sides of the first characterization; the failing edge is kept as evidence.
[q8] = check_group("quaternion 8", ["thm1"])
print(json.dumps(q8.to_dict(), indent=2))

# The fast catalog skips the 125-element Heisenberg group.
catalog = load_catalog("default")
report = sweep(catalog, fast=True)
print(f"{len(report.verdicts)} verdicts, {len(report.failures)} failures")
for sid, row in report.summary().items():
    print(f"{sid:22s} holds={row['holds']:2d} n/a={row['notApplicable']:2d}")
