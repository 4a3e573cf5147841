"""Re-check every published number in the bundled registry.

A claim whose printed value disagrees with the computation but which is known
to carry a typo is reported as paper-inconsistent rather than failed.
"""
from zetamap import Status, builtin_registry, run_claims

report = run_claims(builtin_registry())
print(report.to_text())

for c in report.claims:
    if c.status is not Status.PASS:
        print(f"\n{c.id}: expected {c.expected!r}, computed {c.computed!r} ({c.status.value})")
        if c.message:
            print("  ", c.message)
