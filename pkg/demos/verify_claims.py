"""Run every numerical check on the capacity formulas and bounds, as the CLI does.

Equivalent to ``sdc-lab verify --d 2,3 --samples 4``.
"""

from sdc_lab.verify import run_claims

results = run_claims(dims=(2, 3), seed=0, samples=4)
for r in results:
    print(r.line())
print(f"{sum(r.passed for r in results)}/{len(results)} claims passed")
