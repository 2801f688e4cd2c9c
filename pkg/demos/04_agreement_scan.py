"""
Cross-checking every decision path on a grid
============================================

Run the SNF solver, the closed form and brute-force enumeration over a
parameter grid and tabulate how often property (L) fails.
"""

from collections import Counter

from andegen import GridSpec, run_agreement

report = run_agreement(GridSpec(n_range=(1, 5), m_range=(2, 8)))
print(report.summary())

# %%
# Fraction of cells where the obstruction cannot vanish, per fibre type.
fails = Counter((r.fiber.value, r.solver) for r in report.records)
for fiber in ("irreducible", "reducible"):
    bad, good = fails[(fiber, False)], fails[(fiber, True)]
    print(f"{fiber:>11}: {bad} of {bad + good} cells fail property (L)")

# %%
# The CSV is what ``andegen scan`` writes.
print("\n".join(report.to_csv().splitlines()[:8]))
