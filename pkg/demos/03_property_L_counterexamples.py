"""
When can the obstruction vanish on the complement?
==================================================

Assemble the degree equations for one configuration, decide them with the
SNF solver, and compare with the closed-form criterion and the hand
elimination.
"""

from andegen import (
    ResolutionConfig, assemble_system, build_resolution, closed_form_verdict,
    decide_membership, recurrence_trace,
)

cfg = ResolutionConfig(n=3, t=2, fiber="irreducible")
system = assemble_system(build_resolution(cfg))

print("columns:", [str(c) for c in system.span_classes])
for curve, row, rhs in zip(system.test_curves, system.matrix.tolist(), system.target):
    print(f"{str(curve):>7}  {row}  = {rhs}")

# %%
# gcd(4, m) must divide t = 2, so m = 4 and m = 8 fail while m = 6 works.
for m in (4, 6, 8, 10):
    v = decide_membership(system, m)
    cf = closed_form_verdict(cfg, m)
    print(m, v.interpretation.value, v.witness, "closed form agrees:", cf.solvable == v.solvable)

# %%
# The elimination, step by step.
print(recurrence_trace(cfg, 4).render())

# %%
# Reducible fibre: solvable exactly when m divides t, so m > n always fails.
red = ResolutionConfig(n=5, t=3, fiber="reducible")
for m in (2, 3, 6, 7):
    print(m, closed_form_verdict(red, m).solvable)
print(recurrence_trace(red, 7).render())
