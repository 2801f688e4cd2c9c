"""
Smith normal form and modular solving
=====================================

The integer linear algebra underneath everything else. We diagonalise a
small matrix, solve a system over the integers and then the same system
modulo a few moduli, reading the verdict off the SNF diagonal.
"""

from andegen import IntegerMatrix, hnf, snf, solve_integer, solve_mod

A = IntegerMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])

D, U, V = snf(A)
print("invariant factors:", D.diagonal())
print("U A V == D:", U @ A @ V == D, " det U =", U.det(), " det V =", V.det())

# %%
# The Hermite form is the row-style canonical basis of the row lattice.
H, U, _ = hnf(A)
for row in H.tolist():
    print(row)

# %%
# Over Z the system ``A x = c`` is solvable only when every invariant factor
# divides the matching coordinate of ``U c``.
c = [2, 0, 4]
print("over Z:", solve_integer(A, c))

# %%
# Modulo ``m`` the answer changes with ``m``. An unsolvable case comes with a
# scalar congruence that has no solution, which anyone can check by hand.
for m in (2, 3, 4, 5, 12):
    out = solve_mod(A, [1, 0, 0], m)
    print(m, out.status.value, out.witness or out.certificate)
