"""
Dual graph of the resolved A_n point
====================================

Build the curve configuration on the minimal resolution for a few
parameter choices, look at the intersection numbers and export DOT.
"""

from andegen import (
    CTILDE, DTILDE, E, FTILDE, ResolutionConfig, build_resolution, to_dot,
)

g = build_resolution(ResolutionConfig(n=4, t=2, fiber="irreducible"))
print([str(c) for c in g.curves])

# %%
# The chain E_1..E_4 carries the negated Cartan matrix of A_4; its
# determinant is (+/-)(n + 1), the order of the local class group.
M = g.chain_matrix()
for row in M.tolist():
    print(row)
print("det =", M.det())

# %%
# The fibre meets both ends of the chain, D meets only E_t and C meets only
# the fibre.
print("F.E1 =", g.pairing(FTILDE, E(1)), " F.E4 =", g.pairing(FTILDE, E(4)))
print("D.E2 =", g.pairing(DTILDE, E(2)), " D.F =", g.pairing(DTILDE, FTILDE))
print("C.F  =", g.pairing(CTILDE, FTILDE))

# %%
# For n = 1 both transverse points of the fibre lie on E_1.
print(to_dot(build_resolution(ResolutionConfig(1, 1, "irreducible"))))

# %%
# Pipe into graphviz to draw it, e.g. ``python 02_dual_graph.py | dot -Tpng``.
print(to_dot(build_resolution(ResolutionConfig(3, 2, "reducible"))))
