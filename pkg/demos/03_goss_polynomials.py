"""
Symbolic Goss polynomials
=========================

The Goss polynomials G_n(X) satisfy a recursion driven by the symbolic
lattice coefficients a_1, a_2, ... (one for each q-power).  We never
substitute values for the a_i: coefficients live in the polynomial ring
F_p[a_1, a_2, ...], so every identity below is an identity of formal
expressions.
"""

from qshuffle.goss import goss, goss_table

# Below the field size the recursion collapses: G_n is a plain power.
for n in (1, 2, 3):
    print(f"q=3, G_{n} =", goss(n, 3))

# The first interesting polynomial appears at n = q + 1.
print("q=3, G_4 =", goss(4, 3))

# In characteristic 2 some recursion terms cancel; G_4 collapses back to
# a power while G_5 keeps three correction terms.
for n in (3, 4, 5):
    print(f"q=2, G_{n} =", goss(n, 2))

# Every G_n is monic of degree n and divisible by X.  The table shares
# its recursion prefix, so asking for G_9 computes everything below it.
table = goss_table(9, 4)
g = table[-1]
print("q=4, G_9 =", g)
print("monic:", g.is_monic(), " degree:", g.degree(), " X divides:", g.divisible_by_x())

# Cancellation can re-collapse entries far above q: over q=4 (so p=2)
# the corrections of G_12 pair off and vanish.
print("q=4, G_12 =", goss(12, 4))

# Setting every a_i to zero kills the corrections and leaves the power.
print("G_9 with all a_i = 0:", g.specialize_zero())
