"""
Words, linear combinations, and the recursive product
=====================================================

The basic objects are words in two families of letters, x[i] and y[j],
with integer entries >= 1.  Linear combinations over F_p carry a
recursive product whose correction terms depend on the prime power q.
"""

from qshuffle.fields import PrimeField
from qshuffle.shuffle import ShuffleContext
from qshuffle.words import parse_element

# A context fixes q = p^n; all coefficient arithmetic happens mod p.
ctx = ShuffleContext(2)
F = ctx.field

# Elements parse from plain text.  The empty word prints as 1.
u = parse_element("x[1]", F)
v = parse_element("x[2]", F)
print("u =", u)
print("v =", v)

# The product on y-free words concatenates in both orders and then adds
# a stuffle-style letter merge plus q-dependent correction terms.
print("x[1] * x[2] =", ctx.shuffle_r(u, v))

# Depth-one squares already show the finite characteristic at work: the
# two interleavings x[1,1] collide, and mod 2 they cancel outright.
ctx3 = ShuffleContext(3)
print("x[1] * x[1] over q=2:", ctx.shuffle_r(u, u))
print("x[1] * x[1] over q=3:",
      ctx3.shuffle_r(*[parse_element("x[1]", ctx3.field)] * 2))

# The correction sum ranges over splittings i + j of the merged letter
# with j divisible by q - 1, so the same product changes shape with q.
for q in (2, 3, 4):
    cq = ShuffleContext(q)
    a1 = parse_element("x[1]", cq.field)
    a2 = parse_element("x[2]", cq.field)
    print(f"q={q}:  x[1] * x[2] =", cq.shuffle_r(a1, a2))

# On the full algebra the two families interact only through the rule
# that x-words and y-words commute past each other; products of mixed
# words factor into an x-part product and a y-part product.
y1 = parse_element("y[1]", ctx3.field)
xy = parse_element("x[1]y[1]", ctx3.field)
print("y[1] * y[1] over q=3:", ctx3.shuffle_e(y1, y1))
print("x[1]y[1] * x[1]y[1] over q=3:", ctx3.shuffle_e(xy, xy))

# The product is commutative and associative; a quick spot check.
a = parse_element("x[1] + y[1]", ctx3.field)
b = parse_element("x[2]", ctx3.field)
c = parse_element("y[1]", ctx3.field)
left = ctx3.shuffle_e(ctx3.shuffle_e(a, b), c)
right = ctx3.shuffle_e(a, ctx3.shuffle_e(b, c))
print("associative on a sample triple:", left == right)
