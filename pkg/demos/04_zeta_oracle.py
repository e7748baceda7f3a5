"""
Thakur zeta values as a numeric oracle
======================================

Multiple zeta values in F_q((1/theta)) sum 1/(f_1^{a_1} ... f_m^{a_m})
over monic polynomials with strictly decreasing degrees.  Truncated to
finite precision they are computed exactly (no floating point), which
makes them an independent check on the recursive word product: the
product of two zeta values must equal the zeta value of the shuffled
words, coefficient by coefficient.
"""

from qshuffle.fields import FiniteField
from qshuffle.series import PolyA
from qshuffle.shuffle import ShuffleContext
from qshuffle.words import Element, Word
from qshuffle.zeta import check_shuffle_oracle, mzv, realize, thakur_relation_check

F2 = FiniteField(2)

# zeta(1) over F_2, as a Laurent series in t = 1/theta.
print("zeta(1)   =", mzv((1,), F2, 12))

# Depth two: the inner variable ranges over strictly smaller degrees.
print("zeta(1,1) =", mzv((1, 1), F2, 12))

# The oracle check: shuffle x[1] * x[2] into a sum of words, realize
# each word as a zeta value, and compare with the product of series.
report = check_shuffle_oracle((1,), (2,), F2, 30)
print("zeta(1)*zeta(2) == realize(x[1] * x[2]):", report.passed)

# The same comparison fails loudly if the word product is perturbed.
ctx = ShuffleContext(2)
good = ctx.shuffle_r(
    Element.from_word(ctx.field, Word((1,), ())),
    Element.from_word(ctx.field, Word((2,), ())),
)
bad = good + Element.from_word(ctx.field, Word((3,), ()))  # spurious extra term
lhs = realize(bad, F2, 30)
rhs = mzv((1,), F2, 30).value * mzv((2,), F2, 30).value
print("perturbed product still matches:", (lhs - rhs).is_zero())

# A classical identity: zeta(q) = (theta - theta^q) * zeta(1, q-1).
for q in (2, 3, 4):
    rep = thakur_relation_check(FiniteField(q), 40)
    print(f"q={q}: zeta(q) - (theta - theta^q)*zeta(1,q-1) vanishes:", rep.passed)

# The relation is sensitive: flipping the sign of the theta factor (a
# real change once p is odd) leaves a nonzero residual.
F3 = FiniteField(3)
theta = PolyA.theta(F3).as_series(43)
theta_q = PolyA(F3, (0, 0, 0, 1)).as_series(43)
wrong = mzv((3,), F3, 43).value - (theta + theta_q) * mzv((1, 2), F3, 43).value
print("with theta + theta^3 instead:", wrong.with_precision(40).is_zero())
