"""Exact truncated Thakur multiple zeta values in F_q((1/theta)).

zeta(a_1, ..., a_m) sums 1/(f_1^{a_1} ... f_m^{a_m}) over monic
polynomials with strictly decreasing degrees deg f_1 > ... > deg f_m >= 0.
Truncating the outer degree at D = precision is exact: a slice with
deg f_1 = d has valuation at least wt * d >= d, so higher degrees cannot
touch the kept coefficients.

The degree-d power sum S_d(a) = sum of f^{-a} over monic f of degree d
enjoys a much sharper bound,

    val(S_d(a)) >= a*d + (q-1)*d*(d+1)/2,

so slices whose bound exceeds the precision are zero to precision and are
skipped without enumeration.  (Write f = theta^d (1 + u); summing a
monomial of (1+u)^{-a} over all lower coefficient vectors factors into
character sums over F_q, which vanish unless every lower coefficient
appears with exponent a positive multiple of q-1; each surviving monomial
then costs at least (q-1)(1 + 2 + ... + d) extra powers of 1/theta.)
The bound is exercised against brute-force enumeration in the tests.

This realization is the independent numeric oracle for the q-shuffle
product: the product of two zeta values must equal the realization of the
shuffled words.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import FiniteField
from .series import LaurentSeries, PolyA, _poly_mul_trunc, _unit_inverse, monic_polys
from .shuffle import ShuffleContext
from .words import Element, Index, Word, check_index

_POWER_SUM_CACHE: dict = {}
_MZV_CACHE: dict = {}


def clear_caches() -> None:
    _POWER_SUM_CACHE.clear()
    _MZV_CACHE.clear()


def power_sum_val_bound(d: int, a: int, q: int) -> int:
    """Proven lower bound for the valuation of S_d(a); see module docstring."""
    return a * d + (q - 1) * d * (d + 1) // 2


def power_sum(d: int, a: int, fld: FiniteField, prec: int) -> LaurentSeries:
    """S_d(a): the sum of f^{-a} over the q^d monic f of degree d."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    if a < 1:
        raise ValueError("exponent must be >= 1")
    key = (fld, d, a, prec)
    hit = _POWER_SUM_CACHE.get(key)
    if hit is not None:
        return hit
    result = _power_sum_compute(d, a, fld, prec)
    _POWER_SUM_CACHE[key] = result
    return result


def _power_sum_compute(d: int, a: int, fld: FiniteField, prec: int) -> LaurentSeries:
    if d == 0:
        return LaurentSeries.one(fld, prec)
    if power_sum_val_bound(d, a, fld.q) > prec:
        return LaurentSeries.zero(fld, prec)
    m = prec - a * d + 1  # coefficients needed past the forced t^(a*d)
    acc = [0] * m
    for f in monic_polys(fld, d):
        # f = theta^d * u(t) with u = 1 + c_{d-1} t + ... + c_0 t^d
        unit = list(reversed(f.coeffs))
        if len(unit) < m:
            unit = unit + [0] * (m - len(unit))
        inv = _unit_inverse(unit, m, fld)
        term = _unit_pow(inv, a, m, fld)
        for k in range(m):
            acc[k] = fld.add(acc[k], term[k])
    return LaurentSeries(fld, a * d, acc, prec)


def _unit_pow(u: list[int], n: int, m: int, fld: FiniteField) -> list[int]:
    out = None
    base = u
    while n:
        if n & 1:
            out = base if out is None else _poly_mul_trunc(out, base, m, fld)
        n >>= 1
        if n:
            base = _poly_mul_trunc(base, base, m, fld)
    return out if out is not None else [1] + [0] * (m - 1)


@dataclass
class MzvValue:
    index: Index
    value: LaurentSeries
    degree_cut: int

    def __str__(self) -> str:
        return str(self.value)


def mzv(index, fld: FiniteField, prec: int) -> MzvValue:
    """Truncated zeta value for the given index; the empty index gives 1."""
    idx = check_index(index)
    key = (fld, idx, prec)
    hit = _MZV_CACHE.get(key)
    if hit is not None:
        return hit
    memo: dict = {}

    def nested(rest: Index, dmax: int) -> LaurentSeries:
        if not rest:
            return LaurentSeries.one(fld, prec)
        mkey = (rest, dmax)
        got = memo.get(mkey)
        if got is not None:
            return got
        a1 = rest[0]
        depth = len(rest)
        total = LaurentSeries.zero(fld, prec)
        for d1 in range(depth - 1, dmax + 1):
            if power_sum_val_bound(d1, a1, fld.q) > prec:
                break  # the bound grows with d1, so later slices vanish too
            total = total + power_sum(d1, a1, fld, prec) * nested(rest[1:], d1 - 1)
        total = total.with_precision(prec)
        memo[mkey] = total
        return total

    value = nested(idx, prec)
    result = MzvValue(idx, value, prec)
    _MZV_CACHE[key] = result
    return result


def realize(u: Element, fld: FiniteField, prec: int) -> LaurentSeries:
    """Linear extension of word -> zeta(word index); coefficients lift along F_p -> F_q."""
    if not u.in_r():
        raise ValueError("realize input must be y-free")
    if u.field.p != fld.p:
        raise ValueError(f"element characteristic {u.field.p} does not match field F_{fld.q}")
    out = LaurentSeries.zero(fld, prec)
    for w, c in u.terms.items():
        out = out + mzv(w.x, fld, prec).value.scale(fld.from_int(c))
    return out


@dataclass
class OracleReport:
    index_a: Index
    index_b: Index
    q: int
    precision: int
    passed: bool
    residual_valuation: int | None

    def to_json(self) -> dict:
        return {
            "index_a": list(self.index_a),
            "index_b": list(self.index_b),
            "q": self.q,
            "precision": self.precision,
            "passed": self.passed,
            "residual_valuation": self.residual_valuation,
        }


def check_shuffle_oracle(
    index_a,
    index_b,
    fld: FiniteField,
    prec: int,
    ctx: ShuffleContext | None = None,
) -> OracleReport:
    """Compare realize(x_a * x_b) with zeta(a) * zeta(b) to precision."""
    a = check_index(index_a)
    b = check_index(index_b)
    if ctx is None:
        ctx = ShuffleContext(fld.q)
    ea = Element.from_word(ctx.field, Word(a, ()))
    eb = Element.from_word(ctx.field, Word(b, ()))
    lhs = realize(ctx.shuffle_r(ea, eb), fld, prec)
    rhs = (mzv(a, fld, prec).value * mzv(b, fld, prec).value).with_precision(prec)
    residual = lhs - rhs
    return OracleReport(
        index_a=a,
        index_b=b,
        q=fld.q,
        precision=prec,
        passed=residual.is_zero(),
        residual_valuation=residual.valuation(),
    )


@dataclass
class ThakurReport:
    q: int
    precision: int
    passed: bool
    residual_valuation: int | None

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "precision": self.precision,
            "passed": self.passed,
            "residual_valuation": self.residual_valuation,
        }


def theta_minus_theta_q(fld: FiniteField, prec: int) -> LaurentSeries:
    theta = PolyA.theta(fld)
    theta_q = PolyA(fld, (0,) * fld.q + (1,))
    return (theta - theta_q).as_series(prec)


def thakur_relation_check(fld: FiniteField, prec: int) -> ThakurReport:
    """zeta(q) - (theta - theta^q) * zeta(1, q-1) should vanish to precision."""
    q = fld.q
    work = prec + q  # the theta^q factor shifts exponents down by q
    zq = mzv((q,), fld, work).value
    zpair = mzv((1, q - 1), fld, work).value
    residual = (zq - theta_minus_theta_q(fld, work) * zpair).with_precision(prec)
    return ThakurReport(
        q=q,
        precision=prec,
        passed=residual.is_zero(),
        residual_valuation=residual.valuation(),
    )
