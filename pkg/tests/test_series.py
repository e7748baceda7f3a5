"""Tests for truncated Laurent series and polynomial arithmetic over F_q."""

import pytest

from qshuffle.fields import FiniteField
from qshuffle.series import LaurentSeries, PolyA, _unit_inverse, monic_polys

F2 = FiniteField(2)
F3 = FiniteField(3)
F4 = FiniteField(4)


def test_construction_normalizes():
    s = LaurentSeries(F3, 1, [0, 2, 0, 1, 0], 10)
    assert s.val == 2
    assert s.coeffs == (2, 0, 1)
    assert s.prec == 10
    assert s.coeff(2) == 2 and s.coeff(3) == 0 and s.coeff(4) == 1
    assert s.coeff(5) == 0 and s.coeff(0) == 0


def test_zero_normal_form():
    z = LaurentSeries(F3, 4, [0, 0], 10)
    assert z.is_zero()
    assert z.val == 11 and z.coeffs == ()
    assert z == LaurentSeries.zero(F3, 10)
    assert z.valuation() is None


def test_coeffs_beyond_precision_are_clipped():
    s = LaurentSeries(F2, 9, [1, 1, 1, 1], 10)
    assert s.coeffs == (1, 1)
    with pytest.raises(ValueError):
        s.coeff(11)


def test_series_entirely_beyond_precision_is_zero():
    # val > prec: every coefficient lies outside the window, even when the
    # raw list is longer than the (negative) window size
    s = LaurentSeries(F2, 12, [1, 1, 1, 1, 1, 1], 10)
    assert s.is_zero()
    assert s.val == 11 and s.coeffs == ()

    # same state reached by lowering precision below the valuation
    t = LaurentSeries(F3, 8, [2, 1], 20).with_precision(5)
    assert t.is_zero() and t.valuation() is None

    # and by the product rule: val(a*b) can exceed a later truncation point
    a = LaurentSeries(F2, 8, [1] * 23, 30)
    b = LaurentSeries(F2, 24, [1] * 7, 30)
    prod = (a * b).with_precision(30)
    assert prod.is_zero()


def test_add_uses_min_precision():
    a = LaurentSeries(F3, 0, [1, 1], 10)
    b = LaurentSeries(F3, 0, [2], 5)
    c = a + b
    assert c.prec == 5
    assert c.val == 1 and c.coeffs == (1,)
    assert (a - a).is_zero()


def test_mul_precision_rule():
    # prec(a*b) = min(prec_a + val_b, prec_b + val_a): knowledge shifts with valuation
    a = LaurentSeries(F3, 2, [1], 10)
    b = LaurentSeries(F3, 3, [1], 10)
    c = a * b
    assert c.val == 5
    assert c.prec == 12
    assert c.coeff(5) == 1


def test_geometric_series_inverse():
    # (1 - t)^-1 = 1 + t + t^2 + ... over F_2 (t here is the internal exponent)
    one_minus = LaurentSeries(F2, 0, [1, 1], 12)  # 1 + t in char 2
    inv = one_minus.inverse()
    assert inv.prec == 12
    prod = one_minus * inv
    assert prod.agrees_with(LaurentSeries.one(F2, prod.prec))
    for k in range(13):
        assert inv.coeff(k) == 1


def test_inverse_shifts_valuation():
    s = LaurentSeries(F3, 2, [2, 1], 10)
    inv = s.inverse()
    assert inv.val == -2
    assert inv.prec == 10 - 4
    assert (s * inv).agrees_with(LaurentSeries.one(F3, 1))
    with pytest.raises(ZeroDivisionError):
        LaurentSeries.zero(F3, 5).inverse()


def test_pow():
    s = LaurentSeries(F3, 1, [1, 1], 20)
    assert (s ** 0) == LaurentSeries.one(F3, 20)
    assert (s ** 1) == s
    assert (s ** 3) == s * s * s
    assert (s ** -2).agrees_with((s * s).inverse())


def test_scale():
    s = LaurentSeries(F3, 1, [1, 2], 8)
    assert s.scale(0).is_zero()
    assert s.scale(2).coeffs == (2, 1)
    assert s.scale(1) == s


def test_with_precision_only_lowers():
    s = LaurentSeries(F3, 0, [1, 2, 1], 10)
    t = s.with_precision(1)
    assert t.prec == 1 and t.coeffs == (1, 2)
    with pytest.raises(ValueError):
        s.with_precision(11)


def test_agrees_with_uses_coarser_precision():
    a = LaurentSeries(F2, 0, [1, 1, 1], 2)
    b = LaurentSeries(F2, 0, [1, 1, 1, 1, 1], 4)
    assert a.agrees_with(b)
    c = LaurentSeries(F2, 0, [1, 0, 1], 2)
    assert not c.agrees_with(b)


def test_str_forms():
    assert str(LaurentSeries.zero(F2, 7)) == "O(t^-8)"
    assert str(LaurentSeries.one(F2, 7)) == "1 + O(t^-8)"
    s = LaurentSeries(F3, 2, [1, 0, 2], 9)
    assert str(s) == "t^-2 + 2*t^-4 + O(t^-10)"
    # negative internal exponents are positive powers of theta
    assert str(PolyA.theta(F3).as_series(5)) == "t^1 + O(t^-6)"


def test_to_json():
    s = LaurentSeries(F3, 2, [1, 2], 9)
    assert s.to_json() == {"valuation": 2, "coeffs": [1, 2], "precision": 9}
    assert LaurentSeries.zero(F3, 4).to_json() == {
        "valuation": None,
        "coeffs": [],
        "precision": 4,
    }
    s4 = LaurentSeries(F4, 0, [2, 3], 5)
    assert s4.to_json()["coeffs"] == [[0, 1], [1, 1]]


def test_field_mismatch_rejected():
    with pytest.raises(ValueError):
        LaurentSeries.one(F2, 5) + LaurentSeries.one(F3, 5)


def test_unit_inverse_small_cases():
    # direct check of the Newton kernel on a short unit
    u = [1, 1, 0, 0, 0, 0]
    inv = _unit_inverse(u, 6, F2)
    assert inv == [1, 1, 1, 1, 1, 1]
    u3 = [2, 1]
    inv3 = _unit_inverse(u3, 4, F3)
    # (2 + t)(2 + t + 2t^2 + t^3) = 1 mod t^4 over F_3
    prod = [0] * 4
    for i, a in enumerate(u3):
        for j, b in enumerate(inv3):
            if i + j < 4:
                prod[i + j] = F3.add(prod[i + j], F3.mul(a, b))
    assert prod == [1, 0, 0, 0]


# -- polynomials -----------------------------------------------------------


def test_polya_basics():
    t = PolyA.theta(F3)
    assert t.degree() == 1 and t.is_monic()
    p = t * t + PolyA.constant(F3, 2)
    assert p.coeffs == (2, 0, 1)
    assert str(p) == "theta^2 + 2"
    assert str(PolyA(F3, ())) == "0"
    assert PolyA(F3, (0, 0)).is_zero()
    assert (p - p).is_zero()
    assert PolyA.constant(F3, 0).degree() == -1


def test_polya_mul_matches_convolution():
    a = PolyA(F3, (1, 2))
    b = PolyA(F3, (2, 1, 1))
    assert (a * b).coeffs == (2, 2, 0, 2)
    assert a * b == b * a


def test_polya_as_series_roundtrip():
    p = PolyA(F3, (2, 0, 1))  # theta^2 + 2
    s = p.as_series(6)
    assert s.val == -2
    assert s.coeff(-2) == 1 and s.coeff(0) == 2 and s.coeff(-1) == 0


@pytest.mark.parametrize("fld, d", [(F2, 0), (F2, 3), (F3, 2), (F4, 2)])
def test_monic_polys_enumeration(fld, d):
    polys = list(monic_polys(fld, d))
    assert len(polys) == fld.q ** d
    assert len(set(polys)) == len(polys)
    for f in polys:
        assert f.is_monic() and f.degree() == d


def test_monic_polys_order_is_lexicographic():
    got = [f.coeffs for f in monic_polys(F2, 2)]
    assert got == [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
