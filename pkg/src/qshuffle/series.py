"""Truncated Laurent series in 1/theta over F_q, and polynomials in theta.

A series is stored by its valuation v (the lowest exponent of t = 1/theta
present), an absolute precision N (coefficients are known for exponents
<= N; the error is O(t^(N+1))), and the coefficient slice for exponents
v..N.  Precision propagates by the min rule:

    prec(a + b) = min(Na, Nb)
    prec(a * b) = min(Na + vb, Nb + va)

All coefficient arithmetic is exact in F_q; there is no floating point
anywhere.  Zero-modulo-precision is stored canonically as val = N + 1
with no coefficients.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .fields import FiniteField


class LaurentSeries:
    __slots__ = ("fld", "val", "prec", "coeffs")

    def __init__(self, fld: FiniteField, val: int, coeffs: Iterable[int], prec: int):
        self.fld = fld
        self.prec = prec
        cs = list(coeffs)
        # clip to the window val..prec, then strip leading zeros
        keep = prec - val + 1  # may be <= 0 when the whole series sits beyond prec
        if len(cs) > keep:
            cs = cs[: max(keep, 0)]
        while cs and cs[0] == 0:
            cs.pop(0)
            val += 1
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            self.val = prec + 1
            self.coeffs = ()
        else:
            self.val = val
            self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, fld: FiniteField, prec: int) -> "LaurentSeries":
        return cls(fld, prec + 1, (), prec)

    @classmethod
    def one(cls, fld: FiniteField, prec: int) -> "LaurentSeries":
        return cls(fld, 0, (1,), prec)

    @classmethod
    def term(cls, fld: FiniteField, exponent: int, coeff: int, prec: int) -> "LaurentSeries":
        """coeff * t^exponent (t = 1/theta), truncated at prec."""
        return cls(fld, exponent, (coeff,), prec)

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> int | None:
        """Lowest exponent present, or None when zero to precision."""
        return None if self.is_zero() else self.val

    def coeff(self, exponent: int) -> int:
        if exponent > self.prec:
            raise ValueError(f"exponent {exponent} beyond precision {self.prec}")
        if exponent < self.val or exponent > self.val + len(self.coeffs) - 1:
            return 0
        return self.coeffs[exponent - self.val]

    def with_precision(self, prec: int) -> "LaurentSeries":
        """Lower (never raise) the precision."""
        if prec > self.prec:
            raise ValueError("cannot raise precision")
        return LaurentSeries(self.fld, self.val, self.coeffs, prec)

    def _require_same_field(self, other: "LaurentSeries") -> None:
        if self.fld != other.fld:
            raise ValueError("field mismatch")

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._require_same_field(other)
        prec = min(self.prec, other.prec)
        if self.is_zero():
            return other.with_precision(prec)
        if other.is_zero():
            return self.with_precision(prec)
        fld = self.fld
        lo = min(self.val, other.val)
        hi = min(prec, max(self.val + len(self.coeffs), other.val + len(other.coeffs)) - 1)
        out = []
        for k in range(lo, hi + 1):
            a = self.coeffs[k - self.val] if 0 <= k - self.val < len(self.coeffs) else 0
            b = other.coeffs[k - other.val] if 0 <= k - other.val < len(other.coeffs) else 0
            out.append(fld.add(a, b))
        return LaurentSeries(fld, lo, out, prec)

    def __neg__(self) -> "LaurentSeries":
        fld = self.fld
        return LaurentSeries(fld, self.val, [fld.neg(c) for c in self.coeffs], self.prec)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._require_same_field(other)
        prec = min(self.prec + other.val, other.prec + self.val)
        if self.is_zero() or other.is_zero():
            return LaurentSeries.zero(self.fld, prec)
        fld = self.fld
        val = self.val + other.val
        n = prec - val + 1
        if n <= 0:
            return LaurentSeries.zero(self.fld, prec)
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            jmax = min(len(other.coeffs), n - i)
            row = other.coeffs
            for j in range(jmax):
                b = row[j]
                if b:
                    out[i + j] = fld.add(out[i + j], fld.mul(a, b))
        return LaurentSeries(fld, val, out, prec)

    def scale(self, c: int) -> "LaurentSeries":
        fld = self.fld
        if c == 0:
            return LaurentSeries.zero(fld, self.prec)
        return LaurentSeries(fld, self.val, [fld.mul(c, a) for a in self.coeffs], self.prec)

    def inverse(self) -> "LaurentSeries":
        """Newton iteration on the unit part; the result has precision prec - 2*val."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of a series that is zero to precision")
        fld = self.fld
        m = self.prec - self.val + 1  # known unit-part coefficients
        unit = list(self.coeffs) + [0] * (m - len(self.coeffs))
        inv_unit = _unit_inverse(unit, m, fld)
        return LaurentSeries(fld, -self.val, inv_unit, self.prec - 2 * self.val)

    def __pow__(self, n: int) -> "LaurentSeries":
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return LaurentSeries.one(self.fld, self.prec)
        # plain square-and-multiply; precision follows the min rule throughout
        result = None
        base = self
        k = n
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentSeries)
            and other.fld == self.fld
            and other.val == self.val
            and other.prec == self.prec
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.fld, self.val, self.prec, self.coeffs))

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """Equality modulo the coarser of the two precisions."""
        return (self - other).is_zero()

    def __str__(self) -> str:
        tail = f"O(t^{-(self.prec + 1)})"
        if self.is_zero():
            return tail
        chunks = []
        for k in range(self.val, self.val + len(self.coeffs)):
            c = self.coeffs[k - self.val]
            if not c:
                continue
            if k == 0:
                body = "1" if c == 1 else self.fld.element_str(c)
            else:
                t = f"t^{-k}"
                body = t if c == 1 else f"{self.fld.element_str(c)}*{t}"
            chunks.append(body)
        return " + ".join(chunks + [tail])

    def __repr__(self) -> str:
        return f"<LaurentSeries {self}>"

    def to_json(self) -> dict:
        return {
            "valuation": None if self.is_zero() else self.val,
            "coeffs": [self.fld.element_json(c) for c in self.coeffs],
            "precision": self.prec,
        }


def _unit_inverse(u: list[int], m: int, fld: FiniteField) -> list[int]:
    """Inverse of a unit power series mod t^m by Newton doubling."""
    b = [fld.inv(u[0])]
    length = 1
    while length < m:
        length = min(2 * length, m)
        # b <- b * (2 - u*b) mod t^length
        ub = _poly_mul_trunc(u, b, length, fld)
        two_minus = [fld.neg(c) for c in ub]
        two_minus[0] = fld.add(two_minus[0], fld.add(1, 1))
        b = _poly_mul_trunc(b, two_minus, length, fld)
    return b[:m]


def _poly_mul_trunc(a: list[int], b: list[int], m: int, fld: FiniteField) -> list[int]:
    out = [0] * m
    for i, ai in enumerate(a[:m]):
        if not ai:
            continue
        jmax = min(len(b), m - i)
        for j in range(jmax):
            bj = b[j]
            if bj:
                out[i + j] = fld.add(out[i + j], fld.mul(ai, bj))
    return out


class PolyA:
    """Polynomial in theta over F_q, little-endian coefficient tuple."""

    __slots__ = ("fld", "coeffs")

    def __init__(self, fld: FiniteField, coeffs: Iterable[int]):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.fld = fld
        self.coeffs = tuple(cs)

    @classmethod
    def theta(cls, fld: FiniteField) -> "PolyA":
        return cls(fld, (0, 1))

    @classmethod
    def constant(cls, fld: FiniteField, c: int) -> "PolyA":
        return cls(fld, (c,))

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: "PolyA") -> "PolyA":
        fld = self.fld
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyA(
            fld,
            [
                fld.add(
                    self.coeffs[k] if k < len(self.coeffs) else 0,
                    other.coeffs[k] if k < len(other.coeffs) else 0,
                )
                for k in range(n)
            ],
        )

    def __neg__(self) -> "PolyA":
        return PolyA(self.fld, [self.fld.neg(c) for c in self.coeffs])

    def __sub__(self, other: "PolyA") -> "PolyA":
        return self + (-other)

    def __mul__(self, other: "PolyA") -> "PolyA":
        if self.is_zero() or other.is_zero():
            return PolyA(self.fld, ())
        fld = self.fld
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = fld.add(out[i + j], fld.mul(a, b))
        return PolyA(fld, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyA)
            and other.fld == self.fld
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.fld, self.coeffs))

    def as_series(self, prec: int) -> LaurentSeries:
        """theta^k becomes t^-k."""
        if self.is_zero():
            return LaurentSeries.zero(self.fld, prec)
        d = self.degree()
        return LaurentSeries(self.fld, -d, list(reversed(self.coeffs)), prec)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        chunks = []
        for k in range(self.degree(), -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                chunks.append(self.fld.element_str(c))
            else:
                t = "theta" if k == 1 else f"theta^{k}"
                chunks.append(t if c == 1 else f"{self.fld.element_str(c)}*{t}")
        return " + ".join(chunks)

    __repr__ = __str__


def monic_polys(fld: FiniteField, d: int) -> Iterator[PolyA]:
    """All q^d monic polynomials of exact degree d, in lexicographic order."""
    if d == 0:
        yield PolyA(fld, (1,))
        return
    q = fld.q
    tail = [0] * d
    while True:
        yield PolyA(fld, tuple(tail) + (1,))
        k = 0
        while k < d:
            tail[k] += 1
            if tail[k] < q:
                break
            tail[k] = 0
            k += 1
        else:
            return
