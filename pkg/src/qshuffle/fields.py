"""Exact arithmetic in F_p and F_q = F_p^e.

Elements of F_p are plain ints in [0, p).  Elements of F_q are ints in
[0, q) encoding base-p digit vectors (digit i = coefficient of u^i, where
u is the residue of the generator modulo the field's defining polynomial).
Fields are desk scale: q <= 32, so multiplication and inversion are
precomputed lookup tables.
"""

from __future__ import annotations

import math
from typing import Iterator


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p^e, p prime.  Raises if q is not a prime power."""
    if q < 2:
        raise ValueError(f"field size must be >= 2, got {q}")
    p = 2
    while q % p != 0:
        p += 1
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise ValueError(f"field size {q} is not a prime power")
    return p, e


def binom_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if k > n:
        return 0
    result = 1
    while n or k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        result = result * math.comb(ni, ki) % p
        n //= p
        k //= p
    return result


def delta_coeff(a: int, b: int, j: int, p: int) -> int:
    """The recursion coefficient (-1)^(a-1) C(j-1, a-1) + (-1)^(b-1) C(j-1, b-1) in F_p.

    Depends only on (a, b, j); symmetric in a and b.
    """
    if a < 1 or b < 1 or j < 1:
        raise ValueError("delta_coeff arguments must be >= 1")
    sa = 1 if (a - 1) % 2 == 0 else p - 1
    sb = 1 if (b - 1) % 2 == 0 else p - 1
    return (sa * binom_mod_p(j - 1, a - 1, p) + sb * binom_mod_p(j - 1, b - 1, p)) % p


class PrimeField:
    """F_p with elements represented as ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def reduce(self, n: int) -> int:
        return n % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return pow(a, self.p - 2, self.p)


# Fixed defining polynomials (little-endian coefficient tuples, monic) so that
# serialized output is deterministic across runs and machines.  These are the
# usual Conway polynomials.
DEFAULT_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),            # u^2 + u + 1
    8: (1, 1, 0, 1),         # u^3 + u + 1
    9: (2, 2, 1),            # u^2 + 2u + 2
    16: (1, 1, 0, 0, 1),     # u^4 + u + 1
    25: (2, 4, 1),           # u^2 + 4u + 2
    27: (1, 2, 0, 1),        # u^3 + 2u + 1
}

MAX_FIELD_SIZE = 32


def _poly_trim(c: tuple[int, ...]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _poly_mod(a: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    """Reduce a (little-endian, mutated) modulo a monic modulus."""
    e = len(modulus) - 1
    for i in range(len(a) - 1, e - 1, -1):
        c = a[i] % p
        if c:
            a[i] = 0
            for k in range(e):
                a[i - e + k] = (a[i - e + k] - c * modulus[k]) % p
    return [v % p for v in a[:e]]


def _poly_mulmod(a: tuple[int, ...], b: tuple[int, ...], modulus: tuple[int, ...], p: int) -> tuple[int, ...]:
    prod = [0] * (len(a) + len(b) - 1 or 1)
    for i, ai in enumerate(a):
        if ai:
            for k, bk in enumerate(b):
                prod[i + k] = (prod[i + k] + ai * bk) % p
    e = len(modulus) - 1
    reduced = _poly_mod(prod + [0] * max(0, e - len(prod)), modulus, p)
    return tuple(reduced)


def _monic_polys(degree: int, p: int) -> Iterator[tuple[int, ...]]:
    """All monic polynomials of exact degree `degree` over F_p, little-endian."""
    def rec(prefix: list[int], i: int) -> Iterator[tuple[int, ...]]:
        if i == degree:
            yield tuple(prefix) + (1,)
            return
        for c in range(p):
            yield from rec(prefix + [c], i + 1)
    yield from rec([], 0)


def poly_is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    modulus = _poly_trim(modulus)
    e = len(modulus) - 1
    if e < 1 or modulus[-1] != 1:
        return False
    if e == 1:
        return True
    for d in range(1, e // 2 + 1):
        for g in _monic_polys(d, p):
            if _poly_divides(g, modulus, p):
                return False
    return True


def _poly_divides(g: tuple[int, ...], f: tuple[int, ...], p: int) -> bool:
    rem = list(f)
    dg = len(g) - 1
    while len(_poly_trim(tuple(rem))) - 1 >= dg:
        rem = [v % p for v in rem]
        trimmed = _poly_trim(tuple(rem))
        dr = len(trimmed) - 1
        if dr < dg:
            break
        lead = trimmed[-1]
        # monic g: subtract lead * x^(dr-dg) * g
        for k in range(dg + 1):
            rem[dr - dg + k] = (rem[dr - dg + k] - lead * g[k]) % p
    return not _poly_trim(tuple(rem))


def _find_modulus(p: int, e: int) -> tuple[int, ...]:
    """Deterministic fallback: smallest monic irreducible of degree e (lex order on coefficients)."""
    for f in _monic_polys(e, p):
        if poly_is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")  # cannot happen


class FiniteField:
    """F_q = F_p^e with table-driven arithmetic on int-coded elements."""

    __slots__ = ("q", "p", "e", "modulus", "prime_field", "_mul", "_inv", "_neg", "_frob")

    def __init__(self, q: int, modulus: tuple[int, ...] | None = None):
        p, e = factor_prime_power(q)
        if q > MAX_FIELD_SIZE:
            raise ValueError(f"field size {q} exceeds the supported cap {MAX_FIELD_SIZE}")
        self.q = q
        self.p = p
        self.e = e
        self.prime_field = PrimeField(p)
        if e == 1:
            self.modulus = (0, 1)  # the polynomial u; unused for prime fields
        else:
            if modulus is None:
                modulus = DEFAULT_MODULI.get(q) or _find_modulus(p, e)
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {e}")
            if not poly_is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over F_{p}")
            self.modulus = modulus
        self._build_tables()

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        vecs = [self.vector(a) for a in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                v = self.from_vector(_poly_mulmod(vecs[a], vecs[b], self.modulus, p))
                mul[a][b] = v
                mul[b][a] = v
        self._mul = mul
        self._neg = [self.from_vector(tuple((-c) % p for c in vecs[a])) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
        self._inv = inv
        self._frob = [self._pow_table(a, p) for a in range(q)]

    def _pow_table(self, a: int, n: int) -> int:
        r = 1
        for _ in range(n):
            r = self._mul[r][a]
        return r

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteField)
            and other.q == self.q
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash(("FiniteField", self.q, self.modulus))

    def __repr__(self) -> str:
        if self.e == 1:
            return f"FiniteField({self.q})"
        return f"FiniteField({self.q}, modulus={self.modulus})"

    # -- element coding ----------------------------------------------------

    def vector(self, a: int) -> tuple[int, ...]:
        """Base-p digits of the element code, length e (coefficient of u^i at slot i)."""
        if not 0 <= a < self.q:
            raise ValueError(f"element code {a} out of range for F_{self.q}")
        digits = []
        for _ in range(self.e):
            digits.append(a % self.p)
            a //= self.p
        return tuple(digits)

    def from_vector(self, digits) -> int:
        a = 0
        for c in reversed(tuple(digits)):
            a = a * self.p + c % self.p
        return a

    def from_int(self, c: int) -> int:
        """Lift of a prime-subfield residue: c mod p as a constant vector."""
        return c % self.p

    def elements(self) -> range:
        return range(self.q)

    # -- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        va, vb = self.vector(a), self.vector(b)
        return self.from_vector((x + y) % self.p for x, y in zip(va, vb))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        return self._inv[a]

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        r = 1
        base = a
        while n:
            if n & 1:
                r = self._mul[r][base]
            base = self._mul[base][base]
            n >>= 1
        return r

    # -- rendering ---------------------------------------------------------

    def element_str(self, a: int) -> str:
        if self.e == 1:
            return str(a)
        return "[" + ",".join(str(c) for c in self.vector(a)) + "]"

    def element_json(self, a: int):
        if self.e == 1:
            return a
        return list(self.vector(a))
