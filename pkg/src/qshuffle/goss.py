"""Goss polynomials G_n(X) with symbolic expansion coefficients.

The coefficient ring is F_p[a_1, a_2, ...] with a_0 = 1: the a_i stand for
the exponential coefficients of a rank-one lattice, kept formal.  The
defining recursion is

    G_1 = X,      G_n = X * sum over i >= 0 with q^i <= n-1 of a_i * G_{n - q^i}.

The summation bound is implemented as the integer condition q^i <= n-1,
which never references an index n - q^i < 1.
"""

from __future__ import annotations

from .fields import factor_prime_power

# A monomial in the a_i is a sorted tuple of (i, exponent) pairs; () is 1.
Monomial = tuple[tuple[int, int], ...]


class FormalPoly:
    """Sparse polynomial in the a_i over F_p."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: dict[Monomial, int] | None = None):
        self.p = p
        clean: dict[Monomial, int] = {}
        if terms:
            for m, c in terms.items():
                c %= p
                if c:
                    clean[m] = c
        self.terms = clean

    @classmethod
    def zero(cls, p: int) -> "FormalPoly":
        return cls(p)

    @classmethod
    def const(cls, p: int, c: int) -> "FormalPoly":
        return cls(p, {(): c})

    @classmethod
    def gen(cls, p: int, i: int) -> "FormalPoly":
        """The generator a_i; a_0 is the constant 1."""
        if i < 0:
            raise ValueError("generator index must be >= 0")
        if i == 0:
            return cls.const(p, 1)
        return cls(p, {((i, 1),): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FormalPoly") -> "FormalPoly":
        merged = dict(self.terms)
        for m, c in other.terms.items():
            v = (merged.get(m, 0) + c) % self.p
            if v:
                merged[m] = v
            else:
                merged.pop(m, None)
        out = FormalPoly.__new__(FormalPoly)
        out.p = self.p
        out.terms = merged
        return out

    def __mul__(self, other: "FormalPoly") -> "FormalPoly":
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                v = (out.get(m, 0) + c1 * c2) % self.p
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return FormalPoly(self.p, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FormalPoly)
            and other.p == self.p
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def specialize_zero(self) -> int:
        """Value under a_i -> 0 for all i >= 1 (only the constant survives)."""
        return self.constant_term()

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for m, c in sorted(self.terms.items()):
            body = "*".join(
                f"a{i}" if e == 1 else f"a{i}^{e}" for i, e in m
            )
            if not body:
                chunks.append(str(c))
            elif c == 1:
                chunks.append(body)
            else:
                chunks.append(f"{c}*{body}")
        return " + ".join(chunks)

    __repr__ = __str__


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    acc: dict[int, int] = {}
    for i, e in m1:
        acc[i] = acc.get(i, 0) + e
    for i, e in m2:
        acc[i] = acc.get(i, 0) + e
    return tuple(sorted(acc.items()))


class GossPolynomial:
    """G_n for a given q, stored as degree -> formal coefficient."""

    __slots__ = ("n", "q", "p", "coeffs")

    def __init__(self, n: int, q: int, p: int, coeffs: dict[int, FormalPoly]):
        self.n = n
        self.q = q
        self.p = p
        self.coeffs = {d: c for d, c in coeffs.items() if not c.is_zero()}

    def degree(self) -> int:
        return max(self.coeffs) if self.coeffs else -1

    def is_monic(self) -> bool:
        return self.coeffs.get(self.degree()) == FormalPoly.const(self.p, 1)

    def divisible_by_x(self) -> bool:
        return 0 not in self.coeffs

    def specialize_zero(self) -> dict[int, int]:
        """Coefficients under a_i -> 0."""
        out = {}
        for d, c in self.coeffs.items():
            v = c.specialize_zero()
            if v:
                out[d] = v
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GossPolynomial)
            and (other.n, other.q, other.p) == (self.n, self.q, self.p)
            and other.coeffs == self.coeffs
        )

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for d in sorted(self.coeffs, reverse=True):
            c = self.coeffs[d]
            xpart = "X" if d == 1 else f"X^{d}"
            if d == 0:
                chunks.append(str(c) if len(c.terms) == 1 else f"({c})")
                continue
            if c == FormalPoly.const(self.p, 1):
                chunks.append(xpart)
            elif len(c.terms) == 1:
                chunks.append(f"{c}*{xpart}")
            else:
                chunks.append(f"({c})*{xpart}")
        return " + ".join(chunks)

    __repr__ = __str__

    def to_json(self) -> dict[str, str]:
        return {str(d): str(self.coeffs[d]) for d in sorted(self.coeffs, reverse=True)}


def goss_table(n_max: int, q: int, p: int | None = None) -> list[GossPolynomial]:
    """[G_1, ..., G_n_max], sharing the recursion prefix."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if p is None:
        p, _ = factor_prime_power(q)
    else:
        pq, _ = factor_prime_power(q)
        if pq != p:
            raise ValueError(f"characteristic {p} does not divide {q}")
    one = FormalPoly.const(p, 1)
    table: list[dict[int, FormalPoly]] = [{1: one}]  # G_1 = X
    for n in range(2, n_max + 1):
        acc: dict[int, FormalPoly] = {}
        i = 0
        qi = 1
        while qi <= n - 1:
            ai = FormalPoly.gen(p, i)
            prev = table[n - qi - 1]  # G_{n - q^i}; the bound keeps n - q^i >= 1
            assert n - qi >= 1
            for d, c in prev.items():
                v = acc.get(d)
                term = ai * c
                acc[d] = term if v is None else v + term
            i += 1
            qi *= q
        shifted = {d + 1: c for d, c in acc.items() if not c.is_zero()}
        table.append(shifted)
    return [GossPolynomial(n + 1, q, p, coeffs) for n, coeffs in enumerate(table)]


def goss(n: int, q: int, p: int | None = None) -> GossPolynomial:
    if n < 1:
        raise ValueError("n must be >= 1")
    return goss_table(n, q, p)[-1]
