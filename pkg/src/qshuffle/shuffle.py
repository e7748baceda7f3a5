"""The recursive q-shuffle products.

Two products live here.  shuffle_r is the product on the span of y-free
words, defined by recursion on index tuples.  shuffle_e is the product on
the span of all normal-form words, defined by case dispatch:

    (i)   1 is the unit;
    (ii)  (x-word) * (y-word) concatenates;
    (iii) two x-words multiply by the same recursion as shuffle_r;
    (iv)  two y-words multiply by the y-recursion, which carries two extra
          coefficient sums (one appending x_j, one appending y_j);
    (v)   mixed words split as (x1*x2) * (y1*y2);
    (vi)  everything extends bilinearly.

The y-recursion terminates because every recursive call strictly lowers
(total y-degree, total depth) lexicographically; the split in (v) lowers
total depth at fixed y-degree and its recombination only produces pairs
that fall into cases (ii)/(iii) or a strictly smaller split.

shuffle_e deliberately does not delegate its x-word case to shuffle_r:
the two products keep separate code paths and separate caches so that
agreement on y-free input is a meaningful cross-check rather than a
tautology.

Caching is observationally pure: any result computed with the cache
enabled equals the result computed with it disabled.  Cache keys order
the word pair canonically, which halves the table.  Contexts may be
shared across threads; entries are only ever written with the value the
cache-free computation would produce, so a lost race costs recomputation,
never correctness.
"""

from __future__ import annotations

from .fields import PrimeField, delta_coeff, factor_prime_power
from .words import Element, Index, TensorElement, Word


class ShuffleContext:
    """Carries q (the modulus q-1 of the coefficient sums), p = char, and memo tables."""

    def __init__(self, q: int, use_cache: bool = True):
        p, e = factor_prime_power(q)
        self.q = q
        self.p = p
        self.field = PrimeField(p)
        self.use_cache = use_cache
        self._cache_r: dict[tuple[Index, Index], Element] = {}
        self._cache_e: dict[tuple, Element] = {}

    def __repr__(self) -> str:
        return f"ShuffleContext(q={self.q})"

    # -- public products ---------------------------------------------------

    def shuffle_r(self, u: Element, v: Element) -> Element:
        """Product on the y-free span; rejects operands with y-letters."""
        self._check_field(u)
        self._check_field(v)
        if not u.in_r() or not v.in_r():
            raise ValueError("shuffle_r operands must be y-free")
        out = Element.zero(self.field)
        for wu, cu in u.terms.items():
            for wv, cv in v.terms.items():
                out = out + self._word_r(wu.x, wv.x).scale(cu * cv)
        return out

    def shuffle_e(self, u: Element, v: Element) -> Element:
        """Product on the full span of normal-form words."""
        self._check_field(u)
        self._check_field(v)
        out = Element.zero(self.field)
        for wu, cu in u.terms.items():
            for wv, cv in v.terms.items():
                out = out + self._word_e(wu, wv).scale(cu * cv)
        return out

    def shuffle(self, u: Element, v: Element, algebra: str = "E") -> Element:
        if algebra == "R":
            return self.shuffle_r(u, v)
        if algebra == "E":
            return self.shuffle_e(u, v)
        raise ValueError(f"unknown algebra {algebra!r}")

    def power(self, u: Element, n: int, algebra: str = "E") -> Element:
        """Left-associated n-fold product; n = 0 gives the unit."""
        if n < 0:
            raise ValueError("power exponent must be >= 0")
        out = Element.one(self.field)
        for _ in range(n):
            out = self.shuffle(out, u, algebra)
        return out

    def tensor_shuffle(self, s: TensorElement, t: TensorElement, algebra: str = "E") -> TensorElement:
        """Componentwise product: (u (x) v) * (u' (x) v') = (u*u') (x) (v*v')."""
        self._check_field(s)
        self._check_field(t)
        out = TensorElement.zero(self.field)
        for (a1, a2), c in s.terms.items():
            ea1 = Element.from_word(self.field, a1)
            ea2 = Element.from_word(self.field, a2)
            for (b1, b2), d in t.terms.items():
                left = self.shuffle(ea1, Element.from_word(self.field, b1), algebra)
                right = self.shuffle(ea2, Element.from_word(self.field, b2), algebra)
                out = out + TensorElement.of(left, right).scale(c * d)
        return out

    def clear_cache(self) -> None:
        self._cache_r.clear()
        self._cache_e.clear()

    def _check_field(self, u) -> None:
        if u.field != self.field:
            raise ValueError(f"operand over {u.field} does not match context char {self.p}")

    # -- y-free recursion --------------------------------------------------

    def _word_r(self, a: Index, b: Index) -> Element:
        if not a:
            return Element.from_word(self.field, Word(b, ()))
        if not b:
            return Element.from_word(self.field, Word(a, ()))
        key = (a, b) if a <= b else (b, a)
        if self.use_cache:
            hit = self._cache_r.get(key)
            if hit is not None:
                return hit
        a1, b1 = a[0], b[0]
        s = a1 + b1
        res = (
            self._word_r(a[1:], b).left_mul_letter("x", a1)
            + self._word_r(a, b[1:]).left_mul_letter("x", b1)
            + self._word_r(a[1:], b[1:]).left_mul_letter("x", s)
        )
        tails = None
        for j in range(self.q - 1, s, self.q - 1):
            c = delta_coeff(a1, b1, j, self.p)
            if not c:
                continue
            if tails is None:
                tails = self._word_r(a[1:], b[1:])
            hooked = self._r_elem_times_index(tails, (j,))
            res = res + hooked.left_mul_letter("x", s - j).scale(c)
        if self.use_cache:
            self._cache_r[key] = res
        return res

    def _r_elem_times_index(self, e: Element, b: Index) -> Element:
        out = Element.zero(self.field)
        for w, c in e.terms.items():
            out = out + self._word_r(w.x, b).scale(c)
        return out

    # -- full recursion ----------------------------------------------------

    def _word_e(self, w1: Word, w2: Word) -> Element:
        if w1.is_empty():
            return Element.from_word(self.field, w2)
        if w2.is_empty():
            return Element.from_word(self.field, w1)
        k1, k2 = (w1.x, w1.y), (w2.x, w2.y)
        key = (k1, k2) if k1 <= k2 else (k2, k1)
        if self.use_cache:
            hit = self._cache_e.get(key)
            if hit is not None:
                return hit
        if w1.is_x_word() and w2.is_x_word():
            res = self._word_e_xx(w1.x, w2.x)
        elif w1.is_x_word() and w2.is_y_word():
            res = Element.from_word(self.field, w1.concat(w2))
        elif w1.is_y_word() and w2.is_x_word():
            res = Element.from_word(self.field, w2.concat(w1))
        elif w1.is_y_word() and w2.is_y_word():
            res = self._word_e_yy(w1.y, w2.y)
        else:
            res = self._word_e_mixed(w1, w2)
        if self.use_cache:
            self._cache_e[key] = res
        return res

    def _word_e_xx(self, a: Index, b: Index) -> Element:
        # same recursion as _word_r, kept separate on purpose (see module docstring)
        a1, b1 = a[0], b[0]
        s = a1 + b1
        res = (
            self._word_e(Word(a[1:], ()), Word(b, ())).left_mul_letter("x", a1)
            + self._word_e(Word(a, ()), Word(b[1:], ())).left_mul_letter("x", b1)
            + self._word_e(Word(a[1:], ()), Word(b[1:], ())).left_mul_letter("x", s)
        )
        tails = None
        for j in range(self.q - 1, s, self.q - 1):
            c = delta_coeff(a1, b1, j, self.p)
            if not c:
                continue
            if tails is None:
                tails = self._word_e(Word(a[1:], ()), Word(b[1:], ()))
            hooked = self._e_elem_times_word(tails, Word((j,), ()))
            res = res + hooked.left_mul_letter("x", s - j).scale(c)
        return res

    def _word_e_yy(self, a: Index, b: Index) -> Element:
        a1, b1 = a[0], b[0]
        s = a1 + b1
        ya_t = Word((), a[1:])
        yb_t = Word((), b[1:])
        res = (
            self._word_e(ya_t, Word((), b)).left_mul_letter("y", a1)
            + self._word_e(Word((), a), yb_t).left_mul_letter("y", b1)
            + self._word_e(ya_t, yb_t).left_mul_letter("y", s)
        )
        tails = None
        for j in range(self.q - 1, s, self.q - 1):
            c = delta_coeff(a1, b1, j, self.p)
            if not c:
                continue
            if tails is None:
                tails = self._word_e(ya_t, yb_t)
            hooked_x = self._e_elem_times_word(tails, Word((j,), ()))
            hooked_y = self._e_elem_times_word(tails, Word((), (j,)))
            res = res + (hooked_x + hooked_y).left_mul_letter("y", s - j).scale(c)
        return res

    def _word_e_mixed(self, w1: Word, w2: Word) -> Element:
        xpart = self._word_e(Word(w1.x, ()), Word(w2.x, ()))
        ypart = self._word_e(Word((), w1.y), Word((), w2.y))
        out = Element.zero(self.field)
        for wx, cx in xpart.terms.items():
            for wy, cy in ypart.terms.items():
                out = out + self._word_e(wx, wy).scale(cx * cy)
        return out

    def _e_elem_times_word(self, e: Element, w: Word) -> Element:
        out = Element.zero(self.field)
        for t, c in e.terms.items():
            out = out + self._word_e(t, w).scale(c)
        return out
