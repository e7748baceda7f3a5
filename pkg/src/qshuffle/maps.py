"""Maps between the y-free span and the full word span.

ehat sends x_a to the sum of split words x_(tail) y_(head) over all split
points; it is an algebra homomorphism for the shuffle products and its
image of the word basis is triangular with respect to y-degree:

    ehat(x_b) = y_b + (terms of strictly smaller y-degree).

pi_hat is the projection that keeps exactly the y-free terms.  phi sends
u (x) v to u * ehat(v) and is an algebra isomorphism onto the full span;
phi_inv inverts it by eliminating words from the highest y-degree down,
which the triangularity above makes terminate in at most (max y-degree
plus one) passes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .shuffle import ShuffleContext
from .words import Element, Index, TensorElement, Word


def _require_y_free(u: Element, what: str) -> None:
    if not u.in_r():
        raise ValueError(f"{what} must be y-free")


def ehat_word(index: Index, fieldp) -> Element:
    """ehat of the single word x_index."""
    terms = {}
    m = len(index)
    for i in range(m + 1):
        w = Word(index[i:], index[:i])
        terms[w] = terms.get(w, 0) + 1
    return Element(fieldp, terms)


def ehat(u: Element) -> Element:
    _require_y_free(u, "ehat input")
    out = Element.zero(u.field)
    for w, c in u.terms.items():
        out = out + ehat_word(w.x, u.field).scale(c)
    return out


def iota(u: Element) -> Element:
    """Inclusion of the y-free span; the identity on representations."""
    _require_y_free(u, "iota input")
    return u


def pi_hat(u: Element) -> Element:
    """Keep the y-free terms, drop everything else."""
    return Element(u.field, {w: c for w, c in u.terms.items() if w.is_x_word()})


def phi(t: TensorElement, ctx: ShuffleContext) -> Element:
    """u (x) v  |->  u * ehat(v), extended linearly."""
    if not t.in_r_tensor_r():
        raise ValueError("phi input must have y-free tensor legs")
    out = Element.zero(t.field)
    for (w1, w2), c in t.terms.items():
        left = Element.from_word(t.field, w1)
        out = out + ctx.shuffle_e(left, ehat_word(w2.x, t.field)).scale(c)
    return out


def phi_inv(u: Element, ctx: ShuffleContext) -> TensorElement:
    """Inverse of phi by top-down elimination on y-degree.

    Every word x_a y_b is the unique top term of phi(x_a (x) x_b), so
    reading off the highest-y-degree layer of the residual, subtracting its
    phi image, and repeating strictly lowers the maximal y-degree.
    """
    result = TensorElement.zero(u.field)
    residual = u
    while not residual.is_zero():
        top = max(w.ydeg for w in residual.terms)
        layer = TensorElement(
            u.field,
            {
                (Word(w.x, ()), Word(w.y, ())): c
                for w, c in residual.terms.items()
                if w.ydeg == top
            },
        )
        result = result + layer
        residual = residual - phi(layer, ctx)
        if not residual.is_zero():
            new_top = max(w.ydeg for w in residual.terms)
            assert new_top < top, "elimination failed to lower the y-degree"
    return result


@dataclass
class BasisDecomposition:
    """Coordinates of an element over the basis {ehat(x_b)} with y-free coefficients."""

    coordinates: dict[Index, Element] = field(default_factory=dict)

    def reconstruct(self, ctx: ShuffleContext) -> Element:
        out = None
        for b, coeff in self.coordinates.items():
            term = ctx.shuffle_e(coeff, ehat_word(b, coeff.field))
            out = term if out is None else out + term
        if out is None:
            raise ValueError("empty decomposition has no field to reconstruct over")
        return out

    def __iter__(self):
        return iter(sorted(self.coordinates.items()))


def rbasis_decompose(u: Element, ctx: ShuffleContext) -> BasisDecomposition:
    """Collect phi_inv(u) by its second tensor leg."""
    t = phi_inv(u, ctx)
    coords: dict[Index, dict[Word, int]] = {}
    for (w1, w2), c in t.terms.items():
        coords.setdefault(w2.x, {})[w1] = c
    return BasisDecomposition(
        {b: Element(u.field, terms) for b, terms in coords.items()}
    )
