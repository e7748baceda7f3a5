"""Hopf structure tables on the word algebras and their transport.

A Hopf structure on the y-free subalgebra is supplied as explicit tables
(coproduct, counit, antipode) on every word up to a weight bound.  The
tables are input data: this module validates their grading, transports
them to the full algebra, and checks the Hopf axioms word by word on the
truncation.  It never tries to construct a structure itself.

Transport recurses on the depth of the y-index, with the empty word
mapping to the unit.  Writing b^(i) for the index b with its first i
entries dropped and b_(i) for those first i entries:

    coproduct^e(y_b)     = (ehat (x) ehat)(coproduct(x_b))
                           - sum_{i=0..dep(b)-1} coproduct(x_{b^(i)}) * coproduct^e(y_{b_(i)})
    coproduct^e(x_a y_b) = coproduct(x_a) * coproduct^e(y_b)

and the counit and antipode follow the same scheme, the antipode seeded
with ehat(antipode(x_b)).  All products are componentwise q-shuffle
products on tensors.  Weight grading of the input tables keeps every
intermediate inside the truncation, so transport is total on words of
weight <= the bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fields import PrimeField, factor_prime_power
from .maps import ehat
from .shuffle import ShuffleContext
from .words import (
    EMPTY_WORD,
    Element,
    TensorElement,
    Word,
    e_words,
    element_from_json,
    element_to_json,
    format_word,
    parse_element,
    parse_tensor,
    parse_word,
    r_words,
    tensor_from_json,
    tensor_to_json,
)

AXIOM_NAMES = ("coassociativity", "counit", "antipode", "coproduct-is-algebra-hom")


class HopfStructureBase:
    """Shared table container; validates totality and weight grading."""

    algebra = "?"

    def __init__(
        self,
        q: int,
        weight_bound: int,
        coproduct: dict[Word, TensorElement],
        counit: dict[Word, int],
        antipode: dict[Word, Element],
    ):
        p, _ = factor_prime_power(q)
        if weight_bound < 0:
            raise ValueError("weight bound must be >= 0")
        self.q = q
        self.p = p
        self.field = PrimeField(p)
        self.weight_bound = weight_bound
        self.coproduct = dict(coproduct)
        self.counit = {w: c % p for w, c in counit.items()}
        self.antipode = dict(antipode)
        self._validate()

    def basis(self, cap: int | None = None) -> list[Word]:
        raise NotImplementedError

    def _validate(self) -> None:
        for w in self.basis():
            for label, table in (
                ("coproduct", self.coproduct),
                ("counit", self.counit),
                ("antipode", self.antipode),
            ):
                if w not in table:
                    raise ValueError(f"{label} table missing word {format_word(w)}")
            t = self.coproduct[w]
            for (u, v), _ in t.terms.items():
                if u.weight + v.weight != w.weight:
                    raise ValueError(
                        f"coproduct of {format_word(w)} breaks weight grading at "
                        f"{format_word(u)} (x) {format_word(v)}"
                    )
            for u in self.antipode[w].terms:
                if u.weight != w.weight:
                    raise ValueError(
                        f"antipode of {format_word(w)} breaks weight grading at {format_word(u)}"
                    )

    def to_json(self) -> dict:
        words = self.basis()
        doc = {
            "algebra": self.algebra,
            "q": self.q,
            "weight_bound": self.weight_bound,
            "coproduct": [
                {"word": format_word(w), "image": tensor_to_json(self.coproduct[w])}
                for w in words
            ],
            "counit": [{"word": format_word(w), "value": self.counit[w]} for w in words],
            "antipode": [
                {"word": format_word(w), "image": element_to_json(self.antipode[w])}
                for w in words
            ],
        }
        if self.algebra == "R":
            del doc["algebra"]  # y-free structures use the plain document shape
        return doc


class HopfStructureR(HopfStructureBase):
    """Hopf tables on y-free words of weight <= weight_bound."""

    algebra = "R"

    def basis(self, cap: int | None = None) -> list[Word]:
        bound = self.weight_bound if cap is None else cap
        return r_words(bound)

    def _validate(self) -> None:
        super()._validate()
        for w in self.basis():
            if not self.coproduct[w].in_r_tensor_r():
                raise ValueError(f"coproduct of {format_word(w)} leaves the y-free subalgebra")
            if not self.antipode[w].in_r():
                raise ValueError(f"antipode of {format_word(w)} leaves the y-free subalgebra")


class HopfStructureE(HopfStructureBase):
    """Hopf tables on all words of weight <= weight_bound."""

    algebra = "E"

    def basis(self, cap: int | None = None) -> list[Word]:
        bound = self.weight_bound if cap is None else cap
        return e_words(bound)


def _image_tensor(fieldp: PrimeField, image) -> TensorElement:
    if isinstance(image, str):
        return parse_tensor(image, fieldp)
    return tensor_from_json(image, fieldp)


def _image_element(fieldp: PrimeField, image) -> Element:
    if isinstance(image, str):
        return parse_element(image, fieldp)
    return element_from_json(image, fieldp)


def hopf_from_json(doc: dict) -> HopfStructureBase:
    """Build a structure from the table document; words use the text grammar."""
    for key in ("q", "weight_bound", "coproduct", "counit", "antipode"):
        if key not in doc:
            raise ValueError(f"structure document missing key {key!r}")
    q = doc["q"]
    p, _ = factor_prime_power(q)
    fieldp = PrimeField(p)
    cls = {"R": HopfStructureR, "E": HopfStructureE}.get(doc.get("algebra", "R"))
    if cls is None:
        raise ValueError(f"unknown algebra {doc.get('algebra')!r}")
    coproduct = {
        parse_word(entry["word"]): _image_tensor(fieldp, entry["image"])
        for entry in doc["coproduct"]
    }
    counit = {parse_word(entry["word"]): int(entry["value"]) for entry in doc["counit"]}
    antipode = {
        parse_word(entry["word"]): _image_element(fieldp, entry["image"])
        for entry in doc["antipode"]
    }
    return cls(q, doc["weight_bound"], coproduct, counit, antipode)


def delta_of_element(h: HopfStructureBase, u: Element) -> TensorElement:
    out = TensorElement.zero(h.field)
    for w, c in u.terms.items():
        out = out + h.coproduct[w].scale(c)
    return out


def counit_of_element(h: HopfStructureBase, u: Element) -> int:
    acc = 0
    for w, c in u.terms.items():
        acc = h.field.add(acc, h.field.mul(c, h.counit[w]))
    return acc


def antipode_of_element(h: HopfStructureBase, u: Element) -> Element:
    out = Element.zero(h.field)
    for w, c in u.terms.items():
        out = out + h.antipode[w].scale(c)
    return out


def _tensor_apply(t: TensorElement, f) -> TensorElement:
    """Apply a word -> Element map to both tensor legs, bilinearly."""
    out = TensorElement.zero(t.field)
    for (u, v), c in t.terms.items():
        out = out + TensorElement.of(f(u), f(v)).scale(c)
    return out


def transport_coproduct(src: HopfStructureR, ctx: ShuffleContext) -> dict[Word, TensorElement]:
    """Coproduct tables on all words of weight <= src.weight_bound."""
    _check_transport_args(src, ctx)
    fieldp = src.field
    memo: dict[tuple, TensorElement] = {}

    def on_y(b) -> TensorElement:
        if not b:
            return TensorElement.of(Element.one(fieldp), Element.one(fieldp))
        got = memo.get(b)
        if got is not None:
            return got
        acc = _tensor_apply(src.coproduct[Word(b, ())], lambda w: ehat(Element.from_word(fieldp, w)))
        for i in range(len(b)):
            head = src.coproduct[Word(b[i:], ())]
            acc = acc - ctx.tensor_shuffle(head, on_y(b[:i]), "E")
        memo[b] = acc
        return acc

    table: dict[Word, TensorElement] = {}
    for w in e_words(src.weight_bound):
        img = on_y(w.y)
        if w.x:
            img = ctx.tensor_shuffle(src.coproduct[Word(w.x, ())], img, "E")
        table[w] = img
    return table


def transport_counit(src: HopfStructureR) -> dict[Word, int]:
    """Counit values on all words of weight <= src.weight_bound."""
    fld = src.field
    memo: dict[tuple, int] = {}

    def on_y(b) -> int:
        if not b:
            return 1
        got = memo.get(b)
        if got is not None:
            return got
        acc = src.counit[Word(b, ())]
        for i in range(len(b)):
            acc = fld.sub(acc, fld.mul(src.counit[Word(b[i:], ())], on_y(b[:i])))
        memo[b] = acc
        return acc

    table: dict[Word, int] = {}
    for w in e_words(src.weight_bound):
        val = on_y(w.y)
        if w.x:
            val = fld.mul(src.counit[Word(w.x, ())], val)
        table[w] = val
    return table


def transport_antipode(src: HopfStructureR, ctx: ShuffleContext) -> dict[Word, Element]:
    """Antipode images on all words of weight <= src.weight_bound."""
    _check_transport_args(src, ctx)
    fieldp = src.field
    memo: dict[tuple, Element] = {}

    def on_y(b) -> Element:
        if not b:
            return Element.one(fieldp)
        got = memo.get(b)
        if got is not None:
            return got
        acc = ehat(src.antipode[Word(b, ())])
        for i in range(len(b)):
            acc = acc - ctx.shuffle_e(src.antipode[Word(b[i:], ())], on_y(b[:i]))
        memo[b] = acc
        return acc

    table: dict[Word, Element] = {}
    for w in e_words(src.weight_bound):
        img = on_y(w.y)
        if w.x:
            img = ctx.shuffle_e(src.antipode[Word(w.x, ())], img)
        table[w] = img
    return table


def transport(src: HopfStructureR, ctx: ShuffleContext) -> HopfStructureE:
    return HopfStructureE(
        src.q,
        src.weight_bound,
        transport_coproduct(src, ctx),
        transport_counit(src),
        transport_antipode(src, ctx),
    )


def _check_transport_args(src: HopfStructureBase, ctx: ShuffleContext) -> None:
    if ctx.q != src.q:
        raise ValueError(f"context is for q={ctx.q}, structure for q={src.q}")


@dataclass
class AxiomReport:
    axiom: str
    verdict: str
    witnesses: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "verdict": self.verdict,
            "witnesses": [
                {"word": w, "lhs": lhs, "rhs": rhs} for (w, lhs, rhs) in self.witnesses
            ],
        }


def _triple_left(h: HopfStructureBase, t: TensorElement) -> dict:
    """(coproduct (x) id) applied to a tensor, as a word-triple dict."""
    fld = h.field
    out: dict = {}
    for (u, v), c in t.terms.items():
        for (a, b), c2 in h.coproduct[u].terms.items():
            key = (a, b, v)
            val = fld.add(out.get(key, 0), fld.mul(c, c2))
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return out


def _triple_right(h: HopfStructureBase, t: TensorElement) -> dict:
    fld = h.field
    out: dict = {}
    for (u, v), c in t.terms.items():
        for (a, b), c2 in h.coproduct[v].terms.items():
            key = (u, a, b)
            val = fld.add(out.get(key, 0), fld.mul(c, c2))
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return out


def _format_triple(t: dict) -> str:
    if not t:
        return "0"
    parts = []
    for key in sorted(t, key=lambda k: (k[0].sort_key(), k[1].sort_key(), k[2].sort_key())):
        c = t[key]
        body = " (x) ".join(format_word(w) for w in key)
        parts.append(body if c == 1 else f"{c}*{body}")
    return " + ".join(parts)


def check_axioms(h: HopfStructureBase, ctx: ShuffleContext, weight_cap: int) -> list[AxiomReport]:
    """Pointwise Hopf-axiom verification on all words of weight <= weight_cap."""
    if weight_cap > h.weight_bound:
        raise ValueError(f"weight cap {weight_cap} exceeds table bound {h.weight_bound}")
    _check_transport_args(h, ctx)
    algebra = h.algebra
    words = h.basis(weight_cap)
    fld = h.field
    one = Element.one(fld)

    coassoc = AxiomReport("coassociativity", "pass")
    for w in words:
        t = h.coproduct[w]
        lhs = _triple_left(h, t)
        rhs = _triple_right(h, t)
        if lhs != rhs:
            coassoc.verdict = "fail"
            coassoc.witnesses.append((format_word(w), _format_triple(lhs), _format_triple(rhs)))

    counit = AxiomReport("counit", "pass")
    for w in words:
        expected = Element.from_word(fld, w)
        left = Element.zero(fld)
        right = Element.zero(fld)
        for (u, v), c in h.coproduct[w].terms.items():
            left = left + Element.from_word(fld, v).scale(fld.mul(c, h.counit[u]))
            right = right + Element.from_word(fld, u).scale(fld.mul(c, h.counit[v]))
        if left != expected or right != expected:
            counit.verdict = "fail"
            counit.witnesses.append((format_word(w), f"{left} / {right}", str(expected)))

    antipode = AxiomReport("antipode", "pass")
    for w in words:
        target = one.scale(h.counit[w])
        left = Element.zero(fld)
        right = Element.zero(fld)
        for (u, v), c in h.coproduct[w].terms.items():
            left = left + ctx.shuffle(h.antipode[u], Element.from_word(fld, v), algebra).scale(c)
            right = right + ctx.shuffle(Element.from_word(fld, u), h.antipode[v], algebra).scale(c)
        if left != target or right != target:
            antipode.verdict = "fail"
            antipode.witnesses.append((format_word(w), f"{left} / {right}", str(target)))

    hom = AxiomReport("coproduct-is-algebra-hom", "pass")
    unit_tensor = TensorElement.of(one, one)
    if h.coproduct[EMPTY_WORD] != unit_tensor:
        hom.verdict = "fail"
        hom.witnesses.append(
            (format_word(EMPTY_WORD), str(h.coproduct[EMPTY_WORD]), str(unit_tensor))
        )
    for w1 in words:
        for w2 in words:
            if w1.weight + w2.weight > weight_cap:
                continue
            prod = ctx.shuffle(Element.from_word(fld, w1), Element.from_word(fld, w2), algebra)
            lhs_t = delta_of_element(h, prod)
            rhs_t = ctx.tensor_shuffle(h.coproduct[w1], h.coproduct[w2], algebra)
            pair = f"{format_word(w1)} , {format_word(w2)}"
            if lhs_t != rhs_t:
                hom.verdict = "fail"
                hom.witnesses.append((pair, str(lhs_t), str(rhs_t)))
            lhs_c = counit_of_element(h, prod)
            rhs_c = fld.mul(h.counit[w1], h.counit[w2])
            if lhs_c != rhs_c:
                hom.verdict = "fail"
                hom.witnesses.append((pair, f"counit {lhs_c}", f"counit {rhs_c}"))

    return [coassoc, counit, antipode, hom]
