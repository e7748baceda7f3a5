"""Exhaustive bounded-weight verification sweeps.

Every sweep enumerates all admissible tuples up to a weight cap, runs an
exact identity check on each, and returns a VerificationReport with
counts and failure witnesses.  Failures are data, not exceptions.

The commutativity sweep evaluates the two orientations in two separate
contexts.  A shared context would serve both orders from one cache entry
(keys are canonically ordered pairs), which would make the comparison
vacuous.

Sweeps honor the QSHUFFLE_THREADS environment variable; results are
collected in input order either way, so reports are deterministic.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .fields import FiniteField, delta_coeff
from .goss import goss_table
from .maps import ehat, ehat_word, phi, phi_inv, pi_hat, rbasis_decompose
from .shuffle import ShuffleContext
from .words import (
    Element,
    TensorElement,
    Word,
    all_indices,
    e_words,
    format_word,
    r_words,
)
from .zeta import check_shuffle_oracle

MAX_WITNESSES = 25


@dataclass
class VerificationReport:
    property: str
    params: dict
    checked: int
    passed: int
    failed: int
    witnesses: list = field(default_factory=list)
    wall_ms: float = 0.0
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        # no wall time: identical runs must serialize identically
        doc = {
            "property": self.property,
            "params": self.params,
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "witnesses": list(self.witnesses),
        }
        if self.seed is not None:
            doc["seed"] = self.seed
        return doc

    def render_text(self) -> str:
        pieces = " ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [
            f"property: {self.property}",
            f"params: {pieces}",
            f"checked: {self.checked}  passed: {self.passed}  failed: {self.failed}",
        ]
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        for w in self.witnesses:
            lines.append(f"  witness: {w}")
        lines.append(f"wall: {self.wall_ms:.0f} ms")
        return "\n".join(lines)


def _thread_count() -> int:
    raw = os.environ.get("QSHUFFLE_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def _run(items, check) -> list:
    n = _thread_count()
    if n <= 1 or len(items) < 2:
        return [check(item) for item in items]
    with ThreadPoolExecutor(max_workers=n) as ex:
        return list(ex.map(check, items))


def _report(name: str, params: dict, results: list, t0: float) -> VerificationReport:
    witnesses = [w for w in results if w is not None]
    failed = len(witnesses)
    return VerificationReport(
        property=name,
        params=params,
        checked=len(results),
        passed=len(results) - failed,
        failed=failed,
        witnesses=witnesses[:MAX_WITNESSES],
        wall_ms=(time.perf_counter() - t0) * 1000.0,
    )


def _el(ctx: ShuffleContext, w: Word) -> Element:
    return Element.from_word(ctx.field, w)


# -- products ---------------------------------------------------------------


def sweep_comm(q: int, weight_cap: int, algebra: str = "R") -> VerificationReport:
    """u*v = v*u, each orientation in its own context (see module docstring)."""
    t0 = time.perf_counter()
    ctx_lr = ShuffleContext(q)
    ctx_rl = ShuffleContext(q)
    words = r_words(weight_cap) if algebra == "R" else e_words(weight_cap)
    items = [
        (w1, w2)
        for i, w1 in enumerate(words)
        for w2 in words[i:]
        if w1.weight + w2.weight <= weight_cap
    ]

    def check(item):
        w1, w2 = item
        lhs = ctx_lr.shuffle(_el(ctx_lr, w1), _el(ctx_lr, w2), algebra)
        rhs = ctx_rl.shuffle(_el(ctx_rl, w2), _el(ctx_rl, w1), algebra)
        if lhs != rhs:
            return f"{format_word(w1)} * {format_word(w2)}: {lhs} != {rhs}"
        return None

    return _report(
        "comm", {"q": q, "weight_cap": weight_cap, "algebra": algebra}, _run(items, check), t0
    )


def sweep_assoc(q: int, weight_cap: int, algebra: str = "R") -> VerificationReport:
    """(u*v)*w = u*(v*w) over all word triples within the cap."""
    t0 = time.perf_counter()
    ctx = ShuffleContext(q)
    words = r_words(weight_cap) if algebra == "R" else e_words(weight_cap)
    items = [
        (w1, w2, w3)
        for w1 in words
        for w2 in words
        if w1.weight + w2.weight <= weight_cap
        for w3 in words
        if w1.weight + w2.weight + w3.weight <= weight_cap
    ]

    def check(item):
        w1, w2, w3 = item
        e1, e2, e3 = _el(ctx, w1), _el(ctx, w2), _el(ctx, w3)
        lhs = ctx.shuffle(ctx.shuffle(e1, e2, algebra), e3, algebra)
        rhs = ctx.shuffle(e1, ctx.shuffle(e2, e3, algebra), algebra)
        if lhs != rhs:
            names = ", ".join(format_word(w) for w in item)
            return f"({names}): {lhs} != {rhs}"
        return None

    name = "assoc-R" if algebra == "R" else "assoc-E"
    return _report(name, {"q": q, "weight_cap": weight_cap}, _run(items, check), t0)


# -- structure maps ---------------------------------------------------------


def sweep_ehat_hom(q: int, weight_cap: int) -> VerificationReport:
    """ehat(a*b) = ehat(a)*ehat(b) on y-free pairs, and pi(ehat(a)) = a."""
    t0 = time.perf_counter()
    ctx = ShuffleContext(q)
    words = r_words(weight_cap)
    pair_items = [
        ("hom", w1, w2)
        for i, w1 in enumerate(words)
        for w2 in words[i:]
        if w1.weight + w2.weight <= weight_cap
    ]
    section_items = [("section", w, None) for w in words]

    def check(item):
        kind, w1, w2 = item
        if kind == "hom":
            lhs = ehat(ctx.shuffle_r(_el(ctx, w1), _el(ctx, w2)))
            rhs = ctx.shuffle_e(ehat(_el(ctx, w1)), ehat(_el(ctx, w2)))
            if lhs != rhs:
                return f"ehat hom at {format_word(w1)} * {format_word(w2)}: {lhs} != {rhs}"
        else:
            back = pi_hat(ehat(_el(ctx, w1)))
            if back != _el(ctx, w1):
                return f"pi(ehat({format_word(w1)})) = {back}"
        return None

    return _report(
        "ehat-hom",
        {"q": q, "weight_cap": weight_cap},
        _run(pair_items + section_items, check),
        t0,
    )


def sweep_pi_hom(q: int, weight_cap: int) -> VerificationReport:
    """pi(u*v) = pi(u)*pi(v) over all word pairs within the cap."""
    t0 = time.perf_counter()
    ctx = ShuffleContext(q)
    words = e_words(weight_cap)
    items = [
        (w1, w2)
        for i, w1 in enumerate(words)
        for w2 in words[i:]
        if w1.weight + w2.weight <= weight_cap
    ]

    def check(item):
        w1, w2 = item
        lhs = pi_hat(ctx.shuffle_e(_el(ctx, w1), _el(ctx, w2)))
        rhs = ctx.shuffle_r(pi_hat(_el(ctx, w1)), pi_hat(_el(ctx, w2)))
        if lhs != rhs:
            return f"pi hom at {format_word(w1)} * {format_word(w2)}: {lhs} != {rhs}"
        return None

    return _report("pi-hom", {"q": q, "weight_cap": weight_cap}, _run(items, check), t0)


def sweep_phi_iso(q: int, weight_cap: int, hom_cap: int | None = None) -> VerificationReport:
    """phi(phi_inv(w)) = w on words up to weight_cap; phi multiplicative up to hom_cap.

    The homomorphism half runs over word-pair tensors a (x) b, with the
    tensor-product structure taken componentwise, one weight lower by
    default because quadruple enumeration grows much faster.
    """
    t0 = time.perf_counter()
    if hom_cap is None:
        hom_cap = max(weight_cap - 1, 0)
    ctx = ShuffleContext(q)
    items = [("roundtrip", (w,)) for w in e_words(weight_cap)]
    rwords = r_words(hom_cap)
    for a in rwords:
        for b in rwords:
            if a.weight + b.weight > hom_cap:
                continue
            for c in rwords:
                if a.weight + b.weight + c.weight > hom_cap:
                    continue
                for d in rwords:
                    if a.weight + b.weight + c.weight + d.weight > hom_cap:
                        continue
                    items.append(("hom", (a, b, c, d)))

    def check(item):
        kind, ws = item
        if kind == "roundtrip":
            w = ws[0]
            e = _el(ctx, w)
            back = phi(phi_inv(e, ctx), ctx)
            if back != e:
                return f"phi(phi_inv({format_word(w)})) = {back}"
        else:
            a, b, c, d = ws
            t1 = TensorElement.from_pair(ctx.field, a, b)
            t2 = TensorElement.from_pair(ctx.field, c, d)
            lhs = phi(ctx.tensor_shuffle(t1, t2, "R"), ctx)
            rhs = ctx.shuffle_e(phi(t1, ctx), phi(t2, ctx))
            if lhs != rhs:
                names = f"{format_word(a)} (x) {format_word(b)}, {format_word(c)} (x) {format_word(d)}"
                return f"phi hom at {names}: {lhs} != {rhs}"
        return None

    return _report(
        "phi-iso",
        {"q": q, "weight_cap": weight_cap, "hom_cap": hom_cap},
        _run(items, check),
        t0,
    )


def sweep_basis(q: int, weight_cap: int) -> VerificationReport:
    """Every word decomposes over the ehat-image basis and reconstructs exactly."""
    t0 = time.perf_counter()
    ctx = ShuffleContext(q)
    items = e_words(weight_cap)

    def check(w):
        e = _el(ctx, w)
        dec = rbasis_decompose(e, ctx)
        for _, coord in dec:
            if not coord.in_r():
                return f"coordinate of {format_word(w)} leaves the y-free span: {coord}"
        back = dec.reconstruct(ctx)
        if back != e:
            return f"reconstruct({format_word(w)}) = {back}"
        return None

    return _report("basis", {"q": q, "weight_cap": weight_cap}, _run(items, check), t0)


# -- the three expansion identities -----------------------------------------


def sweep_lemma_left_mul(q: int, weight_cap: int) -> VerificationReport:
    """y_w(b*a) = (y_w b)*a for a y-free, b arbitrary, w a letter weight."""
    t0 = time.perf_counter()
    ctx = ShuffleContext(q)
    items = []
    for w in range(1, weight_cap + 1):
        for aw in r_words(weight_cap - w):
            for bw in e_words(weight_cap - w - aw.weight):
                items.append((w, aw, bw))

    def check(item):
        w, aw, bw = item
        a = _el(ctx, aw)
        lhs = ctx.shuffle_e(_el(ctx, bw), a).left_mul_letter("y", w)
        rhs = ctx.shuffle_e(_el(ctx, Word(bw.x, (w,) + bw.y)), a)
        if lhs != rhs:
            return f"w={w} a={format_word(aw)} b={format_word(bw)}: {lhs} != {rhs}"
        return None

    return _report("lemma-3-7", {"q": q, "weight_cap": weight_cap}, _run(items, check), t0)


def sweep_lemma_yx_expansion(q: int, weight_cap: int) -> VerificationReport:
    """First-letter expansion of (y_a x_v)*(y_b x_w) for non-empty a, b."""
    t0 = time.perf_counter()
    ctx = ShuffleContext(q)
    nonempty = [i for i in all_indices(weight_cap) if i]
    everything = all_indices(weight_cap)
    items = []
    for a in nonempty:
        for b in nonempty:
            if sum(a) + sum(b) > weight_cap:
                continue
            for v in everything:
                if sum(a) + sum(b) + sum(v) > weight_cap:
                    continue
                for w in everything:
                    if sum(a) + sum(b) + sum(v) + sum(w) > weight_cap:
                        continue
                    items.append((a, b, v, w))

    def check(item):
        a, b, v, w = item
        w1, w2 = Word(v, a), Word(w, b)
        lhs = ctx.shuffle_e(_el(ctx, w1), _el(ctx, w2))
        a1, b1 = a[0], b[0]
        w1tail, w2tail = Word(v, a[1:]), Word(w, b[1:])
        tails = ctx.shuffle_e(_el(ctx, w1tail), _el(ctx, w2tail))
        rhs = (
            ctx.shuffle_e(_el(ctx, w1tail), _el(ctx, w2)).left_mul_letter("y", a1)
            + ctx.shuffle_e(_el(ctx, w1), _el(ctx, w2tail)).left_mul_letter("y", b1)
            + tails.left_mul_letter("y", a1 + b1)
        )
        s = a1 + b1
        for j in range(q - 1, s, q - 1):
            c = delta_coeff(a1, b1, j, ctx.p)
            if c:
                hooked = ctx.shuffle_e(tails, ehat_word((j,), ctx.field))
                rhs = rhs + hooked.left_mul_letter("y", s - j).scale(c)
        if lhs != rhs:
            label = f"a={a} b={b} v={v} w={w}"
            return f"{label}: {lhs} != {rhs}"
        return None

    return _report("lemma-3-8", {"q": q, "weight_cap": weight_cap}, _run(items, check), t0)


def sweep_lemma_ye_expansion(q: int, weight_cap: int) -> VerificationReport:
    """First-letter expansion of (y_a ehat(x_A))*(y_b ehat(x_B)) for letters a, b."""
    t0 = time.perf_counter()
    ctx = ShuffleContext(q)
    everything = all_indices(weight_cap)
    items = []
    for a in range(1, weight_cap + 1):
        for b in range(1, weight_cap + 1 - a):
            for ia in everything:
                if a + b + sum(ia) > weight_cap:
                    continue
                for ib in everything:
                    if a + b + sum(ia) + sum(ib) > weight_cap:
                        continue
                    items.append((a, b, ia, ib))

    def check(item):
        a, b, ia, ib = item
        ea = ehat_word(ia, ctx.field)
        eb = ehat_word(ib, ctx.field)
        ya_ea = ea.left_mul_letter("y", a)
        yb_eb = eb.left_mul_letter("y", b)
        lhs = ctx.shuffle_e(ya_ea, yb_eb)
        ee = ctx.shuffle_e(ea, eb)
        rhs = (
            ctx.shuffle_e(ea, yb_eb).left_mul_letter("y", a)
            + ctx.shuffle_e(ya_ea, eb).left_mul_letter("y", b)
            + ee.left_mul_letter("y", a + b)
        )
        s = a + b
        for j in range(q - 1, s, q - 1):
            c = delta_coeff(a, b, j, ctx.p)
            if c:
                hooked = ctx.shuffle_e(ee, ehat_word((j,), ctx.field))
                rhs = rhs + hooked.left_mul_letter("y", s - j).scale(c)
        if lhs != rhs:
            return f"a={a} b={b} A={ia} B={ib}: {lhs} != {rhs}"
        return None

    return _report("lemma-3-9", {"q": q, "weight_cap": weight_cap}, _run(items, check), t0)


# -- numeric oracle and Goss properties -------------------------------------


def sweep_oracle(q: int, weight_cap: int, precision: int) -> VerificationReport:
    """check_shuffle_oracle over every index pair with combined weight <= cap."""
    t0 = time.perf_counter()
    fld = FiniteField(q)
    ctx = ShuffleContext(q)
    idxs = all_indices(weight_cap)
    items = [
        (a, b) for a in idxs for b in idxs if sum(a) + sum(b) <= weight_cap
    ]

    def check(item):
        a, b = item
        rep = check_shuffle_oracle(a, b, fld, precision, ctx)
        if not rep.passed:
            return f"a={a} b={b}: residual valuation {rep.residual_valuation}"
        return None

    return _report(
        "oracle",
        {"q": q, "weight_cap": weight_cap, "precision": precision},
        _run(items, check),
        t0,
    )


def sweep_goss(q: int, n_max: int) -> VerificationReport:
    """Monicity, degree, X-divisibility, and the X^n collapse for n <= q."""
    t0 = time.perf_counter()
    table = goss_table(n_max, q)
    results = []
    for n, g in enumerate(table, start=1):
        bad = None
        if not g.is_monic():
            bad = f"G_{n} (q={q}) not monic"
        elif g.degree() != n:
            bad = f"G_{n} (q={q}) has degree {g.degree()}"
        elif not g.divisible_by_x():
            bad = f"G_{n} (q={q}) not divisible by X"
        elif n <= q and sorted(g.coeffs) != [n]:
            bad = f"G_{n} (q={q}) != X^{n}: {g}"
        results.append(bad)
    return _report("goss", {"q": q, "n_max": n_max}, results, t0)


# -- property registry ------------------------------------------------------

PROPERTIES = {
    "comm": lambda q, cap: sweep_comm(q, cap, "R"),
    "assoc-R": lambda q, cap: sweep_assoc(q, cap, "R"),
    "assoc-E": lambda q, cap: sweep_assoc(q, cap, "E"),
    "ehat-hom": sweep_ehat_hom,
    "pi-hom": sweep_pi_hom,
    "phi-iso": sweep_phi_iso,
    "lemma-3-7": sweep_lemma_left_mul,
    "lemma-3-8": sweep_lemma_yx_expansion,
    "basis": sweep_basis,
}


def run_property(name: str, q: int, weight_cap: int) -> VerificationReport:
    try:
        fn = PROPERTIES[name]
    except KeyError:
        raise ValueError(f"unknown property {name!r}; known: {', '.join(sorted(PROPERTIES))}")
    return fn(q, weight_cap)
