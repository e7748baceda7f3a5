"""Regenerate the shipped weight-3, q=2 Hopf structure fixture.

The library treats Hopf tables as input data, so the test fixture has to
come from somewhere.  This script enumerates every valid truncation at
weight <= 3 over F_2 by exhaustive search and ships the divided-power
one: repeated-1 words carry the divided-power coproduct

    coproduct(x[1,...,1]) = sum over i+j=k of x[1^i] (x) x[1^j],

all other single-letter words are primitive, and the remaining tables
are forced.  The search both certifies the chosen fixture and reports
how many valid truncations exist.

Search space.  Write prim(w) = w (x) 1 + 1 (x) w.  The counit is forced
(1 on the empty word, 0 in positive weight, else the counit axiom fails
on the diagonal terms).  The coproduct is forced on x[1] (no mixed terms
exist in weight 1) and on x[2] (the algebra-homomorphism constraint for
x[1]*x[1] = x[2] gives prim(x[1])^2 = prim(x[2]) in characteristic 2),
and determined on x[1,2] and x[1,1,1] by the homomorphism constraints
for x[1]*x[2] and x[1]*x[1,1].  That leaves one free mixed bit on
x[1,1] and four each on x[3] and x[2,1]: 512 candidates.  The antipode
is always the connected-graded recursion S(w) = -w - sum S(u)*v over the
mixed coproduct terms of w; each full candidate then runs through
check_axioms and only all-pass tables survive.

Usage: python3 scripts/make_hopf_fixture.py [outfile]
"""

import itertools
import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from qshuffle.fields import PrimeField
from qshuffle.hopf import HopfStructureR, check_axioms
from qshuffle.shuffle import ShuffleContext
from qshuffle.words import EMPTY_WORD, Element, TensorElement, Word, r_words, xw

Q = 2
BOUND = 3
fp = PrimeField(2)
ctx = ShuffleContext(Q)

x1, x2, x11 = xw(1), xw(2), xw(1, 1)
x3, x12, x21, x111 = xw(3), xw(1, 2), xw(2, 1), xw(1, 1, 1)
WORDS = r_words(BOUND)

MIXED_W3 = [(x1, x2), (x1, x11), (x2, x1), (x11, x1)]


def prim(w: Word) -> TensorElement:
    return TensorElement(fp, {(w, EMPTY_WORD): 1, (EMPTY_WORD, w): 1})


def elem(w: Word) -> Element:
    return Element.from_word(fp, w)


def build_candidate(c11: int, bits3, bits21) -> HopfStructureR:
    delta: dict[Word, TensorElement] = {EMPTY_WORD: TensorElement.one(fp)}
    delta[x1] = prim(x1)
    delta[x2] = ctx.tensor_shuffle(delta[x1], delta[x1], "R")
    assert delta[x2] == prim(x2)  # char 2 kills the cross terms
    delta[x11] = prim(x11) + TensorElement(fp, {(x1, x1): c11})
    delta[x3] = prim(x3) + TensorElement(
        fp, {pair: bit for pair, bit in zip(MIXED_W3, bits3)}
    )
    delta[x21] = prim(x21) + TensorElement(
        fp, {pair: bit for pair, bit in zip(MIXED_W3, bits21)}
    )
    # x1*x2 = x3 + x12 and x1*x11 = x12 + x21 + x111 pin the rest
    delta[x12] = ctx.tensor_shuffle(delta[x1], delta[x2], "R") - delta[x3]
    delta[x111] = (
        ctx.tensor_shuffle(delta[x1], delta[x11], "R") - delta[x12] - delta[x21]
    )

    counit = {w: (1 if w.is_empty() else 0) for w in WORDS}

    antipode: dict[Word, Element] = {EMPTY_WORD: Element.one(fp)}
    for w in sorted(WORDS, key=Word.sort_key):
        if w.is_empty():
            continue
        acc = -elem(w)
        for (u, v), cf in delta[w].terms.items():
            if u.weight == 0 or v.weight == 0:
                continue
            acc = acc - ctx.shuffle_r(antipode[u], elem(v)).scale(cf)
        antipode[w] = acc

    return HopfStructureR(Q, BOUND, delta, counit, antipode)


def main() -> None:
    out = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else (
        pathlib.Path(__file__).resolve().parent.parent
        / "src" / "qshuffle" / "data" / "hopf_w3_q2.json"
    )
    passers = []
    for c11 in (0, 1):
        for bits3 in itertools.product((0, 1), repeat=4):
            for bits21 in itertools.product((0, 1), repeat=4):
                h = build_candidate(c11, bits3, bits21)
                reports = check_axioms(h, ctx, BOUND)
                if all(r.passed for r in reports):
                    passers.append(json.dumps(h.to_json(), sort_keys=True))
    print(f"{len(passers)} of 512 candidates pass all axioms")
    if not passers:
        raise SystemExit("no valid truncation found")
    # divided-power pattern: mixed bit on x[1,1], no free mixed terms elsewhere
    chosen = build_candidate(1, (0, 0, 0, 0), (0, 0, 0, 0))
    assert chosen.coproduct[x111].coeff(x1, x11) == 1
    assert chosen.coproduct[x111].coeff(x11, x1) == 1
    doc = chosen.to_json()
    if json.dumps(doc, sort_keys=True) not in passers:
        raise SystemExit("divided-power candidate failed the axiom sweep")
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
