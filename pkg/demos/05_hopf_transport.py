"""
Transporting a Hopf structure along ehat
========================================

A Hopf structure on the y-free algebra is given by finite tables:
coproduct, counit, and antipode for every word up to a weight bound.
The section ehat transports those tables to the full algebra by a
triangular recursion, and the axioms can be re-verified there without
assuming anything about the construction.
"""

import importlib.resources
import json

from qshuffle.hopf import check_axioms, hopf_from_json, transport
from qshuffle.shuffle import ShuffleContext
from qshuffle.words import format_word, parse_word

# The package ships a verified structure for q = 2 up to weight 3.
path = importlib.resources.files("qshuffle") / "data" / "hopf_w3_q2.json"
base = hopf_from_json(json.loads(path.read_text()))
print(f"loaded tables over q={base.q} up to weight {base.weight_bound}")

# Coproducts on the y-free side.  Single letters are primitive; repeated
# letters pick up divided-power style middle terms.
for text in ("x[2]", "x[1,1]", "x[1,1,1]"):
    w = parse_word(text)
    print(f"coproduct({text}) = {base.coproduct[w]}")

# The axioms hold pointwise on the truncation.
ctx = ShuffleContext(base.q)
for report in check_axioms(base, ctx, base.weight_bound):
    print(f"  {report.axiom}: {report.verdict}")

# Transport produces tables on all words of the same weight bound.  On
# y-free words nothing changes; pure-y words get genuinely new images.
moved = transport(base, ctx)
for text in ("y[1,1]", "x[1]y[1]"):
    w = parse_word(text)
    print(f"transported coproduct({text}) = {moved.coproduct[w]}")
print("transported antipode(y[1,1]) =", moved.antipode[parse_word("y[1,1]")])

# The transported tables satisfy the same axioms.
for report in check_axioms(moved, ctx, moved.weight_bound):
    print(f"  {report.axiom}: {report.verdict}")

# Tampering with a single table entry is caught: adding a term to one
# antipode image breaks the antipode identity at that word.
from qshuffle.words import Element

w = parse_word("y[2]")
antipode = dict(moved.antipode)
antipode[w] = antipode[w] + Element.from_word(moved.field, parse_word("x[1,1]"))
broken = type(moved)(moved.q, moved.weight_bound, moved.coproduct, moved.counit, antipode)
verdicts = {r.axiom: r.verdict for r in check_axioms(broken, ctx, broken.weight_bound)}
print("after corruption, antipode axiom:", verdicts["antipode"])
print("witness word:", format_word(w))
