"""
Structure maps between the y-free subalgebra and the full algebra
=================================================================

Three maps organize the two algebras: a section ehat that lifts a
y-free word into the full algebra, a projection pi that kills every
word containing a y-letter, and an isomorphism phi from the tensor
square of the y-free algebra onto the full algebra.
"""

from qshuffle.maps import ehat, iota, phi, phi_inv, pi_hat, rbasis_decompose
from qshuffle.shuffle import ShuffleContext
from qshuffle.words import parse_element, parse_tensor

ctx = ShuffleContext(2)
F = ctx.field

# ehat sends x_a to the sum of all cyclic-style splittings of the index
# into an x-part tail and a y-part head.  The pure-y word appears with
# coefficient 1, which makes the map triangular.
u = parse_element("x[1,2]", F)
print("ehat(x[1,2]) =", ehat(u))

# iota is the plain inclusion, and pi discards every term with a y.
print("iota(x[1,2]) =", iota(u))
print("pi(ehat(x[1,2])) =", pi_hat(ehat(u)), " (pi o ehat = id)")

# ehat is multiplicative for the two products: lifting a product equals
# the product of the lifts.
v = parse_element("x[1]", F)
lhs = ehat(ctx.shuffle_r(u, v))
rhs = ctx.shuffle_e(ehat(u), ehat(v))
print("ehat is a homomorphism on a sample pair:", lhs == rhs)

# phi maps a tensor u (x) v to u * ehat(v).  It is an isomorphism, and
# phi_inv recovers a tensor decomposition of any element.
t = parse_tensor("x[1] (x) x[2]", F)
w = phi(t, ctx)
print("phi(x[1] (x) x[2]) =", w)
print("phi_inv back:", phi_inv(w, ctx) == t)

# A pure-y word is not in the image of iota, but phi_inv still writes it
# in terms of y-free data.
y = parse_element("y[1,2]", F)
print("phi_inv(y[1,2]) =", phi_inv(y, ctx))

# rbasis_decompose collects phi_inv by its second tensor leg: the result
# maps each y-free index to a y-free coordinate element.
dec = rbasis_decompose(y, ctx)
for idx, coord in dec:
    print(f"  coordinate at {list(idx)}: {coord}")
print("reconstruction matches:", dec.reconstruct(ctx) == y)
