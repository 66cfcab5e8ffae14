"""Every group plus one of its automorphisms yields a twisted structure.

Composing a group multiplication with an automorphism alpha gives a new
product g*h = alpha(gh) that is no longer associative (unless alpha is
the identity) but satisfies the twisted axioms with twist alpha.  All the
stock tables arise this way.
"""

from homgroups import (
    automorphisms_of,
    cyclic_group,
    dihedral_group,
    direct_product,
    fixture,
    inner_automorphism,
    is_abelian,
    is_automorphism,
    twist,
)
from homgroups.cli import render_text

# Negation is the only nontrivial automorphism of the cyclic group of
# order 6; twisting by it gives the symmetric table (-(i+j)) mod 6.
z6 = cyclic_group(6)
print("automorphisms of the order-6 cyclic group:")
for p in automorphisms_of(z6):
    print("  ", p.images)

g6 = twist(z6, (0, 5, 4, 3, 2, 1))
assert g6.table == fixture("z6a").table
print("twists to:")
print(render_text(g6))
print()

# Doubling mod 5 has order 4 in the automorphism group; its twist is not
# isomorphic to the one from negation even though both live on Z5.
z5 = cyclic_group(5)
print("order-5 twist by doubling, row 1:", twist(z5, (0, 2, 4, 1, 3)).table.row(1))

# Conjugation by the reflection s twists the dihedral group into the
# nonabelian example.
d3 = dihedral_group(3)
phi = inner_automorphism(d3, 3)
print("conjugation by s:", phi.images)
g = twist(d3, phi)
print("nonabelian twist (first row):", [g.label(v) for v in g.table.row(0)])
print("abelian?", is_abelian(g))
print()

# Non-automorphisms are rejected with a witness pair.
swap = (0, 2, 1, 3, 4, 5)
print("is the 1<->2 swap an automorphism of Z6?", is_automorphism(z6, swap))
try:
    twist(z6, swap)
except ValueError as exc:
    print("twist refuses:", exc)

# Products work componentwise and preserve verification.
p = direct_product(fixture("z3a"), fixture("z3a"))
print("product of two order-3 structures has size", p.n, "and unit", p.unit)
