"""Hom-subgroups, coset partitions, and the divisibility theorem.

A subset is a Hom-subgroup when it contains the unit, is closed under
the product and inversion, and is stable under the twist.  Its cosets
all share its size and tile the carrier, so subgroup orders divide the
carrier size -- even without associativity.

One twist-specific surprise: g need not lie in its own coset g*H (the
coset contains alpha(g) instead), and the commuting set of a single
element need not be a Hom-subgroup at all.
"""

from homgroups import (
    HomGroup,
    cauchy_search,
    center,
    centralizer,
    coset,
    coset_partition,
    enumerate_hom_subgroups,
    fixture,
    is_hom_subgroup,
    lagrange_check,
    subgroup_defect,
)

g6 = fixture("z6a")
print("Hom-subgroups of the order-6 twist:")
for H in enumerate_hom_subgroups(g6):
    print("  ", H)

H = enumerate_hom_subgroups(g6)[1]  # {0, 3}
print("left cosets of", H, "->", [str(c.sorted_members()) for c in coset_partition(g6, H)])
print("note: 1*H =", coset(g6, H, 1).sorted_members(), "does not contain 1")
print()

report = lagrange_check(g6)
for entry in report.entries:
    print(f"|H| = {entry.order} divides 6 with index {entry.index}")
print("divisors realized:", report.divisors)
print()

# Center versus centralizer in the nonabelian example: the center is
# always a Hom-subgroup, but the commuting set of the reflection rs is
# not even closed under the product, because the twist moves rs.
d3 = fixture("d3a")
print("center of the dihedral twist:", center(d3))
c = centralizer(d3, 4)
print("commuting set of rs:", c, "-- Hom-subgroup?", is_hom_subgroup(d3, c))
print("  defect:", subgroup_defect(d3, c))
print()

# A prime dividing the order need not be witnessed by a subgroup of that
# order.  Cycle the three involutions of the Klein four-group: no order-2
# subset stays twist-stable.
klein_twist = HomGroup(
    ((0, 2, 3, 1), (2, 0, 1, 3), (3, 1, 0, 2), (1, 3, 2, 0)),
    (0, 2, 3, 1),
    0,
)
print("Klein four-group twisted by a 3-cycle of its involutions:")
print("  subgroups:", [str(h) for h in enumerate_hom_subgroups(klein_twist)])
for entry in cauchy_search(klein_twist).entries:
    witness = entry.witness if entry.witness is not None else "no witness"
    print(f"  prime {entry.prime}: {witness}")
