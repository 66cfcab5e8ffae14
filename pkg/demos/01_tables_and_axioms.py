"""Build a twisted structure by hand and watch the axiom checker work.

A Hom-group replaces plain associativity and unitality with twisted
versions: a bijection alpha on the carrier satisfies
alpha(g)*(h*k) = (g*h)*alpha(k) and g*1 = 1*g = alpha(g).  Division still
works on both sides, so the Cayley table is a Latin square, and the unit
row and column both spell out alpha.
"""

from homgroups import (
    HomGroup,
    fixture,
    inverse_of,
    left_divide,
    mul,
    power_orbit,
    right_divide,
    right_power,
    verify,
)
from homgroups.cli import render_text

# The unique twisted structure of order 3: carrier {1, a, b}, twist
# swapping a and b.  Note a*a = a -- every element is idempotent here,
# which is exactly why the usual notion of element order breaks down.
g3 = fixture("z3a")
print("the order-3 structure:")
print(render_text(g3))
print()

print("a*a =", g3.label(mul(g3, 1, 1)))
print("inverse of a:", g3.label(inverse_of(g3, 1)))
print("solve a*x = b:  x =", g3.label(left_divide(g3, 1, 2)))
print("solve y*a = b:  y =", g3.label(right_divide(g3, 1, 2)))
print()

# Right powers x, x*x, (x*x)*x, ... settle into a cycle; for the order-6
# twist below, the element 1 alternates between 1 and 4.
g6 = fixture("z6a")
print("order-6 twist of the cyclic group:")
print(render_text(g6))
print("powers of 1:", [right_power(g6, 1, m) for m in range(1, 6)])
print("orbit:", power_orbit(g6, 1, "right"))
print()

# The checker reports every violated axiom with a minimal witness.
rows = [list(r) for r in g6.table.entries]
rows[2][3], rows[2][4] = rows[2][4], rows[2][3]
report = verify(rows, g6.alpha, 0)
print("after swapping two cells in row 2:")
for tag, witness in report.violations:
    print(f"  broken: {tag} at {witness}")

# Construction refuses bad data outright.
try:
    HomGroup(rows, g6.alpha, 0)
except ValueError as exc:
    print("constructor says:", exc)
