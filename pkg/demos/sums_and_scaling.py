"""
Building orders from pieces
===========================

Scaling spreads an order onto one residue class, which makes room to add
a second order on another class.  The type of the sum is the reduced sum
of the types.
"""

from syncorder.algebra import complete_with, scale, sum_disjoint, support
from syncorder.fixtures import evens, three, w, w_star
from syncorder.oracle import enumerate_pairs
from syncorder.ordertype import order_type, parse_poor_sum, realize

# three points on the evens, then omega on the odds: 3 + w reduces to w
R = sum_disjoint(scale(three(), 2, 0), scale(w(), 2, 1))
print("3 + w  ->", order_type(R))

# omega on the evens, omega* on the odds stays as it is
S = sum_disjoint(scale(w(), 2, 0), scale(w_star(), 2, 1))
print("w + w* ->", order_type(S))
print("some pairs:", sorted(p for p in enumerate_pairs(S, 5)))

# the natural order on the evens misses every odd number
E = evens()
print("support of evens:", support(E).literal())

# completing it with the odds in increasing order appends a copy of omega
print("completed:", order_type(complete_with(E, "omega")))
print("completed the other way:", order_type(complete_with(E, "omegaStar")))

# any poor sum can be realized and read back
for text in ["w* + 2 + w", "5 + w*", "w + 3 + w"]:
    s = parse_poor_sum(text)
    print(f"{text:12} -> {order_type(realize(s))}")
