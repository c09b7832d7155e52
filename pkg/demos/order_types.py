"""
Order types of small synchronous orders
=======================================

Three hand-written automata and the reduced poor sums computed for them.
"""

from syncorder import syncauto as sa
from syncorder.fixtures import three, w, w_star
from syncorder.oracle import enumerate_pairs
from syncorder.ordertype import order_type

# the natural order: read (1,1) while both coordinates last, then (0,1)
W = w()
print(sa.to_json(W))
print("pairs up to 3:", sorted(enumerate_pairs(W, 3)))
print("type:", order_type(W))

# same shape with (1,0) in the tail gives the reversed order
print("reversed type:", order_type(w_star()))

# a finite order 2 < 1 < 0 on the support {0, 1, 2}
T = three()
print("pairs:", sorted(enumerate_pairs(T, 10)))
print("type:", order_type(T))

# Graphviz source, ready for `dot -Tpng`
print(sa.to_dot(T))
