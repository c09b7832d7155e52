"""
Chains and antichains
=====================

The relation {(2m, 2m+1)} is a strict order made of disjoint pairs.  It has
no infinite chain, while every set of even numbers is an antichain.
"""

from syncorder.fixtures import evenodd, w, w_star
from syncorder.oracle import longest_chain_prefix, max_antichain_prefix
from syncorder.orderdecide import (
    antichain_bound,
    extremal_element,
    has_infinite_antichain,
    has_infinite_chain,
    is_linear,
    is_strict_order,
)
from syncorder.structured import normal_form

R = evenodd()
print("order:", is_strict_order(R), " linear:", is_linear(R))
print("ascending chain:", has_infinite_chain(R, "asc").exists)
print("descending chain:", has_infinite_chain(R, "desc").exists)
print("infinite antichain:", has_infinite_antichain(R))

# brute force on prefixes agrees: chains stop at 2, antichains keep growing
for N in (10, 50, 200):
    print(N, longest_chain_prefix(R, N), max_antichain_prefix(R, N))

# the normal form behind these answers
print(normal_form(R).dump())

# witnesses for the linear orders
for name, X in (("w", w()), ("w*", w_star())):
    up = has_infinite_chain(X, "asc")
    down = has_infinite_chain(X, "desc")
    print(name, "asc", up.witness, "desc", down.witness)
    print("   max", extremal_element(X, "max").witness, "min", extremal_element(X, "min").witness)
    print("   antichain bound", antichain_bound(X))
