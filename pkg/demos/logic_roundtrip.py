"""
Formulas and automata
=====================

Atoms say that a difference of two variables lies in an ultimately periodic
set.  Compiling a formula yields a synchronous automaton, and every such
automaton can be read back as a quantifier-free formula.
"""

from syncorder import syncauto as sa
from syncorder.algebra import natural_order_on
from syncorder.fixtures import three
from syncorder.logic import automaton_to_formula, compile_formula, format_formula
from syncorder.upset import EVENS, POSITIVE

sets = {"EV": EVENS, "POS": POSITIVE}

# the natural order restricted to the evens
A = compile_formula("x - 0 IN EV AND y - 0 IN EV AND y - x > 0", sets=sets)
print("same as the trace on the evens:", sa.equivalent(A, natural_order_on(EVENS)))

# z is at least two above x iff some y sits strictly between them
B = compile_formula("EX y . (y - x IN POS) AND (z - y IN POS)", sets=sets)
print([(x, z) for x in range(4) for z in range(5) if B.accepts((x, z))])

# back and forth
f = automaton_to_formula(three())
print(format_formula(f))
print("round trip:", sa.equivalent(compile_formula(f, ["x", "y"]), three()))
