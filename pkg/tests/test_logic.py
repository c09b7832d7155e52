import random

import pytest

from syncorder import syncauto as sa
from syncorder.algebra import natural_order_on
from syncorder.errors import ArityExceeded, FormulaParseError
from syncorder.fixtures import evenodd, three, w, w_star
from syncorder.logic import (
    FALSE,
    And,
    Diff,
    Exists,
    Not,
    Or,
    automaton_to_formula,
    compile_formula,
    format_formula,
    free_variables,
    parse_formula,
)
from syncorder.upset import EVENS, POSITIVE, UPSet

from helpers import random_automaton, sized_automata

SETS = {"POS": POSITIVE, "EV": EVENS}


def test_parse_atom_literal():
    f = parse_formula("y - x IN UP(t=1;p=1;head={};res={0})")
    assert f == Diff("y", "x", POSITIVE)


def test_parse_quantified_conjunction():
    f = parse_formula("EX y . (y - x IN POS) AND (z - y IN POS)", SETS)
    assert isinstance(f, Exists) and f.var == "y"
    assert f.body == And((Diff("y", "x", POSITIVE), Diff("z", "y", POSITIVE)))
    assert free_variables(f) == {"x", "z"}


def test_parse_precedence():
    f = parse_formula("NOT x - y > 0 AND TRUE OR FALSE")
    assert isinstance(f, Or)
    assert isinstance(f.args[0], And)
    assert isinstance(f.args[0].args[0], Not)


@pytest.mark.parametrize("text", ["x - IN", "x - y IN NOPE", "x = 0", "EX 0 . TRUE", "x - y > 1", "(TRUE", "x - y IN EV extra"])
def test_parse_errors(text):
    with pytest.raises(FormulaParseError) as info:
        parse_formula(text, SETS)
    assert info.value.position >= 0


def test_parse_error_position():
    with pytest.raises(FormulaParseError) as info:
        parse_formula("x - IN")
    assert info.value.position == 4


def test_format_round_trip():
    for text in [
        "EX y . (y - x IN POS) AND (z - y IN POS)",
        "NOT (x - y IN EV OR x = y) AND y - 0 IN POS",
        "ALL z . NOT z - x IN POS OR z - y IN EV",
    ]:
        f = parse_formula(text, SETS)
        assert parse_formula(format_formula(f)) == f


def test_compile_examples():
    assert sa.equivalent(compile_formula("y - x IN POS", sets=SETS), w())
    assert sa.is_empty(compile_formula("FALSE"))
    f = "x - 0 IN EV AND y - 0 IN EV AND y - x IN POS"
    A = compile_formula(f, sets=SETS)
    assert sa.equivalent(A, natural_order_on(EVENS, "asc"))
    for x in range(61):
        for y in range(61):
            assert A.accepts((x, y)) == (x % 2 == 0 and y % 2 == 0 and x < y)


def test_difference_requires_order():
    A = compile_formula("x - y IN UP(t=0;p=1;head={};res={0})")
    for x in range(10):
        for y in range(10):
            assert A.accepts((x, y)) == (x >= y)


def test_explicit_coordinate_order():
    A = compile_formula("y - x IN POS", variables=["y", "x"], sets=SETS)
    assert sa.equivalent(A, w_star())
    with pytest.raises(ValueError):
        compile_formula("y - x IN POS", variables=["y"], sets=SETS)


def test_compositional_semantics():
    f = parse_formula("x - y IN EV", SETS)
    g = parse_formula("y - 0 IN UP(t=0;p=3;head={};res={1})")
    F, G = compile_formula(f, ["x", "y"]), compile_formula(g, ["x", "y"])
    for name, h, op in [
        ("and", And((f, g)), lambda a, b: a and b),
        ("or", Or((f, g)), lambda a, b: a or b),
        ("not", Not(f), lambda a, b: not a),
    ]:
        H = compile_formula(h, ["x", "y"])
        for x in range(31):
            for y in range(31):
                assert H.accepts((x, y)) == op(F.accepts((x, y)), G.accepts((x, y))), name


def test_quantifiers():
    between = compile_formula("EX y . (y - x IN POS) AND (z - y IN POS)", sets=SETS)
    for x in range(20):
        for z in range(20):
            assert between.accepts((x, z)) == (z >= x + 2)
    above = compile_formula("ALL y . NOT y - x IN POS OR y - 0 IN POS", sets=SETS)
    assert sa.equivalent(above, sa.universal(1))


def test_quantifier_duality():
    body = "(y - x IN EV) OR (z - y IN POS)"
    A = compile_formula(f"ALL y . {body}", sets=SETS)
    B = compile_formula(f"NOT EX y . NOT ({body})", sets=SETS)
    assert A == B


def test_arity_bound():
    text = "EX a . EX b . EX c . EX d . a - b IN POS AND c - d IN POS AND e - a IN POS"
    with pytest.raises(ArityExceeded):
        compile_formula(text, sets=SETS)


def test_to_formula_examples():
    assert automaton_to_formula(sa.empty(2)) == FALSE
    for A in (w(), w_star(), three(), evenodd()):
        f = automaton_to_formula(A)
        assert free_variables(f) <= {"x", "y"}
        assert sa.equivalent(compile_formula(f, ["x", "y"]), A)


def test_to_formula_is_quantifier_free():
    text = format_formula(automaton_to_formula(three()))
    assert "EX" not in text and "ALL" not in text


def test_round_trip_random_binary():
    for A in sized_automata(20, 31):
        assert sa.equivalent(compile_formula(automaton_to_formula(A), ["x", "y"]), A)


def test_round_trip_unary_and_ternary():
    rng = random.Random(7)
    for arity in (1, 3):
        for _ in range(4):
            A = random_automaton(rng, arity=arity, max_states=5)
            names = ["x"] if arity == 1 else ["x1", "x2", "x3"]
            assert sa.equivalent(compile_formula(automaton_to_formula(A), names), A)


def test_unary_formula_from_upset():
    S = UPSet.make(3, 2, {1}, {0})
    A = sa.unary_from_upset(S)
    B = compile_formula(automaton_to_formula(A), ["x"])
    assert sa.upset_from_unary(B) == S
