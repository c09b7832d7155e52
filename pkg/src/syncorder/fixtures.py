"""Small named relations used throughout the tests, demos and CLI docs."""

from . import syncauto as sa
from .algebra import natural_order_on
from .upset import EVENS as EVEN_NUMBERS


def w_star():
    """``... < 2 < 1 < 0``: loop ``(1,1)``, then ``(1,0)`` into a final loop."""
    return sa.from_dict({
        "arity": 2, "states": 2, "initial": 0, "finals": [1],
        "transitions": [
            {"from": 0, "letter": [1, 1], "to": 0},
            {"from": 0, "letter": [1, 0], "to": 1},
            {"from": 1, "letter": [1, 0], "to": 1},
        ],
    })


def w():
    """``0 < 1 < 2 < ...``."""
    return sa.from_dict({
        "arity": 2, "states": 2, "initial": 0, "finals": [1],
        "transitions": [
            {"from": 0, "letter": [1, 1], "to": 0},
            {"from": 0, "letter": [0, 1], "to": 1},
            {"from": 1, "letter": [0, 1], "to": 1},
        ],
    })


def three():
    """The three-element order ``2 < 1 < 0``."""
    return sa.from_dict({
        "arity": 2, "states": 4, "initial": 0, "finals": [2, 3],
        "transitions": [
            {"from": 0, "letter": [1, 1], "to": 1},
            {"from": 0, "letter": [1, 0], "to": 3},
            {"from": 3, "letter": [1, 0], "to": 2},
            {"from": 1, "letter": [1, 0], "to": 2},
        ],
    })


def evenodd():
    """``{(2m, 2m+1)}``: a strict order with an infinite antichain."""
    return sa.from_dict({
        "arity": 2, "states": 3, "initial": 0, "finals": [2],
        "transitions": [
            {"from": 0, "letter": [1, 1], "to": 1},
            {"from": 1, "letter": [1, 1], "to": 0},
            {"from": 0, "letter": [0, 1], "to": 2},
        ],
    })


def evens():
    """Natural order restricted to the even numbers (linear, not complete)."""
    return natural_order_on(EVEN_NUMBERS, "asc")


def full():
    return sa.universal(2)


FIXTURES = {
    "w": w,
    "w_star": w_star,
    "three": three,
    "evenodd": evenodd,
    "evens": evens,
    "full": full,
}
