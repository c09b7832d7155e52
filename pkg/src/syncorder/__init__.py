"""Synchronous relations and orders on the natural numbers."""

from .errors import (
    ArityExceeded,
    AutomatonFormatError,
    ComplementNotFinite,
    ComplementNotInfinite,
    FormulaParseError,
    InconsistentOrder,
    InfiniteAntichain,
    NotAnOrder,
    NotLinear,
    OverlappingSupports,
    SyncOrderError,
)
from .upset import UPSet, parse_upset
from .syncauto import SyncAutomaton, encode
from .structured import NormalForm, StructuredBinary, normal_form, normalize, to_structured
from .algebra import (
    collapse_finite_complement,
    complete_with,
    compose,
    inverse,
    natural_order_on,
    scale,
    sum_disjoint,
    support,
)
from .orderdecide import (
    antichain_bound,
    extremal_element,
    has_infinite_antichain,
    has_infinite_chain,
    is_complete,
    is_linear,
    is_strict_order,
)
from .ordertype import PoorSum, equivalent_orders, order_type, parse_poor_sum, reduce
from .logic import automaton_to_formula, compile_formula, parse_formula

__version__ = "0.1.0"

__all__ = [
    "ArityExceeded",
    "AutomatonFormatError",
    "ComplementNotFinite",
    "ComplementNotInfinite",
    "FormulaParseError",
    "InconsistentOrder",
    "InfiniteAntichain",
    "NormalForm",
    "NotAnOrder",
    "NotLinear",
    "OverlappingSupports",
    "PoorSum",
    "StructuredBinary",
    "SyncAutomaton",
    "SyncOrderError",
    "UPSet",
    "antichain_bound",
    "automaton_to_formula",
    "collapse_finite_complement",
    "compile_formula",
    "complete_with",
    "compose",
    "encode",
    "equivalent_orders",
    "extremal_element",
    "has_infinite_antichain",
    "has_infinite_chain",
    "inverse",
    "is_complete",
    "is_linear",
    "is_strict_order",
    "natural_order_on",
    "normal_form",
    "normalize",
    "order_type",
    "parse_formula",
    "parse_poor_sum",
    "parse_upset",
    "reduce",
    "scale",
    "sum_disjoint",
    "support",
    "to_structured",
]
