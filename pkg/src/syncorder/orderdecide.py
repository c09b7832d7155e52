"""Decision procedures for orders given by binary synchronous automata."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from . import syncauto as sa
from .algebra import cartesian, compose, inverse, left_projection, right_projection, support
from .errors import InfiniteAntichain, NotAnOrder
from .structured import normal_form
from .upset import NATURALS

__all__ = [
    "Verdict",
    "is_strict_order",
    "is_linear",
    "is_complete",
    "has_infinite_chain",
    "has_infinite_antichain",
    "antichain_bound",
    "extremal_element",
]


def is_strict_order(R) -> bool:
    """Transitive and free of loops (which also rules out reflexive pairs)."""
    if not sa.includes(R, compose(R, R)):
        return False
    return sa.is_empty(sa.intersection(R, inverse(R)))


def _require_order(R):
    if not is_strict_order(R):
        raise NotAnOrder("relation is not a strict order")


def is_linear(R) -> bool:
    _require_order(R)
    s = support(R)
    off_diagonal = sa.difference(cartesian(s, s), sa.diagonal())
    return sa.includes(sa.union(R, inverse(R)), off_diagonal)


def is_complete(R) -> bool:
    return support(R) == NATURALS


@dataclass(frozen=True)
class Verdict:
    """A yes/no answer with an optional witness."""

    exists: bool
    witness: Optional[Union[int, Tuple[int, int]]] = None

    def __bool__(self):
        return self.exists


def has_infinite_chain(R, direction: str = "asc", *, check_order: bool = True) -> Verdict:
    """Infinite ascending (``asc``) or descending (``desc``) chain.

    The witness ``(k, d)`` gives the chain ``k, k+d, k+2d, ...``, increasing
    for ``asc`` and decreasing for ``desc`` in the order.
    """
    if check_order:
        _require_order(R)
    nf = normal_form(R)
    tails = nf.dr if direction == "asc" else nf.dl if direction == "desc" else None
    if tails is None:
        raise ValueError(f"direction must be 'asc' or 'desc', got {direction!r}")
    for i in range(nf.t, nf.t + nf.p):
        if tails[i].contains(nf.p):
            return Verdict(True, (i, nf.p))
    return Verdict(False)


def has_infinite_antichain(R, *, check_order: bool = True) -> bool:
    if check_order:
        _require_order(R)
    nf = normal_form(R)
    for i in range(nf.t, nf.t + nf.p):
        if nf.support.contains(i) and not nf.dl[i].contains(nf.p) and not nf.dr[i].contains(nf.p):
            return True
    return False


def antichain_bound(R) -> int:
    """``2n + 2`` for the ``n = t + p`` diagonal states of the normal form."""
    if has_infinite_antichain(R):
        raise InfiniteAntichain("the order has an infinite antichain")
    nf = normal_form(R)
    return 2 * nf.n + 2


def extremal_element(R, side: str = "max") -> Verdict:
    """Whether a maximal (or minimal) element exists; the witness is the least one."""
    _require_order(R)
    if side == "max":
        candidates = support(R) - left_projection(R)
    elif side == "min":
        candidates = support(R) - right_projection(R)
    else:
        raise ValueError(f"side must be 'max' or 'min', got {side!r}")
    least = candidates.min_element()
    return Verdict(least is not None, least)
