"""Constructions of binary synchronous relations from other ones.

Relations are binary :class:`~syncorder.syncauto.SyncAutomaton` values; every
function returns a minimized automaton.
"""

from __future__ import annotations

from . import syncauto as sa
from .errors import ArityError, ComplementNotFinite, ComplementNotInfinite, OverlappingSupports
from .structured import StructuredBinary
from .upset import EMPTY, POSITIVE, UPSet

__all__ = [
    "natural_order",
    "inverse",
    "support",
    "left_projection",
    "right_projection",
    "cartesian",
    "sum_disjoint",
    "scale",
    "natural_order_on",
    "complete_with",
    "collapse_finite_complement",
    "compose",
    "finite_relation",
]


def _binary(R):
    if R.arity != 2:
        raise ArityError(f"expected a binary relation, got arity {R.arity}")


def natural_order():
    """``{(k, l) : k < l}``."""
    return StructuredBinary(1, 0, (EMPTY,), (POSITIVE,), (False,)).to_automaton()


def finite_relation(pairs):
    """Automaton for an explicit finite set of pairs."""
    pairs = set(pairs)
    if not pairs:
        return sa.empty(2)
    top = max(max(k, l) for k, l in pairs)
    n = top + 2
    dl, dr, eq = [], [], []
    for i in range(n):
        dl.append(UPSet.finite(k - i for k, l in pairs if l == i and k > i))
        dr.append(UPSet.finite(l - i for k, l in pairs if k == i and l > i))
        eq.append((i, i) in pairs)
    return StructuredBinary(n, n - 1, tuple(dl), tuple(dr), tuple(eq)).to_automaton()


def inverse(R):
    _binary(R)
    return sa.permute(R, (1, 0))


def left_projection(R):
    """``{x : exists y, (x, y) in R}``."""
    _binary(R)
    return sa.upset_from_unary(sa.project(R, 2))


def right_projection(R):
    """``{y : exists x, (x, y) in R}``."""
    _binary(R)
    return sa.upset_from_unary(sa.project(R, 1))


def support(R) -> UPSet:
    return left_projection(R) | right_projection(R)


def cartesian(E: UPSet, F: UPSet):
    """``E x F`` as a binary automaton."""
    left = sa.cylindrify(sa.unary_from_upset(E), 2)
    right = sa.cylindrify(sa.unary_from_upset(F), 1)
    return sa.intersection(left, right)


def sum_disjoint(R, S):
    """``R | S | supp(R) x supp(S)``; the supports must be disjoint."""
    _binary(R)
    _binary(S)
    sr, ss = support(R), support(S)
    overlap = sa.intersection(sa.unary_from_upset(sr), sa.unary_from_upset(ss))
    if not sa.is_empty(overlap):
        raise OverlappingSupports(
            f"supports share elements, e.g. {(sr & ss).min_element()}"
        )
    return sa.union(sa.union(R, S), cartesian(sr, ss))


def scale(R, m: int, r: int):
    """``{(m x + r, m y + r) : (x, y) in R}``."""
    if not (m >= 1 and 0 <= r < m):
        raise ValueError(f"scale needs m > r >= 0, got m={m}, r={r}")
    R = sa.minimize(R)
    n = R.arity
    size = R.num_states
    # each transition q -a-> q' becomes a chain of m transitions through fresh states
    delta = [dict() for _ in range(size)]
    for q, a, target in R.transitions():
        prev = q
        for _ in range(m - 1):
            delta.append({})
            delta[prev][a] = len(delta) - 1
            prev = len(delta) - 1
        delta[prev][a] = target
    scaled = sa.SyncAutomaton(n, R.initial, R.finals, delta)
    if r == 0:
        return sa.minimize(scaled)
    # adding r to every coordinate prepends r full-support letters
    full = (1,) * n
    offset = len(delta)
    shift = [dict(d) for d in delta] + [dict() for _ in range(r)]
    for k in range(r):
        shift[offset + k][full] = offset + k + 1 if k + 1 < r else scaled.initial
    return sa.minimize(sa.SyncAutomaton(n, offset, scaled.finals, shift))


def natural_order_on(E: UPSet, direction: str = "asc"):
    """Trace of the natural order on ``E`` (``desc`` gives the inverse)."""
    rel = sa.intersection(natural_order(), cartesian(E, E))
    if direction == "asc":
        return rel
    if direction == "desc":
        return inverse(rel)
    raise ValueError(f"direction must be 'asc' or 'desc', got {direction!r}")


def complete_with(R, direction: str = "omega"):
    """Append the complement of the support, ordered as omega or omega*."""
    E = ~support(R)
    if E.is_finite():
        raise ComplementNotInfinite(f"complement of the support is finite: {sorted(E.head)}")
    if direction in ("omega", "w"):
        tail = natural_order_on(E, "asc")
    elif direction in ("omegaStar", "omega-star", "omega_star", "w*"):
        tail = natural_order_on(E, "desc")
    else:
        raise ValueError(f"direction must be 'omega' or 'omegaStar', got {direction!r}")
    return sum_disjoint(R, tail)


def _skip_map(a):
    """``{(k, k) : k < a} | {(k, k - 1) : k > a}``, the map closing the gap at ``a``."""
    n = a + 1
    dl = tuple(UPSet.finite([1]) if i == a else EMPTY for i in range(n))
    dr = (EMPTY,) * n
    eq = tuple(i < a for i in range(n))
    return StructuredBinary(n, a, dl, dr, eq).to_automaton()


def collapse_finite_complement(R):
    """Order-isomorphic complete copy of ``R`` when supp(R) misses finitely many points."""
    _binary(R)
    E = ~support(R)
    if not E.is_finite():
        raise ComplementNotFinite("complement of the support is infinite")
    R = sa.minimize(R)
    for a in sorted(E.head, reverse=True):
        f = _skip_map(a)
        R = compose(compose(inverse(f), R), f)
    return R


def compose(R, S):
    """``{(x, z) : exists y, (x, y) in R and (y, z) in S}`` via the ternary engine."""
    _binary(R)
    _binary(S)
    xyz = sa.intersection(sa.cylindrify(R, 3), sa.cylindrify(S, 1))
    return sa.project(xyz, 2)
