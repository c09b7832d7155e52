"""Poor order types and their extraction from linear synchronous orders.

A poor sum is a finite sequence of terms ``"w"`` (omega), ``"w*"`` (omega
reversed) and positive integers (finite chains).  Its reduced form, obtained
with ``n + m = n+m``, ``n + w = w`` and ``w* + n = w*``, is unique and serves
as the certificate for order equivalence.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from enum import Enum

from .errors import InconsistentOrder, NotAnOrder, NotLinear
from .orderdecide import is_linear, is_strict_order
from .structured import NormalForm, normal_form

__all__ = [
    "OMEGA",
    "OMEGA_STAR",
    "PoorSum",
    "parse_poor_sum",
    "reduce",
    "Relation",
    "ChainHandle",
    "compare_tails",
    "locate_point",
    "order_type",
    "equivalent_orders",
    "realize",
]

OMEGA = "w"
OMEGA_STAR = "w*"


def _check_term(term):
    if term in (OMEGA, OMEGA_STAR):
        return term
    if isinstance(term, int) and not isinstance(term, bool) and term >= 0:
        return term
    raise ValueError(f"invalid poor-sum term {term!r}")


@dataclass(frozen=True)
class PoorSum:
    terms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(_check_term(t) for t in self.terms))

    def __add__(self, other: "PoorSum") -> "PoorSum":
        return PoorSum(self.terms + other.terms)

    def reduced(self) -> "PoorSum":
        return reduce(self)

    def is_reduced(self) -> bool:
        return not violations(self)

    def inverse(self) -> "PoorSum":
        """Type of the reversed order: terms reversed and omega/omega* swapped."""
        swap = {OMEGA: OMEGA_STAR, OMEGA_STAR: OMEGA}
        return PoorSum(tuple(swap.get(t, t) for t in reversed(self.terms)))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(str(t) for t in self.terms)


def violations(s: PoorSum):
    """Positions ``i`` where ``terms[i], terms[i+1]`` (or a lone 0) break reducedness."""
    bad = []
    terms = s.terms
    for i, a in enumerate(terms):
        if a == 0:
            bad.append(i)
        if i + 1 < len(terms):
            b = terms[i + 1]
            fin_a, fin_b = isinstance(a, int), isinstance(b, int)
            if (fin_a and fin_b) or (fin_a and b == OMEGA) or (a == OMEGA_STAR and fin_b):
                bad.append(i)
    return bad


def reduce(s: PoorSum) -> PoorSum:
    stack = []
    for term in s.terms:
        if isinstance(term, int):
            if term == 0 or (stack and stack[-1] == OMEGA_STAR):
                continue
            if stack and isinstance(stack[-1], int):
                stack[-1] += term
            else:
                stack.append(term)
        elif term == OMEGA:
            while stack and isinstance(stack[-1], int):
                stack.pop()
            stack.append(OMEGA)
        else:
            stack.append(OMEGA_STAR)
    return PoorSum(tuple(stack))


_TERM = re.compile(r"w\*|w|[1-9][0-9]*")


def parse_poor_sum(text: str) -> PoorSum:
    """Parse ``"0"`` or terms joined by ``" + "`` (e.g. ``"5 + w*"``)."""
    text = text.strip()
    if text == "0":
        return PoorSum(())
    parts = text.split(" + ")
    for part in parts:
        if not _TERM.fullmatch(part):
            raise ValueError(f"malformed poor sum {text!r}")
    return PoorSum(tuple(int(p) if p[0].isdigit() else p for p in parts))


# -- membership-driven comparisons -------------------------------------------


class Relation(Enum):
    BEFORE = "before"
    AFTER = "after"
    INTERLEAVED = "interleaved"
    INSIDE = "inside"


@dataclass(frozen=True)
class ChainHandle:
    """Residue class ``{residue + k p : k >= 2}`` of a normal form, with its direction."""

    residue: int
    direction: str

    @classmethod
    def of(cls, nf: NormalForm, residue: int) -> "ChainHandle":
        asc = nf.dr[residue].contains(nf.p)
        desc = nf.dl[residue].contains(nf.p)
        if asc == desc:
            raise NotLinear(f"residue class {residue} is neither ascending nor descending")
        return cls(residue, "asc" if asc else "desc")


def _prec(nf, x, y):
    return nf.member(x, y)


def _comparable(nf, x, y):
    if nf.member(x, y):
        return True
    if nf.member(y, x):
        return False
    raise NotLinear(f"{x} and {y} are incomparable")


def compare_tails(nf: NormalForm, a: ChainHandle, b: ChainHandle) -> Relation:
    """Relative position of the tails of two chains with ``a.residue < b.residue``."""
    if not a.residue < b.residue:
        raise ValueError("compare_tails expects a.residue < b.residue")
    al, be, p = a.residue, b.residue, nf.p
    if a.direction == "asc" and b.direction == "asc":
        if _prec(nf, be + p, al):
            return Relation.AFTER
        if _prec(nf, al + 2 * p, be):
            return Relation.BEFORE
        _comparable(nf, al, be + p)
        _comparable(nf, be, al + 2 * p)
        return Relation.INTERLEAVED
    if a.direction == "desc" and b.direction == "desc":
        if _prec(nf, al, be + p):
            return Relation.BEFORE
        if _prec(nf, be, al + 2 * p):
            return Relation.AFTER
        _comparable(nf, be + p, al)
        _comparable(nf, al + 2 * p, be)
        return Relation.INTERLEAVED
    if a.direction == "asc":
        if _comparable(nf, be, al + 2 * p):
            return Relation.AFTER
        if _comparable(nf, al, be + p):
            return Relation.BEFORE
        return Relation.AFTER
    if _comparable(nf, al + 2 * p, be):
        return Relation.BEFORE
    if _comparable(nf, al, be + p):
        return Relation.BEFORE
    return Relation.AFTER


def locate_point(nf: NormalForm, gamma: int, a: ChainHandle) -> Relation:
    """Whether ``gamma`` lies below, above, or among the tail of ``a``."""
    al, p = a.residue, nf.p
    k = 0
    while al + k * p <= gamma:
        k += 1
    below = above = False
    for j in range(2, max(k + 1, 2) + 1):
        x = al + j * p
        if x == gamma:
            raise ValueError(f"{gamma} belongs to the tail of class {al}")
        if _comparable(nf, gamma, x):
            below = True
        else:
            above = True
    if below and not above:
        return Relation.BEFORE
    if above and not below:
        return Relation.AFTER
    return Relation.INSIDE


def _flip(rel):
    return {Relation.BEFORE: Relation.AFTER, Relation.AFTER: Relation.BEFORE}.get(rel, rel)


def _classes(nf, chains):
    """Group interleaved chains; every cross pair inside a group must interleave."""
    parent = list(range(len(chains)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    verdict = {}
    for i in range(len(chains)):
        for j in range(i + 1, len(chains)):
            v = compare_tails(nf, chains[i], chains[j])
            verdict[i, j] = v
            verdict[j, i] = _flip(v)
            if v is Relation.INTERLEAVED:
                parent[find(j)] = find(i)
    groups = {}
    for i in range(len(chains)):
        groups.setdefault(find(i), []).append(i)
    groups = list(groups.values())
    for g in groups:
        for x in g:
            for y in g:
                if x != y and verdict[x, y] is not Relation.INTERLEAVED:
                    raise InconsistentOrder(
                        f"chains {chains[x].residue} and {chains[y].residue} are merged but do not interleave"
                    )
    return groups, verdict


def order_type(R) -> PoorSum:
    """Reduced poor sum of a linear synchronous order."""
    if not is_strict_order(R):
        raise NotAnOrder("relation is not a strict order")
    if not is_linear(R):
        raise NotLinear("order is not linear")
    return order_type_of_normal_form(normal_form(R))


def order_type_of_normal_form(nf: NormalForm) -> PoorSum:
    t, p = nf.t, nf.p
    chains = [ChainHandle.of(nf, a) for a in range(t, t + p) if nf.support.contains(a)]
    points = [x for x in range(t + 2 * p) if nf.support.contains(x)]
    groups, verdict = _classes(nf, chains)

    def group_relation(g, h):
        rels = {verdict[x, y] for x in g for y in h}
        if len(rels) != 1 or Relation.INTERLEAVED in rels:
            raise InconsistentOrder("chain classes are not consistently ordered")
        return rels.pop()

    # items: ("class", group index) or ("point", value)
    placement = {}
    survivors = []
    for x in points:
        rels = set()
        for gi, g in enumerate(groups):
            rs = {locate_point(nf, x, chains[c]) for c in g}
            if Relation.INSIDE in rs:
                rels.add(Relation.INSIDE)
                continue
            if len(rs) != 1:
                raise InconsistentOrder(f"point {x} is placed inconsistently against one class")
            placement[x, gi] = rs.pop()
        if Relation.INSIDE not in rels:
            survivors.append(x)

    items = [("class", gi) for gi in range(len(groups))] + [("point", x) for x in survivors]

    def cmp(u, v):
        if u == v:
            return 0
        if u[0] == "class" and v[0] == "class":
            rel = group_relation(groups[u[1]], groups[v[1]])
        elif u[0] == "point" and v[0] == "point":
            return -1 if _comparable(nf, u[1], v[1]) else 1
        elif u[0] == "point":
            rel = placement[u[1], v[1]]
        else:
            rel = _flip(placement[v[1], u[1]])
        return -1 if rel is Relation.BEFORE else 1

    items.sort(key=functools.cmp_to_key(cmp))
    _check_sorted(items, cmp)

    terms = []
    for kind, value in items:
        if kind == "point":
            if terms and isinstance(terms[-1], int):
                terms[-1] += 1
            else:
                terms.append(1)
        else:
            terms.append(OMEGA if chains[groups[value][0]].direction == "asc" else OMEGA_STAR)
    return reduce(PoorSum(tuple(terms)))


def _check_sorted(items, cmp):
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if cmp(items[i], items[j]) >= 0:
                raise InconsistentOrder("comparisons do not form a linear order")


def equivalent_orders(R, S) -> bool:
    return order_type(R) == order_type(S)


def realize(s: PoorSum, modulus: int = None):
    """A synchronous linear order of type ``s``.

    Term ``i`` lives on the residue class ``i`` modulo ``modulus`` (default:
    the number of terms), so choosing a larger modulus leaves classes unused
    and yields an incomplete order.  A relation only sees elements that
    occur in some pair, so a sum reducing to ``1`` is realized by the empty
    relation, whose type is ``0``.
    """
    from . import syncauto as sa
    from .algebra import cartesian, natural_order_on
    from .upset import UPSet

    terms = [term for term in s.terms if term != 0]
    m = modulus or max(len(terms), 1)
    if m < len(terms):
        raise ValueError("modulus smaller than the number of terms")
    blocks = []
    for i, term in enumerate(terms):
        cls = UPSet.arithmetic(m, i)
        if term == OMEGA:
            blocks.append((cls, natural_order_on(cls, "asc")))
        elif term == OMEGA_STAR:
            blocks.append((cls, natural_order_on(cls, "desc")))
        else:
            block = UPSet.finite(i + m * k for k in range(term))
            blocks.append((block, natural_order_on(block, "asc")))
    R = sa.empty(2)
    for i, (Ei, Ri) in enumerate(blocks):
        R = sa.union(R, Ri)
        for Ej, _ in blocks[i + 1:]:
            R = sa.union(R, cartesian(Ei, Ej))
    return R
