"""Binary relations as a diagonal lasso with per-state distance sets.

Reading ``(k, l)`` first follows the ``(1,1)`` diagonal for ``min(k, l)``
steps and lands on diagonal index ``i``.  The pair is then accepted iff
``l - k`` is in ``dr[i]`` (when ``k < l``), ``k - l`` is in ``dl[i]`` (when
``k > l``), or ``eq[i]`` holds (when ``k == l``).  The distance sets are the
accepted lengths of the unary tails hanging off each diagonal state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import syncauto as sa
from .errors import ArityError
from .upset import EMPTY, UPSet

__all__ = ["StructuredBinary", "NormalForm", "to_structured", "normalize", "normal_form"]


@dataclass(frozen=True)
class StructuredBinary:
    n: int
    tau: int
    dl: tuple
    dr: tuple
    eq: tuple

    def __post_init__(self):
        if not 0 <= self.tau < self.n:
            raise ValueError(f"loop target {self.tau} outside [0, {self.n})")
        if not len(self.dl) == len(self.dr) == len(self.eq) == self.n:
            raise ValueError("per-state arrays must have one entry per diagonal state")
        for s in self.dl + self.dr:
            if s.contains(0):
                raise ValueError("distance sets must not contain 0")

    @property
    def period(self):
        return self.n - self.tau

    def index(self, k: int) -> int:
        if k < self.n:
            return k
        return self.tau + (k - self.tau) % self.period

    def member(self, k: int, l: int) -> bool:
        i = self.index(min(k, l))
        if k < l:
            return self.dr[i].contains(l - k)
        if k > l:
            return self.dl[i].contains(k - l)
        return self.eq[i]

    def to_automaton(self):
        """Diagonal states ``0..n-1`` with a unary lasso per nonempty distance set."""
        delta = [dict() for _ in range(self.n)]
        for i in range(self.n):
            delta[i][(1, 1)] = i + 1 if i + 1 < self.n else self.tau
        finals = [i for i in range(self.n) if self.eq[i]]

        def attach(src, dist, letter):
            if dist.is_empty():
                return
            t = max(dist.t, 1)
            base = len(delta)
            # node for distance d (1 <= d < t + p) sits at base + d - 1
            size = t + dist.p - 1
            for d in range(1, size + 1):
                delta.append({})
                if dist.contains(d):
                    finals.append(base + d - 1)
            delta[src][letter] = base
            for d in range(1, size):
                delta[base + d - 1][letter] = base + d
            delta[base + size - 1][letter] = base + t - 1

        for i in range(self.n):
            attach(i, self.dl[i], (1, 0))
            attach(i, self.dr[i], (0, 1))
        return sa.minimize(sa.SyncAutomaton(2, 0, finals, delta))

    def inverse(self) -> "StructuredBinary":
        return StructuredBinary(self.n, self.tau, self.dr, self.dl, self.eq)

    def dump(self) -> str:
        lines = [f"diag t={self.tau} p={self.period}"]
        for i in range(self.n):
            lines.append(
                f"{i}: DL={self.dl[i].literal()} DR={self.dr[i].literal()} EQ={int(self.eq[i])}"
            )
        return "\n".join(lines) + "\n"

    def triple(self, i):
        return self.dl[i], self.dr[i], self.eq[i]


@dataclass(frozen=True)
class NormalForm(StructuredBinary):
    """Structured form whose diagonal has transient ``t`` and period ``p``.

    ``p`` is a multiple of every tail period and of the support period and
    exceeds ``t`` and every tail transient; ``t`` is at least the support
    transient, so each periodic residue class lies wholly inside or wholly
    outside the support.
    """

    support: UPSet = EMPTY

    @property
    def t(self):
        return self.tau

    @property
    def p(self):
        return self.n - self.tau

    def inverse(self) -> "NormalForm":
        return NormalForm(self.n, self.tau, self.dr, self.dl, self.eq, self.support)


def to_structured(A) -> StructuredBinary:
    if A.arity != 2:
        raise ArityError("structured form exists for binary automata only")
    A = sa.minimize(A)
    diag = []
    seen = {}
    q = A.initial
    while q is not None and q not in seen:
        seen[q] = len(diag)
        diag.append(q)
        q = A.delta[q].get((1, 1))
    if q is None:
        # diagonal dies: close it with a rejecting self-looped index
        tau = len(diag)
        diag.append(None)
    else:
        tau = seen[q]
    dl, dr, eq = [], [], []
    for s in diag:
        if s is None:
            dl.append(EMPTY)
            dr.append(EMPTY)
            eq.append(False)
            continue
        left = sa._lasso_lengths(A, s, (1, 0), A.finals)
        right = sa._lasso_lengths(A, s, (0, 1), A.finals)
        dl.append(left - UPSet.finite([0]))
        dr.append(right - UPSet.finite([0]))
        eq.append(s in A.finals)
    return StructuredBinary(len(diag), tau, tuple(dl), tuple(dr), tuple(eq))


def _minimal_lasso(S: StructuredBinary):
    """Least (transient, period) describing the sequence of per-index data."""
    period = S.period
    for d in range(1, period + 1):
        if period % d == 0 and all(
            S.triple(S.tau + r) == S.triple(S.tau + (r + d) % period) for r in range(period)
        ):
            period = d
            break
    tau = S.tau
    while tau > 0 and S.triple(tau - 1) == S.triple(S.index(tau - 1 + period)):
        tau -= 1
    return tau, period


def support_of(S: StructuredBinary) -> UPSet:
    from .algebra import support

    return support(S.to_automaton())


def normalize(S: StructuredBinary) -> NormalForm:
    diag_t, diag_p = _minimal_lasso(S)
    supp = support_of(S)
    tails = S.dl + S.dr
    t = max(diag_t, supp.t)
    base = math.lcm(diag_p, supp.p, *(d.p for d in tails))
    floor = max([t] + [d.t for d in tails])
    p = base * (floor // base + 1)
    n = t + p
    # re-index against the original lasso
    idx = [S.index(k) for k in range(n)]
    return NormalForm(
        n,
        t,
        tuple(S.dl[i] for i in idx),
        tuple(S.dr[i] for i in idx),
        tuple(S.eq[i] for i in idx),
        supp,
    )


def normal_form(A) -> NormalForm:
    """Normal form of a binary automaton (cached on the minimized automaton)."""
    return _normal_form_cached(sa.minimize(A))


_NF_CACHE = {}


def _normal_form_cached(A):
    nf = _NF_CACHE.get(A)
    if nf is None:
        nf = normalize(to_structured(A))
        if len(_NF_CACHE) > 4096:
            _NF_CACHE.clear()
        _NF_CACHE[A] = nf
    return nf
