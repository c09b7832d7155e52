"""Brute-force semantics on finite prefixes.

Everything here runs the raw automaton letter by letter; structured and
normal forms are never consulted, so the oracle stays independent of the
decision procedures it is used to check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import networkx as nx
import numpy as np

from . import syncauto as sa
from .errors import NotAnOrder

__all__ = [
    "pair_matrix",
    "enumerate_pairs",
    "support_members",
    "longest_chain_prefix",
    "max_antichain_prefix",
    "verify_against_brute_force",
    "Report",
]


def pair_matrix(R, N: int) -> np.ndarray:
    """Boolean ``(N+1) x (N+1)`` matrix ``M[k, l] = (k, l) in R``."""
    if R.arity != 2:
        raise sa.ArityError("pair_matrix needs a binary automaton")
    M = np.zeros((N + 1, N + 1), dtype=bool)
    d = R.delta
    q = R.initial
    for m in range(N + 1):
        # q is the state after (1,1)^m
        if q is None:
            break
        M[m, m] = q in R.finals
        for letter, row_wise in (((0, 1), True), ((1, 0), False)):
            s = d[q].get(letter)
            j = 1
            while s is not None and m + j <= N:
                if s in R.finals:
                    if row_wise:
                        M[m, m + j] = True
                    else:
                        M[m + j, m] = True
                s = d[s].get(letter)
                j += 1
        q = d[q].get((1, 1))
    return M


def enumerate_pairs(R, N: int) -> set:
    M = pair_matrix(R, N)
    return {(int(k), int(l)) for k, l in zip(*np.nonzero(M))}


def support_members(R, N: int) -> list:
    """Elements ``x <= N`` of the support of ``R``.

    A partner ``y`` can be taken below ``x + |Q|``: past that, the run
    reading the lone coordinate cycles.
    """
    bound = N + R.num_states + 1
    M = pair_matrix(R, bound)
    related = M.any(axis=0) | M.any(axis=1)
    return [x for x in range(N + 1) if related[x]]


def _prefix_graph(R, N, direction=None):
    M = pair_matrix(R, N)
    if M.diagonal().any():
        raise NotAnOrder(f"reflexive pair ({int(np.argmax(M.diagonal()))}, same)")
    edges = M
    if direction == "asc":
        edges = np.triu(M)
    elif direction == "desc":
        edges = np.tril(M)
    elif direction is not None:
        raise ValueError(f"direction must be 'asc', 'desc' or None, got {direction!r}")
    G = nx.DiGraph()
    G.add_edges_from((int(k), int(l)) for k, l in zip(*np.nonzero(edges)))
    if not nx.is_directed_acyclic_graph(G):
        raise NotAnOrder("cycle on the prefix")
    return G, M


def longest_chain_prefix(R, N: int, direction=None) -> int:
    """Most elements on a path of ``R`` restricted to ``{0..N}`` (0 when no pair lies there).

    With ``direction="asc"`` only steps ``k -> l`` with ``k < l`` are used,
    so the chain climbs in the order while the numbers grow; ``"desc"``
    keeps steps with ``k > l``, i.e. the order falls as the numbers grow.
    Every infinite chain of the matching kind has such a subsequence.
    """
    G, _ = _prefix_graph(R, N, direction)
    if G.number_of_nodes() == 0:
        return 0
    return nx.dag_longest_path_length(G) + 1


def max_antichain_prefix(R, N: int) -> int:
    """Largest antichain inside ``supp(R) & {0..N}``, via Dilworth and bipartite matching."""
    _, M = _prefix_graph(R, N)
    if not _transitive(M):
        raise NotAnOrder("relation is not transitive on the prefix")
    nodes = support_members(R, N)
    B = nx.Graph()
    left = [("L", x) for x in nodes]
    B.add_nodes_from(left, bipartite=0)
    B.add_nodes_from((("R", x) for x in nodes), bipartite=1)
    for x in nodes:
        for y in nodes:
            if M[x, y]:
                B.add_edge(("L", x), ("R", y))
    matching = nx.bipartite.hopcroft_karp_matching(B, top_nodes=left)
    matched = sum(1 for u in matching if u[0] == "L")
    return len(nodes) - matched


def _transitive(M):
    A = M.astype(np.int64)
    two_step = (A @ A) > 0
    return not (two_step & ~M).any()


@dataclass
class Report:
    prefix: int
    prefix_order: bool
    prefix_linear: bool
    divergences: list = field(default_factory=list)

    def ok(self):
        return not self.divergences

    def to_json(self):
        return json.dumps(self.divergences, sort_keys=True)


def verify_against_brute_force(R, N: int) -> Report:
    """Compare module verdicts with what the prefix ``{0..N}`` can confirm.

    A prefix can only exhibit counterexamples, so a divergence is recorded
    when the prefix refutes a positive verdict, or when a membership query of
    the structured form disagrees with the raw automaton.
    """
    from .orderdecide import has_infinite_chain, is_linear, is_strict_order
    from .structured import normal_form

    M = pair_matrix(R, N)
    divergences = []
    name = f"prefix<={N}"

    loops = bool(M.diagonal().any()) or bool((M & M.T).any())
    prefix_order = not loops and _transitive(M)
    order = is_strict_order(R)
    if order and not prefix_order:
        divergences.append({"check": "isStrictOrder", "input": name, "expected": False, "got": True})

    prefix_linear = False
    if prefix_order:
        supp = support_members(R, N)
        sub = M[np.ix_(supp, supp)]
        comparable = sub | sub.T
        np.fill_diagonal(comparable, True)
        prefix_linear = bool(comparable.all())
    if order:
        linear = is_linear(R)
        if linear and not prefix_linear:
            divergences.append({"check": "isLinear", "input": name, "expected": False, "got": True})

    nf = normal_form(R)
    for k in range(N + 1):
        for l in range(N + 1):
            if nf.member(k, l) != M[k, l]:
                divergences.append(
                    {"check": "memberPair", "input": [k, l], "expected": bool(M[k, l]), "got": not M[k, l]}
                )

    if order:
        for direction in ("asc", "desc"):
            v = has_infinite_chain(R, direction)
            if v.exists:
                k, d = v.witness
                for j in range(11):
                    a, b = k + j * d, k + (j + 1) * d
                    pair = (a, b) if direction == "asc" else (b, a)
                    if not R.accepts(pair):
                        divergences.append(
                            {"check": f"chain-{direction}", "input": list(pair), "expected": False, "got": True}
                        )
                        break

    return Report(N, prefix_order, prefix_linear, divergences)
