"""Synchronous automata on N^n.

A vector of naturals is read as the unique word ``e_{I_1}^a_1 ... e_{I_r}^a_r``
with ``I_1 > I_2 > ... > I_r`` (strictly decreasing supports).  Letters are
0/1 tuples with at least one 1.  An automaton is deterministic and partial;
every path from the initial state must read letters of non-increasing support.

Every constructor in this module returns a trimmed, minimized automaton with
canonically numbered states, so language equivalence is structural equality.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from functools import lru_cache

from .errors import ArityError, ArityExceeded, AutomatonFormatError
from .upset import UPSet

MAX_ARITY = 4

__all__ = [
    "MAX_ARITY",
    "SyncAutomaton",
    "letters",
    "encode",
    "accepts",
    "product",
    "complement",
    "project",
    "cylindrify",
    "permute",
    "decide",
    "equivalent",
    "includes",
    "is_empty",
    "empty",
    "universal",
    "diagonal",
    "unary_from_upset",
    "upset_from_unary",
    "check_monotone",
    "from_json",
    "to_json",
    "to_dot",
]


@lru_cache(maxsize=None)
def letters(n):
    """All letters of arity ``n``: nonzero 0/1 tuples, largest support first."""
    out = [bits for bits in itertools.product((1, 0), repeat=n) if any(bits)]
    out.sort(key=lambda b: (-sum(b), tuple(-x for x in b)))
    return tuple(out)


def _subset(a, b):
    """Support of letter ``a`` included in support of ``b``."""
    return all(x <= y for x, y in zip(a, b))


def encode(x):
    """Unique factorization of ``x`` into letters of strictly decreasing support."""
    rest = list(x)
    if any(v < 0 for v in rest):
        raise ValueError("vectors must be natural")
    word = []
    while any(rest):
        step = min(v for v in rest if v)
        letter = tuple(1 if v else 0 for v in rest)
        word.extend([letter] * step)
        rest = [v - step if v else 0 for v in rest]
    return word


class SyncAutomaton:
    """Deterministic partial automaton over support letters.

    ``delta`` is a tuple (one entry per state) of dicts mapping letters to
    target states.  Instances are treated as immutable values.
    """

    __slots__ = ("arity", "initial", "finals", "delta", "_key")

    def __init__(self, arity, initial, finals, delta):
        self.arity = arity
        self.initial = initial
        self.finals = frozenset(finals)
        self.delta = tuple(dict(d) for d in delta)
        self._key = None

    @property
    def num_states(self):
        return len(self.delta)

    def step(self, state, letter):
        return self.delta[state].get(letter)

    def run(self, word):
        q = self.initial
        for letter in word:
            q = self.delta[q].get(letter)
            if q is None:
                return None
        return q

    def accepts(self, x):
        if len(x) != self.arity:
            raise ArityError(f"vector of length {len(x)} for arity {self.arity}")
        return self.run(encode(x)) in self.finals

    def transitions(self):
        for q, d in enumerate(self.delta):
            for letter in letters(self.arity):
                if letter in d:
                    yield q, letter, d[letter]

    def key(self):
        if self._key is None:
            self._key = (
                self.arity,
                self.initial,
                tuple(sorted(self.finals)),
                tuple(tuple(sorted(d.items())) for d in self.delta),
            )
        return self._key

    def __eq__(self, other):
        return isinstance(other, SyncAutomaton) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"SyncAutomaton(arity={self.arity}, states={self.num_states}, finals={sorted(self.finals)})"


def accepts(A, x):
    return A.accepts(x)


# -- internal machinery -------------------------------------------------------


def _check_arity(n):
    if n > MAX_ARITY:
        raise ArityExceeded(f"arity {n} exceeds the bound {MAX_ARITY}")


def _explore(arity, init, step, is_final):
    """Build the automaton reachable from ``init`` restricted to valid words.

    ``step(state, letter)`` returns a successor or ``None``.  Each explored
    node pairs an abstract state with the support still allowed, which is
    what keeps every path monotone.
    """
    _check_arity(arity)
    full = (1,) * arity
    start = (init, full)
    index = {start: 0}
    order = [start]
    delta = [{}]
    queue = deque([start])
    while queue:
        node = queue.popleft()
        state, allowed = node
        src = index[node]
        for letter in letters(arity):
            if not _subset(letter, allowed):
                continue
            nxt = step(state, letter)
            if nxt is None:
                continue
            target = (nxt, letter)
            if target not in index:
                index[target] = len(order)
                order.append(target)
                delta.append({})
                queue.append(target)
            delta[src][letter] = index[target]
    finals = [i for i, (state, _) in enumerate(order) if is_final(state)]
    return _finish(SyncAutomaton(arity, 0, finals, delta))


def _finish(A):
    return _canonical(_minimize(_trim(A)))


def _trim(A):
    n = A.num_states
    reach = {A.initial}
    queue = deque([A.initial])
    while queue:
        q = queue.popleft()
        for r in A.delta[q].values():
            if r not in reach:
                reach.add(r)
                queue.append(r)
    preds = [set() for _ in range(n)]
    for q, _, r in A.transitions():
        preds[r].add(q)
    coreach = set(f for f in A.finals if f in reach)
    queue = deque(coreach)
    while queue:
        q = queue.popleft()
        for s in preds[q]:
            if s not in coreach and s in reach:
                coreach.add(s)
                queue.append(s)
    keep = coreach
    if not keep:
        return SyncAutomaton(A.arity, 0, (), [{}])
    ids = {}
    for q in sorted(keep | {A.initial}):
        ids[q] = len(ids)
    delta = [dict() for _ in ids]
    for q in ids:
        for letter, r in A.delta[q].items():
            if r in keep:
                delta[ids[q]][letter] = ids[r]
    finals = [ids[f] for f in A.finals if f in keep]
    return SyncAutomaton(A.arity, ids[A.initial], finals, delta)


def _minimize(A):
    """Moore partition refinement; missing transitions behave as a shared sink."""
    alphabet = letters(A.arity)
    block = [1 if q in A.finals else 0 for q in range(A.num_states)]
    while True:
        sigs = {}
        new = []
        for q in range(A.num_states):
            sig = (block[q],) + tuple(
                block[A.delta[q][a]] if a in A.delta[q] else -1 for a in alphabet
            )
            new.append(sigs.setdefault(sig, len(sigs)))
        if len(sigs) == len(set(block)):
            block = new
            break
        block = new
    count = max(block) + 1 if block else 0
    delta = [dict() for _ in range(count)]
    for q in range(A.num_states):
        for a, r in A.delta[q].items():
            delta[block[q]][a] = block[r]
    finals = {block[q] for q in A.finals}
    return SyncAutomaton(A.arity, block[A.initial], finals, delta)


def _canonical(A):
    """Renumber states in breadth-first order from the initial state."""
    ids = {A.initial: 0}
    queue = deque([A.initial])
    while queue:
        q = queue.popleft()
        for a in letters(A.arity):
            r = A.delta[q].get(a)
            if r is not None and r not in ids:
                ids[r] = len(ids)
                queue.append(r)
    delta = [dict() for _ in ids]
    for q, i in ids.items():
        for a, r in A.delta[q].items():
            if r in ids:
                delta[i][a] = ids[r]
    finals = [ids[f] for f in A.finals if f in ids]
    return SyncAutomaton(A.arity, 0, finals, delta)


def minimize(A):
    """Trimmed, minimal, canonically numbered automaton for the same relation."""
    return _finish(A)


# -- basic automata -----------------------------------------------------------


def empty(arity):
    return SyncAutomaton(arity, 0, (), [{}])


def universal(arity):
    return _explore(arity, 0, lambda q, a: 0, lambda q: True)


def diagonal():
    """``{(x, x)}``."""
    return SyncAutomaton(2, 0, (0,), [{(1, 1): 0}])


def unary_from_upset(S: UPSet):
    """Arity-1 automaton accepting exactly the members of ``S``."""
    # node k stands for "k letters read"; nodes t..t+p-1 form the loop
    t, p = S.t, S.p
    size = t + p
    delta = [{(1,): k + 1} for k in range(size - 1)] + [{(1,): t}]
    finals = [k for k in range(size) if S.contains(k)]
    return _finish(SyncAutomaton(1, 0, finals, delta))


def _lasso_lengths(A, start, letter, targets):
    """Lengths ``d`` such that ``letter^d`` leads from ``start`` into ``targets``."""
    path = []
    seen = {}
    q = start
    while q is not None and q not in seen:
        seen[q] = len(path)
        path.append(q)
        q = A.delta[q].get(letter)
    if q is None:
        hits = [d for d, s in enumerate(path) if s in targets]
        return UPSet.finite(hits)
    t = seen[q]
    p = len(path) - t

    def member(d):
        i = d if d < len(path) else t + (d - t) % p
        return path[i] in targets

    return UPSet.from_function(t, p, member)


def upset_from_unary(A):
    if A.arity != 1:
        raise ArityError("expected a unary automaton")
    return _lasso_lengths(A, A.initial, (1,), A.finals)


# -- Boolean operations -------------------------------------------------------


def _same_arity(A, B):
    if A.arity != B.arity:
        raise ArityError(f"arity mismatch: {A.arity} vs {B.arity}")


def product(A, B, op="intersection"):
    _same_arity(A, B)
    if op in ("union", "or"):
        final = lambda s: s[0] in A.finals or s[1] in B.finals
    elif op in ("intersection", "and"):
        final = lambda s: s[0] in A.finals and s[1] in B.finals
    elif op == "difference":
        final = lambda s: s[0] in A.finals and s[1] not in B.finals
    else:
        raise ValueError(f"unknown product operation {op!r}")

    def step(s, a):
        x = A.delta[s[0]].get(a) if s[0] is not None else None
        y = B.delta[s[1]].get(a) if s[1] is not None else None
        if x is None and y is None:
            return None
        return (x, y)

    return _explore(A.arity, (A.initial, B.initial), step, final)


def union(A, B):
    return product(A, B, "union")


def intersection(A, B):
    return product(A, B, "intersection")


def difference(A, B):
    return product(A, B, "difference")


def complement(A):
    """Complement relative to N^n (the valid words), not to all letter strings."""

    # -1 is the sink for vectors the automaton does not read to the end
    def step_total(q, a):
        if q == -1:
            return -1
        r = A.delta[q].get(a)
        return -1 if r is None else r

    return _explore(A.arity, A.initial, step_total, lambda q: q not in A.finals)


# -- coordinates ----------------------------------------------------------------


def _insert(bits, i, b):
    return bits[:i] + (b,) + bits[i:]


def _delete(bits, i):
    return bits[:i] + bits[i + 1:]


def project(A, i):
    """Existentially quantify coordinate ``i`` (1-based)."""
    n = A.arity
    if not 1 <= i <= n:
        raise ArityError(f"coordinate {i} out of range for arity {n}")
    j = i - 1
    lone = tuple(1 if k == j else 0 for k in range(n))

    def closure(states):
        todo = list(states)
        seen = set(states)
        while todo:
            q = todo.pop()
            r = A.delta[q].get(lone)
            if r is not None and r not in seen:
                seen.add(r)
                todo.append(r)
        return frozenset(seen)

    def step(states, a):
        out = set()
        for q in states:
            for b in (0, 1):
                r = A.delta[q].get(_insert(a, j, b))
                if r is not None:
                    out.add(r)
        return closure(out) if out else None

    return _explore(n - 1, closure({A.initial}), step, lambda s: bool(s & A.finals))


def cylindrify(A, i):
    """Add an unconstrained coordinate at position ``i`` (1-based, ``1..n+1``)."""
    n = A.arity
    if not 1 <= i <= n + 1:
        raise ArityError(f"position {i} out of range for arity {n}")
    j = i - 1

    def step(q, a):
        rest = _delete(a, j)
        if not any(rest):
            # only the new coordinate is still running
            return q
        return A.delta[q].get(rest)

    return _explore(n + 1, A.initial, step, lambda q: q in A.finals)


def permute(A, order):
    """Reorder coordinates: coordinate ``k`` of the result is coordinate ``order[k]`` of ``A``.

    ``order`` is a permutation of ``0..n-1`` (0-based).
    """
    n = A.arity
    if sorted(order) != list(range(n)):
        raise ArityError(f"{order} is not a permutation of {n} coordinates")
    inv = [0] * n
    for k, src in enumerate(order):
        inv[src] = k

    def step(q, a):
        original = tuple(a[inv[s]] for s in range(n))
        return A.delta[q].get(original)

    return _explore(n, A.initial, step, lambda q: q in A.finals)


# -- decisions ----------------------------------------------------------------


def is_empty(A):
    return not _trim(A).finals


def includes(A, B):
    """``B`` is a subset of ``A``."""
    return is_empty(difference(B, A))


def equivalent(A, B):
    _same_arity(A, B)
    return _finish(A) == _finish(B)


def decide(A, B=None, query="isEmpty"):
    if query in ("isEmpty", "is_empty", "empty"):
        return is_empty(A)
    if B is None:
        raise ValueError(f"query {query!r} needs two automata")
    _same_arity(A, B)
    if query == "includes":
        return includes(A, B)
    if query == "equivalent":
        return equivalent(A, B)
    raise ValueError(f"unknown query {query!r}")


# -- validation and formats -----------------------------------------------------


def check_monotone(A):
    """Return the first monotonicity violation ``(state, in_letter, out_letter)`` or ``None``."""
    reach = {A.initial}
    queue = deque([A.initial])
    incoming = {}
    while queue:
        q = queue.popleft()
        for a, r in A.delta[q].items():
            incoming.setdefault(r, set()).add(a)
            if r not in reach:
                reach.add(r)
                queue.append(r)
    for q in sorted(reach):
        for a_in in sorted(incoming.get(q, ())):
            for a_out in A.delta[q]:
                if not _subset(a_out, a_in):
                    return q, a_in, a_out
    return None


def from_dict(data):
    try:
        n = int(data["arity"])
        size = int(data["states"])
        initial = int(data["initial"])
        finals = [int(f) for f in data["finals"]]
        raw = data["transitions"]
    except (KeyError, TypeError, ValueError) as exc:
        raise AutomatonFormatError(f"missing or malformed field: {exc}") from None
    if n < 0 or size < 1 or not 0 <= initial < size:
        raise AutomatonFormatError("bad arity, state count or initial state")
    _check_arity(n)
    if any(not 0 <= f < size for f in finals):
        raise AutomatonFormatError("final state out of range")
    delta = [dict() for _ in range(size)]
    for tr in raw:
        try:
            src, dst = int(tr["from"]), int(tr["to"])
            letter = tuple(int(b) for b in tr["letter"])
        except (KeyError, TypeError, ValueError) as exc:
            raise AutomatonFormatError(f"malformed transition {tr!r}: {exc}") from None
        if not (0 <= src < size and 0 <= dst < size):
            raise AutomatonFormatError(f"transition {tr!r} references a missing state")
        if len(letter) != n or any(b not in (0, 1) for b in letter) or not any(letter):
            raise AutomatonFormatError(f"bad letter {list(letter)} for arity {n}")
        if letter in delta[src] and delta[src][letter] != dst:
            raise AutomatonFormatError(f"nondeterministic transitions from state {src} on {list(letter)}")
        delta[src][letter] = dst
    A = SyncAutomaton(n, initial, finals, delta)
    bad = check_monotone(A)
    if bad is not None:
        q, a_in, a_out = bad
        raise AutomatonFormatError(
            f"support monotonicity violated at state {q}: {list(a_in)} followed by {list(a_out)}"
        )
    return A


def to_dict(A):
    return {
        "arity": A.arity,
        "states": A.num_states,
        "initial": A.initial,
        "finals": sorted(A.finals),
        "transitions": [
            {"from": q, "letter": list(a), "to": r} for q, a, r in A.transitions()
        ],
    }


def from_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AutomatonFormatError(f"invalid JSON: {exc}") from None
    return from_dict(data)


def to_json(A):
    return json.dumps(to_dict(A))


def load(path):
    with open(path) as fh:
        return from_json(fh.read())


def save(A, path):
    with open(path, "w") as fh:
        fh.write(to_json(A) + "\n")


def to_dot(A, name="A"):
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point];']
    for q in range(A.num_states):
        shape = "doublecircle" if q in A.finals else "circle"
        lines.append(f'  {q} [shape={shape}, label="{q}"];')
    lines.append(f"  __start -> {A.initial};")
    for q, a, r in A.transitions():
        label = "(" + ",".join(str(b) for b in a) + ")"
        lines.append(f'  {q} -> {r} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
