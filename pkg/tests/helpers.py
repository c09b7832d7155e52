"""Random generators and brute-force references shared by the test modules."""

import random

import numpy as np

from syncorder import syncauto as sa
from syncorder.algebra import collapse_finite_complement, complete_with, finite_relation, support
from syncorder.fixtures import FIXTURES
from syncorder.ordertype import OMEGA, OMEGA_STAR, PoorSum, realize

BINARY_LETTERS = ((1, 1), (1, 0), (0, 1))


def random_automaton(rng, max_states=8, arity=2, density=0.9, final_prob=0.4):
    """Random monotone automaton: a state reached by letter ``a`` only emits letters inside ``a``."""
    n = rng.randint(max(1, max_states // 2), max_states)
    full = (1,) * arity
    # bias towards full-support states so the diagonal part is not trivial
    pool = [full] * len(sa.letters(arity)) + list(sa.letters(arity))
    mode = [full] + [rng.choice(pool) for _ in range(n - 1)]
    delta = [dict() for _ in range(n)]
    for q in range(n):
        for a in sa.letters(arity):
            if not all(x <= y for x, y in zip(a, mode[q])):
                continue
            targets = [r for r in range(n) if mode[r] == a]
            if targets and rng.random() < density:
                delta[q][a] = rng.choice(targets)
    finals = [q for q in range(n) if rng.random() < final_prob]
    return sa.SyncAutomaton(arity, 0, finals, delta)


def random_automata(count, seed, **kw):
    rng = random.Random(seed)
    return [random_automaton(rng, **kw) for _ in range(count)]


def random_poor_sum(rng, max_terms=4, max_fin=4):
    """Random poor sum; a lone point is skipped since no pair can witness it."""
    while True:
        s = PoorSum(tuple(
            rng.choice([OMEGA, OMEGA_STAR, rng.randint(1, max_fin)])
            for _ in range(rng.randint(1, max_terms))
        ))
        if s.reduced().terms != (1,):
            return s


def random_linear_order(rng, max_terms=4):
    s = random_poor_sum(rng, max_terms)
    extra = rng.randint(0, 2)
    return s, realize(s, len(s.terms) + extra)


def fixture_automata():
    return {name: make() for name, make in FIXTURES.items()}


def brute_matrix(R, N):
    """Membership matrix computed straight from ``accepts`` (slow, tiny N only)."""
    M = np.zeros((N + 1, N + 1), dtype=bool)
    for k in range(N + 1):
        for l in range(N + 1):
            M[k, l] = R.accepts((k, l))
    return M


def random_complete_order(rng):
    """A complete strict order, linear or not, built from random pieces."""
    kind = rng.random()
    if kind < 0.5:
        _, R = random_linear_order(rng)
    else:
        # finite poset glued below or above an omega / omega* block
        size = rng.randint(2, 6)
        rank = list(range(size))
        rng.shuffle(rank)
        pairs = set()
        for a in range(size):
            for b in range(size):
                if rank[a] < rank[b] and rng.random() < 0.4:
                    pairs.add((a, b))
        pairs = _transitive_closure(pairs)
        if not pairs:
            pairs = {(0, 1)}
        R = finite_relation(pairs)
    E = ~support(R)
    if E.is_finite():
        return collapse_finite_complement(R)
    return complete_with(R, rng.choice(["omega", "omegaStar"]))


def _transitive_closure(pairs):
    pairs = set(pairs)
    while True:
        extra = {(a, d) for a, b in pairs for c, d in pairs if b == c} - pairs
        if not extra:
            return pairs
        pairs |= extra


def random_upset(rng, max_t=4, max_p=4, positive=False, density=0.4):
    from syncorder.upset import UPSet

    t = rng.randint(0, max_t)
    p = rng.randint(1, max_p)
    head = [x for x in range(t) if rng.random() < density]
    res = [r for r in range(p) if rng.random() < density]
    S = UPSet.make(t, p, head, res)
    if positive:
        S = S - UPSet.finite([0])
    return S


def random_structured(rng, max_n=5):
    from syncorder.structured import StructuredBinary

    n = rng.randint(1, max_n)
    tau = rng.randint(0, n - 1)
    dl = tuple(random_upset(rng, positive=True) for _ in range(n))
    dr = tuple(random_upset(rng, positive=True) for _ in range(n))
    eq = tuple(rng.random() < 0.2 for _ in range(n))
    return StructuredBinary(n, tau, dl, dr, eq)


def random_relations(count, seed):
    """Mix of raw random automata and automata drawn from random structured forms."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        if i % 2:
            out.append(random_automaton(rng))
        else:
            out.append(random_structured(rng).to_automaton())
    return out


def n4_violations(nf, M, kmax=6):
    """Implications between chain memberships that a normal form guarantees.

    ``M`` is a brute-force membership matrix of the relation (or its inverse)
    covering coordinates up to ``t + (kmax + 2) * p``.
    """
    t, p = nf.t, nf.p
    bad = []
    for a in range(t, t + p):
        for b in range(a + 1, t + p):
            # (a + 2p, b) in R iff (a + kp, b) in R for all k >= 2
            far = [M[a + k * p, b] for k in range(2, kmax + 1)]
            if far[0] != all(far):
                bad.append(("left-tail", a, b))
            # (a, b + p) in R iff (a, b + kp) in R for all k >= 1
            far = [M[a, b + k * p] for k in range(1, kmax + 1)]
            if far[0] != all(far):
                bad.append(("right-tail", a, b))
            # (a + kp, b + lp) in R implies (a, b + (l - k)p) in R for k < l
            for k in range(kmax + 1):
                for l in range(k + 1, kmax + 1):
                    if M[a + k * p, b + l * p] and not M[a, b + (l - k) * p]:
                        bad.append(("deflate", a, b, k, l))
    return bad


def sized_automata(count, seed, lo=4, hi=8, **kw):
    """Random automata whose minimized size lies in ``[lo, hi]``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        A = sa.minimize(random_automaton(rng, max_states=hi + 4, density=0.95, **kw))
        if lo <= A.num_states <= hi:
            out.append(A)
    return out
