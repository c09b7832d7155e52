"""Modular logic over the naturals: atoms ``a - b IN L`` with ``L`` ultimately periodic.

Grammar::

    f     := "EX" var "." f | "ALL" var "." f | f "OR" f | f "AND" f
           | "NOT" f | "(" f ")" | atom
    atom  := term "-" term "IN" (name | UPSet-literal) | term "-" term ">" "0"
           | var "=" var | "TRUE" | "FALSE"
    term  := var | "0"

``NOT`` binds tighter than ``AND``, which binds tighter than ``OR``;
quantifiers extend as far right as possible.  ``a - b IN L`` holds when
``a >= b`` and ``a - b`` is in ``L``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce as _fold

from . import syncauto as sa
from .errors import ArityExceeded, FormulaParseError
from .structured import StructuredBinary
from .upset import EMPTY, POSITIVE, UPSet, parse_upset

__all__ = [
    "ZERO",
    "Formula",
    "Diff",
    "Equal",
    "Const",
    "Not",
    "And",
    "Or",
    "Exists",
    "Forall",
    "parse_formula",
    "format_formula",
    "free_variables",
    "compile_formula",
    "automaton_to_formula",
]

ZERO = "0"


class Formula:
    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True)
class Diff(Formula):
    left: str
    right: str
    values: UPSet


@dataclass(frozen=True)
class Equal(Formula):
    left: str
    right: str


@dataclass(frozen=True)
class Const(Formula):
    value: bool


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    args: tuple


@dataclass(frozen=True)
class Or(Formula):
    args: tuple


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


TRUE = Const(True)
FALSE = Const(False)

# -- parsing --------------------------------------------------------------------

_KEYWORDS = {"EX", "ALL", "OR", "AND", "NOT", "IN", "TRUE", "FALSE"}
_TOKEN = re.compile(
    r"\s*(?:(?P<up>UP\([^)]*\))|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<num>\d+)|(?P<sym>[().=\->]))"
)


def _tokenize(text):
    pos = 0
    out = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "name" and value in _KEYWORDS:
            kind = "kw"
        out.append((kind, value, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, sets):
        self.tokens = _tokenize(text)
        self.i = 0
        self.sets = sets

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message):
        raise FormulaParseError(message, self.peek()[2])

    def expect(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = tok[1] if tok[1] is not None else "end of input"
            self.fail(f"expected {want!r}, found {got!r}")
        return self.advance()

    def at(self, kind, value=None):
        tok = self.peek()
        return tok[0] == kind and (value is None or tok[1] == value)

    def parse(self):
        f = self.formula()
        if not self.at("end"):
            self.fail(f"unexpected {self.peek()[1]!r}")
        return f

    def formula(self):
        args = [self.conjunction()]
        while self.at("kw", "OR"):
            self.advance()
            args.append(self.conjunction())
        return args[0] if len(args) == 1 else Or(tuple(args))

    def conjunction(self):
        args = [self.unary()]
        while self.at("kw", "AND"):
            self.advance()
            args.append(self.unary())
        return args[0] if len(args) == 1 else And(tuple(args))

    def unary(self):
        if self.at("kw", "NOT"):
            self.advance()
            return Not(self.unary())
        if self.at("kw", "EX") or self.at("kw", "ALL"):
            kind = self.advance()[1]
            var = self.expect("name")[1]
            self.expect("sym", ".")
            body = self.formula()
            return Exists(var, body) if kind == "EX" else Forall(var, body)
        if self.at("sym", "("):
            self.advance()
            f = self.formula()
            self.expect("sym", ")")
            return f
        return self.atom()

    def term(self):
        tok = self.peek()
        if tok[0] == "name":
            return self.advance()[1]
        if tok[0] == "num" and tok[1] == "0":
            self.advance()
            return ZERO
        self.fail("expected a variable or 0")

    def atom(self):
        if self.at("kw", "TRUE"):
            self.advance()
            return TRUE
        if self.at("kw", "FALSE"):
            self.advance()
            return FALSE
        left = self.term()
        if self.at("sym", "="):
            self.advance()
            right = self.term()
            if ZERO in (left, right):
                self.fail("equality relates two variables")
            return Equal(left, right)
        self.expect("sym", "-")
        right = self.term()
        if self.at("sym", ">"):
            self.advance()
            tok = self.expect("num")
            if tok[1] != "0":
                raise FormulaParseError("only '> 0' is supported", tok[2])
            return Diff(left, right, POSITIVE)
        self.expect("kw", "IN")
        tok = self.peek()
        if tok[0] == "up":
            self.advance()
            try:
                return Diff(left, right, parse_upset(tok[1]))
            except ValueError as exc:
                raise FormulaParseError(str(exc), tok[2]) from None
        if tok[0] == "name":
            self.advance()
            if tok[1] not in self.sets:
                raise FormulaParseError(f"unknown set name {tok[1]!r}", tok[2])
            return Diff(left, right, self.sets[tok[1]])
        self.fail("expected a set name or UP(...) literal")


def parse_formula(text: str, sets=None) -> Formula:
    """Parse ``text``; ``sets`` maps names usable after ``IN`` to :class:`UPSet` values."""
    f = _Parser(text, dict(sets or {})).parse()
    _check_binding(f, frozenset())
    return f


def _check_binding(f, bound):
    if isinstance(f, (Exists, Forall)):
        if f.var in bound:
            raise FormulaParseError(f"variable {f.var!r} bound twice on one path", 0)
        _check_binding(f.body, bound | {f.var})
    elif isinstance(f, Not):
        _check_binding(f.body, bound)
    elif isinstance(f, (And, Or)):
        for g in f.args:
            _check_binding(g, bound)


def free_variables(f: Formula) -> frozenset:
    if isinstance(f, Diff):
        return frozenset(v for v in (f.left, f.right) if v != ZERO)
    if isinstance(f, Equal):
        return frozenset((f.left, f.right))
    if isinstance(f, Const):
        return frozenset()
    if isinstance(f, Not):
        return free_variables(f.body)
    if isinstance(f, (And, Or)):
        return frozenset().union(*(free_variables(g) for g in f.args))
    if isinstance(f, (Exists, Forall)):
        return free_variables(f.body) - {f.var}
    raise TypeError(f"not a formula: {f!r}")


# -- printing -------------------------------------------------------------------

_PREC = {Or: 1, And: 2, Not: 3}


def format_formula(f: Formula) -> str:
    def fmt(g, outer):
        if isinstance(g, Diff):
            return f"{g.left} - {g.right} IN {g.values.literal()}"
        if isinstance(g, Equal):
            return f"{g.left} = {g.right}"
        if isinstance(g, Const):
            return "TRUE" if g.value else "FALSE"
        if isinstance(g, (Exists, Forall)):
            kw = "EX" if isinstance(g, Exists) else "ALL"
            s = f"{kw} {g.var} . {fmt(g.body, 0)}"
            return f"({s})" if outer > 0 else s
        if isinstance(g, Not):
            return "NOT " + fmt(g.body, 3)
        prec = _PREC[type(g)]
        sep = " OR " if isinstance(g, Or) else " AND "
        s = sep.join(fmt(a, prec + 1) for a in g.args)
        return f"({s})" if outer > prec else s

    return fmt(f, 0)


# -- compilation ----------------------------------------------------------------


def _embed(base, positions, n):
    """Place a ``len(positions)``-ary automaton on the given coordinates of arity ``n``."""
    m = len(positions)
    A = base
    for k in range(m, n):
        A = sa.cylindrify(A, k + 1)
    others = [c for c in range(n) if c not in positions]
    layout = list(positions) + others
    order = [layout.index(c) for c in range(n)]
    return sa.permute(A, order)


def _diff_automaton(values):
    """``{(a, b) : a >= b, a - b in values}``."""
    gaps = values - UPSet.finite([0])
    return StructuredBinary(1, 0, (gaps,), (EMPTY,), (values.contains(0),)).to_automaton()


def _atom(f, ctx):
    n = len(ctx)
    pos = {v: i for i, v in enumerate(ctx)}
    if isinstance(f, Const):
        return sa.universal(n) if f.value else sa.empty(n)
    if isinstance(f, Equal):
        if f.left == f.right:
            return sa.universal(n)
        return _embed(sa.diagonal(), [pos[f.left], pos[f.right]], n)
    a, b, values = f.left, f.right, f.values
    if a == b:
        return sa.universal(n) if values.contains(0) else sa.empty(n)
    if a == ZERO:
        zero_only = UPSet.finite([0]) if values.contains(0) else EMPTY
        return _embed(sa.unary_from_upset(zero_only), [pos[b]], n)
    if b == ZERO:
        return _embed(sa.unary_from_upset(values), [pos[a]], n)
    return _embed(_diff_automaton(values), [pos[a], pos[b]], n)


def _compile(f, ctx):
    n = len(ctx)
    if isinstance(f, (Const, Equal, Diff)):
        for v in free_variables(f):
            if v not in ctx:
                raise ValueError(f"variable {v!r} is neither free nor bound")
        return _atom(f, ctx)
    if isinstance(f, Not):
        return sa.complement(_compile(f.body, ctx))
    if isinstance(f, And):
        return _fold(sa.intersection, (_compile(g, ctx) for g in f.args))
    if isinstance(f, Or):
        return _fold(sa.union, (_compile(g, ctx) for g in f.args))
    if isinstance(f, (Exists, Forall)):
        if f.var in ctx:
            raise ValueError(f"variable {f.var!r} is already in scope")
        if n + 1 > sa.MAX_ARITY:
            raise ArityExceeded(f"quantifying {f.var!r} needs arity {n + 1} > {sa.MAX_ARITY}")
        inner = ctx + (f.var,)
        body = _compile(f.body, inner)
        if isinstance(f, Exists):
            return sa.project(body, n + 1)
        return sa.complement(sa.project(sa.complement(body), n + 1))
    raise TypeError(f"not a formula: {f!r}")


def compile_formula(f, variables=None, sets=None):
    """Automaton over ``variables`` (default: free variables, sorted) accepting the models of ``f``."""
    if isinstance(f, str):
        f = parse_formula(f, sets)
    free = free_variables(f)
    if variables is None:
        variables = sorted(free)
    variables = tuple(variables)
    if len(set(variables)) != len(variables):
        raise ValueError("duplicate variable in coordinate order")
    missing = free - set(variables)
    if missing:
        raise ValueError(f"free variables {sorted(missing)} missing from the coordinate order")
    if len(variables) > sa.MAX_ARITY:
        raise ArityExceeded(f"{len(variables)} free variables exceed the bound {sa.MAX_ARITY}")
    return sa.minimize(_compile(f, variables))


def default_names(n):
    if n == 1:
        return ("x",)
    if n == 2:
        return ("x", "y")
    return tuple(f"x{i}" for i in range(1, n + 1))


def automaton_to_formula(A, names=None) -> Formula:
    """Quantifier-free formula describing the runs of ``A``.

    One conjunction per support sequence ``I_1 > ... > I_r`` and anchor states
    ``q_1 .. q_r`` (``q_r`` final): the coordinates leaving the support after
    block ``k`` are equal to the running sum ``s_k``, and ``s_k - s_{k-1}``
    ranges over the lengths ``L_k`` of ``e_{I_k}``-paths from ``q_{k-1}`` to
    ``q_k``.
    """
    n = A.arity
    if n > sa.MAX_ARITY:
        raise ArityExceeded(f"arity {n} exceeds the bound {sa.MAX_ARITY}")
    names = tuple(names) if names is not None else default_names(n)
    A = sa.minimize(A)
    zero = UPSet.finite([0])
    disjuncts = []

    def lengths(q, letter):
        """Map target state -> set of positive path lengths."""
        path, s = [], q
        while s is not None and s not in path:
            path.append(s)
            s = A.delta[s].get(letter)
        out = {}
        for target in path:
            L = sa._lasso_lengths(A, q, letter, {target}) - zero
            if not L.is_empty():
                out[target] = L
        return out

    def support_chains(chain=()):
        yield chain
        for a in sa.letters(n):
            if not chain or (a != chain[-1] and all(x <= y for x, y in zip(a, chain[-1]))):
                yield from support_chains(chain + (a,))

    def atoms_for(chain, steps):
        atoms = []
        first = chain[0] if chain else (0,) * n
        for i in range(n):
            if not first[i]:
                atoms.append(Diff(names[i], ZERO, zero))
        prev = ZERO
        for k, letter in enumerate(chain):
            nxt = chain[k + 1] if k + 1 < len(chain) else (0,) * n
            leaving = [i for i in range(n) if letter[i] and not nxt[i]]
            rep = names[leaving[0]]
            for i in leaving[1:]:
                atoms.append(Equal(names[i], rep))
            atoms.append(Diff(rep, prev, steps[k]))
            prev = rep
        return atoms

    for chain in support_chains():
        frontier = [(A.initial, ())]
        for letter in chain:
            nxt = []
            for q, steps in frontier:
                for target, L in lengths(q, letter).items():
                    nxt.append((target, steps + (L,)))
            frontier = nxt
        for q, steps in frontier:
            if q in A.finals:
                atoms = atoms_for(chain, steps)
                if not atoms:
                    disjuncts.append(TRUE)
                else:
                    disjuncts.append(atoms[0] if len(atoms) == 1 else And(tuple(atoms)))
    if not disjuncts:
        return FALSE
    if len(disjuncts) == 1:
        return disjuncts[0]
    return Or(tuple(disjuncts))
