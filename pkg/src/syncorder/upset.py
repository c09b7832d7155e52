"""Ultimately periodic subsets of the naturals.

An :class:`UPSet` is stored canonically: the period is the least eventual
period of the set and the transient is the least one for that period, so two
equal sets always compare equal field by field.  Membership beyond the
transient keys on ``n mod p`` (not ``(n - t) mod p``).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Callable, Iterable

__all__ = ["UPSet", "EMPTY", "NATURALS", "POSITIVE", "EVENS", "ODDS", "parse_upset"]


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class UPSet:
    t: int
    p: int
    head: frozenset
    residues: frozenset

    def __post_init__(self):
        if self.t < 0 or self.p < 1:
            raise ValueError(f"bad transient/period t={self.t} p={self.p}")
        if any(not 0 <= h < self.t for h in self.head):
            raise ValueError(f"head {sorted(self.head)} outside [0, {self.t})")
        if any(not 0 <= r < self.p for r in self.residues):
            raise ValueError(f"residues {sorted(self.residues)} outside [0, {self.p})")

    # -- construction -----------------------------------------------------

    @classmethod
    def make(cls, t=0, p=1, head=(), residues=()) -> "UPSet":
        """Build from possibly non-canonical fields and canonicalize."""
        raw = cls(t, p, frozenset(head), frozenset(residues))
        return raw.canonical()

    @classmethod
    def from_function(cls, t: int, p: int, member: Callable[[int], bool]) -> "UPSet":
        """Canonical set agreeing with ``member``, which must be ``p``-periodic from ``t`` on."""
        head = [n for n in range(t) if member(n)]
        residues = [r for r in range(p) if member(t + (r - t) % p)]
        return cls.make(t, p, head, residues)

    @classmethod
    def finite(cls, elements: Iterable[int]) -> "UPSet":
        elements = set(elements)
        if any(e < 0 for e in elements):
            raise ValueError("negative element")
        t = max(elements) + 1 if elements else 0
        return cls.make(t, 1, elements, ())

    @classmethod
    def cofinite(cls, missing: Iterable[int]) -> "UPSet":
        return ~cls.finite(missing)

    @classmethod
    def arithmetic(cls, modulus: int, residue: int, start: int = 0) -> "UPSet":
        """``{n >= start : n = residue (mod modulus)}``."""
        return cls.from_function(start, modulus, lambda n: n >= start and n % modulus == residue % modulus)

    def canonical(self) -> "UPSet":
        p = self.p
        res = self.residues
        for d in _divisors(p):
            if all((r in res) == ((r + d) % p in res) for r in range(p)):
                p = d
                break
        res = frozenset(r for r in range(p) if r in self.residues)
        t = self.t
        while t > 0 and self._member_raw(t - 1) == ((t - 1) % p in res):
            t -= 1
        head = frozenset(n for n in range(t) if self._member_raw(n))
        return UPSet(t, p, head, res)

    def _member_raw(self, n):
        if n < self.t:
            return n in self.head
        return n % self.p in self.residues

    # -- queries ------------------------------------------------------------

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        return self._member_raw(n)

    __contains__ = contains

    def is_empty(self) -> bool:
        return not self.head and not self.residues

    def is_finite(self) -> bool:
        return not self.residues

    def is_cofinite(self) -> bool:
        return len(self.residues) == self.p

    def min_element(self):
        """Least element, or ``None`` for the empty set."""
        if self.head:
            return min(self.head)
        if not self.residues:
            return None
        return min(self.t + (r - self.t) % self.p for r in self.residues)

    def max_element(self):
        """Greatest element of a finite set (``None`` if empty)."""
        if self.residues:
            raise ValueError("infinite set has no maximum")
        return max(self.head) if self.head else None

    def elements(self, limit: int) -> list:
        """Elements ``<= limit`` in increasing order."""
        return [n for n in range(limit + 1) if self._member_raw(n)]

    def classify(self):
        """Return ``(kind, data, min_element)``.

        ``kind`` is one of ``"empty"``, ``"finite"``, ``"cofinite"`` or
        ``"mixed"``; ``data`` lists the elements for finite sets and the
        missing elements for cofinite ones, and is ``None`` otherwise.
        """
        lo = self.min_element()
        if self.is_empty():
            return "empty", None, None
        if self.is_finite():
            return "finite", sorted(self.head), lo
        if self.is_cofinite():
            return "cofinite", sorted(n for n in range(self.t) if n not in self.head), lo
        return "mixed", None, lo

    # -- Boolean algebra ----------------------------------------------------

    def combine(self, other: "UPSet", op: str) -> "UPSet":
        ops = {
            "union": lambda a, b: a or b,
            "intersection": lambda a, b: a and b,
            "difference": lambda a, b: a and not b,
            "complement": lambda a, b: not a,
        }
        try:
            f = ops[op]
        except KeyError:
            raise ValueError(f"unknown set operation {op!r}") from None
        t = max(self.t, other.t)
        p = math.lcm(self.p, other.p)
        return UPSet.from_function(t, p, lambda n: f(self._member_raw(n), other._member_raw(n)))

    def __or__(self, other):
        return self.combine(other, "union")

    def __and__(self, other):
        return self.combine(other, "intersection")

    def __sub__(self, other):
        return self.combine(other, "difference")

    def __invert__(self):
        return self.combine(self, "complement")

    def shift(self, k: int) -> "UPSet":
        """``{n + k : n in self}`` for ``k >= 0``."""
        if k < 0:
            raise ValueError("negative shift")
        return UPSet.from_function(self.t + k, self.p, lambda n: n >= k and self._member_raw(n - k))

    # -- text ---------------------------------------------------------------

    def literal(self) -> str:
        def fmt(xs):
            return "{" + ",".join(str(x) for x in sorted(xs)) + "}"

        return f"UP(t={self.t};p={self.p};head={fmt(self.head)};res={fmt(self.residues)})"

    def __str__(self):
        return self.literal()


_LITERAL = re.compile(
    r"^\s*UP\(\s*t\s*=\s*(\d+)\s*;\s*p\s*=\s*(\d+)\s*;"
    r"\s*head\s*=\s*\{([\d,\s]*)\}\s*;\s*res\s*=\s*\{([\d,\s]*)\}\s*\)\s*$"
)


def parse_upset(text: str) -> UPSet:
    """Parse ``UP(t=<nat>;p=<nat>;head={...};res={...})``; the result is canonical."""
    m = _LITERAL.match(text)
    if not m:
        raise ValueError(f"malformed UPSet literal: {text!r}")

    def nums(s):
        return [int(x) for x in s.split(",") if x.strip()]

    t, p = int(m.group(1)), int(m.group(2))
    if p < 1:
        raise ValueError("period must be >= 1")
    head, res = nums(m.group(3)), nums(m.group(4))
    if any(h >= t for h in head) or any(r >= p for r in res):
        raise ValueError(f"UPSet literal fields out of range: {text!r}")
    return UPSet.make(t, p, head, res)


EMPTY = UPSet.make(0, 1)
NATURALS = UPSet.make(0, 1, (), (0,))
POSITIVE = UPSet.make(1, 1, (), (0,))
EVENS = UPSet.make(0, 2, (), (0,))
ODDS = UPSet.make(0, 2, (), (1,))
