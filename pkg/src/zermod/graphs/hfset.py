"""Hereditarily finite sets.

``HFSet`` is a ``frozenset`` whose elements are ``HFSet`` values, so
equality, hashing and membership are the extensional ones.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations


class HFSet(frozenset):
    __slots__ = ()

    def __new__(cls, elements=()):
        elements = tuple(elements)
        for e in elements:
            if not isinstance(e, HFSet):
                raise TypeError(f"elements of an HFSet must be HFSets, got {type(e).__name__}")
        return super().__new__(cls, elements)

    @classmethod
    def of(cls, *elements):
        return cls(elements)

    def __repr__(self):
        return f"HFSet({show_hf(self)})"

    def __str__(self):
        return show_hf(self)

    # frozenset operators would return plain frozensets
    def __or__(self, other):
        return HFSet(frozenset.__or__(self, other))

    def __and__(self, other):
        return HFSet(frozenset.__and__(self, other))

    def __sub__(self, other):
        return HFSet(frozenset.__sub__(self, other))

    def with_member(self, x):
        return HFSet(tuple(self) + (x,))


EMPTY = HFSet()


def singleton(x):
    return HFSet((x,))


def pair(x, y):
    return HFSet((x, y))


def union(x):
    return HFSet(e for y in x for e in y)


def powerset(x):
    elems = list(x)
    return HFSet(HFSet(c) for k in range(len(elems) + 1) for c in combinations(elems, k))


def successor(x):
    """``x U {x}``."""
    return x.with_member(x)


def von_neumann(n):
    x = EMPTY
    for _ in range(n):
        x = successor(x)
    return x


@lru_cache(maxsize=None)
def rank(x) -> int:
    return 0 if not x else 1 + max(rank(e) for e in x)


def transitive_closure(x) -> HFSet:
    """All sets reachable from ``x`` by one or more membership steps."""
    seen, stack = set(), list(x)
    while stack:
        y = stack.pop()
        if y not in seen:
            seen.add(y)
            stack.extend(y)
    return HFSet(seen)


@lru_cache(maxsize=None)
def show_hf(x) -> str:
    parts = sorted((show_hf(e) for e in x), key=lambda s: (len(s), s))
    return "{" + ",".join(parts) + "}"


class HFSyntaxError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} at offset {pos}")
        self.pos = pos


def parse_hf(text: str) -> HFSet:
    """Parse a literal such as ``{}`` or ``{{},{{}}}`` (whitespace is ignored)."""
    s = "".join(text.split())
    value, pos = _parse(s, 0)
    if pos != len(s):
        raise HFSyntaxError("trailing text", pos)
    return value


def _parse(s, pos):
    if pos >= len(s) or s[pos] != "{":
        raise HFSyntaxError("expected '{'", pos)
    pos += 1
    elems = []
    if pos < len(s) and s[pos] == "}":
        return HFSet(), pos + 1
    while True:
        e, pos = _parse(s, pos)
        elems.append(e)
        if pos < len(s) and s[pos] == ",":
            pos += 1
            continue
        if pos < len(s) and s[pos] == "}":
            return HFSet(elems), pos + 1
        raise HFSyntaxError("expected ',' or '}'", pos)


@lru_cache(maxsize=None)
def cumulative(n) -> tuple:
    """``V_n``: every HFSet of rank below ``n``, in a fixed order."""
    if n == 0:
        return ()
    prev = cumulative(n - 1)
    out = [HFSet(c) for k in range(len(prev) + 1) for c in combinations(prev, k)]
    out.sort(key=lambda x: (rank(x), len(show_hf(x)), show_hf(x)))
    return tuple(out)


def hfsets_up_to_rank(r) -> tuple:
    """Every HFSet of rank at most ``r``."""
    return cumulative(r + 1)
