"""Finite pointed graphs.

An edge ``(x, y)`` means that ``x`` is a child of ``y``: read as sets, the
node ``y`` stands for the set of what its children stand for.  Node ids are
any hashable values.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional

from .hfset import HFSet


def _sort_key(x):
    return (type(x).__name__, repr(x))


@dataclass(frozen=True)
class FinitePointedGraph:
    nodes: frozenset
    edges: frozenset
    root: object

    def __post_init__(self):
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(self, "edges", frozenset((c, p) for c, p in self.edges))
        for c, p in self.edges:
            if c not in self.nodes or p not in self.nodes:
                raise ValueError(f"edge ({c!r}, {p!r}) has an endpoint outside the node set")
        if self.root not in self.nodes:
            raise ValueError(f"root {self.root!r} is not a node")

    @classmethod
    def make(cls, edges=(), root=None, nodes=()):
        """Nodes default to the edge endpoints plus the root."""
        edges = frozenset(edges)
        ns = set(nodes) | {root} | {c for c, _ in edges} | {p for _, p in edges}
        return cls(frozenset(ns), edges, root)

    def children(self, y) -> frozenset:
        return self._index()[0].get(y, frozenset())

    def parents(self, x) -> frozenset:
        return self._index()[1].get(x, frozenset())

    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            down, up = {}, {}
            for c, p in self.edges:
                down.setdefault(p, set()).add(c)
                up.setdefault(c, set()).add(p)
            idx = ({k: frozenset(v) for k, v in down.items()},
                   {k: frozenset(v) for k, v in up.items()})
            object.__setattr__(self, "_idx", idx)
        return idx

    def carrier(self) -> frozenset:
        """Endpoints of the edges."""
        return frozenset(c for c, _ in self.edges) | frozenset(p for _, p in self.edges)

    def pointed_carrier(self) -> frozenset:
        return self.carrier() | {self.root}

    def reachable(self, start=None) -> frozenset:
        """Nodes reachable from ``start`` (default: the root) along child edges, itself included."""
        start = self.root if start is None else start
        seen, stack = {start}, [start]
        while stack:
            y = stack.pop()
            for x in self.children(y):
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        return frozenset(seen)

    def sorted_nodes(self):
        return sorted(self.nodes, key=_sort_key)

    def __hash__(self):
        return hash((self.nodes, self.edges, self.root))

    def __eq__(self, other):
        if not isinstance(other, FinitePointedGraph):
            return NotImplemented
        return (self.root == other.root and self.edges == other.edges
                and self.nodes == other.nodes)


def reroot(g: FinitePointedGraph, x) -> FinitePointedGraph:
    """``g / x``: the same graph with root ``x``."""
    if x not in g.nodes:
        raise KeyError(f"unknown node {x!r}")
    return FinitePointedGraph(g.nodes, g.edges, x)


def trim(g: FinitePointedGraph) -> FinitePointedGraph:
    """The part of ``g`` reachable from its root."""
    keep = g.reachable()
    return FinitePointedGraph(keep, frozenset(e for e in g.edges if e[1] in keep), g.root)


def relabel(g: FinitePointedGraph, f) -> FinitePointedGraph:
    return FinitePointedGraph(frozenset(f(n) for n in g.nodes),
                              frozenset((f(c), f(p)) for c, p in g.edges), f(g.root))


def integer_labels(g: FinitePointedGraph) -> FinitePointedGraph:
    """Relabel nodes 0..n-1 in a deterministic order (the root first)."""
    order = [g.root] + [n for n in g.sorted_nodes() if n != g.root]
    num = {n: k for k, n in enumerate(order)}
    return relabel(g, num.__getitem__)


# ---------------------------------------------------------------------------
# Bisimulation

@dataclass(frozen=True)
class BisimWitness:
    """A bisimulation between ``left`` and ``right``: pairs ``(x, y)`` with
    ``x`` a node of ``left`` and ``y`` a node of ``right``."""

    relation: frozenset
    left: FinitePointedGraph
    right: FinitePointedGraph

    def check(self) -> bool:
        return is_bisimulation(self.relation, self.left, self.right)

    def __len__(self):
        return len(self.relation)


def is_bisimulation(rel, g, h) -> bool:
    """Root pair plus the forth and back conditions."""
    rel = frozenset(rel)
    if (g.root, h.root) not in rel:
        return False
    for x, y in rel:
        if x not in g.nodes or y not in h.nodes:
            return False
        for x2 in g.children(x):
            if not any((x2, y2) in rel for y2 in h.children(y)):
                return False
        for y2 in h.children(y):
            if not any((x2, y2) in rel for x2 in g.children(x)):
                return False
    return True


def greatest_bisimulation(g, h) -> frozenset:
    """Largest relation satisfying forth and back (roots not required)."""
    rel = {(x, y) for x in g.nodes for y in h.nodes}
    changed = True
    while changed:
        changed = False
        for x, y in list(rel):
            ok = all(any((x2, y2) in rel for y2 in h.children(y)) for x2 in g.children(x)) and \
                all(any((x2, y2) in rel for x2 in g.children(x)) for y2 in h.children(y))
            if not ok:
                rel.discard((x, y))
                changed = True
    return frozenset(rel)


def bisimilar(g: FinitePointedGraph, h: FinitePointedGraph) -> Optional[BisimWitness]:
    """Witness relation when the roots are bisimilar, else ``None``.

    The greatest bisimulation is cut down to the pairs reachable from the
    root pair, which is again a bisimulation.
    """
    full = greatest_bisimulation(g, h)
    start = (g.root, h.root)
    if start not in full:
        return None
    seen, stack = {start}, [start]
    while stack:
        x, y = stack.pop()
        for x2 in g.children(x):
            for y2 in h.children(y):
                p = (x2, y2)
                if p in full and p not in seen:
                    seen.add(p)
                    stack.append(p)
    return BisimWitness(frozenset(seen), g, h)


def member(g: FinitePointedGraph, h: FinitePointedGraph) -> bool:
    """Some child ``x`` of the root of ``h`` has ``h / x`` bisimilar to ``g``."""
    full = greatest_bisimulation(g, h)
    return any((g.root, x) in full for x in h.children(h.root))


# ---------------------------------------------------------------------------
# Constructions.  Relocated copies are tagged (0, n) for i and (1, n) for j.

O = "o"


def _i(n):
    return (0, n)


def _j(n):
    return (1, n)


def _copy(g, tag):
    return {tag(n) for n in g.nodes}, {(tag(c), tag(p)) for c, p in g.edges}


def union_graph(a):
    nodes, edges = _copy(a, _i)
    for z in a.children(a.root):
        for y in a.children(z):
            edges.add((_i(y), O))
    return FinitePointedGraph.make(edges, O, nodes)


def pair_graph(a, b):
    na, ea = _copy(a, _i)
    nb, eb = _copy(b, _j)
    edges = ea | eb | {(_i(a.root), O), (_j(b.root), O)}
    return FinitePointedGraph.make(edges, O, na | nb)


def pow_graph(a):
    """One node ``(1, S)`` per subset ``S`` of the root's children."""
    nodes, edges = _copy(a, _i)
    kids = sorted(a.children(a.root), key=_sort_key)
    for k in range(len(kids) + 1):
        for sub in combinations(kids, k):
            code = _j(frozenset(sub))
            nodes.add(code)
            edges.add((code, O))
            edges.update((_i(y), code) for y in sub)
    return FinitePointedGraph.make(edges, O, nodes)


def compr_graph(pred: Callable, a):
    """Keep the root children ``y`` of ``a`` with ``pred(a / y)``."""
    nodes, edges = _copy(a, _i)
    for y in sorted(a.children(a.root), key=_sort_key):
        if pred(reroot(a, y)):
            edges.add((_i(y), O))
    return FinitePointedGraph.make(edges, O, nodes)


def omega_graph(k: int):
    """Naturals below ``k`` as ``(0, n)``, ordered by ``<``, all below the root."""
    if k < 0:
        raise ValueError("the bound must be non-negative")
    nodes = {_i(n) for n in range(k)}
    edges = {(_i(y), _i(y2)) for y in range(k) for y2 in range(y + 1, k)}
    edges |= {(_i(y), O) for y in range(k)}
    return FinitePointedGraph.make(edges, O, nodes)


def tc_graph(a):
    nodes, edges = _copy(a, _i)
    below = set()
    stack = list(a.children(a.root))
    while stack:
        y = stack.pop()
        if y not in below:
            below.add(y)
            stack.extend(a.children(y))
    edges.update((_i(y), O) for y in below)
    return FinitePointedGraph.make(edges, O, nodes)


CONSTRUCTIONS = {"Union": 1, "Pair": 2, "Pow": 1, "Compr": 1, "Omega": 0, "TC": 1}


def construct(op: str, *args, pred=None, k=None):
    """Build ``Union(a)``, ``Pair(a, b)``, ``Pow(a)``, ``Compr(a)`` (with
    ``pred``), ``Omega`` (with bound ``k``) or ``TC(a)``."""
    if op not in CONSTRUCTIONS:
        raise ValueError(f"unknown construction {op!r}")
    if len(args) != CONSTRUCTIONS[op]:
        raise ValueError(f"{op} takes {CONSTRUCTIONS[op]} graph argument(s), got {len(args)}")
    if op == "Union":
        return union_graph(*args)
    if op == "Pair":
        return pair_graph(*args)
    if op == "Pow":
        return pow_graph(*args)
    if op == "Compr":
        if pred is None:
            raise ValueError("Compr needs a predicate")
        return compr_graph(pred, *args)
    if op == "Omega":
        if k is None:
            raise ValueError("Omega needs a truncation bound k")
        return omega_graph(k)
    return tc_graph(*args)


# ---------------------------------------------------------------------------
# Collapse and reification

class CollapseMap(dict):
    """Node -> HFSet on the carrier of a graph."""

    def satisfies(self, g) -> bool:
        """The fixed-point equation, node by node, over exactly the carrier."""
        if set(self) != set(g.carrier()):
            return False
        return all(v == HFSet(self[c] for c in g.children(n)) for n, v in self.items())


def _cycle_free_nodes(g, among):
    """Nodes of ``among`` from which no cycle is reachable along child edges."""
    state, good = {}, set()
    for start in among:
        if start in state:
            continue
        stack = [(start, iter(g.children(start)))]
        state[start] = 1
        while stack:
            n, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                state[n] = 2
                if all(c in good for c in g.children(n)):
                    good.add(n)
                continue
            if state.get(nxt) is None:
                state[nxt] = 1
                stack.append((nxt, iter(g.children(nxt))))
            # grey (on the stack) means a cycle; black nodes are known
    return good


def collapse(g: FinitePointedGraph) -> Optional[CollapseMap]:
    """The collapse of the edge set, or ``None`` if its carrier has a cycle."""
    car = g.carrier()
    good = _cycle_free_nodes(g, sorted(car, key=_sort_key))
    if good != set(car):
        return None
    phi = CollapseMap()
    # children are finished before parents in a post-order walk
    for n in _postorder(g, car):
        phi[n] = HFSet(phi[c] for c in g.children(n))
    return phi


def _postorder(g, nodes):
    out, seen = [], set()
    for start in sorted(nodes, key=_sort_key):
        if start in seen:
            continue
        seen.add(start)
        stack = [(start, iter(sorted(g.children(start), key=_sort_key)))]
        while stack:
            n, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                out.append(n)
            elif nxt not in seen:
                seen.add(nxt)
                stack.append((nxt, iter(sorted(g.children(nxt), key=_sort_key))))
    return out


def reify(g: FinitePointedGraph) -> Optional[HFSet]:
    """The set the root denotes, when the graph has a collapse."""
    phi = collapse(g)
    if phi is None:
        return None
    return HFSet(phi[c] for c in g.children(g.root))


def largest_collapsible_subgraph(g) -> frozenset:
    """Edges ``(x, y)`` whose parent ``y`` reaches no cycle.

    Accepts a pointed graph or a bare edge set and returns an edge set.
    """
    edges = g.edges if isinstance(g, FinitePointedGraph) else frozenset(g)
    h = g if isinstance(g, FinitePointedGraph) else _edge_graph(edges)
    good = _cycle_free_nodes(h, sorted(h.carrier(), key=_sort_key))
    return frozenset(e for e in edges if e[1] in good)


def _edge_graph(edges):
    edges = frozenset(edges)
    nodes = {c for c, _ in edges} | {p for _, p in edges}
    root = next(iter(nodes)) if nodes else 0
    return FinitePointedGraph(frozenset(nodes | {root}), edges, root)


def is_initial(sub, edges) -> bool:
    """``sub`` contains every edge of ``edges`` that ends in its carrier."""
    car = {c for c, _ in sub} | {p for _, p in sub}
    return all(e in sub for e in edges if e[1] in car)


def graph_of_set(x: HFSet) -> FinitePointedGraph:
    """Nodes: ``x`` and its transitive closure; edges: membership."""
    from .hfset import transitive_closure
    nodes = transitive_closure(x) | {x}
    edges = frozenset((u, v) for v in nodes for u in v)
    return FinitePointedGraph(frozenset(nodes), edges, x)
