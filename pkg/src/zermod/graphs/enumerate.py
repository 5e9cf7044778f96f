"""Exhaustive enumeration of small graphs and brute-force oracles.

Graphs on ``n`` nodes use the ids ``0 .. n-1``; an edge set is a bit mask
with bit ``c * n + p`` standing for the edge ``(c, p)``.  The enumerators
return one representative per isomorphism class.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .hfset import HFSet, cumulative
from .pointed import FinitePointedGraph, is_initial


def mask_edges(mask, n):
    return frozenset((b // n, b % n) for b in range(n * n) if mask >> b & 1)


def _has_cycle(mask, n):
    # Warshall closure on a boolean matrix
    reach = [[bool(mask >> (c * n + p) & 1) for p in range(n)] for c in range(n)]
    for k in range(n):
        for a in range(n):
            if reach[a][k]:
                for b in range(n):
                    if reach[k][b]:
                        reach[a][b] = True
    return any(reach[a][a] for a in range(n))


@lru_cache(maxsize=None)
def _bit_perms(n):
    out = []
    for perm in permutations(range(n)):
        out.append((perm, [perm[b // n] * n + perm[b % n] for b in range(n * n)]))
    return out


def _permute(mask, bits):
    out, b = 0, 0
    while mask:
        if mask & 1:
            out |= 1 << bits[b]
        mask >>= 1
        b += 1
    return out


@lru_cache(maxsize=None)
def _classes(n, pointed, acyclic):
    perms = _bit_perms(n)
    seen, reps = set(), []
    roots = range(n) if pointed else (None,)
    for mask in range(1 << (n * n)):
        if acyclic is not None and _has_cycle(mask, n) == acyclic:
            continue
        for r in roots:
            if (mask, r) in seen:
                continue
            reps.append((mask, r))
            for perm, bits in perms:
                seen.add((_permute(mask, bits), None if r is None else perm[r]))
    return tuple(reps)


def pointed_graphs(max_nodes, min_nodes=1, acyclic=None):
    """Pointed graphs with ``min_nodes..max_nodes`` nodes, up to isomorphism.

    ``acyclic`` True keeps only acyclic ones, False only cyclic ones.
    """
    out = []
    for n in range(min_nodes, max_nodes + 1):
        for mask, r in _classes(n, True, acyclic):
            out.append(FinitePointedGraph(frozenset(range(n)), mask_edges(mask, n), r))
    return out


def edge_sets(nodes, acyclic=None):
    """Edge sets on ``nodes`` ids, up to isomorphism (smaller graphs appear
    with isolated nodes)."""
    return [mask_edges(mask, nodes) for mask, _ in _classes(nodes, False, acyclic)]


# ---------------------------------------------------------------------------
# Oracles

@lru_cache(maxsize=None)
def _relation_bits(k):
    return ((np.arange(1 << k)[:, None] >> np.arange(k)[None, :]) & 1).astype(bool)


def brute_bisimilar(g: FinitePointedGraph, h: FinitePointedGraph) -> bool:
    """Search every relation between the node sets for a bisimulation
    containing the root pair."""
    gn, hn = sorted(g.nodes, key=repr), sorted(h.nodes, key=repr)
    pairs = [(x, y) for x in gn for y in hn]
    index = {p: k for k, p in enumerate(pairs)}
    bits = _relation_bits(len(pairs))
    ok = bits[:, index[(g.root, h.root)]].copy()
    for (x, y), k in index.items():
        cond = np.ones(len(bits), dtype=bool)
        for x2 in g.children(x):
            cond &= np.any(bits[:, [index[(x2, y2)] for y2 in h.children(y)]], axis=1) \
                if h.children(y) else False
        for y2 in h.children(y):
            cond &= np.any(bits[:, [index[(x2, y2)] for x2 in g.children(x)]], axis=1) \
                if g.children(x) else False
        ok &= ~bits[:, k] | cond
    return bool(ok.any())


def brute_collapses(g: FinitePointedGraph):
    """Every map from the carrier into ``V_n`` (``n`` = carrier size) that
    satisfies the collapse equation.

    A solution on an acyclic carrier of ``n`` nodes takes values of rank
    below ``n``, so no solution is missed by bounding the candidates.
    """
    car = sorted(g.carrier(), key=repr)
    cands = cumulative(len(car)) if car else ()
    kids = {v: g.children(v) for v in car}
    sols = []
    assign = {}

    def consistent(v):
        val = assign[v]
        if len(val) > len(kids[v]):
            return False
        for c in kids[v]:
            if c in assign and assign[c] not in val:
                return False
        for p in g.parents(v):
            if p in assign and val not in assign[p]:
                return False
        for u in [v, *g.parents(v)]:
            if u in assign and all(c in assign for c in kids[u]):
                if assign[u] != HFSet(assign[c] for c in kids[u]):
                    return False
        return True

    def go(k):
        if k == len(car):
            sols.append(dict(assign))
            return
        v = car[k]
        for val in cands:
            assign[v] = val
            if consistent(v):
                go(k + 1)
            del assign[v]

    go(0)
    return sols


def initial_subgraphs(edges):
    """Every initial subgraph of an edge set.

    Each initial subgraph consists of the edges entering some set of
    parents, so trying every node subset finds all of them.
    """
    edges = frozenset(edges)
    nodes = sorted({c for c, _ in edges} | {p for _, p in edges}, key=repr)
    found = set()
    for k in range(len(nodes) + 1):
        for sub in combinations(nodes, k):
            s = set(sub)
            cand = frozenset(e for e in edges if e[1] in s)
            if is_initial(cand, edges):
                found.add(cand)
    return found


def brute_largest_collapsible(edges):
    """Union of the collapsible initial subgraphs; also reports whether that
    union is itself one of them."""
    subs = [s for s in initial_subgraphs(edges) if not _edges_cyclic(s)]
    top = frozenset().union(*subs) if subs else frozenset()
    return top, top in subs


def _edges_cyclic(edges):
    nodes = sorted({c for c, _ in edges} | {p for _, p in edges}, key=repr)
    num = {v: k for k, v in enumerate(nodes)}
    n = len(nodes)
    mask = 0
    for c, p in edges:
        mask |= 1 << (num[c] * n + num[p])
    return _has_cycle(mask, n) if n else False


def brute_member(g, h) -> bool:
    from .pointed import reroot
    return any(brute_bisimilar(g, reroot(h, x)) for x in h.children(h.root))
