"""Semantic lemmas about pointed graphs, checked on every small graph.

Pairs range over all pointed graphs with at most three nodes.  Statements
with three graph variables let the first range over all of them and the
others over one representative per bisimilarity class (membership is
invariant under bisimilarity on both sides, which LEMMAS 30 and 31 check).
"""
from __future__ import annotations

import numpy as np

from zermod.graphs import (
    FinitePointedGraph, bisimilar, member, omega_graph, pair_graph, pow_graph, reroot,
    tc_graph, union_graph,
)
from zermod.graphs.enumerate import pointed_graphs

MAX_NODES = 3
OMEGA_K = 5


class Universe:
    def __init__(self, max_nodes=MAX_NODES, k=OMEGA_K):
        self.graphs = list(pointed_graphs(max_nodes))
        n = len(self.graphs)
        self.M = np.zeros((n, n), dtype=bool)     # bisimilar
        self.E = np.zeros((n, n), dtype=bool)     # member
        for i, a in enumerate(self.graphs):
            for j, b in enumerate(self.graphs):
                if j >= i:
                    self.M[i, j] = self.M[j, i] = bisimilar(a, b) is not None
                self.E[i, j] = member(a, b)
        self.reps = []
        seen = set()
        for i in range(n):
            if i not in seen:
                self.reps.append(i)
                seen.update(np.flatnonzero(self.M[i]).tolist())
        self.k = k
        self.omega = omega_graph(k)
        self.empty = FinitePointedGraph.make((), 0, nodes=(0,))

    def omega_at(self, y):
        return reroot(self.omega, (0, y))


def successor(a):
    return union_graph(pair_graph(a, pair_graph(a, a)))


def _children(g):
    return [reroot(g, x) for x in sorted(g.children(g.root), key=str)]


# Each check returns a list of counterexample descriptions.

def lemma_3(u):
    return [i for i in range(len(u.graphs)) if not u.M[i, i]]


def lemma_4(u):
    return np.argwhere(u.M != u.M.T).tolist()


def lemma_5(u):
    m = u.M.astype(np.int64)
    return np.argwhere(((m @ m) > 0) & ~u.M).tolist()


def lemma_6(u):
    return [i for i, g in enumerate(u.graphs) if bisimilar(g, reroot(g, g.root)) is None]


def lemma_28(u):
    return [(i, str(x)) for i, g in enumerate(u.graphs)
            for x in g.children(g.root) if not member(reroot(g, x), g)]


def lemma_29(u):
    bad = []
    for i, j in np.argwhere(u.M).tolist():
        a, b = u.graphs[i], u.graphs[j]
        bs = _children(b)
        for ax in _children(a):
            if not any(bisimilar(ax, by) is not None for by in bs):
                bad.append((i, j))
                break
    return bad


def lemma_30(u):
    m, e = u.M.astype(np.int64), u.E.astype(np.int64)
    return np.argwhere(((m.T @ e) > 0) & ~u.E).tolist()


def lemma_31(u):
    m, e = u.M.astype(np.int64), u.E.astype(np.int64)
    return np.argwhere(((e @ m) > 0) & ~u.E).tolist()


def lemma_42(u):
    e = u.E.astype(np.int64)
    via = (e @ e) > 0          # exists b. c in b /\ b in a
    bad = []
    for ia, a in enumerate(u.graphs):
        ua = union_graph(a)
        for ic, c in enumerate(u.graphs):
            if member(c, ua) != via[ic, ia]:
                bad.append((ic, ia))
    return bad


def lemma_43(u):
    bad = []
    for ia, a in enumerate(u.graphs):
        for ib in u.reps:
            p = pair_graph(a, u.graphs[ib])
            for ic in u.reps:
                want = u.M[ic, ia] or u.M[ic, ib]
                if member(u.graphs[ic], p) != want:
                    bad.append((ic, ia, ib))
    return bad


def lemma_44(u):
    bad = []
    for ib in u.reps:
        pb = pow_graph(u.graphs[ib])
        for ia, a in enumerate(u.graphs):
            want = all(u.E[ic, ib] for ic in u.reps if u.E[ic, ia])
            if member(a, pb) != want:
                bad.append((ia, ib))
    return bad


def lemma_46(u):
    return [i for i, a in enumerate(u.graphs) if member(a, u.empty)]


def lemma_47(u):
    return [] if bisimilar(u.empty, u.omega_at(0)) is not None else ["empty vs Omega/i(0)"]


def lemma_48(u):
    bad = []
    for y in range(u.k - 1):
        target, nxt = u.omega_at(y), u.omega_at(y + 1)
        for i, a in enumerate(u.graphs):
            if bisimilar(a, target) is not None and bisimilar(successor(a), nxt) is None:
                bad.append((i, y))
    return bad


def lemma_49(u):
    return [] if member(u.empty, u.omega) else ["empty not in Omega"]


def lemma_50(u):
    top = u.omega_at(u.k - 1)   # its successor falls outside the truncation
    return [i for i, a in enumerate(u.graphs)
            if member(a, u.omega) and bisimilar(a, top) is None and not member(successor(a), u.omega)]


def lemma_52(u):
    bad = []
    for ic, c in enumerate(u.graphs):
        tc = tc_graph(c)
        for ia, a in enumerate(u.graphs):
            if u.E[ia, ic] and not member(a, tc):
                bad.append((ia, ic))
    return bad


def lemma_53(u):
    bad = []
    for ic in u.reps:
        tc = tc_graph(u.graphs[ic])
        inside = [ib for ib in u.reps if member(u.graphs[ib], tc)]
        for ia, a in enumerate(u.graphs):
            if any(u.E[ia, ib] for ib in inside) and not member(a, tc):
                bad.append((ia, ic))
    return bad


LEMMAS = {
    3: lemma_3, 4: lemma_4, 5: lemma_5, 6: lemma_6, 28: lemma_28, 29: lemma_29, 30: lemma_30,
    31: lemma_31, 42: lemma_42, 43: lemma_43, 44: lemma_44, 46: lemma_46, 47: lemma_47,
    48: lemma_48, 49: lemma_49, 50: lemma_50, 52: lemma_52, 53: lemma_53,
}


def run_all(u=None):
    u = u or Universe()
    return {n: check(u) for n, check in LEMMAS.items()}
