from itertools import permutations, product

import pytest

from zermod.graphs import (
    EMPTY, FinitePointedGraph, GraphSyntaxError, HFSet, HFSyntaxError, bisimilar, collapse,
    construct, cumulative, evaluate, evaluate_sets, graph_of_set, is_bisimulation, is_initial,
    largest_collapsible_subgraph, member, omega_graph, pair, parse_graph, parse_graphs, parse_hf,
    parse_pairs, pow_graph, powerset, rank, reify, reroot, show_graph, show_hf, show_pairs,
    singleton, successor, tc_graph, transitive_closure, trim, union, union_graph, von_neumann,
)
from zermod.graphs.enumerate import (
    brute_bisimilar, brute_collapses, brute_largest_collapsible, edge_sets, pointed_graphs,
)
from zermod.lang import parse_formula

FIGURE = """
graph g1 { nodes: 1; edges: ; root: 1 }
graph g2 { nodes: 2, 3; edges: (3,2); root: 2 }
graph g4 { nodes: 4, 5, 6, 7; edges: (5,4), (6,4), (7,6); root: 4 }
graph g6 { nodes: 6, 7; edges: (7,6); root: 6 }
graph loop { nodes: a; edges: (a,a); root: a }
"""
G = parse_graphs(FIGURE)


def _g(edges, root, nodes=()):
    return FinitePointedGraph.make(edges, root, nodes)


# -- hereditarily finite sets ------------------------------------------------

def test_hfset_basics():
    one = singleton(EMPTY)
    assert von_neumann(2) == HFSet.of(EMPTY, one)
    assert successor(one) == von_neumann(2)
    assert union(HFSet.of(one, HFSet.of(one))) == HFSet.of(EMPTY, one)
    assert pair(EMPTY, EMPTY) == one
    assert len(powerset(von_neumann(2))) == 4
    assert rank(von_neumann(3)) == 3
    assert transitive_closure(HFSet.of(HFSet.of(one))) == HFSet.of(EMPTY, one, HFSet.of(one))


def test_hfset_rejects_non_sets():
    with pytest.raises(TypeError):
        HFSet([1])


def test_hf_text_round_trip():
    for x in cumulative(4):
        assert parse_hf(show_hf(x)) == x
    assert show_hf(von_neumann(2)) == "{{},{{}}}"
    with pytest.raises(HFSyntaxError):
        parse_hf("{{}")


def test_cumulative_hierarchy_sizes():
    assert [len(cumulative(n)) for n in range(6)] == [0, 1, 2, 4, 16, 65536]


# -- pointed graphs and text format -------------------------------------------

def test_graph_text_round_trip():
    for name, g in G.items():
        assert parse_graph(show_graph(g, name)) == g
    assert show_graph(G["g2"], "g2") == "graph g2 { nodes: 2, 3; edges: (3,2); root: 2 }"


def test_graph_syntax_errors():
    with pytest.raises(GraphSyntaxError) as e:
        parse_graph("graph g { nodes: 1; edges: (1,2); root: 1 }")
    assert "line 1" in str(e.value)
    with pytest.raises(GraphSyntaxError):
        parse_graph("graph g { nodes: 1 edges: ; root: 1 }")


def test_pairs_round_trip():
    rel = frozenset({(2, 6), (3, 7)})
    assert show_pairs(rel) == "(2,6), (3,7)"
    assert parse_pairs(show_pairs(rel)) == rel
    assert parse_pairs("") == frozenset()


def test_reroot_and_trim():
    g = G["g4"]
    h = reroot(g, 6)
    assert h.root == 6 and h.edges == g.edges
    assert trim(h).nodes == {6, 7}


# -- bisimulation ----------------------------------------------------------------

def test_figure_graphs():
    w = bisimilar(G["g2"], G["g6"])
    assert w is not None and w.relation == {(2, 6), (3, 7)}
    assert w.check()
    assert is_bisimulation(w.relation, G["g2"], G["g6"])
    assert bisimilar(G["g1"], G["g2"]) is None
    assert member(G["g1"], G["g2"]) and member(G["g2"], G["g4"]) and member(G["g1"], G["g4"])
    assert not member(G["g4"], G["g4"])
    assert reify(G["g4"]) == von_neumann(2)


def test_loop_is_its_own_member():
    loop = G["loop"]
    assert member(loop, loop)
    two_cycle = _g([(0, 1), (1, 0)], 0)
    assert bisimilar(loop, two_cycle) is not None
    assert reify(loop) is None and collapse(loop) is None


def test_bisimilar_matches_brute_force_on_two_node_graphs():
    gs = list(pointed_graphs(2))
    for g, h in product(gs, gs):
        assert (bisimilar(g, h) is not None) == brute_bisimilar(g, h)


def _canonical(edges, root, n):
    # independent isomorphism-class key for the enumeration counts
    return min((tuple(sorted((p[c], p[q]) for c, q in edges)), p[root]) for p in permutations(range(n)))


def _has_cycle(edges, n):
    succ = {a: [c for c, p in edges if p == a] for a in range(n)}
    state = {}

    def visit(a):
        state[a] = 1
        for b in succ[a]:
            if state.get(b) == 1 or (b not in state and visit(b)):
                return True
        state[a] = 2
        return False
    return any(a not in state and visit(a) for a in range(n))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_counts_match_a_direct_count(n):
    pairs = [(c, p) for c in range(n) for p in range(n)]
    classes, acyclic = set(), set()
    for bits in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if bits >> k & 1]
        for r in range(n):
            key = _canonical(edges, r, n)
            classes.add(key)
            if not _has_cycle(edges, n):
                acyclic.add(key)
    assert len(list(pointed_graphs(n, min_nodes=n))) == len(classes)
    assert len(list(pointed_graphs(n, min_nodes=n, acyclic=True))) == len(acyclic)


def test_enumeration_sizes():
    assert [len(list(pointed_graphs(n, min_nodes=n, acyclic=True))) for n in (1, 2, 3, 4)] == [1, 3, 14, 104]
    assert len(list(pointed_graphs(3))) == 290


# -- constructions -----------------------------------------------------------------

def test_constructions_reify_to_the_set_operations():
    for x, y in product(cumulative(3), repeat=2):
        a, b = graph_of_set(x), graph_of_set(y)
        assert reify(union_graph(a)) == union(x)
        assert reify(construct("Pair", a, b)) == pair(x, y)
        assert reify(pow_graph(a)) == powerset(x)
        assert reify(tc_graph(a)) == transitive_closure(x)


def test_omega_truncation():
    om = omega_graph(5)
    assert reify(om) == von_neumann(5)
    for n in range(5):
        assert reify(reroot(om, (0, n))) == von_neumann(n)


def test_comprehension_graph():
    a = graph_of_set(von_neumann(3))
    nonempty = construct("Compr", a, pred=lambda g: bool(g.children(g.root)))
    assert reify(nonempty) == HFSet.of(von_neumann(1), von_neumann(2))
    with pytest.raises(ValueError):
        construct("Compr", a)
    with pytest.raises(ValueError):
        construct("Omega")


def test_graph_of_set_shape():
    g = graph_of_set(von_neumann(2))
    assert len(g.nodes) == 3 and len(g.edges) == 3
    assert reify(g) == von_neumann(2)


# -- collapse and the largest collapsible subgraph ------------------------------

def test_collapse_on_the_figure():
    phi = collapse(G["g4"])
    assert phi[4] == von_neumann(2) and phi[6] == von_neumann(1) and phi[5] == EMPTY
    assert phi.satisfies(G["g4"])


def test_collapse_unique_against_brute_force_three_nodes():
    for edges in edge_sets(3):
        g = _g(edges, 0, nodes=range(3))
        found = list(brute_collapses(g))
        phi = collapse(g)
        assert len(found) <= 1
        assert (phi is None) == (not found)
        if phi is not None:
            assert dict(phi) == dict(found[0])


def test_largest_collapsible_subgraph():
    edges = frozenset({(0, 1), (1, 1), (2, 0), (3, 2)})
    lcs = largest_collapsible_subgraph(edges)
    assert lcs == {(2, 0), (3, 2)}   # node 0 sits under the loop but its own children are acyclic
    assert is_initial(lcs, edges)
    assert brute_largest_collapsible(edges) == (lcs, True)
    acyclic = frozenset({(0, 1), (1, 2)})
    assert largest_collapsible_subgraph(acyclic) == acyclic


# -- formula evaluation -------------------------------------------------------------

def test_evaluate_membership_formulas():
    env = {"a": G["g1"], "b": G["g2"], "c": G["g4"]}
    assert evaluate(parse_formula("a in b /\\ b in c /\\ ~(c in c)"), env)
    assert evaluate(parse_formula("Union(c) ~~ b"), env)
    assert evaluate(parse_formula("forall x:G. (x in b -> x ~~ a)"), env, domain=list(G.values()))
    v2 = von_neumann(2)
    assert evaluate_sets(parse_formula("x in y /\\ ~(y = x)", "zst"), {"x": EMPTY, "y": v2})
