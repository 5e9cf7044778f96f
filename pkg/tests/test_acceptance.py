"""Acceptance criteria, one test each, with their time bounds.

Each test prints a ``criterion N: PASS|FAIL`` line; run
``pytest tests/test_acceptance.py -s`` (or ``python3 tests/test_acceptance.py``)
to see them.
"""
import sys
import time
from contextlib import contextmanager
from itertools import combinations_with_replacement, product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from golden import read_golden                          # noqa: E402
import lemma_suite                                      # noqa: E402

from zermod.graphs import (                             # noqa: E402
    FinitePointedGraph, bisimilar, collapse, cumulative, evaluate, evaluate_sets,
    graph_of_set, largest_collapsible_subgraph, reify,
)
from zermod.graphs.enumerate import (                   # noqa: E402
    brute_bisimilar, brute_collapses, brute_largest_collapsible, edge_sets, pointed_graphs,
)
from zermod.lang import alpha_eq, free_vars, parse, parse_formula, parse_term, show  # noqa: E402
from zermod.proof import (                              # noqa: E402
    PROOF_TYPES, check, constructors_used, entry_context, extract_witness, head_of_normal,
    load_corpus, reduce,
)
from zermod.rewrite import (                            # noqa: E402
    EXHAUSTED, NORMAL, apply_rule, arith_rules, congruent, naive_comprehension_rules,
    normalize, zermod_rules,
)
from zermod.translate import circle, dagger, star       # noqa: E402

FUEL = 10_000


@contextmanager
def criterion(number, title, seconds):
    start = time.perf_counter()
    status, note = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if elapsed < seconds:
            status = "PASS"
        else:
            note = f" (over the {seconds} s bound)"
    except BaseException as e:
        note = f" ({type(e).__name__}: {str(e)[:100]})"
        raise
    finally:
        elapsed = time.perf_counter() - start
        print(f"\ncriterion {number}: {status}  {title}  [{elapsed:.2f} s < {seconds} s]{note}")
    assert elapsed < seconds, f"took {elapsed:.2f} s"


def test_criterion_1_arithmetic_congruence():
    with criterion(1, "arithmetic congruence and the witness 2", 1):
        assert congruent(parse_formula("2 * 2 = 4", "arith"), parse_formula("4 = 4", "arith"),
                         arith_rules()) is True
        entry = next(e for e in load_corpus() if e.name == "even_four")
        assert show(entry.formula, "arith") == "exists x:N. 2 * x = 4"
        ctx = entry_context(entry)
        assert check(ctx, entry.proof, entry.formula).ok
        w = extract_witness(reduce(entry.proof).value, entry.formula, ctx)
        assert show(w.term, "arith") == "2"


CRABBE_SETS = ["Omega", "Pow(Omega)", "Union(Omega)", "TC(Omega)", "Pair(Omega, Omega)",
               "compr[y; | y in y](Omega)"]


def test_criterion_2_crabbe():
    with criterion(2, "naive comprehension diverges, zermod terminates", 5):
        c = "{x in a | ~(x in x)}"
        r = normalize(parse_formula(f"{c} in {c}", "zskol"), naive_comprehension_rules(), FUEL)
        assert r.outcome == EXHAUSTED and r.steps == FUEL
        for a in CRABBE_SETS:
            c = f"compr[x; | ~(x in x)]({a})"
            r = normalize(parse_formula(f"{c} in {c}"), zermod_rules(), FUEL)
            assert r.outcome == NORMAL, a


def test_criterion_3_rewrite_golden_suite():
    with criterion(3, "every rewrite rule fires with its table right-hand side", 1):
        system = zermod_rules()
        golden = read_golden("rule_golden.txt")
        assert sorted(k for k, *_ in golden) == sorted(r.name for r in system.rules)
        for name, inp, exp, _ in golden:
            rule = system.rule(name)
            read = parse_term if rule.kind == "term" else parse
            out = apply_rule(rule, read(inp))
            assert out is not None and alpha_eq(out, read(exp)), name


def test_criterion_4_bisimulation_oracles():
    with criterion(4, "bisimilarity agrees with reification and with brute force", 60):
        acyclic = pointed_graphs(4, acyclic=True)
        sets = [reify(g) for g in acyclic]
        bad = [(g, h) for (g, x), (h, y) in combinations_with_replacement(list(zip(acyclic, sets)), 2)
               if (bisimilar(g, h) is not None) != (x == y)]
        assert not bad, bad[:3]
        small = pointed_graphs(3)
        bad = [(g, h) for g, h in product(small, repeat=2)
               if (bisimilar(g, h) is not None) != brute_bisimilar(g, h)]
        assert not bad, bad[:3]


def test_criterion_5_collapse_and_largest_subgraph():
    with criterion(5, "collapse uniqueness and the largest collapsible subgraph", 60):
        for edges in edge_sets(4):
            g = FinitePointedGraph.make(edges, 0, nodes=range(4))
            found = brute_collapses(g)
            phi = collapse(g)
            assert len(found) <= 1, edges
            assert (phi is None) == (not found), edges
            if phi is not None:
                assert dict(phi) == found[0], edges
            top, is_initial_sub = brute_largest_collapsible(edges)
            assert is_initial_sub and largest_collapsible_subgraph(edges) == top, edges


def test_criterion_6_reification_round_trip():
    with criterion(6, "reify(graph_of_set(x)) = x for every set of rank <= 4", 30):
        sets = cumulative(5)
        assert len(sets) == 65536
        bad = [x for x in sets if reify(graph_of_set(x)) != x]
        assert not bad, bad[:3]


REQUIRED_LEMMAS = {3, 4, 5, 6, 28, 29, 30, 31, 42, 43, 44, 46, 49, 50, 52, 53}


def test_criterion_7_semantic_lemmas():
    with criterion(7, "semantic lemmas on graphs with <= 3 nodes, Omega bound 5", 120):
        assert REQUIRED_LEMMAS <= set(lemma_suite.LEMMAS)
        results = lemma_suite.run_all()
        failing = {n: bad[:3] for n, bad in results.items() if bad}
        assert not failing, failing


def test_criterion_8_proof_engine():
    with criterion(8, "subject reduction, normalization and intro heads on the corpus", 30):
        corpus = load_corpus()
        assert len(corpus) >= 25
        used = set()
        for e in corpus:
            used |= constructors_used(e.proof)
            ctx = entry_context(e)
            assert check(ctx, e.proof, e.formula).ok, e.name
            r = reduce(e.proof, FUEL)
            assert r.normal, e.name
            j = check(ctx, r.value, e.formula)
            assert j.ok, (e.name, j.reason)
            if type(e.formula).__name__ in ("Or", "Exists"):
                head = head_of_normal(r.value, axioms=[h for h, _ in e.given])
                assert head in ("disjunction-intro-left", "disjunction-intro-right",
                                "existential-intro"), e.name
        assert used == set(PROOF_TYPES)


ROUND_TRIP_FORMULAS = [
    "x in y", "x = y", "~(x in x)", "x in y -> ~(y in x)", "x = y -> (x in z <-> y in z)",
    "x in y /\\ y in z", "x in y \\/ y in x \\/ x = y", "~(x = y) -> ~(y = x)",
    "x in z /\\ y in z /\\ ~(x = y)", "(x in y -> y in z) -> x in z", "x = x",
    "x in y <-> x in z", "~(x in y /\\ y in x)", "x = y /\\ y = z -> x = z", "true -> x in y",
    "false \\/ ~(y in y)", "(x in y \\/ x in z) /\\ ~(x = z)", "x in y -> x in y \\/ z in x",
    "~(x = y) \\/ y in z", "((x in y -> false) -> false) -> x in y",
]


def test_criterion_9_translations():
    with criterion(9, "star and circle tables byte for byte, dagger round trip", 30):
        for lang_in, lang_out, fn, name in [("zermod", "zskol", star, "star_golden.txt"),
                                            ("zskol", "zclass", circle, "circle_golden.txt")]:
            for clause, inp, exp, is_term in read_golden(name):
                phi = parse_term(inp, lang_in) if is_term else parse_formula(inp, lang_in)
                assert show(fn(phi), lang_out) == exp, (name, clause)
        assert len(ROUND_TRIP_FORMULAS) == 20
        sets = cumulative(4)
        graphs = {x: graph_of_set(x) for x in sets}
        for text in ROUND_TRIP_FORMULAS:
            phi = parse_formula(text, "zst")
            psi = dagger(phi)
            names = sorted(v.name for v in free_vars(phi))
            for values in product(sets, repeat=len(names)):
                env = dict(zip(names, values))
                assert evaluate_sets(phi, env) == evaluate(psi, {n: graphs[v] for n, v in env.items()}), \
                    (text, env)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
