import pytest

from zermod.lang import parse_formula, parse_term, show
from zermod.proof import (
    App, Asc, BotE, Case, ExE, ExI, Hyp, Lam, PROOF_TYPES, Pair, Snd, WitnessError, check,
    constructors_used, entry_context, extract_witness, head_of_normal, is_normal, load_corpus,
    make_context, parse_proof, parse_proof_file, reduce, replay, show_entry, show_proof, subst_hyp,
)
from zermod.lang import ParseError
from zermod.rewrite import zermod_rules

CORPUS = load_corpus()
BY_NAME = {e.name: e for e in CORPUS}


def _ctx(hyps=()):
    return make_context(zermod_rules(), hyps)


def test_corpus_size_and_coverage():
    assert len(CORPUS) >= 25
    used = set()
    for e in CORPUS:
        used |= constructors_used(e.proof)
    assert used == set(PROOF_TYPES)


@pytest.mark.parametrize("entry", CORPUS, ids=lambda e: e.name)
def test_corpus_entry_checks_reduces_and_still_checks(entry):
    ctx = entry_context(entry)
    assert check(ctx, entry.proof, entry.formula).ok
    r = reduce(entry.proof)
    assert r.normal and is_normal(r.value)
    j = check(ctx, r.value, entry.formula)
    assert j.ok, j.reason


@pytest.mark.parametrize("entry", CORPUS, ids=lambda e: e.name)
def test_corpus_entry_prints_and_reparses(entry):
    again = parse_proof_file(show_entry(entry))
    assert len(again) == 1 and again[0].proof == entry.proof
    assert again[0].formula == entry.formula


def test_identity_and_mismatch():
    a = parse_formula("A -> A")
    assert check(_ctx(), parse_proof("fun h => h"), a).ok
    j = check(_ctx(), parse_proof("fun h => h"), parse_formula("A -> B"))
    assert j.status == "failed"
    assert j.reason == "formula mismatch: A is not congruent to B"


def test_checking_modulo_congruence():
    # I(i(o)) --> true, so tt proves it
    assert check(_ctx(), parse_proof("tt"), parse_formula("I(i(o))")).ok
    assert check(_ctx(), parse_proof("tt"), parse_formula("J(i(o))")).status == "failed"


def test_hypothesis_rule_and_unknown_hypothesis():
    ctx = _ctx([("h", parse_formula("A"))])
    assert check(ctx, Hyp("h"), parse_formula("A")).ok
    j = check(ctx, Hyp("k"), parse_formula("A"))
    assert not j.ok and "unknown hypothesis" in j.reason


def test_eigenvariable_condition():
    ctx = _ctx([("h", parse_formula("x in a"))])
    j = check(ctx, parse_proof("gen x:G. tt"), parse_formula("forall x:G. true"))
    assert not j.ok and "eigenvariable" in j.reason


def test_quantifier_sort_mismatch():
    j = check(_ctx(), parse_proof("gen x:N. tt"), parse_formula("forall x:G. true"))
    assert not j.ok and "sort" in j.reason


def test_parse_proof_syntax():
    p = parse_proof("fun (h : A /\\ B) => pair(snd(h), fst(h))")
    assert isinstance(p, Lam) and p.ann == parse_formula("A /\\ B")
    assert isinstance(p.body, Pair) and isinstance(p.body.left, Snd)
    assert parse_proof("f g k") == App(App(Hyp("f"), Hyp("g")), Hyp("k"))
    assert parse_proof("f fun h => h") == App(Hyp("f"), Lam("h", Hyp("h")))
    q = parse_proof("unpack(h, y:G, k. pack[y](k))")
    assert isinstance(q, ExE) and q.var.sort == "G" and isinstance(q.body, ExI)
    assert isinstance(parse_proof("(tt : true)"), Asc)
    assert isinstance(parse_proof("abort[A](h)"), BotE)
    assert isinstance(parse_proof("case(h, l. inr(l), r. inl(r))"), Case)


def test_reserved_names_cannot_be_hypotheses():
    with pytest.raises(ParseError):
        parse_proof("fun tt => tt")


def test_show_proof_round_trip():
    for text in ["fun h => fun k => h", "f (g k)", "(fun h => h) tt", "inst(gen x:G. tt, a)",
                 "case(inl(tt), l. l, r. r)", "pack[i(o)](tt)"]:
        p = parse_proof(text)
        assert parse_proof(show_proof(p)) == p


def test_beta_reduction_keeps_the_proof_checkable():
    p = parse_proof("(fun h => h) tt")
    r = reduce(p, trace=True)
    assert r.trace == [("beta", ())]
    assert check(_ctx(), r.value, parse_formula("true")).ok
    assert replay(p, r.trace) == r.value


def test_each_cut_rule_fires():
    cases = {
        "fst": "fst(pair(tt, tt))",
        "snd": "snd(pair(tt, tt))",
        "beta_all": "inst(gen x:G. tt, a)",
        "case_inl": "case(inl(tt), l. l, r. r)",
        "case_inr": "case(inr(tt), l. l, r. r)",
        "unpack": "unpack(pack[a](tt), y:G, k. k)",
        "asc": "((tt : true) : true)",
    }
    for rule, text in cases.items():
        r = reduce(parse_proof(text), trace=True)
        assert r.trace[0][0] == rule


def test_reduction_fuel():
    p = parse_proof("(fun h => h) ((fun h => h) tt)")
    r = reduce(p, fuel=1)
    assert r.outcome == "fuel-exhausted" and r.steps == 1


def test_hypothesis_substitution_avoids_capture():
    p = parse_proof("fun k => h")
    q = subst_hyp(p, "h", Hyp("k"))
    assert isinstance(q, Lam) and q.hyp != "k" and q.body == Hyp("k")


def test_normal_closed_proofs_of_disjunctions_and_existentials_have_intro_heads():
    for e in CORPUS:
        f = e.formula
        goal = type(f).__name__
        r = reduce(e.proof)
        if goal in ("Or", "Exists"):
            head = head_of_normal(r.value, axioms=[h for h, _ in e.given])
            assert head in ("disjunction-intro-left", "disjunction-intro-right", "existential-intro")


def test_head_of_normal_requires_closed_normal_proofs():
    with pytest.raises(WitnessError):
        head_of_normal(Hyp("h"))
    with pytest.raises(WitnessError):
        head_of_normal(parse_proof("(fun h => h) tt"))


def test_even_four_witness():
    e = BY_NAME["even_four"]
    w = extract_witness(reduce(e.proof).value, e.formula, entry_context(e))
    assert show(w.term, "arith") == "2"
    assert show(w.instance, "arith") == "2 * 2 = 4"
    assert w.judgment.ok


def test_witness_of_a_non_existential_head_is_an_error():
    with pytest.raises(WitnessError):
        extract_witness(parse_proof("fun h => h"), parse_formula("A -> A"), _ctx())


def test_witness_sort_is_read_from_the_quantifier():
    w = extract_witness(parse_proof("pack[o](tt)"), parse_formula("exists x:N. true"), _ctx())
    assert w.term == parse_term("o")
