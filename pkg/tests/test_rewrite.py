import pytest

from zermod.lang import alpha_eq, parse, parse_formula, parse_term, show
from zermod.rewrite import (
    EXHAUSTED, NORMAL, UNDETERMINED, NormalFormCache, ReplayError, apply_rule, arith_rules,
    axiomatize, congruent, format_rules, is_reducible, naive_comprehension_rules, normalize,
    parse_rule, parse_rules, replay, with_fuel, zermod_rules,
)

from golden import read_golden

GOLDEN = read_golden("rule_golden.txt")
CRABBE_SET = "{x in a | ~(x in x)}"


def _read(text, kind):
    return parse_term(text) if kind == "term" else parse(text)


def test_golden_covers_every_rule():
    assert sorted(k for k, *_ in GOLDEN) == sorted(r.name for r in zermod_rules().rules)
    assert len(zermod_rules()) == 36


@pytest.mark.parametrize("name,inp,exp", [(k, i, e) for k, i, e, _ in GOLDEN])
def test_rule_fires_with_table_rhs(name, inp, exp):
    rule = zermod_rules().rule(name)
    out = apply_rule(rule, _read(inp, rule.kind))
    assert out is not None
    assert alpha_eq(out, _read(exp, rule.kind)), show(out)


def test_rules_do_not_fire_on_other_heads():
    sysm = zermod_rules()
    assert apply_rule(sysm.rule("I_i"), parse_formula("I(j(x))")) is None
    assert apply_rule(sysm.rule("inv_i"), parse_term("j'(i(x))")) is None


def test_arith_two_times_two():
    r = normalize(parse_formula("2 * 2 = 4", "arith"), arith_rules())
    assert r.outcome == NORMAL
    assert show(r.value, "arith") == "4 = 4"
    assert congruent(parse_formula("2 * 2 = 4", "arith"), parse_formula("4 = 4", "arith"), arith_rules()) is True
    assert congruent(parse_formula("2 * 2 = 4", "arith"), parse_formula("3 = 4", "arith"), arith_rules()) is False


def test_naive_comprehension_exhausts_fuel():
    phi = parse_formula(f"{CRABBE_SET} in {CRABBE_SET}", "zskol")
    r = normalize(phi, naive_comprehension_rules(), 200)
    assert r.outcome == EXHAUSTED and r.steps == 200
    assert congruent(phi, parse_formula("false", "zskol"), with_fuel(naive_comprehension_rules(), 50)) == UNDETERMINED


def test_zermod_normal_form_terminates_on_crabbe():
    c = "compr[x; | ~(x in x)](Omega)"
    r = normalize(parse_formula(f"{c} in {c}"), zermod_rules())
    assert r.normal and not is_reducible(r.value, zermod_rules())


def test_trace_replays_to_the_same_normal_form():
    phi = parse_formula("b / i(x) in Pair(a, b)")
    r = normalize(phi, zermod_rules(), trace=True)
    assert r.normal and len(r.trace) == r.steps
    assert alpha_eq(replay(phi, r.trace, zermod_rules()), r.value)


def test_replay_rejects_a_wrong_step():
    phi = parse_formula("I(i(x))")
    with pytest.raises(ReplayError):
        replay(phi, [("I_j", ())], zermod_rules())


def test_fuel_zero_is_exhausted_on_a_redex():
    r = normalize(parse_formula("I(o)"), zermod_rules(), 0)
    assert r.outcome == EXHAUSTED
    assert normalize(parse_formula("A"), zermod_rules(), 0).normal


def test_cache_gives_the_same_answers():
    cache = NormalFormCache()
    a, b = parse_formula("root(Pow(a)) = o"), parse_formula("o = o")
    first = congruent(a, b, zermod_rules(), cache=cache)
    again = congruent(a, b, zermod_rules(), cache=cache)
    assert first == again == congruent(a, b, zermod_rules())
    assert cache.hits >= 1


def test_axiomatize():
    axioms = [show(a, "arith") for a in axiomatize(arith_rules())]
    assert axioms[0] == "forall y:N. 0 + y = y"
    zx = {show(a) for a in axiomatize(zermod_rules())}
    assert "forall x:N. i'(i(x)) = x" in zx
    assert "forall a:G. forall x:N. forall y:N. eqG(a / x / y, a / y)" in zx
    assert "forall y:N. forall z:N. (y = z <-> (forall p:C. (mem(y, p) -> mem(z, p))))" in zx


def test_rule_text_round_trip():
    sysm = zermod_rules()
    again = parse_rules(format_rules(sysm))
    assert [r.name for r in again.rules] == [r.name for r in sysm.rules]
    for r1, r2 in zip(sysm.rules, again.rules):
        assert alpha_eq(r1.lhs, r2.lhs) and alpha_eq(r1.rhs, r2.rhs)


def test_rule_with_unbound_rhs_variable_is_rejected():
    with pytest.raises(ValueError):
        parse_rule("[bad] root(a) --> root(b)")


def test_duplicate_rule_names_rejected():
    text = "system d\nlanguage zermod\n[r] I(o) --> false\n[r] J(o) --> false\n"
    with pytest.raises(ValueError):
        parse_rules(text)
