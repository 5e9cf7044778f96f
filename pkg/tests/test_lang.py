import pytest

from zermod.lang import (
    ParseError, SortError, Var, alpha_eq, check_sorts, free_vars, fresh_name, parse,
    parse_formula, parse_term, show, substitute, LANGUAGES, get_language,
)
from zermod.lang import syntax as S

ROUND_TRIP = {
    "zermod": [
        "forall x:G. exists y:G. (x in y /\\ ~(y ~~ x))",
        "eta(a / i(x), x, y) -> root(a) = o",
        "forall p:C. (mem(S(0), p) \\/ mem(rho(Omega), p))",
        "exists r:R. rel(root(a), root(b), r)",
        "mem(x, nclass[u; h:G | eta(h, u, root(h))](Pow(a)))",
        "rel(x, y, nrel[u, u'; | u < u']())",
        "eta(compr[w; h:G | w in h](b, a), x, y)",
        "(A -> B) -> A <-> B",
        "Nat(3) /\\ I(j'(j(x))) /\\ J(i'(x)) /\\ Null(Pred(x))",
        "TC(Union(Pair(a, b))) ~~ rho'(root(a))",
    ],
    "zskol": [
        "forall x:Set. x in {y in x | y = y}",
        "forall X:Class. mem(a, {{y | mem(y, X)}})",
        "Rgraph(opair(pi1(a), pi2(a))) /\\ a ~~ proj(a)",
        "Subset(Clos(r), prod(Car(r), Car(r)))",
    ],
    "zst": ["forall x:Set. exists y:Set. (x in y /\\ ~(y = x))"],
    "zclass": ["forall X:Class. exists x:Set. mem(x, X)"],
    "arith": ["exists x:N. 2 * x = 4", "forall x:N. forall y:N. x + S(y) = S(x + y)"],
}


@pytest.mark.parametrize("lang,text", [(l, t) for l, ts in ROUND_TRIP.items() for t in ts])
def test_print_parse_round_trip(lang, text):
    f = parse_formula(text, lang)
    printed = show(f, lang)
    assert alpha_eq(parse_formula(printed, lang), f)
    assert show(parse_formula(printed, lang), lang) == printed
    assert check_sorts(f, lang).ok


def test_unicode_printing():
    f = parse_formula("forall x:G. exists y:G. (x in y /\\ ~(y ~~ x))")
    assert show(f, unicode=True) == "∀x:G. ∃y:G. (x ∈ y ∧ ¬(y ≈ x))"


def test_precedence_and_association():
    f = parse_formula("A /\\ B \\/ C -> D -> E")
    assert isinstance(f, S.Imp) and isinstance(f.right, S.Imp)
    assert isinstance(f.left, S.Or) and isinstance(f.left.left, S.And)
    assert show(f) == "A /\\ B \\/ C -> D -> E"


def test_numerals_are_digits_in_arith_and_zermod():
    t = parse_term("S(S(0))", "arith")
    assert t == S.numeral(2)
    assert show(parse_formula("S(S(0)) < 3")) == "2 < 3"
    assert show(parse_formula("2 * x = 4", "arith"), "arith") == "2 * x = 4"


def test_sort_inference():
    assert check_sorts(parse_term("root(a / x)")).sort == "N"
    assert check_sorts(parse_term("Pow(a)")).sort == "G"
    f = parse_formula("eta(a, x, y)")
    assert {v.sort for v in free_vars(f)} == {"G", "N"}


def test_parse_error_position():
    with pytest.raises(ParseError) as e:
        parse_formula("forall x:G. x in")
    assert "line 1, column 17" in str(e.value)


def test_sort_error():
    with pytest.raises(SortError):
        parse_formula("root(x) in y")
    with pytest.raises(SortError):
        parse_formula("forall x:N. x in x")


def test_parse_falls_back_to_terms():
    assert isinstance(parse("Union(a)"), S.App)
    assert isinstance(parse("a in b"), S.Atom)


def test_fresh_names():
    assert fresh_name("x", {"y"}) == "x"
    assert fresh_name("x", {"x", "x1"}) == "x2"
    assert fresh_name("y'", {"y'"}) == "y'1"


def test_substitution_avoids_capture():
    g = parse_formula("exists y:G. x in y")
    h = substitute(g, {Var("x", "G"): Var("y", "G")})
    assert show(h) == "exists y1:G. y in y1"
    assert free_vars(h) == {Var("y", "G")}


def test_alpha_equivalence():
    assert alpha_eq(parse_formula("forall x:G. x in x"), parse_formula("forall z:G. z in z"))
    assert not alpha_eq(parse_formula("forall x:G. x in y"), parse_formula("forall y:G. y in y"))


def test_binder_families_record_their_variables():
    t = parse_term("compr[w; h:G | w in h](b, a)")
    assert isinstance(t, S.Bind) and t.family == "compr"
    assert [v.name for v in t.bound] == ["w"] and [v.name for v in t.params] == ["h"]
    assert [a.name for a in t.args] == ["b", "a"]
    assert free_vars(t) == {Var("a", "G"), Var("b", "G")}


def test_compr_body_restricted_to_graph_predicates():
    assert check_sorts(parse_term("compr[w; h:G | exists v:G. (v in w /\\ v ~~ h)](b, a)")).ok
    rep = check_sorts(parse_term("compr[w; | Nat(root(w))](a)"))
    assert not rep.ok and "Nat" in rep.error
    rep = check_sorts(parse_term("compr[w; | exists n:N. eta(w, n, root(w))](a)"))
    assert not rep.ok and "sort N" in rep.error


def test_languages_registered():
    assert set(LANGUAGES) >= {"zermod", "arith", "zst", "zclass", "zskol"}
    assert get_language("zermod").predicates["~~"] == ("G", "G")


def test_fresh_names_reparse():
    f = parse_formula("exists y:N. exists y':N. y < y'")
    body = S.substitute(f.body.body, {S.Var("y", "N"): S.Var("y'1", "N")})
    assert parse_formula(show(body)) == body


def test_error_points_inside_parenthesised_formula():
    with pytest.raises(ParseError, match="column 32"):
        parse_formula("exists x:N. (((exists y:N. A(y 1))) /\\ B)")
