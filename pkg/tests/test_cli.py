import io
import subprocess
import sys
from pathlib import Path

import pytest

from zermod.cli import encode_value, format_record, parse_record, run
from zermod.graphs import parse_graph, parse_hf, parse_pairs, reify, von_neumann
from zermod.lang import parse_formula, parse_term
from zermod.proof import parse_proof_file

ROOT = Path(__file__).resolve().parent.parent
GRAPHS = ROOT / "demos" / "graphs"
G2, G6, FIG = str(GRAPHS / "g2.graph"), str(GRAPHS / "g6.graph"), str(GRAPHS / "figure.graph")


def zermod(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def lines(text):
    return [line for line in text.splitlines() if line]


def test_records_encoding_round_trip():
    fields = [("a", "plain"), ("b", "has space"), ("c", 'quote " and \\'), ("d", True), ("e", None), ("f", "")]
    line = format_record("kind", fields)
    back = parse_record(line)
    assert back == {"record": "kind", "a": "plain", "b": "has space", "c": 'quote " and \\',
                    "d": "true", "e": "none", "f": ""}
    assert encode_value("x=y") == "x=y"


def test_parse_round_trip():
    code, out = zermod("parse", "forall x:G. x in Pow(x)")
    assert code == 0
    assert parse_formula(out.strip()) == parse_formula("forall x:G. x in Pow(x)")
    code, out = zermod("--format", "records", "parse", "root(a)", "--term")
    rec = parse_record(out)
    assert rec["kind"] == "term" and rec["sort"] == "N" and parse_term(rec["text"]) == parse_term("root(a)")


def test_parse_error_exit_code(capsys):
    code, _ = zermod("parse", "x in")
    assert code == 3
    assert "column" in capsys.readouterr().err


def test_usage_errors_exit_3():
    assert zermod()[0] == 3
    assert zermod("bogus")[0] == 3
    assert zermod("--fuel", "-1", "parse", "A")[0] == 3
    assert zermod("construct", "Omega")[0] == 3


def test_normalize_and_trace():
    code, out = zermod("--ruleset", "arith", "normalize", "2 * 2 = 4")
    assert code == 0 and out.strip() == "4 = 4"
    code, out = zermod("--ruleset", "arith", "--format", "records", "--trace", "normalize", "2 * 2 = 4")
    recs = [parse_record(line) for line in lines(out)]
    assert [r["record"] for r in recs[:-1]] == ["step"] * 7
    assert recs[0]["rule"] == "times_S" and recs[-1]["outcome"] == "normal" and recs[-1]["steps"] == "7"


def test_normalize_fuel_exhaustion_exit_2():
    c = "{x in a | ~(x in x)}"
    code, out = zermod("--ruleset", "naive", "--fuel", "20", "normalize", f"{c} in {c}")
    assert code == 2
    parse_formula(out.strip(), "zskol")


def test_congruent_exit_codes():
    assert zermod("--ruleset", "arith", "congruent", "2 * 2 = 4", "4 = 4")[0] == 0
    assert zermod("--ruleset", "arith", "congruent", "2 * 2 = 4", "3 = 4")[0] == 1
    c = "{x in a | ~(x in x)}"
    assert zermod("--ruleset", "naive", "--fuel", "30", "congruent", f"{c} in {c}", "false")[0] == 2


def test_axiomatize_round_trip():
    code, out = zermod("--ruleset", "arith", "axiomatize")
    assert code == 0
    assert [parse_formula(line, "arith") for line in lines(out)]
    assert len(lines(zermod("axiomatize")[1])) == 36


def test_ruleset_file(tmp_path):
    f = tmp_path / "tiny.rules"
    f.write_text("system tiny\nlanguage zermod\n[i_o] I(o) --> true\n", encoding="utf-8")
    assert zermod("--ruleset", str(f), "normalize", "I(o)") == (0, "true\n")


def test_check_proof_corpus():
    code, out = zermod("check-proof")
    assert code == 0
    assert all(line.endswith(": checked") for line in lines(out))


def test_check_proof_failure_exit_1(tmp_path):
    f = tmp_path / "bad.proofs"
    f.write_text("proof wrong : A -> B in zermod { fun h => h }\n", encoding="utf-8")
    code, out = zermod("check-proof", str(f))
    assert code == 1 and "failed" in out
    f.write_text("proof broken : A -> in zermod { h }\n", encoding="utf-8")
    assert zermod("check-proof", str(f))[0] == 3


def test_reduce_proof_round_trip():
    code, out = zermod("reduce-proof", "--name", "beta_cut", "--name", "nested_cut")
    assert code == 0
    entries = parse_proof_file(out)
    assert [e.name for e in entries] == ["beta_cut", "nested_cut"]
    assert zermod("check-proof", "--name", "nope")[0] == 3


def test_witness():
    code, out = zermod("witness", "--name", "even_four")
    assert code == 0 and out.strip() == "2"
    code, out = zermod("witness", "--name", "identity")
    assert code == 1


def test_bisim_witness_round_trip():
    code, out = zermod("bisim", G2, G6)
    assert code == 0 and parse_pairs(out.strip()) == {(2, 6), (3, 7)}
    code, out = zermod("bisim", G2, FIG + ":g4")
    assert code == 1


def test_member():
    assert zermod("member", G2, FIG + ":g4")[0] == 0
    assert zermod("member", FIG + ":g4", FIG + ":g4")[0] == 1
    assert zermod("member", G2, FIG)[0] == 3    # several graphs, no name given


def test_collapse_and_reify():
    code, out = zermod("collapse", FIG + ":g4")
    assert code == 0
    table = dict(line.split(" = ") for line in lines(out))
    assert parse_hf(table["4"]) == von_neumann(2)
    code, out = zermod("reify", FIG + ":g4")
    assert code == 0 and parse_hf(out.strip()) == von_neumann(2)
    assert zermod("reify", FIG + ":loop")[0] == 1
    assert zermod("collapse", FIG + ":loop")[0] == 1


def test_graph_of_set_round_trip():
    code, out = zermod("graph-of-set", "{{},{{}}}")
    assert code == 0 and reify(parse_graph(out)) == von_neumann(2)
    assert zermod("graph-of-set", "{{}")[0] == 3


def test_construct_round_trip():
    code, out = zermod("construct", "Pow", G2)
    assert code == 0 and reify(parse_graph(out)) == parse_hf("{{},{{}}}")
    code, out = zermod("construct", "Omega", "--k", "3")
    assert reify(parse_graph(out)) == von_neumann(3)
    code, out = zermod("construct", "Compr", FIG + ":g4", "--pred", "exists y:G. y in x")
    assert code == 0 and reify(parse_graph(out)) == parse_hf("{{{}}}")


def test_translate_round_trip_and_trace():
    code, out = zermod("translate", "star", "eta(a, x, y)")
    assert code == 0 and parse_formula(out.strip(), "zskol")
    code, out = zermod("--format", "records", "--trace", "translate", "circle", "z in Nats")
    recs = [parse_record(line) for line in lines(out)]
    assert "in-Nats" in [r.get("clause") for r in recs]
    assert parse_formula(recs[-1]["text"], "zclass")
    code, out = zermod("translate", "dagger", "x = y")
    assert out.strip() == "x ~~ y"


def test_demo_even4():
    code, out = zermod("demo", "even4")
    assert code == 0
    assert lines(out)[-1] == "witness: 2"


def test_demo_crabbe():
    code, out = zermod("--format", "records", "demo", "crabbe", "--fuel", "1000")
    assert code == 0
    recs = [parse_record(line) for line in lines(out)]
    naive = next(r for r in recs if r.get("system") == "naive")
    assert naive["outcome"] == "fuel-exhausted" and naive["steps"] == "1000"
    normal = next(r for r in recs if "normal_form" in r)
    parse_formula(normal["normal_form"])


@pytest.mark.parametrize("argv", [["demo", "even4"], ["bisim", G2, G6], ["--ruleset", "arith", "axiomatize"]])
def test_output_is_deterministic(argv):
    assert zermod(*argv) == zermod(*argv)


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "zermod", "bisim", G2, G6], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "(2,6), (3,7)"
