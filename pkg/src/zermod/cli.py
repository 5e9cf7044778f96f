"""Command-line interface.

Exit codes: 0 success, 1 definite negative, 2 undetermined (fuel), 3 usage or
parse error.  ``--format records`` prints one ``key=value`` record per line;
see ``docs/cli.md``.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import graphs as GR
from .lang import ParseError, SortError, parse, parse_formula, parse_term, show
from .lang.sorts import check_sorts
from .proof import (
    WitnessError, check, entry_context, extract_witness, load_corpus, parse_proof_file,
    reduce as reduce_proof, show_entry, show_proof,
)
from .rewrite import DEFAULT_FUEL, UNDETERMINED, axiomatize, congruent, load_system, normalize, with_fuel
from .translate import circle, dagger, star

OK, NEGATIVE, UNKNOWN, USAGE = 0, 1, 2, 3

TRANSLATION_LANGUAGES = {"dagger": ("zst", "zermod"), "star": ("zermod", "zskol"),
                         "circle": ("zskol", "zclass")}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# ---------------------------------------------------------------------------
# Records

_BARE = re.compile(r'[^\s"\\]+')
_FIELD = re.compile(r'([A-Za-z_][A-Za-z0-9_]*)=("(?:[^"\\]|\\.)*"|[^\s"\\]*)')


def encode_value(v) -> str:
    if v is True:
        return "true"
    if v is False:
        return "false"
    if v is None:
        return "none"
    v = str(v)
    return v if _BARE.fullmatch(v) else json.dumps(v, ensure_ascii=False)


def format_record(kind, fields) -> str:
    return " ".join([f"record={encode_value(kind)}"] + [f"{k}={encode_value(v)}" for k, v in fields])


def parse_record(line: str) -> dict:
    """Inverse of the records writer; values come back as strings."""
    out, pos = {}, 0
    line = line.rstrip("\n")
    while pos < len(line):
        if line[pos] == " ":
            pos += 1
            continue
        m = _FIELD.match(line, pos)
        if not m:
            raise ValueError(f"malformed record at column {pos + 1}: {line!r}")
        k, v = m.group(1), m.group(2)
        out[k] = json.loads(v) if v.startswith('"') else v
        pos = m.end()
    return out


class Output:
    def __init__(self, fmt, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def emit(self, kind, text, *fields):
        """``text`` is the human line (``None`` prints nothing in text mode)."""
        if self.fmt == "records":
            print(format_record(kind, fields), file=self.stream)
        elif text is not None:
            print(text, file=self.stream)


# ---------------------------------------------------------------------------
# Argument parsing

def _global_flags(p, defaults):
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p.add_argument("--fuel", type=_nonneg_int, default=d(DEFAULT_FUEL), help="rewrite/reduction step budget")
    p.add_argument("--ruleset", default=d("zermod"), help="zermod, arith, naive or a rule file")
    p.add_argument("--trace", action="store_true", default=d(False), help="print each step or clause")
    p.add_argument("--format", choices=("text", "records"), default=d("text"))


def _nonneg_int(s):
    try:
        n = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def build_parser():
    top = _Parser(prog="zermod", description="Deduction modulo for pointed-graph set theory.")
    _global_flags(top, True)
    sub = top.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def cmd(name, help):
        p = sub.add_parser(name, help=help)
        _global_flags(p, False)
        return p

    p = cmd("parse", "parse and pretty-print a formula or term")
    p.add_argument("expr")
    p.add_argument("--language", help="object language (default: that of the ruleset)")
    p.add_argument("--term", action="store_true", help="read a term rather than a formula")

    p = cmd("normalize", "rewrite to normal form")
    p.add_argument("expr")
    p.add_argument("--term", action="store_true")

    p = cmd("congruent", "decide congruence of two formulas or terms")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--term", action="store_true")

    cmd("axiomatize", "print the rules as axioms")

    for name, help in (("check-proof", "check the proofs of a proof file"),
                       ("reduce-proof", "normalize the proofs of a proof file"),
                       ("witness", "extract the witness of existential proofs")):
        p = cmd(name, help)
        p.add_argument("file", nargs="?", help="proof file (default: the bundled corpus)")
        p.add_argument("--name", action="append", help="only these entries")

    for name, help in (("bisim", "bisimilarity of two pointed graphs"),
                       ("member", "membership (shifted bisimilarity) of two pointed graphs")):
        p = cmd(name, help)
        p.add_argument("left", help="FILE or FILE:NAME")
        p.add_argument("right", help="FILE or FILE:NAME")

    for name, help in (("collapse", "Mostowski collapse of a graph"),
                       ("reify", "the set a pointed graph denotes")):
        p = cmd(name, help)
        p.add_argument("graph", help="FILE or FILE:NAME")

    p = cmd("graph-of-set", "membership graph of a hereditarily finite set")
    p.add_argument("set")
    p.add_argument("--name", default="g")

    p = cmd("construct", "build a construction graph")
    p.add_argument("op", choices=sorted(GR.pointed.CONSTRUCTIONS))
    p.add_argument("graphs", nargs="*", help="argument graphs, FILE or FILE:NAME")
    p.add_argument("--k", type=_nonneg_int, help="truncation bound for Omega")
    p.add_argument("--pred", help="Compr predicate, a formula in the variable given by --var")
    p.add_argument("--var", default="x")
    p.add_argument("--name", default="g")

    p = cmd("translate", "apply dagger, star or circle")
    p.add_argument("translation", choices=sorted(TRANSLATION_LANGUAGES))
    p.add_argument("expr")
    p.add_argument("--term", action="store_true")

    p = cmd("demo", "worked examples")
    p.add_argument("which", choices=("even4", "crabbe"))
    return top


# ---------------------------------------------------------------------------
# Helpers

def _system(args):
    return with_fuel(load_system(args.ruleset), args.fuel)


def _read_obj(text, language, term):
    return parse_term(text, language) if term else parse(text, language)


def _load_graph(ref):
    path, _, name = ref.partition(":") if not Path(ref).exists() else (ref, "", "")
    graphs = GR.parse_graphs(Path(path).read_text(encoding="utf-8"))
    if name:
        if name not in graphs:
            raise UsageError(f"no graph {name!r} in {path}")
        return graphs[name]
    if len(graphs) != 1:
        raise UsageError(f"{path} holds {len(graphs)} graphs; use {path}:NAME")
    return next(iter(graphs.values()))


def _entries(args):
    if args.file is None:
        entries = list(load_corpus())
    else:
        entries = parse_proof_file(Path(args.file).read_text(encoding="utf-8"))
    if args.name:
        known = {e.name for e in entries}
        missing = [n for n in args.name if n not in known]
        if missing:
            raise UsageError("no proof named " + ", ".join(missing))
        entries = [e for e in entries if e.name in args.name]
    return entries


def _path(path):
    return ".".join(map(str, path)) or "."


# ---------------------------------------------------------------------------
# Commands

def cmd_parse(args, out):
    lang = args.language or load_system(args.ruleset).signature.name
    obj = _read_obj(args.expr, lang, args.term)
    text = show(obj, lang)
    rep = check_sorts(obj, lang)
    kind = "formula" if rep.sort is None else "term"
    out.emit("parse", text, ("kind", kind), ("language", lang), ("sort", rep.sort), ("text", text))
    return OK


def cmd_normalize(args, out):
    system = _system(args)
    lang = system.signature.name
    obj = _read_obj(args.expr, lang, args.term)
    res = normalize(obj, system, args.fuel, trace=args.trace)
    for k, (rule, path) in enumerate(res.trace or ()):
        out.emit("step", f"step {k}: {rule} at {_path(path)}", ("index", k), ("rule", rule), ("path", _path(path)))
    text = show(res.value, lang)
    out.emit("normalize", text, ("outcome", res.outcome), ("steps", res.steps), ("text", text))
    if not res.normal:
        print(f"fuel exhausted after {res.steps} steps", file=sys.stderr)
        return UNKNOWN
    return OK


def cmd_congruent(args, out):
    system = _system(args)
    lang = system.signature.name
    a = _read_obj(args.left, lang, args.term)
    b = _read_obj(args.right, lang, args.term)
    r = congruent(a, b, system, args.fuel)
    verdict = "undetermined" if r == UNDETERMINED else ("congruent" if r else "not congruent")
    out.emit("congruent", verdict, ("result", "undetermined" if r == UNDETERMINED else bool(r)))
    return UNKNOWN if r == UNDETERMINED else (OK if r else NEGATIVE)


def cmd_axiomatize(args, out):
    system = _system(args)
    lang = system.signature.name
    for rule, ax in zip(system.rules, axiomatize(system)):
        text = show(ax, lang)
        out.emit("axiom", text, ("rule", rule.name), ("text", text))
    return OK


def cmd_check_proof(args, out):
    worst = OK
    for e in _entries(args):
        j = check(entry_context(e, args.fuel), e.proof, e.formula, args.fuel)
        line = f"{e.name}: {j.status}" + (f": {j.reason}" if j.reason else "")
        out.emit("check", line, ("name", e.name), ("status", j.status), ("path", _path(j.path)),
                 ("reason", j.reason))
        if j.status == "failed":
            worst = NEGATIVE
        elif not j.ok and worst == OK:
            worst = UNKNOWN
    return worst


def _reduce_entry(e, args, out):
    res = reduce_proof(e.proof, args.fuel, trace=args.trace)
    for k, (rule, path) in enumerate(res.trace or ()):
        out.emit("step", f"# {e.name} step {k}: {rule} at {_path(path)}",
                 ("name", e.name), ("index", k), ("rule", rule), ("path", _path(path)))
    return res


def cmd_reduce_proof(args, out):
    code = OK
    for e in _entries(args):
        res = _reduce_entry(e, args, out)
        reduced = type(e)(e.name, e.formula, e.ruleset, e.given, res.value, e.language, e.line)
        text = show_entry(reduced)
        out.emit("reduced", text, ("name", e.name), ("outcome", res.outcome), ("steps", res.steps),
                 ("proof", show_proof(res.value, e.language)))
        if not res.normal:
            code = UNKNOWN
    return code


def cmd_witness(args, out):
    code = OK
    for e in _entries(args):
        res = _reduce_entry(e, args, out)
        if not res.normal:
            out.emit("witness", f"{e.name}: fuel exhausted", ("name", e.name), ("status", "undetermined"))
            code = max(code, UNKNOWN) if code != NEGATIVE else code
            continue
        try:
            w = extract_witness(res.value, e.formula, entry_context(e, args.fuel), args.fuel)
        except WitnessError as err:
            out.emit("witness", f"{e.name}: no witness: {err}", ("name", e.name), ("status", "none"),
                     ("reason", str(err)))
            code = NEGATIVE
            continue
        term = show(w.term, e.language)
        out.emit("witness", term, ("name", e.name), ("status", "found"), ("term", term),
                 ("instance", show(w.instance, e.language)))
    return code


def cmd_bisim(args, out):
    g, h = _load_graph(args.left), _load_graph(args.right)
    w = GR.bisimilar(g, h)
    if w is None:
        out.emit("bisim", "not bisimilar", ("bisimilar", False), ("relation", ""))
        return NEGATIVE
    rel = GR.show_pairs(w.relation)
    out.emit("bisim", rel, ("bisimilar", True), ("relation", rel))
    return OK


def cmd_member(args, out):
    r = GR.member(_load_graph(args.left), _load_graph(args.right))
    out.emit("member", "member" if r else "not member", ("member", r))
    return OK if r else NEGATIVE


def cmd_collapse(args, out):
    g = _load_graph(args.graph)
    phi = GR.collapse(g)
    if phi is None:
        out.emit("collapse", "no collapse: the carrier has a cycle", ("exists", False))
        return NEGATIVE
    for n in sorted(phi, key=lambda n: (isinstance(n, str), n)):
        out.emit("collapse", f"{n} = {GR.show_hf(phi[n])}", ("node", n), ("set", GR.show_hf(phi[n])))
    return OK


def cmd_reify(args, out):
    x = GR.reify(_load_graph(args.graph))
    if x is None:
        out.emit("reify", "no reification: the carrier has a cycle", ("exists", False))
        return NEGATIVE
    out.emit("reify", GR.show_hf(x), ("exists", True), ("set", GR.show_hf(x)))
    return OK


def cmd_graph_of_set(args, out):
    g = GR.graph_of_set(GR.parse_hf(args.set))
    text = GR.show_graph(g, args.name)
    out.emit("graph", text, ("name", args.name), ("text", text))
    return OK


def cmd_construct(args, out):
    gs = [_load_graph(r) for r in args.graphs]
    pred = None
    if args.op == "Compr":
        if args.pred is None:
            raise UsageError("Compr needs --pred")
        # quantifiers range over the rerootings of the argument graphs
        domain = [GR.reroot(g, n) for g in gs for n in sorted(g.nodes, key=str)]
        pred = GR.predicate(parse_formula(args.pred, "zermod", known={args.var: "G"}), args.var,
                            domain=domain)
    try:
        g = GR.construct(args.op, *gs, pred=pred, k=args.k)
    except ValueError as e:
        raise UsageError(str(e)) from None
    text = GR.show_graph(g, args.name)
    out.emit("graph", text, ("name", args.name), ("text", text))
    return OK


def cmd_translate(args, out):
    src, dst = TRANSLATION_LANGUAGES[args.translation]
    obj = _read_obj(args.expr, src, args.term)
    clauses = []
    fn = {"dagger": dagger, "star": star, "circle": circle}[args.translation]
    result = fn(obj, clauses)
    if args.trace:
        for k, c in enumerate(clauses):
            out.emit("clause", f"clause {k}: {c}", ("index", k), ("clause", c))
    text = show(result, dst)
    out.emit("translate", text, ("translation", args.translation), ("language", dst), ("text", text))
    return OK


def cmd_demo(args, out):
    from .demo import crabbe, even4
    return (even4 if args.which == "even4" else crabbe)(args, out)


COMMANDS = {
    "parse": cmd_parse, "normalize": cmd_normalize, "congruent": cmd_congruent,
    "axiomatize": cmd_axiomatize, "check-proof": cmd_check_proof, "reduce-proof": cmd_reduce_proof,
    "witness": cmd_witness, "bisim": cmd_bisim, "member": cmd_member, "collapse": cmd_collapse,
    "reify": cmd_reify, "graph-of-set": cmd_graph_of_set, "construct": cmd_construct,
    "translate": cmd_translate, "demo": cmd_demo,
}


def run(argv=None, stdout=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, Output(args.format, stdout))
    except UsageError as e:
        print(e, file=sys.stderr)
        return USAGE
    except (ParseError, SortError, GR.GraphSyntaxError, GR.HFSyntaxError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


def main():
    sys.exit(run())
