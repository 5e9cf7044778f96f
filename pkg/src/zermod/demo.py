"""The two worked examples behind ``zermod demo``."""
from __future__ import annotations

from .lang import parse_formula, show
from .proof import check, entry_context, extract_witness, load_corpus, reduce, show_entry
from .rewrite import arith_rules, congruent, naive_comprehension_rules, normalize, with_fuel, zermod_rules

EVEN4 = "even_four"
CRABBE_SET = "{x in a | ~(x in x)}"
CRABBE_GRAPH = "compr[x; | ~(x in x)](Omega)"


def _corpus_entry(name):
    return next(e for e in load_corpus() if e.name == name)


def even4(args, out):
    """Four is even: ``2 * 2 = 4`` is congruent to ``4 = 4``, so reflexivity proves it."""
    e = _corpus_entry(EVEN4)
    system = with_fuel(arith_rules(), args.fuel)
    lhs, rhs = parse_formula("2 * 2 = 4", "arith"), parse_formula("4 = 4", "arith")
    conv = congruent(lhs, rhs, system, args.fuel)
    out.emit("even4", show_entry(e), ("step", "proof"), ("text", show_entry(e)))
    out.emit("even4", f"2 * 2 = 4 congruent to 4 = 4: {conv}", ("step", "congruence"), ("result", conv))
    j = check(entry_context(e, args.fuel), e.proof, e.formula, args.fuel)
    out.emit("even4", f"check: {j.status}", ("step", "check"), ("status", j.status))
    ok = conv is True and j.ok
    if ok:
        res = reduce(e.proof, args.fuel)
        w = extract_witness(res.value, e.formula, entry_context(e, args.fuel), args.fuel)
        term = show(w.term, "arith")
        out.emit("even4", f"witness: {term}", ("step", "witness"), ("term", term),
                 ("instance", show(w.instance, "arith")))
    return 0 if ok else 1


def crabbe(args, out):
    """Naive comprehension loops on ``C in C``; the graph encoding terminates."""
    phi = parse_formula(f"{CRABBE_SET} in {CRABBE_SET}", "zskol")
    naive = normalize(phi, with_fuel(naive_comprehension_rules(), args.fuel), args.fuel, trace=True)
    if args.trace:
        for k, (rule, path) in enumerate(naive.trace):
            out.emit("step", f"naive step {k}: {rule} at {'.'.join(map(str, path)) or '.'}",
                     ("system", "naive"), ("index", k), ("rule", rule))
    out.emit("crabbe", f"naive: {naive.outcome} after {naive.steps} steps",
             ("system", "naive"), ("outcome", naive.outcome), ("steps", naive.steps))
    psi = parse_formula(f"{CRABBE_GRAPH} in {CRABBE_GRAPH}", "zermod")
    graph = normalize(psi, with_fuel(zermod_rules(), args.fuel), args.fuel)
    text = show(graph.value, "zermod")
    out.emit("crabbe", f"zermod: {graph.outcome} after {graph.steps} steps",
             ("system", "zermod"), ("outcome", graph.outcome), ("steps", graph.steps))
    if graph.normal:
        out.emit("crabbe", text, ("system", "zermod"), ("normal_form", text))
    return 0 if (not naive.normal and graph.normal) else 1
