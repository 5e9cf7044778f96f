"""Concrete syntax of proof terms and proof files.

::

    h                      hypothesis
    fun h => P             implication intro   (fun (h : A) => P annotates)
    P Q                    implication elim
    pair(P, Q)  fst(P)  snd(P)
    inl(P)  inr(P)  case(P, h. Q, k. R)
    tt                     top intro
    abort[A](P)            bottom elim
    gen x:S. P             universal intro
    inst(P, t)             universal elim
    pack[t](P)             existential intro
    unpack(P, x:S, h. Q)   existential elim
    (P : A)                ascription

A proof file holds blocks ``proof NAME : FORMULA in RULESET [given h : A, ...] { TERM }``
where RULESET is ``zermod``, ``arith``, ``naive`` or a quoted rule-file path.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..lang import syntax as S
from ..lang.parser import (
    KEYWORDS, ParseError, TokenStream, elaborate_formula, elaborate_term,
    parse_raw_formula, parse_raw_term, tokenize,
)
from ..lang.printer import show
from ..lang.signatures import ALL_SORTS, get_language
from . import terms as P

PROOF_KEYWORDS = {"fun", "tt", "pair", "fst", "snd", "inl", "inr", "case", "abort",
                  "gen", "inst", "pack", "unpack", "proof", "given"}
RULESET_LANGUAGE = {"zermod": "zermod", "arith": "arith", "naive": "zskol"}


class _ProofParser:
    def __init__(self, stream, sig, known):
        self.s = stream
        self.sig = sig
        self.known = dict(known)   # object variable name -> sort (free or in scope)

    def formula(self):
        raw = parse_raw_formula(self.s, self.sig)
        f, _ = elaborate_formula(raw, self.sig, self.s.text, known=self.known)
        return f

    def term(self):
        raw = parse_raw_term(self.s, self.sig)
        t, _ = elaborate_term(raw, self.sig, self.s.text, known=self.known)
        return t

    def _starts_atomic(self):
        t = self.s.tok
        if t.kind == "id":
            return t.value not in ("fun", "gen") and t.value not in KEYWORDS | {"given", "proof"}
        return t.kind == "op" and t.value == "("

    def proof(self):
        s = self.s
        if s.at("fun", "id"):
            s.next()
            ann = None
            if s.at_op("("):
                s.next()
                h = self._hyp_name()
                s.expect(":")
                ann = self.formula()
                s.expect(")")
            else:
                h = self._hyp_name()
            s.expect("=>")
            return P.Lam(h, self.proof(), ann)
        if s.at("gen", "id"):
            s.next()
            var = self._objvar()
            s.expect(".")
            saved = self.known.get(var.name)
            self.known[var.name] = var.sort
            body = self.proof()
            self._restore(var.name, saved)
            return P.AllI(var, body)
        head = self.atomic()
        while self._starts_atomic() or s.at("fun", "id") or s.at("gen", "id"):
            if s.at("fun", "id") or s.at("gen", "id"):
                head = P.App(head, self.proof())
                break
            head = P.App(head, self.atomic())
        return head

    def _restore(self, name, saved):
        if saved is None:
            self.known.pop(name, None)
        else:
            self.known[name] = saved

    def _hyp_name(self):
        t = self.s.expect_ident("hypothesis name")
        if t.value in PROOF_KEYWORDS:
            self.s.error(f"{t.value!r} is reserved", t.pos)
        return t.value

    def _objvar(self):
        name = self.s.expect_ident("variable").value
        self.s.expect(":")
        st = self.s.expect_ident("sort")
        if st.value not in ALL_SORTS:
            self.s.error(f"unknown sort {st.value!r}", st.pos)
        return S.Var(name, st.value)

    def atomic(self):
        s = self.s
        t = s.tok
        if s.at_op("("):
            s.next()
            p = self.proof()
            if s.at_op(":"):
                s.next()
                f = self.formula()
                s.expect(")")
                return P.Asc(p, f)
            s.expect(")")
            return p
        if t.kind != "id":
            s.error(f"expected a proof term, found {t.value or 'end of input'!r}")
        kw = t.value
        if kw == "tt":
            s.next()
            return P.TT
        if kw in ("fst", "snd", "inl", "inr"):
            s.next()
            s.expect("(")
            p = self.proof()
            s.expect(")")
            return {"fst": P.Fst, "snd": P.Snd, "inl": P.Inl, "inr": P.Inr}[kw](p)
        if kw == "pair":
            s.next()
            s.expect("(")
            a = self.proof()
            s.expect(",")
            b = self.proof()
            s.expect(")")
            return P.Pair(a, b)
        if kw == "case":
            s.next()
            s.expect("(")
            scrut = self.proof()
            s.expect(",")
            h1 = self._hyp_name()
            s.expect(".")
            b1 = self.proof()
            s.expect(",")
            h2 = self._hyp_name()
            s.expect(".")
            b2 = self.proof()
            s.expect(")")
            return P.Case(scrut, h1, b1, h2, b2)
        if kw == "abort":
            s.next()
            s.expect("[")
            f = self.formula()
            s.expect("]")
            s.expect("(")
            p = self.proof()
            s.expect(")")
            return P.BotE(p, f)
        if kw == "inst":
            s.next()
            s.expect("(")
            p = self.proof()
            s.expect(",")
            tm = self.term()
            s.expect(")")
            return P.AllE(p, tm)
        if kw == "pack":
            s.next()
            s.expect("[")
            tm = self.term()
            s.expect("]")
            s.expect("(")
            p = self.proof()
            s.expect(")")
            return P.ExI(tm, p)
        if kw == "unpack":
            s.next()
            s.expect("(")
            p = self.proof()
            s.expect(",")
            var = self._objvar()
            s.expect(",")
            h = self._hyp_name()
            s.expect(".")
            saved = self.known.get(var.name)
            self.known[var.name] = var.sort
            body = self.proof()
            self._restore(var.name, saved)
            s.expect(")")
            return P.ExE(p, var, h, body)
        if kw in PROOF_KEYWORDS or kw in KEYWORDS:
            s.error(f"unexpected {kw!r}")
        s.next()
        return P.Hyp(kw)


def _known_from(formulas):
    out = {}
    for f in formulas:
        for v in S.free_vars(f):
            out.setdefault(v.name, v.sort)
    return out


def parse_proof(text, language="zermod", known=None):
    """Parse a proof term; ``known`` gives sorts of free object variables."""
    sig = get_language(language)
    stream = TokenStream(text)
    p = _ProofParser(stream, sig, known or {}).proof()
    if stream.tok.kind != "eof":
        stream.error(f"unexpected {stream.tok.value!r}")
    return p


@dataclass(frozen=True)
class ProofEntry:
    name: str
    formula: object
    ruleset: str
    given: tuple        # ((name, formula), ...)
    proof: object
    language: str
    line: int = 0


_HEAD_RE = re.compile(
    r'proof\s+([A-Za-z_][A-Za-z0-9_\-]*)\s*:(.*?)\bin\s+(zermod|arith|naive|"[^"]+")\s*(given\b|\{)',
    re.S)


def _language_of(ruleset):
    if ruleset in RULESET_LANGUAGE:
        return RULESET_LANGUAGE[ruleset]
    from ..rewrite.builtin import load_system
    return load_system(ruleset.strip('"')).signature.name


def parse_proof_file(text):
    """All ``proof`` blocks of a proof file, in order."""
    text = _blank_comments(text)
    entries = []
    pos = 0
    while True:
        m = _HEAD_RE.search(text, pos)
        if not m:
            rest = _strip_comments(text[pos:]).strip()
            if rest:
                raise ParseError(f"unexpected text after last proof: {rest[:30]!r}", pos, text)
            return entries
        gap = _strip_comments(text[pos:m.start()]).strip()
        if gap:
            raise ParseError(f"unexpected text {gap[:30]!r}", pos, text)
        ruleset = m.group(3)
        lang = _language_of(ruleset)
        sig = get_language(lang)
        line = text.count("\n", 0, m.start()) + 1
        # the formula is exactly the text between ':' and 'in RULESET'
        fstream = TokenStream(text, _tokens_from(text, m.start(2), m.end(2)))
        raw = parse_raw_formula(fstream, sig)
        if fstream.tok.kind != "eof":
            fstream.error(f"unexpected {fstream.tok.value!r} in the formula")
        stream = TokenStream(text, _tokens_from(text, m.end(3)))
        given_raw = []
        if stream.at("given", "id"):
            stream.next()
            while True:
                h = stream.expect_ident("hypothesis name").value
                stream.expect(":")
                given_raw.append((h, parse_raw_formula(stream, sig)))
                if stream.at_op(","):
                    stream.next()
                    continue
                break
        stream.expect("{")
        given = []
        for h, r in given_raw:
            f, _ = elaborate_formula(r, sig, text)
            given.append((h, f))
        goal, _ = elaborate_formula(raw, sig, text, known=_known_from([g for _, g in given]))
        known = _known_from([goal] + [g for _, g in given])
        pp = _ProofParser(stream, sig, known)
        proof = pp.proof()
        close = stream.expect("}")
        entries.append(ProofEntry(m.group(1), goal, ruleset.strip('"'), tuple(given), proof, lang, line))
        pos = close.pos + 1


def _blank_comments(text):
    # same length, so positions and line numbers survive
    return re.sub(r"#[^\n]*", lambda m: " " * len(m.group()), text)


def _strip_comments(text):
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def _tokens_from(text, start, end=None):
    toks = tokenize(text[start:end])
    from ..lang.parser import Token
    return [Token(t.kind, t.value, t.pos + start) for t in toks]


# ---------------------------------------------------------------------------
# Printing

def show_proof(p, language="zermod") -> str:
    return _show(p, language, 0)


def _show(p, lang, level):
    """``level`` 0: anything; 1: operand of an application."""
    f = lambda q, lv=0: _show(q, lang, lv)
    if isinstance(p, P.Hyp):
        return p.name
    if isinstance(p, P.TopI):
        return "tt"
    if isinstance(p, P.Lam):
        head = p.hyp if p.ann is None else f"({p.hyp} : {show(p.ann, lang)})"
        text = f"fun {head} => {f(p.body)}"
        return text if level == 0 else f"({text})"
    if isinstance(p, P.AllI):
        text = f"gen {p.var.name}:{p.var.sort}. {f(p.body)}"
        return text if level == 0 else f"({text})"
    if isinstance(p, P.App):
        text = f"{_show(p.fn, lang, 2)} {_show(p.arg, lang, 1)}"
        return text if level in (0, 2) else f"({text})"
    if isinstance(p, P.Pair):
        return f"pair({f(p.left)}, {f(p.right)})"
    if isinstance(p, (P.Fst, P.Snd, P.Inl, P.Inr)):
        return f"{type(p).__name__.lower()}({f(p.proof)})"
    if isinstance(p, P.Case):
        return f"case({f(p.scrut)}, {p.left_hyp}. {f(p.left)}, {p.right_hyp}. {f(p.right)})"
    if isinstance(p, P.BotE):
        return f"abort[{show(p.target, lang)}]({f(p.proof)})"
    if isinstance(p, P.AllE):
        return f"inst({f(p.proof)}, {show(p.term, lang) if not isinstance(p.term, S.Var) else p.term.name})"
    if isinstance(p, P.ExI):
        w = p.witness.name if isinstance(p.witness, S.Var) else show(p.witness, lang)
        return f"pack[{w}]({f(p.proof)})"
    if isinstance(p, P.ExE):
        return f"unpack({f(p.proof)}, {p.var.name}:{p.var.sort}, {p.hyp}. {f(p.body)})"
    if isinstance(p, P.Asc):
        return f"({f(p.proof)} : {show(p.formula, lang)})"
    raise TypeError(f"not a proof term: {p!r}")


def show_entry(e: ProofEntry) -> str:
    rs = e.ruleset if e.ruleset in RULESET_LANGUAGE else f'"{e.ruleset}"'
    given = ""
    if e.given:
        given = " given " + ", ".join(f"{h} : {show(g, e.language)}" for h, g in e.given)
    return f"proof {e.name} : {show(e.formula, e.language)} in {rs}{given} {{ {show_proof(e.proof, e.language)} }}"
