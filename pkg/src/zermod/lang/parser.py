"""Tokenizer and parser for the ASCII object-language grammar.

Parsing happens in two phases.  The recursive-descent parser builds an
untyped raw tree (tagged tuples); :class:`_Elaborator` then resolves scopes
and sorts against a signature.  Free variables, unannotated quantifier
variables and unannotated binder parameters get the sort demanded by the
first typed position they occur in, or the language default.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from . import syntax as S
from .signatures import ALL_SORTS, Signature, get_language


class ParseError(ValueError):
    def __init__(self, message, pos=None, text=None):
        self.pos = pos
        where = ""
        if pos is not None and text is not None:
            line = text.count("\n", 0, pos) + 1
            col = pos - (text.rfind("\n", 0, pos) + 1) + 1
            where = f" at line {line}, column {col}"
        elif pos is not None:
            where = f" at offset {pos}"
        super().__init__(message + where)
        self.bare_message = message


class SortError(ValueError):
    def __init__(self, message, symbol=None, path=()):
        super().__init__(message)
        self.symbol = symbol
        self.path = path


@dataclass(frozen=True, slots=True)
class Token:
    kind: str   # 'id', 'num', 'op', 'eof'
    value: str
    pos: int


_OPS = ["-->", "<->", "...", "->", "/\\", "\\/", "~~", ":=", "=>",
        "(", ")", "[", "]", "{", "}", ",", ";", "|", ".", ":", "=", "<", ">",
        "+", "*", "/", "~", "@", "!"]
_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<comment>#[^\n]*)"
    r"|(?P<id>[A-Za-z_][A-Za-z0-9_']*)"
    r"|(?P<num>[0-9]+)"
    r"|(?P<op>" + "|".join(re.escape(o) for o in _OPS) + ")"
)

KEYWORDS = {"forall", "exists", "true", "false", "in"}
FAMILIES = ("compr", "nclass", "nrel")


def tokenize(text: str):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind in ("id", "num", "op"):
            out.append(Token(kind, m.group(), pos))
        pos = m.end()
    out.append(Token("eof", "", len(text)))
    return out


class TokenStream:
    def __init__(self, text, tokens=None):
        self.text = text
        self.toks = tokens if tokens is not None else tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def peek(self, k=1):
        j = min(self.i + k, len(self.toks) - 1)
        return self.toks[j]

    def at(self, value, kind=None):
        t = self.tok
        return t.value == value and (kind is None or t.kind == kind) and t.kind != "eof"

    def at_op(self, value):
        return self.tok.kind == "op" and self.tok.value == value

    def next(self):
        t = self.tok
        if t.kind != "eof":
            self.i += 1
        return t

    def expect(self, value):
        t = self.tok
        if t.value != value or t.kind == "eof":
            self.error(f"expected {value!r}, found {t.value or 'end of input'!r}")
        return self.next()

    def expect_ident(self, what="identifier"):
        t = self.tok
        if t.kind != "id" or t.value in KEYWORDS:
            self.error(f"expected {what}, found {t.value or 'end of input'!r}")
        return self.next()

    def error(self, msg, pos=None):
        raise ParseError(msg, self.tok.pos if pos is None else pos, self.text)


# ---------------------------------------------------------------------------
# Raw trees

class _RawParser:
    """Builds raw trees.  ``sig`` is consulted only to tell predicates from
    functions and to enable the infix operators the language declares."""

    def __init__(self, stream: TokenStream, sig: Signature, rule_mode=False):
        self.s = stream
        self.sig = sig
        self.rule_mode = rule_mode
        self.infix_preds = [p for p in ("=", "<", "~~", "in") if p in sig.predicates]

    # formulas ------------------------------------------------------------
    def formula(self):
        left = self.imp()
        if self.s.at_op("<->"):
            self.s.next()
            right = self.imp()
            return ("iff", left, right)
        return left

    def imp(self):
        left = self.disj()
        if self.s.at_op("->"):
            self.s.next()
            return ("imp", left, self.imp())
        return left

    def disj(self):
        left = self.conj()
        while self.s.at_op("\\/"):
            self.s.next()
            left = ("or", left, self.conj())
        return left

    def conj(self):
        left = self.unary()
        while self.s.at_op("/\\"):
            self.s.next()
            left = ("and", left, self.unary())
        return left

    def unary(self):
        s = self.s
        if s.at_op("~"):
            s.next()
            return ("not", self.unary())
        if s.at_op("~~"):
            s.next()
            return ("not", ("not", self.unary()))
        if s.tok.kind == "id" and s.tok.value in ("forall", "exists"):
            q = s.next().value
            pos = s.tok.pos
            name = s.expect_ident("bound variable").value
            annot = self.opt_sort()
            s.expect(".")
            return (q, name, annot, self.formula(), pos)
        return self.primary()

    def opt_sort(self):
        if self.s.at_op(":"):
            self.s.next()
            t = self.s.expect_ident("sort")
            if t.value not in ALL_SORTS:
                self.s.error(f"unknown sort {t.value!r}", t.pos)
            return t.value
        return None

    def primary(self):
        s = self.s
        t = s.tok
        if t.kind == "id" and t.value == "true":
            s.next()
            return ("top",)
        if t.kind == "id" and t.value == "false":
            s.next()
            return ("bot",)
        if s.at_op("("):
            save = s.i
            first = None
            try:
                s.next()
                f = self.formula()
                s.expect(")")
                if not self._at_infix_pred():
                    return f
            except ParseError as e:
                first = e
            s.i = save
            try:
                return self.atom_from_term()
            except ParseError as e:
                # report whichever reading got further into the input
                if first is not None and (first.pos or 0) > (e.pos or 0):
                    raise first from None
                raise
        if t.kind == "id" and t.value not in KEYWORDS:
            nxt = s.peek()
            if t.value in self.sig.predicates and nxt.value == "(" and t.value not in self.infix_preds:
                s.next()
                args = self.args()
                return ("atom", t.value, args, t.pos)
            if (t.value not in self.sig.functions and t.value not in FAMILIES
                    and nxt.value == "[" and self.rule_mode):
                s.next()
                return self.metainst(t)
            if (t.value not in self.sig.functions and t.value not in FAMILIES
                    and nxt.value == "(" and nxt.kind == "op"):
                # Undeclared predicate symbol, e.g. a schematic P(x).
                s.next()
                args = self.args()
                if self._at_infix_pred():
                    s.error(f"unknown function symbol {t.value!r}", t.pos)
                return ("atom", t.value, args, t.pos)
        return self.atom_from_term()

    def _at_infix_pred(self):
        t = self.s.tok
        return t.value in self.infix_preds and (t.kind == "op" or t.value == "in")

    def atom_from_term(self):
        s = self.s
        pos = s.tok.pos
        left = self.term()
        if self._at_infix_pred():
            pred = s.next().value
            right = self.term()
            return ("atom", pred, [left, right], pos)
        if left[0] == "name" and left[2] is None:
            return ("letter", left[1], pos)
        s.error("expected a formula", pos)

    def metainst(self, tok):
        s = self.s
        s.expect("[")
        pairs = []
        while not s.at_op("]"):
            k = s.expect_ident("binder-local name").value
            s.expect(":=")
            pairs.append((k, self.term()))
            if not s.at_op("]"):
                s.expect(",")
        s.expect("]")
        return ("metainst", tok.value, pairs, tok.pos)

    # terms ---------------------------------------------------------------
    def args(self):
        s = self.s
        s.expect("(")
        out = []
        if s.at_op(")"):
            s.next()
            return out
        while True:
            out.append(self.arg())
            if s.at_op(","):
                s.next()
                continue
            s.expect(")")
            return out

    def arg(self):
        s = self.s
        if self.rule_mode and s.tok.kind == "id" and s.peek().value == "...":
            name = s.next().value
            s.next()
            return ("seq", name)
        return self.term()

    def term(self):
        left = self.product()
        while self.s.at_op("+") and "+" in self.sig.functions:
            pos = self.s.next().pos
            left = ("app", "+", [left, self.product()], pos)
        return left

    def product(self):
        left = self.slash()
        while self.s.at_op("*") and "*" in self.sig.functions:
            pos = self.s.next().pos
            left = ("app", "*", [left, self.slash()], pos)
        return left

    def slash(self):
        left = self.tprimary()
        while self.s.at_op("/") and "/" in self.sig.functions:
            pos = self.s.next().pos
            left = ("app", "/", [left, self.tprimary()], pos)
        return left

    def tprimary(self):
        s = self.s
        t = s.tok
        if t.kind == "num":
            s.next()
            return ("num", int(t.value), t.pos)
        if s.at_op("("):
            s.next()
            inner = self.term()
            s.expect(")")
            return inner
        if s.at_op("{"):
            return self.brace_term()
        if t.kind == "id" and t.value not in KEYWORDS:
            if t.value in FAMILIES and s.peek().value == "[":
                return self.family_term()
            s.next()
            if s.at_op("(") :
                return ("app", t.value, self.args(), t.pos)
            annot = None
            if s.at_op(":") and s.peek().kind == "id" and s.peek().value in ALL_SORTS:
                s.next()
                annot = s.next().value
            return ("name", t.value, annot, t.pos)
        s.error(f"expected a term, found {t.value or 'end of input'!r}")

    def brace_term(self):
        s = self.s
        pos = s.expect("{").pos
        if s.at_op("{"):
            s.next()
            name = s.expect_ident("bound variable").value
            annot = self.opt_sort()
            s.expect("|")
            body = self.body()
            s.expect("}")
            s.expect("}")
            return ("cabs", name, annot, body, pos)
        name = s.expect_ident("bound variable").value
        annot = self.opt_sort()
        if not s.at("in"):
            s.error("expected 'in' in separation term")
        s.next()
        over = self.term()
        s.expect("|")
        body = self.body()
        s.expect("}")
        return ("sep", name, annot, over, body, pos)

    def body(self):
        s = self.s
        if (self.rule_mode and s.tok.kind == "id" and s.tok.value not in KEYWORDS
                and s.peek().value in ("]", "}")):
            name = s.next().value
            return ("meta", name)
        return self.formula()

    def family_term(self):
        s = self.s
        fam_tok = s.next()
        s.expect("[")
        bound = []
        while True:
            name = s.expect_ident("bound variable").value
            bound.append((name, self.opt_sort()))
            if s.at_op(","):
                s.next()
                continue
            break
        params = []
        if s.at_op(";"):
            s.next()
            if self.rule_mode and s.tok.kind == "id" and s.peek().value == "...":
                params = ("seq", s.next().value)
                s.next()
            else:
                while not s.at_op("|"):
                    name = s.expect_ident("parameter").value
                    params.append((name, self.opt_sort()))
                    if not s.at_op("|"):
                        s.expect(",")
        s.expect("|")
        body = self.body()
        s.expect("]")
        args = self.args()
        return ("family", fam_tok.value, bound, params, body, args, fam_tok.pos)


# ---------------------------------------------------------------------------
# Elaboration

class _Elaborator:
    def __init__(self, sig: Signature, text: str, known=None, metas=None):
        self.sig = sig
        self.text = text
        self.free = dict(known or {})      # free name -> sort
        self.inferred = {}                 # id(raw binder entry) -> sort
        self.metas = metas if metas is not None else {}   # meta name -> info dict
        self.collect = True

    def err(self, msg, pos=None, symbol=None):
        if pos is not None:
            e = ParseError(msg, pos, self.text)
            raise SortError(str(e), symbol)
        raise SortError(msg, symbol)

    def run_formula(self, raw):
        self.collect = True
        self._formula(raw, {})
        self.collect = False
        return self._formula(raw, {})

    def run_term(self, raw, expected=None):
        self.collect = True
        self._term(raw, {}, expected)
        self.collect = False
        return self._term(raw, {}, expected)

    # scope entries: name -> (Var or None while collecting, key)
    def _note(self, key, sort, pos, name):
        """Record a sort constraint for a binder-bound or free name."""
        if sort is None:
            return
        prev = self.inferred.get(key)
        if prev is None:
            self.inferred[key] = sort
        elif prev != sort:
            self.err(f"variable {name!r} used at sorts {prev} and {sort}", pos, name)

    def _binder_sort(self, key, annot):
        if annot is not None:
            return annot
        return self.inferred.get(key, self.sig.default_sort)

    def _name(self, raw, scope, expected):
        _, name, annot, pos = raw
        if name in scope:
            entry = scope[name]
            if self.collect:
                key, fixed = entry
                if fixed is not None:
                    if expected is not None and expected != fixed:
                        self.err(f"variable {name!r} has sort {fixed}, expected {expected}", pos, name)
                else:
                    self._note(key, annot, pos, name)
                    self._note(key, expected, pos, name)
                return None
            var = entry
            if expected is not None and var.sort != expected:
                self.err(f"variable {name!r} has sort {var.sort}, expected {expected}", pos, name)
            if annot is not None and annot != var.sort:
                self.err(f"variable {name!r} annotated {annot} but bound at {var.sort}", pos, name)
            return var
        if self.sig.functions.get(name, (None, None))[0] == ():
            return self._app(("app", name, [], pos), scope, expected)
        if self.collect:
            for s in (annot, expected):
                if s is None:
                    continue
                prev = self.free.get(name)
                if prev is None:
                    self.free[name] = s
                elif prev != s:
                    self.err(f"variable {name!r} used at sorts {prev} and {s}", pos, name)
            return None
        sort = self.free.setdefault(name, self.sig.default_sort)
        if expected is not None and sort != expected:
            self.err(f"variable {name!r} has sort {sort}, expected {expected}", pos, name)
        return S.Var(name, sort)

    def _app(self, raw, scope, expected):
        _, fn, args, pos = raw
        rank = self.sig.functions.get(fn)
        if rank is None:
            self.err(f"unknown function symbol {fn!r}", pos, fn)
        arg_sorts, result = rank
        if len(args) != len(arg_sorts):
            self.err(f"{fn} expects {len(arg_sorts)} argument(s), got {len(args)}", pos, fn)
        if expected is not None and result != expected:
            self.err(f"{fn}(...) has sort {result}, expected {expected}", pos, fn)
        out = [self._term(a, scope, s) for a, s in zip(args, arg_sorts)]
        return None if self.collect else S.App(fn, tuple(out))

    def _term(self, raw, scope, expected):
        tag = raw[0]
        if tag == "name":
            return self._name(raw, scope, expected)
        if tag == "app":
            return self._app(raw, scope, expected)
        if tag == "num":
            n, pos = raw[1], raw[2]
            if self.sig.numerals:
                if expected is not None and expected != self.sig.functions["0"][1]:
                    self.err(f"numeral has sort {self.sig.functions['0'][1]}, expected {expected}", pos)
                return None if self.collect else S.numeral(n)
            if str(n) in self.sig.functions and self.sig.functions[str(n)][0] == ():
                return self._app(("app", str(n), [], pos), scope, expected)
            self.err(f"numerals are not part of language {self.sig.name}", pos)
        if tag == "family":
            return self._family(raw, scope, expected)
        if tag in ("sep", "cabs"):
            return self._open_binder(raw, scope, expected)
        if tag == "seq":
            self.err("sequence metavariable outside a rule binder")
        raise AssertionError(tag)

    def _family(self, raw, scope, expected):
        _, fam, bound, params, body, args, pos = raw
        fsig = self.sig.families.get(fam)
        if fsig is None:
            self.err(f"family {fam!r} is not part of language {self.sig.name}", pos, fam)
        if expected is not None and fsig.result != expected:
            self.err(f"{fam}[...] has sort {fsig.result}, expected {expected}", pos, fam)
        if len(bound) != len(fsig.bound):
            self.err(f"{fam} binds {len(fsig.bound)} variable(s), got {len(bound)}", pos, fam)
        inner = dict(scope)
        bvars = []
        for (name, annot), s in zip(bound, fsig.bound):
            if annot is not None and annot != s:
                self.err(f"{fam} binds {name} at sort {s}, not {annot}", pos, fam)
            v = S.Var(name, s)
            bvars.append(v)
            inner[name] = (None, s) if self.collect else v
        seq = isinstance(params, tuple) and params and params[0] == "seq"
        pvars = []
        if seq:
            pvars = S.SeqMeta(params[1])
        else:
            for name, annot in params:
                key = ("param", id(raw), name)
                if annot is not None and annot not in fsig.param_sorts:
                    self.err(f"{fam} parameters may not have sort {annot}", pos, fam)
                if self.collect:
                    inner[name] = (key, annot)
                else:
                    s = annot or self.inferred.get(key, fsig.param_sorts[0])
                    if s not in fsig.param_sorts:
                        s = fsig.param_sorts[0]
                    v = S.Var(name, s)
                    pvars.append(v)
                    inner[name] = v
        if body[0] == "meta":
            fbody = S.Meta(body[1])
            self.metas[body[1]] = {"family": fam, "bound": {v.name: v.sort for v in bvars}}
        else:
            fbody = self._formula(body, inner)
        # arguments
        if seq:
            if not args or args[0] != ("seq", params[1]):
                self.err(f"{fam} pattern must pass {params[1]}... as leading arguments", pos, fam)
            rest = args[1:]
            if len(rest) != len(fsig.extra):
                self.err(f"{fam} expects {len(fsig.extra)} trailing argument(s)", pos, fam)
            out = [S.SeqMeta(params[1])]
            out += [self._term(a, scope, s) for a, s in zip(rest, fsig.extra)]
        else:
            if len(args) != len(params) + len(fsig.extra):
                self.err(f"{fam} expects {len(params) + len(fsig.extra)} argument(s), got {len(args)}",
                         pos, fam)
            out = []
            n = len(params)
            for k, a in enumerate(args):
                if k < n:
                    want = None if self.collect else pvars[k].sort
                    if self.collect:
                        # parameter sort follows the argument when unannotated
                        got = self._arg_sort_hint(a, scope)
                        key = ("param", id(raw), params[k][0])
                        if params[k][1] is None and got is not None:
                            self._note(key, got, pos, params[k][0])
                    out.append(self._term(a, scope, want))
                else:
                    out.append(self._term(a, scope, fsig.extra[k - n]))
        if self.collect:
            return None
        params_out = pvars if seq else tuple(pvars)
        return S.Bind(fam, tuple(bvars), params_out, fbody, tuple(out))

    def _arg_sort_hint(self, raw, scope):
        tag = raw[0]
        if tag == "name":
            name = raw[1]
            if raw[2] is not None:
                return raw[2]
            if name in scope:
                entry = scope[name]
                return entry[1] if isinstance(entry, tuple) else entry.sort
            if self.sig.functions.get(name, (None, None))[0] == ():
                return self.sig.functions[name][1]
            return self.free.get(name)
        if tag == "app":
            rank = self.sig.functions.get(raw[1])
            return rank[1] if rank else None
        if tag == "num" and self.sig.numerals:
            return self.sig.functions["0"][1]
        if tag == "family":
            fsig = self.sig.families.get(raw[1])
            return fsig.result if fsig else None
        return None

    def _open_binder(self, raw, scope, expected):
        fam = raw[0]
        fsig = self.sig.families.get(fam)
        pos = raw[-1]
        if fsig is None:
            self.err(f"{'separation' if fam == 'sep' else 'class abstraction'} is not part of "
                     f"language {self.sig.name}", pos, fam)
        if expected is not None and fsig.result != expected:
            self.err(f"{fam} term has sort {fsig.result}, expected {expected}", pos, fam)
        name, annot = raw[1], raw[2]
        s = fsig.bound[0]
        if annot is not None and annot != s:
            self.err(f"{fam} binds {name} at sort {s}", pos, fam)
        v = S.Var(name, s)
        inner = dict(scope)
        inner[name] = (None, s) if self.collect else v
        if fam == "sep":
            over = self._term(raw[3], scope, fsig.extra[0])
            body_raw = raw[4]
            args = (over,)
        else:
            body_raw = raw[3]
            args = ()
        if body_raw[0] == "meta":
            body = S.Meta(body_raw[1])
            self.metas[body_raw[1]] = {"family": fam, "bound": {name: s}}
        else:
            body = self._formula(body_raw, inner)
        if self.collect:
            return None
        return S.Bind(fam, (v,), (), body, args)

    def _formula(self, raw, scope):
        tag = raw[0]
        if tag == "top":
            return S.TOP
        if tag == "bot":
            return S.BOT
        if tag in ("and", "or", "imp"):
            l = self._formula(raw[1], scope)
            r = self._formula(raw[2], scope)
            if self.collect:
                return None
            return {"and": S.And, "or": S.Or, "imp": S.Imp}[tag](l, r)
        if tag == "iff":
            l = self._formula(raw[1], scope)
            r = self._formula(raw[2], scope)
            return None if self.collect else S.Iff(l, r)
        if tag == "not":
            b = self._formula(raw[1], scope)
            return None if self.collect else S.Not(b)
        if tag in ("forall", "exists"):
            _, name, annot, body, pos = raw
            key = ("q", id(raw))
            if self.collect:
                inner = dict(scope)
                inner[name] = (key, annot)
                self._formula(body, inner)
                return None
            v = S.Var(name, self._binder_sort(key, annot))
            inner = dict(scope)
            inner[name] = v
            b = self._formula(body, inner)
            return (S.Forall if tag == "forall" else S.Exists)(v, b)
        if tag == "atom":
            _, pred, args, pos = raw
            rank = self.sig.predicates.get(pred)
            if rank is None:
                if not self.sig.allow_letters or args:
                    self.err(f"unknown predicate symbol {pred!r}", pos, pred)
                return None if self.collect else S.Atom(pred, ())
            if len(args) != len(rank):
                self.err(f"{pred} expects {len(rank)} argument(s), got {len(args)}", pos, pred)
            out = [self._term(a, scope, s) for a, s in zip(args, rank)]
            return None if self.collect else S.Atom(pred, tuple(out))
        if tag == "letter":
            _, name, pos = raw
            if name in self.metas or (name in scope and False):
                return None if self.collect else S.Meta(name)
            if name in scope or name in self.free:
                self.err(f"variable {name!r} used as a formula", pos, name)
            if not self.sig.allow_letters:
                self.err(f"unknown propositional letter {name!r}", pos, name)
            return None if self.collect else S.Atom(name, ())
        if tag == "metainst":
            _, name, pairs, pos = raw
            info = self.metas.get(name)
            if info is None:
                self.err(f"metavariable {name!r} is not bound by the left-hand side", pos, name)
            out = []
            for k, t in pairs:
                if k not in info["bound"]:
                    self.err(f"{k!r} is not a bound name of {name}'s binder", pos, name)
                out.append((k, self._term(t, scope, info["bound"][k])))
            return None if self.collect else S.MetaInst(name, tuple(out))
        if tag == "meta":
            return None if self.collect else S.Meta(raw[1])
        raise AssertionError(tag)


# ---------------------------------------------------------------------------
# Public entry points

def parse_formula(text: str, language="zermod", known=None):
    sig = get_language(language)
    stream = TokenStream(text)
    raw = _RawParser(stream, sig).formula()
    if stream.tok.kind != "eof":
        stream.error(f"unexpected {stream.tok.value!r}")
    return _Elaborator(sig, text, known).run_formula(raw)


def parse_term(text: str, language="zermod", known=None, expected=None):
    sig = get_language(language)
    stream = TokenStream(text)
    raw = _RawParser(stream, sig).term()
    if stream.tok.kind != "eof":
        stream.error(f"unexpected {stream.tok.value!r}")
    return _Elaborator(sig, text, known).run_term(raw, expected)


def parse(text: str, language="zermod"):
    """Parse a formula, or a term when the text is not a formula."""
    try:
        return parse_formula(text, language)
    except ParseError as ferr:
        try:
            return parse_term(text, language)
        except ParseError:
            raise ferr from None
        except SortError:
            raise
    except SortError as serr:
        try:
            return parse_term(text, language)
        except (ParseError, SortError):
            raise serr from None


def parse_raw_formula(stream: TokenStream, sig: Signature, rule_mode=False):
    return _RawParser(stream, sig, rule_mode).formula()


def parse_raw_term(stream: TokenStream, sig: Signature, rule_mode=False):
    return _RawParser(stream, sig, rule_mode).term()


def elaborate_formula(raw, sig, text, known=None, metas=None):
    el = _Elaborator(sig, text, known, metas)
    out = el.run_formula(raw)
    return out, el.free


def elaborate_term(raw, sig, text, known=None, metas=None, expected=None):
    el = _Elaborator(sig, text, known, metas)
    out = el.run_term(raw, expected)
    return out, el.free
