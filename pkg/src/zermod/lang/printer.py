"""ASCII (and optional Unicode) printing, inverse to :mod:`.parser`."""
from __future__ import annotations

from . import syntax as S
from .signatures import get_language

_INFIX_PREDS = ("=", "<", "~~", "in")
AND, OR = "/\\", "\\/"
_INFIX_FUNS = {"+": 0, "*": 1, "/": 2}

_UNICODE = {
    "forall": "∀", "exists": "∃", "->": "⊃", "/\\": "∧",
    "\\/": "∨", "~": "¬", "~~": "≈", "in": "∈",
    "true": "⊤", "false": "⊥", "<->": "⇔",
}


class _Printer:
    def __init__(self, sig, unicode=False):
        self.sig = sig
        self.uni = unicode

    def op(self, s):
        return _UNICODE.get(s, s) if self.uni else s

    # formulas: levels 0 iff, 1 imp, 2 or, 3 and, 4 unary/atomic
    def formula(self, f, level=0):
        if isinstance(f, S.Top):
            return self.op("true")
        if isinstance(f, S.Bot):
            return self.op("false")
        if isinstance(f, S.Atom):
            return self.atom(f, level)
        if isinstance(f, S.Meta):
            return f.name
        if isinstance(f, S.MetaInst):
            inner = ", ".join(f"{k} := {self.term(t)}" for k, t in f.pairs)
            return f"{f.name}[{inner}]"
        if isinstance(f, S.QUANTIFIERS):
            q = self.op("forall" if isinstance(f, S.Forall) else "exists")
            body = f.body
            if isinstance(body, (S.Atom, S.Top, S.Bot, S.Meta, S.MetaInst, S.Forall, S.Exists)) \
                    or _is_neg(body):
                btxt = self.formula(body, 4 if not isinstance(body, S.QUANTIFIERS) else 0)
            else:
                btxt = "(" + self.formula(body, 0) + ")"
            sep = "" if self.uni else " "
            text = f"{q}{sep}{f.var.name}:{f.var.sort}. {btxt}"
            return text if level == 0 else f"({text})"
        if _is_neg(f):
            return self.neg(f.left)
        if isinstance(f, S.And):
            parts = S.iff_parts(f)
            if parts is not None:
                text = f"{self.formula(parts[0], 1)} {self.op('<->')} {self.formula(parts[1], 1)}"
                return text if level <= 0 else f"({text})"
            text = f"{self.formula(f.left, 3)} {self.op(AND)} {self.formula(f.right, 4)}"
            return text if level <= 3 else f"({text})"
        if isinstance(f, S.Or):
            text = f"{self.formula(f.left, 2)} {self.op(OR)} {self.formula(f.right, 3)}"
            return text if level <= 2 else f"({text})"
        if isinstance(f, S.Imp):
            text = f"{self.formula(f.left, 2)} {self.op('->')} {self.formula(f.right, 1)}"
            return text if level <= 1 else f"({text})"
        raise TypeError(f"not a formula: {f!r}")

    def neg(self, a):
        if _is_neg(a):
            inner = self.neg(a.left)
            return f"{self.op('~')} {inner}"
        if isinstance(a, S.Atom) and not (a.pred in _INFIX_PREDS and len(a.args) == 2):
            return self.op("~") + self.atom(a, 4)
        if isinstance(a, (S.Top, S.Bot, S.Meta, S.MetaInst)):
            return self.op("~") + self.formula(a, 4)
        return self.op("~") + "(" + self.formula(a, 0) + ")"

    def atom(self, a, level):
        if a.pred in _INFIX_PREDS and len(a.args) == 2 and a.pred in self.sig.predicates:
            return f"{self.term(a.args[0])} {self.op(a.pred)} {self.term(a.args[1])}"
        if not a.args:
            return a.pred
        return f"{a.pred}({', '.join(self.term(t) for t in a.args)})"

    # terms: levels 0 '+', 1 '*', 2 '/', 3 primary
    def term(self, t, level=0):
        if isinstance(t, S.Var):
            return t.name
        if isinstance(t, S.SeqMeta):
            return f"{t.name}..."
        if isinstance(t, S.App):
            if self.sig.numerals and t.fn in ("0", "S"):
                n = S.as_numeral(t)
                if n is not None:
                    return str(n)
            if t.fn in _INFIX_FUNS and len(t.args) == 2 and t.fn in self.sig.functions:
                lv = _INFIX_FUNS[t.fn]
                text = f"{self.term(t.args[0], lv)} {t.fn} {self.term(t.args[1], lv + 1)}"
                return text if level <= lv else f"({text})"
            if not t.args and self.sig.functions.get(t.fn, (None,))[0] == ():
                return t.fn
            return f"{t.fn}({', '.join(self.term(a) for a in t.args)})"
        if isinstance(t, S.Bind):
            return self.bind(t)
        raise TypeError(f"not a term: {t!r}")

    def body(self, b):
        return b.name if isinstance(b, S.Meta) else self.formula(b, 0)

    def bind(self, t):
        if t.family == "sep":
            x = t.bound[0]
            return f"{{{x.name} {self.op('in')} {self.term(t.args[0])} | {self.body(t.body)}}}"
        if t.family == "cabs":
            return f"{{{{{t.bound[0].name} | {self.body(t.body)}}}}}"
        fam = self.sig.families.get(t.family)
        default = fam.param_sorts[0] if fam else None
        head = ", ".join(v.name for v in t.bound)
        if isinstance(t.params, S.SeqMeta):
            head += f"; {t.params.name}..."
        elif t.params:
            ps = [v.name if v.sort == default else f"{v.name}:{v.sort}" for v in t.params]
            head += "; " + ", ".join(ps)
        args = ", ".join(self.term(a) for a in t.args)
        return f"{t.family}[{head} | {self.body(t.body)}]({args})"


def _is_neg(f):
    return isinstance(f, S.Imp) and isinstance(f.right, S.Bot)


def show(obj, lang="zermod", unicode=False) -> str:
    """Render a term or formula; a top-level variable carries its sort."""
    p = _Printer(get_language(lang or "zermod"), unicode)
    if isinstance(obj, S.Var):
        return f"{obj.name}:{obj.sort}"
    if S.is_term(obj) or isinstance(obj, S.SeqMeta):
        return p.term(obj)
    return p.formula(obj)


def show_term(obj, lang="zermod", unicode=False) -> str:
    return _Printer(get_language(lang or "zermod"), unicode).term(obj)
