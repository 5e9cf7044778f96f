"""Zskol to Zclass: terms become membership formulas in a fresh variable."""
from __future__ import annotations

from ..lang import syntax as S
from ..lang.signatures import ZCLASS
from .common import SET, Fresh, Trace, atom, elem, eq
from .zskol import expand

CORE_PREDICATES = ("=", "in", "mem")


def circle(phi, trace=None, fresh=None):
    """``P°`` of a Zskol formula; abbreviations are unfolded first."""
    phi = expand(phi)
    fr = fresh if fresh is not None else Fresh(phi)
    fr.reserve(phi)
    return _Circle(fr, Trace(trace)).formula(phi)


def in_circle(z, t, trace=None, fresh=None):
    """``z in° t`` for a Zskol set term ``t``."""
    t = expand(t)
    fr = fresh if fresh is not None else Fresh(t, z)
    fr.reserve(t, z)
    return _Circle(fr, Trace(trace)).member(z, t)


def mem_circle(z, T, trace=None, fresh=None):
    T = expand(T)
    fr = fresh if fresh is not None else Fresh(T, z)
    fr.reserve(T, z)
    return _Circle(fr, Trace(trace)).mem(z, T)


class _Circle:
    def __init__(self, fr, tr):
        self.fr = fr
        self.tr = tr

    def member(self, z, t):
        tr, fr = self.tr, self.fr
        if isinstance(t, S.Var):
            tr("in-var")
            return elem(z, t)
        if isinstance(t, S.App):
            if t.fn == "Union":
                tr("in-Union")
                y = fr.var("y")
                return S.Exists(y, S.And(elem(z, y), self.member(y, t.args[0])))
            if t.fn == "Pair":
                tr("in-Pair")
                return S.Or(self.formula(eq(z, t.args[0])), self.formula(eq(z, t.args[1])))
            if t.fn == "Pow":
                tr("in-Pow")
                y = fr.var("y")
                return S.Forall(y, S.Imp(elem(y, z), self.member(y, t.args[0])))
            if t.fn == "Nats":
                tr("in-Nats")
                return atom("Nat", z)
            if t.fn == "TC":
                tr("in-TC")
                x, y1, y2, y = fr.var("x"), fr.var("y1"), fr.var("y2"), fr.var("y")
                closed = S.Forall(y1, S.Forall(y2, S.Imp(S.And(elem(y1, y2), elem(y2, x)), elem(y1, x))))
                covers = S.Forall(y, S.Imp(self.member(y, t.args[0]), elem(y, x)))
                return S.Forall(x, S.Imp(S.And(closed, covers), elem(z, x)))
            raise ValueError(f"{t.fn} is not a Zskol term former")
        if isinstance(t, S.Bind) and t.family == "sep":
            tr("in-sep")
            x = t.bound[0]
            return S.And(self.member(z, t.args[0]), S.substitute(self.formula(t.body), {x: z}))
        raise TypeError(f"not a Zskol set term: {t!r}")

    def mem(self, z, T):
        if isinstance(T, S.Var):
            self.tr("mem-var")
            return atom("mem", z, T)
        if isinstance(T, S.Bind) and T.family == "cabs":
            self.tr("mem-cabs")
            return S.substitute(self.formula(T.body), {T.bound[0]: z})
        raise TypeError(f"not a Zskol class term: {T!r}")

    def formula(self, phi):
        tr, fr = self.tr, self.fr
        if isinstance(phi, (S.Top, S.Bot)):
            return phi
        if isinstance(phi, S.BINARY):
            tr(type(phi).__name__.lower())
            return type(phi)(self.formula(phi.left), self.formula(phi.right))
        if isinstance(phi, S.QUANTIFIERS):
            tr(type(phi).__name__.lower())
            return type(phi)(phi.var, self.formula(phi.body))
        if not isinstance(phi, S.Atom):
            raise TypeError(f"not a Zskol formula: {phi!r}")
        if not phi.args:
            return phi
        if phi.pred == "=":
            tr("eq")
            t, u = phi.args
            z = fr.var("z")
            return S.Forall(z, S.Iff(self.member(z, t), self.member(z, u)))
        if phi.pred == "in":
            tr("in")
            t, u = phi.args
            x = fr.var("x")
            return S.Exists(x, S.And(self.formula(eq(x, t)), self.member(x, u)))
        if phi.pred == "mem":
            tr("mem")
            t, U = phi.args
            x = fr.var("x")
            return S.Exists(x, S.And(self.formula(eq(x, t)), self.mem(x, U)))
        if phi.pred in ZCLASS.predicates:
            return self.defined(phi)
        raise ValueError(f"{phi.pred} is not a Zskol predicate")

    def defined(self, phi):
        """Defined predicates keep their name; a non-variable set argument
        ``t`` is replaced by a variable ``x`` with ``(x = t)°``."""
        ranks = ZCLASS.predicates[phi.pred]
        args, pending = [], []
        for a, sort in zip(phi.args, ranks):
            if isinstance(a, S.Var) or sort != SET:
                args.append(a)
                continue
            x = self.fr.var("x")
            pending.append((x, a))
            args.append(x)
        self.tr("defined" if not pending else "defined-args")
        out = S.Atom(phi.pred, tuple(args))
        if not pending:
            return out
        eqs = [self.formula(eq(x, a)) for x, a in pending]
        body = S.conj(*eqs, out)
        for x, _ in reversed(pending):
            body = S.Exists(x, body)
        return body
