"""Zermod to Zskol.

The output keeps the Zskol abbreviations (``opair``, ``pi1``, ``Car``,
``prod``, ``Clos`` ...) so that it reads like the translation tables;
``translate.zskol.expand`` unfolds them.
"""
from __future__ import annotations

from ..lang import syntax as S
from .common import (
    CLASS, NATS, ONE, SET, ZERO, Fresh, Trace, atom, cabs, car, cup, elem, eq, fn,
    opair, pi1, pi2, prod, sep, sing,
)

SORT_IMAGE = {"G": SET, "N": SET, "C": CLASS, "R": CLASS}


def relativization_predicates(sort, var=None):
    """``s*(x)`` for a Zermod sort ``s``."""
    if sort not in SORT_IMAGE:
        raise ValueError(f"unknown Zermod sort {sort!r}")
    v = var if var is not None else S.Var("c" if sort == "R" else "x", SORT_IMAGE[sort])
    if sort == "G":
        return atom("Rgraph", v)
    if sort in ("N", "C"):
        return S.TOP
    fr = Fresh(v)
    x, y, z = fr.var("x"), fr.var("y"), fr.var("z")
    return S.Forall(x, S.Imp(atom("mem", x, v), S.Exists(y, S.Exists(z, eq(x, opair(y, z))))))


def star(obj, trace=None):
    """Translate a Zermod term or formula."""
    return _Star(Trace(trace)).run(obj)


def _v(v):
    return S.Var(v.name, SORT_IMAGE.get(v.sort, v.sort))


class _Star:
    def __init__(self, tr):
        self.tr = tr

    def run(self, obj):
        return self.term(obj) if S.is_term(obj) else self.formula(obj)

    # terms -------------------------------------------------------------------
    def term(self, t):
        if isinstance(t, S.Var):
            return _v(t)
        if isinstance(t, S.Bind):
            return self.bind(t)
        f, args = t.fn, t.args
        self.tr(f)
        if f in ("o", "0"):
            return ZERO
        if f == "Omega":
            return self.omega()
        a = [self.term(x) for x in args]
        simple = {
            "root": lambda: pi2(a[0]),
            "i": lambda: opair(ZERO, a[0]),
            "j": lambda: opair(ONE, a[0]),
            "/": lambda: opair(pi1(a[0]), a[1]),
            "i'": lambda: pi2(a[0]),
            "j'": lambda: pi2(a[0]),
            "S": lambda: cup(a[0], sing(a[0])),
            "rho": lambda: a[0],
            "Pred": lambda: fn("Union", a[0]),
            "rho'": lambda: fn("proj", a[0]),
            "Union": lambda: self.union(a[0]),
            "Pair": lambda: self.pair(a[0], a[1]),
            "Pow": lambda: self.pow(a[0]),
            "TC": lambda: self.tc(a[0]),
        }
        if f not in simple:
            raise ValueError(f"{f} is not a Zermod function symbol")
        return simple[f]()

    def _copy_edges(self, c, fr, tag, a):
        fr = fr.child()
        y, y2 = fr.var("y"), fr.var("y'")
        return S.Exists(y, S.Exists(y2, S.And(
            eq(c, opair(opair(tag, y2), opair(tag, y))),
            elem(opair(y2, y), pi1(a)))))

    def union(self, a):
        x = cup(prod(sing(ZERO), car(a)), sing(ZERO))

        def body(c, fr):
            first = self._copy_edges(c, fr, ZERO, a)
            fr = fr.child()
            y2, y = fr.var("y'"), fr.var("y")
            second = S.Exists(y2, S.Exists(y, S.And(S.And(
                eq(c, opair(opair(ZERO, y2), ZERO)),
                elem(opair(y2, y), pi1(a))),
                elem(opair(y, pi2(a)), pi1(a)))))
            return S.Or(first, second)
        return self._graph_with(x, body, self._reserve(a))

    def pair(self, a, b):
        x = cup(cup(prod(sing(ZERO), car(a)), prod(sing(ONE), car(b))), sing(ZERO))

        def body(c, fr):
            return S.disj(
                self._copy_edges(c, fr, ZERO, a),
                self._copy_edges(c, fr, ONE, b),
                eq(c, opair(opair(ZERO, pi2(a)), ZERO)),
                eq(c, opair(opair(ONE, pi2(b)), ZERO)))
        return self._graph_with(x, body, self._reserve(a, b))

    def pow(self, a):
        x = cup(cup(prod(sing(ZERO), car(a)), prod(sing(ONE), fn("Pow", car(a)))), sing(ZERO))

        def body(c, fr):
            inner = fr.child()
            y, p = inner.var("y"), inner.var("p")
            second = S.Exists(y, S.Exists(p, S.conj(
                eq(c, opair(opair(ZERO, y), opair(ONE, p))),
                elem(opair(y, pi2(a)), pi1(a)),
                elem(y, p))))
            p2 = fr.child().var("p")
            third = S.Exists(p2, eq(c, opair(opair(ONE, p2), ZERO)))
            return S.disj(self._copy_edges(c, fr, ZERO, a), second, third)
        return self._graph_with(x, body, self._reserve(a))

    def omega(self):
        x = cup(prod(sing(ZERO), NATS), sing(ZERO))

        def body(c, fr):
            inner = fr.child()
            y, y2 = inner.var("y"), inner.var("y'")
            first = S.Exists(y, S.Exists(y2, S.And(
                eq(c, opair(opair(ZERO, y2), opair(ZERO, y))), elem(y2, y))))
            y3 = fr.child().var("y")
            return S.Or(first, S.Exists(y3, eq(c, opair(opair(ZERO, y3), ZERO))))
        return self._graph_with(x, body, Fresh())

    def tc(self, a):
        x = cup(prod(sing(ZERO), car(a)), sing(ZERO))

        def body(c, fr):
            y = fr.child().var("y")
            second = S.Exists(y, S.And(
                eq(c, opair(opair(ZERO, y), ZERO)),
                elem(opair(y, pi2(a)), fn("Clos", pi1(a)))))
            return S.Or(self._copy_edges(c, fr, ZERO, a), second)
        return self._graph_with(x, body, self._reserve(a))

    def _reserve(self, *terms):
        return Fresh(*terms)

    def _graph_with(self, x, body_of, fr):
        c = fr.var("c")
        return opair(sep(c, prod(x, x), body_of(c, fr)), ZERO)

    def bind(self, t):
        self.tr(t.family)
        if t.family == "compr":
            *params, arg = t.args
            a = self.term(arg)
            ps = [self.term(p) for p in params]
            x = cup(prod(sing(ZERO), car(a)), sing(ZERO))
            fr = Fresh(a, *ps, t.body)

            def body(c, fr):
                y = fr.child().var("y")
                inst = {_v(t.bound[0]): opair(pi1(a), y)}
                inst.update({_v(v): p for v, p in zip(t.params, ps)})
                second = S.Exists(y, S.conj(
                    eq(c, opair(opair(ZERO, y), ZERO)),
                    elem(opair(y, pi2(a)), pi1(a)),
                    S.substitute(self.formula(t.body), inst)))
                return S.Or(self._copy_edges(c, fr, ZERO, a), second)
            return self._graph_with(x, body, fr)
        if t.family in ("nclass", "nrel"):
            bs = [self.term(b) for b in t.args]
            inst = {_v(v): b for v, b in zip(t.params, bs)}
            body = self.formula(t.body)
            if t.family == "nclass":
                x = _v(t.bound[0])
                if any(x.name in S.free_names(b) for b in bs):
                    nx = Fresh(body, *bs).var(x.name)
                    body, x = S.substitute(body, {x: nx}), nx
                return cabs(x, S.substitute(body, inst))
            x, x2 = (_v(v) for v in t.bound)
            fr = Fresh(body, *bs)
            z = fr.var("z")
            if any(v.name in S.free_names(b) for b in bs for v in (x, x2)):
                nx, nx2 = fr.var(x.name), fr.var(x2.name)
                body = S.substitute(body, {x: nx, x2: nx2})
                x, x2 = nx, nx2
            return cabs(z, S.Exists(x, S.Exists(x2, S.And(
                eq(z, opair(x, x2)), S.substitute(body, inst)))))
        raise ValueError(f"{t.family} is not a Zermod binder family")

    # formulas ------------------------------------------------------------------
    def formula(self, phi):
        if isinstance(phi, S.Top):
            return phi
        if isinstance(phi, S.Bot):
            return phi
        if isinstance(phi, S.BINARY):
            self.tr(type(phi).__name__.lower())
            return type(phi)(self.formula(phi.left), self.formula(phi.right))
        if isinstance(phi, S.QUANTIFIERS):
            self.tr(type(phi).__name__.lower())
            v = _v(phi.var)
            rel = relativization_predicates(phi.var.sort, v)
            body = self.formula(phi.body)
            if isinstance(phi, S.Forall):
                return S.Forall(v, S.Imp(rel, body))
            return S.Exists(v, S.And(rel, body))
        if isinstance(phi, S.Atom):
            return self.atom(phi)
        raise TypeError(f"not a Zermod formula: {phi!r}")

    def atom(self, phi):
        p = phi.pred
        if not phi.args:
            return phi
        self.tr(p)
        a = [self.term(x) for x in phi.args]
        if p == "eta":
            return elem(opair(a[1], a[2]), pi1(a[0]))
        if p in ("=", "eqG"):
            return eq(a[0], a[1])
        if p == "mem":
            return atom("mem", a[0], a[1])
        if p == "rel":
            return atom("mem", opair(a[0], a[1]), a[2])
        if p in ("I", "J"):
            y = Fresh(*a).var("y")
            return S.Exists(y, eq(a[0], opair(ZERO if p == "I" else ONE, y)))
        if p == "Null":
            return eq(a[0], ZERO)
        if p == "<":
            return S.And(elem(a[0], a[1]), elem(a[1], NATS))
        if p == "Nat":
            return elem(a[0], NATS)
        if p == "~~":
            return atom("~~", a[0], a[1])
        if p == "in":
            t, u = a
            z = Fresh(t, u).var("z")
            return S.Exists(z, S.And(elem(opair(z, pi2(u)), pi1(u)),
                                     atom("~~", t, opair(pi1(u), z))))
        raise ValueError(f"{p} is not a Zermod predicate")
