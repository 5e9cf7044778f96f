"""Shared helpers: a fresh-name supply, a clause trace and Zskol builders."""
from __future__ import annotations

from ..lang import syntax as S

SET, CLASS = "Set", "Class"


class Fresh:
    """Names not used so far; every name handed out is reserved."""

    def __init__(self, *objs, avoid=()):
        self.used = set(avoid)
        for o in objs:
            self.used |= S.all_names(o)

    def reserve(self, *objs):
        for o in objs:
            self.used |= S.all_names(o)

    def child(self):
        """A copy for a sibling scope: names it hands out may repeat across siblings."""
        f = Fresh()
        f.used = set(self.used)
        return f

    def name(self, hint):
        n = S.fresh_name(hint, self.used)
        self.used.add(n)
        return n

    def var(self, hint, sort=SET):
        return S.Var(self.name(hint), sort)


class Trace:
    """Collects the names of the clauses a translation applies, in order."""

    def __init__(self, sink=None):
        self.sink = sink

    def __call__(self, clause):
        if self.sink is not None:
            self.sink.append(clause)


def fn(name, *args):
    return S.App(name, tuple(args))


def atom(pred, *args):
    return S.Atom(pred, tuple(args))


ZERO = fn("0")
ONE = fn("1")
NATS = fn("Nats")


def opair(a, b):
    return fn("opair", a, b)


def pi1(a):
    return fn("pi1", a)


def pi2(a):
    return fn("pi2", a)


def sing(a):
    return fn("sing", a)


def cup(a, b):
    return fn("cup", a, b)


def prod(a, b):
    return fn("prod", a, b)


def car(a):
    return fn("Car", a)


def eq(a, b):
    return atom("=", a, b)


def elem(a, b):
    return atom("in", a, b)


def sep(var, t, body):
    return S.Bind("sep", (var,), (), body, (t,))


def cabs(var, body):
    return S.Bind("cabs", (var,), (), body, ())
