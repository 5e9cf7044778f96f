"""The Zskol abbreviations and their expansion into the core term formers."""
from __future__ import annotations

from ..lang import syntax as S
from .common import (
    NATS, Fresh, atom, cup, elem, eq, fn, opair, pi1, prod, sep, sing, car,
)

# Abbreviation symbol -> definition, each a function of the argument terms
# and a fresh-name supply.


def _empty(fr):
    return sep(fr.var("x"), NATS, S.BOT)


def _pi(which):
    def build(fr, x):
        x1, x2 = fr.var("x1"), fr.var("x2")
        kept, other = (x1, x2) if which == 1 else (x2, x1)
        return fn("Union", sep(kept, fn("Union", x), S.Exists(other, eq(x, opair(x1, x2)))))
    return build


def _prod(fr, a, b):
    z, x, y = fr.var("z"), fr.var("x"), fr.var("y")
    return sep(z, fn("Pow", fn("Pow", cup(a, b))),
               S.Exists(x, S.Exists(y, S.conj(elem(x, a), elem(y, b), eq(z, opair(x, y))))))


def _app(fr, f, x):
    y = fr.var("y")
    return fn("Union", sep(y, fn("Union", fn("Union", f)), elem(opair(x, y), f)))


def _restrict(fr, f, d):
    c = fr.var("c")
    return sep(c, f, elem(pi1(c), d))


def _car(fr, a):
    x, y = fr.var("x"), fr.var("y")
    return sep(x, fn("Union", fn("Union", a)),
               S.Exists(y, S.Or(elem(opair(x, y), a), elem(opair(y, x), a))))


def _clos(fr, r):
    c, r2 = fr.var("c"), fr.var("r'")
    x, y, z = fr.var("x"), fr.var("y"), fr.var("z")
    trans = S.Forall(x, S.Forall(y, S.Forall(z, S.Imp(
        S.And(elem(opair(x, y), r2), elem(opair(y, z), r2)), elem(opair(x, z), r2)))))
    return sep(c, prod(car(r), car(r)),
               S.Forall(r2, S.Imp(S.And(atom("Subset", r, r2), trans), elem(c, r2))))


def _lcs(fr, a):
    g, psi = fr.var("G"), fr.var("psi")
    return fn("Union", sep(g, fn("Pow", a),
                           S.And(atom("ISeg", g, a), S.Exists(psi, atom("Collapse", g, psi)))))


DEFINITIONS = {
    "Empty": lambda fr: _empty(fr),
    "0": lambda fr: fn("Empty"),
    "1": lambda fr: sing(fn("Empty")),
    "cup": lambda fr, a, b: fn("Union", fn("Pair", a, b)),
    "sing": lambda fr, a: fn("Pair", a, a),
    "opair": lambda fr, a, b: fn("Pair", sing(a), fn("Pair", a, b)),
    "pi1": _pi(1),
    "pi2": _pi(2),
    "prod": _prod,
    "app": _app,
    "restrict": _restrict,
    "Car": _car,
    "Clos": _clos,
    "proj": lambda fr, x: opair(fn("LCS", pi1(x)), fn("pi2", x)),
    "LCS": _lcs,
}


def unfold(t, fr=None):
    """One-step unfolding of an abbreviation application (no recursion)."""
    if not (isinstance(t, S.App) and t.fn in DEFINITIONS):
        raise ValueError(f"not an abbreviation: {t!r}")
    fr = fr or Fresh(t)
    return DEFINITIONS[t.fn](fr, *t.args)


def expand(obj, avoid=()):
    """Unfold every abbreviation (and ``Subset``) until none is left."""
    fr = Fresh(obj, avoid=avoid)
    return _expand(obj, fr)


def _expand(obj, fr):
    if isinstance(obj, S.Var):
        return obj
    if isinstance(obj, S.App):
        args = tuple(_expand(a, fr) for a in obj.args)
        t = S.App(obj.fn, args)
        if obj.fn in DEFINITIONS:
            return _expand(DEFINITIONS[obj.fn](fr, *args), fr)
        return t
    if isinstance(obj, S.Bind):
        return S.Bind(obj.family, obj.bound, obj.params, _expand(obj.body, fr),
                      tuple(_expand(a, fr) for a in obj.args))
    if isinstance(obj, S.Atom):
        args = tuple(_expand(a, fr) for a in obj.args)
        if obj.pred == "Subset":
            x = fr.var("x")
            return S.Forall(x, S.Imp(elem(x, args[0]), elem(x, args[1])))
        return S.Atom(obj.pred, args)
    if isinstance(obj, (S.Top, S.Bot)):
        return obj
    if isinstance(obj, S.BINARY):
        return type(obj)(_expand(obj.left, fr), _expand(obj.right, fr))
    if isinstance(obj, S.QUANTIFIERS):
        return type(obj)(obj.var, _expand(obj.body, fr))
    raise TypeError(f"not Zskol syntax: {obj!r}")


def abbreviations_used(obj) -> set:
    return {s for s in S.symbols(obj) if s in DEFINITIONS}


def simplify(obj):
    """Project out literal pairs and drop ``true`` guards.

    ``pi1(opair(a, b))`` becomes ``a``, ``pi2(opair(a, b))`` becomes ``b``,
    ``true -> A`` and ``true /\\ A`` become ``A``.
    """
    if isinstance(obj, S.App):
        args = tuple(simplify(a) for a in obj.args)
        if obj.fn in ("pi1", "pi2"):
            (x,) = args
            if isinstance(x, S.App) and x.fn == "opair":
                return x.args[0] if obj.fn == "pi1" else x.args[1]
        return S.App(obj.fn, args)
    if isinstance(obj, S.Bind):
        return S.Bind(obj.family, obj.bound, obj.params, simplify(obj.body),
                      tuple(simplify(a) for a in obj.args))
    if isinstance(obj, S.Atom):
        return S.Atom(obj.pred, tuple(simplify(a) for a in obj.args))
    if isinstance(obj, (S.Imp, S.And)):
        left, right = simplify(obj.left), simplify(obj.right)
        if isinstance(left, S.Top):
            return right
        return type(obj)(left, right)
    if isinstance(obj, S.BINARY):
        return type(obj)(simplify(obj.left), simplify(obj.right))
    if isinstance(obj, S.QUANTIFIERS):
        return type(obj)(obj.var, simplify(obj.body))
    return obj
