"""Zst to Zermod: ``=`` becomes bisimilarity, ``in`` stays membership."""
from __future__ import annotations

from ..lang import syntax as S
from .common import Trace


def dagger(phi, trace=None):
    tr = Trace(trace)
    return _d(phi, tr)


def _d(phi, tr):
    if isinstance(phi, S.Var):
        return S.Var(phi.name, "G")
    if isinstance(phi, S.Atom):
        if phi.pred == "=":
            tr("=")
            return S.Atom("~~", tuple(_d(a, tr) for a in phi.args))
        if phi.pred == "in":
            tr("in")
            return S.Atom("in", tuple(_d(a, tr) for a in phi.args))
        if not phi.args:
            return phi
        raise ValueError(f"{phi.pred} is not a Zst predicate")
    if isinstance(phi, (S.Top, S.Bot)):
        return phi
    if isinstance(phi, S.BINARY):
        tr(type(phi).__name__.lower())
        return type(phi)(_d(phi.left, tr), _d(phi.right, tr))
    if isinstance(phi, S.QUANTIFIERS):
        tr(type(phi).__name__.lower())
        return type(phi)(S.Var(phi.var.name, "G"), _d(phi.body, tr))
    raise TypeError(f"not Zst syntax: {phi!r}")
