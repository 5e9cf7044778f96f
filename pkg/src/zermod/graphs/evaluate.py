"""Evaluating membership/bisimilarity formulas on graphs and on HF sets.

Graph-sort quantifiers range over an infinite domain, so they are only
accepted together with an explicit finite ``domain``.
"""
from __future__ import annotations

from ..lang import syntax as S
from . import pointed as PG
from .hfset import HFSet


class EvaluationError(ValueError):
    pass


def graph_term(t, env, omega_bound=None):
    """The pointed graph denoted by a graph-sort term."""
    if isinstance(t, S.Var):
        if t.name not in env:
            raise EvaluationError(f"no value for {t.name}")
        return env[t.name]
    if isinstance(t, S.App):
        args = [graph_term(a, env, omega_bound) for a in t.args]
        if t.fn in ("Union", "Pair", "Pow", "TC"):
            return PG.construct(t.fn, *args)
        if t.fn == "Omega":
            if omega_bound is None:
                raise EvaluationError("Omega needs a truncation bound")
            return PG.omega_graph(omega_bound)
        raise EvaluationError(f"cannot evaluate {t.fn} as a graph")
    if isinstance(t, S.Bind) and t.family == "compr":
        *params, arg = t.args
        local = dict(env)
        for p, a in zip(t.params, params):
            local[p.name] = graph_term(a, env, omega_bound)
        var = t.bound[0].name
        pred = predicate(t.body, var, local, omega_bound=omega_bound)
        return PG.compr_graph(pred, graph_term(arg, env, omega_bound))
    raise EvaluationError(f"cannot evaluate {t!r} as a graph")


def evaluate(phi, env, domain=None, omega_bound=None) -> bool:
    """Truth of a formula over ``in`` and ``~~``; ``env`` maps names to graphs."""
    if isinstance(phi, S.Top):
        return True
    if isinstance(phi, S.Bot):
        return False
    if isinstance(phi, S.And):
        return evaluate(phi.left, env, domain, omega_bound) and evaluate(phi.right, env, domain, omega_bound)
    if isinstance(phi, S.Or):
        return evaluate(phi.left, env, domain, omega_bound) or evaluate(phi.right, env, domain, omega_bound)
    if isinstance(phi, S.Imp):
        return (not evaluate(phi.left, env, domain, omega_bound)) or evaluate(phi.right, env, domain, omega_bound)
    if isinstance(phi, (S.Forall, S.Exists)):
        if phi.var.sort != "G" or domain is None:
            raise EvaluationError("quantifiers need a finite domain of graphs")
        test = all if isinstance(phi, S.Forall) else any
        return test(evaluate(phi.body, {**env, phi.var.name: g}, domain, omega_bound) for g in domain)
    if isinstance(phi, S.Atom):
        if phi.pred in ("in", "~~"):
            a, b = (graph_term(t, env, omega_bound) for t in phi.args)
            if phi.pred == "in":
                return PG.member(a, b)
            return PG.bisimilar(a, b) is not None
        raise EvaluationError(f"cannot evaluate the predicate {phi.pred}")
    raise EvaluationError(f"cannot evaluate {phi!r}")


def predicate(phi, var, env=None, domain=None, omega_bound=None):
    """``g -> evaluate(phi, env + {var: g})``, usable as a comprehension test."""
    env = dict(env or {})
    return lambda g: evaluate(phi, {**env, var: g}, domain, omega_bound)


def evaluate_sets(phi, env, domain=None) -> bool:
    """Truth of a formula over ``in`` and ``=`` on HF sets."""
    if isinstance(phi, S.Top):
        return True
    if isinstance(phi, S.Bot):
        return False
    if isinstance(phi, S.And):
        return evaluate_sets(phi.left, env, domain) and evaluate_sets(phi.right, env, domain)
    if isinstance(phi, S.Or):
        return evaluate_sets(phi.left, env, domain) or evaluate_sets(phi.right, env, domain)
    if isinstance(phi, S.Imp):
        return (not evaluate_sets(phi.left, env, domain)) or evaluate_sets(phi.right, env, domain)
    if isinstance(phi, (S.Forall, S.Exists)):
        if domain is None:
            raise EvaluationError("quantifiers need a finite domain of sets")
        test = all if isinstance(phi, S.Forall) else any
        return test(evaluate_sets(phi.body, {**env, phi.var.name: x}, domain) for x in domain)
    if isinstance(phi, S.Atom) and phi.pred in ("in", "="):
        a, b = (_set_value(t, env) for t in phi.args)
        return a in b if phi.pred == "in" else a == b
    raise EvaluationError(f"cannot evaluate {phi!r} on sets")


def _set_value(t, env) -> HFSet:
    if isinstance(t, S.Var) and t.name in env:
        return env[t.name]
    raise EvaluationError(f"no value for {t!r}")
