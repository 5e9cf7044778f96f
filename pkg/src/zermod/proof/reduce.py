"""Cut elimination: leftmost-outermost reduction of introduction/elimination pairs.

Redexes look through ascriptions.  When the ascribed formula shows what the
contractum proves, the contractum keeps an ascription, so that an
introduction landing in an inference position stays checkable.
"""
from __future__ import annotations

from ..lang import syntax as S
from ..rewrite.engine import EXHAUSTED, NORMAL, NormalizationResult
from ..rewrite.rules import DEFAULT_FUEL
from . import terms as P


def _asc(p, formula):
    if formula is None or not isinstance(P.strip_asc(p), P.INTRODUCTIONS + (P.Case, P.ExE)):
        return p
    return P.Asc(P.strip_asc(p), formula)


def _peel(p):
    """``(intro, formula ascribed to it or None)``."""
    formula = None
    while isinstance(p, P.Asc):
        if formula is None:
            formula = p.formula
        p = p.proof
    return p, formula


def contract(p):
    """Contract ``p`` if it is a redex: ``(rule name, contractum)`` or ``None``."""
    if isinstance(p, P.App):
        f, ty = _peel(p.fn)
        if isinstance(f, P.Lam):
            dom = f.ann
            cod = None
            if isinstance(ty, S.Imp):
                dom = dom or ty.left
                cod = ty.right
            return "beta", _asc(P.subst_hyp(f.body, f.hyp, _asc(p.arg, dom)), cod)
    elif isinstance(p, (P.Fst, P.Snd)):
        f, ty = _peel(p.proof)
        if isinstance(f, P.Pair):
            left = isinstance(p, P.Fst)
            part = None
            if isinstance(ty, S.And):
                part = ty.left if left else ty.right
            return ("fst" if left else "snd"), _asc(f.left if left else f.right, part)
    elif isinstance(p, P.AllE):
        f, ty = _peel(p.proof)
        if isinstance(f, P.AllI):
            inst = None
            if isinstance(ty, S.Forall) and ty.var.sort == f.var.sort:
                inst = S.substitute(ty.body, {ty.var: p.term})
            return "beta_all", _asc(P.subst_obj(f.body, f.var, p.term), inst)
    elif isinstance(p, P.Case):
        f, ty = _peel(p.scrut)
        if isinstance(f, (P.Inl, P.Inr)):
            left = isinstance(f, P.Inl)
            part = None
            if isinstance(ty, S.Or):
                part = ty.left if left else ty.right
            hyp, body = (p.left_hyp, p.left) if left else (p.right_hyp, p.right)
            return ("case_inl" if left else "case_inr"), P.subst_hyp(body, hyp, _asc(f.proof, part))
    elif isinstance(p, P.ExE):
        f, ty = _peel(p.proof)
        if isinstance(f, P.ExI):
            inst = None
            if isinstance(ty, S.Exists) and ty.var.sort == p.var.sort:
                inst = S.substitute(ty.body, {ty.var: f.witness})
            body = P.subst_obj(p.body, p.var, f.witness)
            return "unpack", P.subst_hyp(body, p.hyp, _asc(f.proof, inst))
    elif isinstance(p, P.Asc) and isinstance(p.proof, P.Asc):
        return "asc", P.Asc(p.proof.proof, p.formula)
    return None


def find_redex(p):
    """Leftmost-outermost redex: ``(path, rule, contractum)`` or ``None``."""
    stack = [(p, ())]
    while stack:
        q, path = stack.pop()
        hit = contract(q)
        if hit is not None:
            return path, hit[0], hit[1]
        kids = P.children(q)
        for i in range(len(kids) - 1, -1, -1):
            stack.append((kids[i], path + (i,)))
    return None


def is_normal(p) -> bool:
    return find_redex(p) is None


def step(p):
    """One reduction step: ``(rule, path, result)`` or ``None``."""
    hit = find_redex(p)
    if hit is None:
        return None
    path, rule, new = hit
    return rule, path, P.replace_at(p, path, new)


def reduce(p, fuel=DEFAULT_FUEL, trace=False) -> NormalizationResult:
    tr = [] if trace else None
    steps = 0
    while True:
        hit = find_redex(p)
        if hit is None:
            return NormalizationResult(NORMAL, p, steps, tr)
        if steps >= fuel:
            return NormalizationResult(EXHAUSTED, p, steps, tr)
        path, rule, new = hit
        p = P.replace_at(p, path, new)
        steps += 1
        if tr is not None:
            tr.append((rule, path))


class ProofReplayError(ValueError):
    pass


def replay_step(p, rule, path):
    """Check that ``rule`` names a redex at ``path`` and contract it."""
    try:
        target = P.subproof_at(p, path)
    except IndexError:
        raise ProofReplayError(f"no subproof at {path}") from None
    hit = contract(target)
    if hit is None or hit[0] != rule:
        raise ProofReplayError(f"no {rule} redex at {path}")
    return P.replace_at(p, path, hit[1])


def replay(p, trace):
    for k, (rule, path) in enumerate(trace):
        try:
            p = replay_step(p, rule, tuple(path))
        except ProofReplayError as e:
            raise ProofReplayError(f"step {k}: {e}") from None
    return p
