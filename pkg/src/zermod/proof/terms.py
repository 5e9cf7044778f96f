"""Natural-deduction proof terms.

Object-level syntax (terms and formulas) is embedded in proof terms for
quantifier witnesses, eigenvariables and annotations.  Hypothesis names and
object variables live in separate namespaces.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..lang import syntax as S


@dataclass(frozen=True)
class Hyp:
    name: str


@dataclass(frozen=True)
class Lam:
    hyp: str
    body: object
    ann: Optional[object] = None   # formula of the hypothesis, optional


@dataclass(frozen=True)
class App:
    fn: object
    arg: object


@dataclass(frozen=True)
class Pair:
    left: object
    right: object


@dataclass(frozen=True)
class Fst:
    proof: object


@dataclass(frozen=True)
class Snd:
    proof: object


@dataclass(frozen=True)
class Inl:
    proof: object


@dataclass(frozen=True)
class Inr:
    proof: object


@dataclass(frozen=True)
class Case:
    scrut: object
    left_hyp: str
    left: object
    right_hyp: str
    right: object


@dataclass(frozen=True)
class TopI:
    pass


@dataclass(frozen=True)
class BotE:
    proof: object
    target: object


@dataclass(frozen=True)
class AllI:
    var: S.Var
    body: object


@dataclass(frozen=True)
class AllE:
    proof: object
    term: object


@dataclass(frozen=True)
class ExI:
    witness: object
    proof: object


@dataclass(frozen=True)
class ExE:
    proof: object
    var: S.Var
    hyp: str
    body: object


@dataclass(frozen=True)
class Asc:
    """``(P : A)``: a proof together with the formula it is checked at."""

    proof: object
    formula: object


TT = TopI()

TAGS = {
    Hyp: "hypothesis", Lam: "implication-intro", App: "implication-elim",
    Pair: "conjunction-intro", Fst: "conjunction-elim-left", Snd: "conjunction-elim-right",
    Inl: "disjunction-intro-left", Inr: "disjunction-intro-right", Case: "disjunction-elim",
    TopI: "top-intro", BotE: "bottom-elim", AllI: "universal-intro", AllE: "universal-elim",
    ExI: "existential-intro", ExE: "existential-elim", Asc: "ascription",
}
INTRODUCTIONS = (Lam, Pair, Inl, Inr, TopI, AllI, ExI)
PROOF_TYPES = tuple(TAGS)


def tag(p) -> str:
    return TAGS[type(p)]


def strip_asc(p):
    while isinstance(p, Asc):
        p = p.proof
    return p


def children(p) -> tuple:
    """Immediate proof subterms, in left-to-right order."""
    if isinstance(p, Lam):
        return (p.body,)
    if isinstance(p, App):
        return (p.fn, p.arg)
    if isinstance(p, Pair):
        return (p.left, p.right)
    if isinstance(p, (Fst, Snd, Inl, Inr, BotE, AllE, Asc)):
        return (p.proof,)
    if isinstance(p, Case):
        return (p.scrut, p.left, p.right)
    if isinstance(p, AllI):
        return (p.body,)
    if isinstance(p, ExI):
        return (p.proof,)
    if isinstance(p, ExE):
        return (p.proof, p.body)
    return ()


def with_children(p, kids):
    kids = list(kids)
    if isinstance(p, Lam):
        return Lam(p.hyp, kids[0], p.ann)
    if isinstance(p, App):
        return App(kids[0], kids[1])
    if isinstance(p, Pair):
        return Pair(kids[0], kids[1])
    if isinstance(p, (Fst, Snd, Inl, Inr)):
        return type(p)(kids[0])
    if isinstance(p, BotE):
        return BotE(kids[0], p.target)
    if isinstance(p, AllE):
        return AllE(kids[0], p.term)
    if isinstance(p, Asc):
        return Asc(kids[0], p.formula)
    if isinstance(p, Case):
        return Case(kids[0], p.left_hyp, kids[1], p.right_hyp, kids[2])
    if isinstance(p, AllI):
        return AllI(p.var, kids[0])
    if isinstance(p, ExI):
        return ExI(p.witness, kids[0])
    if isinstance(p, ExE):
        return ExE(kids[0], p.var, p.hyp, kids[1])
    return p


def subproof_at(p, path):
    for i in path:
        p = children(p)[i]
    return p


def replace_at(p, path, new):
    if not path:
        return new
    kids = list(children(p))
    kids[path[0]] = replace_at(kids[path[0]], path[1:], new)
    return with_children(p, kids)


def size(p) -> int:
    n, stack = 0, [p]
    while stack:
        q = stack.pop()
        n += 1
        stack.extend(children(q))
    return n


def constructors_used(p) -> set:
    out, stack = set(), [p]
    while stack:
        q = stack.pop()
        out.add(type(q))
        stack.extend(children(q))
    return out


# ---------------------------------------------------------------------------
# Free hypotheses and object variables

def free_hyps(p) -> frozenset:
    out = set()
    _fh(p, frozenset(), out)
    return frozenset(out)


def _fh(p, bound, out):
    if isinstance(p, Hyp):
        if p.name not in bound:
            out.add(p.name)
    elif isinstance(p, Lam):
        _fh(p.body, bound | {p.hyp}, out)
    elif isinstance(p, Case):
        _fh(p.scrut, bound, out)
        _fh(p.left, bound | {p.left_hyp}, out)
        _fh(p.right, bound | {p.right_hyp}, out)
    elif isinstance(p, ExE):
        _fh(p.proof, bound, out)
        _fh(p.body, bound | {p.hyp}, out)
    else:
        for c in children(p):
            _fh(c, bound, out)


def _embedded(p):
    """Object syntax stored directly on the node (not in subproofs)."""
    if isinstance(p, Lam):
        return (p.ann,) if p.ann is not None else ()
    if isinstance(p, BotE):
        return (p.target,)
    if isinstance(p, AllE):
        return (p.term,)
    if isinstance(p, ExI):
        return (p.witness,)
    if isinstance(p, Asc):
        return (p.formula,)
    return ()


def free_objvars(p) -> frozenset:
    out = set()
    _fo(p, frozenset(), out)
    return frozenset(out)


def _fo(p, bound, out):
    for obj in _embedded(p):
        out.update(v for v in S.free_vars(obj) if v not in bound)
    if isinstance(p, AllI):
        _fo(p.body, bound | {p.var}, out)
    elif isinstance(p, ExE):
        _fo(p.proof, bound, out)
        _fo(p.body, bound | {p.var}, out)
    else:
        for c in children(p):
            _fo(c, bound, out)


def all_hyp_names(p) -> set:
    out, stack = set(), [p]
    while stack:
        q = stack.pop()
        if isinstance(q, Hyp):
            out.add(q.name)
        elif isinstance(q, Lam):
            out.add(q.hyp)
        elif isinstance(q, Case):
            out |= {q.left_hyp, q.right_hyp}
        elif isinstance(q, ExE):
            out.add(q.hyp)
        stack.extend(children(q))
    return out


def all_obj_names(p) -> set:
    out, stack = set(), [p]
    while stack:
        q = stack.pop()
        for obj in _embedded(q):
            out |= S.all_names(obj)
        if isinstance(q, (AllI, ExE)):
            out.add(q.var.name)
        stack.extend(children(q))
    return out


# ---------------------------------------------------------------------------
# Substitution

def subst_hyp(p, name, q):
    """Replace the free hypothesis ``name`` by the proof ``q`` (capture-avoiding)."""
    fh = free_hyps(q)
    fo = {v.name for v in free_objvars(q)}
    return _sh(p, name, q, fh, fo)


def _sh(p, name, q, fh, fo):
    if isinstance(p, Hyp):
        return q if p.name == name else p
    if isinstance(p, Lam):
        if p.hyp == name:
            return p
        h, body = _fresh_hyp(p.hyp, p.body, fh, name, q)
        return Lam(h, _sh(body, name, q, fh, fo), p.ann)
    if isinstance(p, Case):
        scrut = _sh(p.scrut, name, q, fh, fo)
        parts = []
        for h, b in ((p.left_hyp, p.left), (p.right_hyp, p.right)):
            if h == name:
                parts.append((h, b))
                continue
            h2, b2 = _fresh_hyp(h, b, fh, name, q)
            parts.append((h2, _sh(b2, name, q, fh, fo)))
        return Case(scrut, parts[0][0], parts[0][1], parts[1][0], parts[1][1])
    if isinstance(p, ExE):
        inner = _sh(p.proof, name, q, fh, fo)
        var, body = p.var, p.body
        if var.name in fo and name in free_hyps(body):
            nv = S.fresh_var(var.name, var.sort, fo | all_obj_names(body))
            body = subst_obj(body, var, nv)
            var = nv
        if p.hyp == name:
            return ExE(inner, var, p.hyp, body)
        h, body = _fresh_hyp(p.hyp, body, fh, name, q)
        return ExE(inner, var, h, _sh(body, name, q, fh, fo))
    if isinstance(p, AllI):
        var, body = p.var, p.body
        if var.name in fo and name in free_hyps(body):
            nv = S.fresh_var(var.name, var.sort, fo | all_obj_names(body))
            body = subst_obj(body, var, nv)
            var = nv
        return AllI(var, _sh(body, name, q, fh, fo))
    kids = children(p)
    if not kids:
        return p
    return with_children(p, [_sh(k, name, q, fh, fo) for k in kids])


def _fresh_hyp(h, body, fh, name, q):
    if h in fh and name in free_hyps(body):
        new = S.fresh_name(h, fh | all_hyp_names(body) | all_hyp_names(q))
        return new, subst_hyp(body, h, Hyp(new))
    return h, body


def subst_obj(p, var: S.Var, t):
    """Replace the object variable ``var`` by the term ``t`` throughout ``p``."""
    return _so(p, var, t, S.free_names(t))


def _so(p, var, t, ft):
    b = {var: t}
    if isinstance(p, Lam):
        ann = S.substitute(p.ann, b) if p.ann is not None else None
        return Lam(p.hyp, _so(p.body, var, t, ft), ann)
    if isinstance(p, BotE):
        return BotE(_so(p.proof, var, t, ft), S.substitute(p.target, b))
    if isinstance(p, AllE):
        return AllE(_so(p.proof, var, t, ft), S.substitute(p.term, b))
    if isinstance(p, ExI):
        return ExI(S.substitute(p.witness, b), _so(p.proof, var, t, ft))
    if isinstance(p, Asc):
        return Asc(_so(p.proof, var, t, ft), S.substitute(p.formula, b))
    if isinstance(p, AllI):
        if p.var == var:
            return p
        v, body = _fresh_obj(p.var, p.body, var, ft)
        return AllI(v, _so(body, var, t, ft))
    if isinstance(p, ExE):
        inner = _so(p.proof, var, t, ft)
        if p.var == var:
            return ExE(inner, p.var, p.hyp, p.body)
        v, body = _fresh_obj(p.var, p.body, var, ft)
        return ExE(inner, v, p.hyp, _so(body, var, t, ft))
    kids = children(p)
    if not kids:
        return p
    return with_children(p, [_so(k, var, t, ft) for k in kids])


def _fresh_obj(v, body, var, ft):
    if v.name in ft and var in free_objvars(body):
        nv = S.fresh_var(v.name, v.sort, ft | all_obj_names(body) | {var.name})
        return nv, subst_obj(body, v, nv)
    return v, body
