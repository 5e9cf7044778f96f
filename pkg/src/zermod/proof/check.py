"""Bidirectional proof checking modulo a rewrite congruence.

Introductions are checked against a goal; eliminations, hypotheses and
ascriptions infer a formula that is then compared with the goal up to the
congruence.  When a formula is not syntactically of the shape a rule needs
(say an atom congruent to an implication), its normal form is consulted.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..lang import syntax as S
from ..lang.printer import show
from ..lang.sorts import check_sorts
from ..rewrite.engine import NormalFormCache, UNDETERMINED, congruent, normalize
from ..rewrite.rules import RewriteSystem
from . import terms as P

CHECKED, FAILED = "checked", "failed"


@dataclass(frozen=True)
class Context:
    hyps: tuple              # ((name, formula), ...)
    system: RewriteSystem
    axioms: frozenset = frozenset()   # hypothesis names that are theory axioms

    def __post_init__(self):
        names = [h for h, _ in self.hyps]
        if len(set(names)) != len(names):
            raise ValueError("hypothesis names must be distinct")

    def lookup(self, name):
        for h, f in reversed(self.hyps):
            if h == name:
                return f
        return None

    def extend(self, name, formula):
        hyps = tuple((h, f) for h, f in self.hyps if h != name) + ((name, formula),)
        return Context(hyps, self.system, self.axioms - {name})

    def __repr__(self):
        return f"Context({[h for h, _ in self.hyps]}, system={self.system.name!r})"

    def free_objvars(self):
        out = set()
        for _, f in self.hyps:
            out |= S.free_vars(f)
        return out


def make_context(system, hyps=(), axioms=None) -> Context:
    hyps = tuple(hyps.items()) if isinstance(hyps, dict) else tuple(hyps)
    ax = frozenset(h for h, _ in hyps) if axioms is None else frozenset(axioms)
    return Context(hyps, system, ax)


@dataclass(frozen=True)
class Judgment:
    context: Context
    proof: object
    formula: object
    status: str                 # checked | failed | undetermined
    reason: str = ""
    path: tuple = ()

    @property
    def ok(self):
        return self.status == CHECKED


class _Fail(Exception):
    def __init__(self, reason, path, undetermined=False):
        super().__init__(reason)
        self.reason = reason
        self.path = path
        self.undetermined = undetermined


class Checker:
    def __init__(self, system: RewriteSystem, fuel=None, cache: Optional[NormalFormCache] = None):
        self.system = system
        self.fuel = system.fuel if fuel is None else fuel
        self.cache = cache
        self.lang = system.signature.name

    def _show(self, f):
        return show(f, self.lang)

    # congruence helpers ----------------------------------------------------
    def conv(self, a, b, path, what="formula"):
        r = congruent(a, b, self.system, self.fuel, self.cache)
        if r is True:
            return
        if r == UNDETERMINED:
            raise _Fail(f"fuel exhausted deciding {self._show(a)} == {self._show(b)}", path, True)
        raise _Fail(f"{what} mismatch: {self._show(a)} is not congruent to {self._show(b)}", path)

    def expose(self, phi, cls, path, name):
        if isinstance(phi, cls):
            return phi
        if self.cache is not None:
            res = self.cache.normalize(phi, self.system, self.fuel)
        else:
            res = normalize(phi, self.system, self.fuel)
        if not res.normal:
            raise _Fail(f"fuel exhausted normalizing {self._show(phi)}", path, True)
        if isinstance(res.value, cls):
            return res.value
        raise _Fail(f"expected {name}, got {self._show(phi)}", path)

    def term_sort(self, t, path):
        rep = check_sorts(t, self.system.signature)
        if not rep.ok:
            raise _Fail(f"ill-sorted term: {rep.error}", path)
        return rep.sort

    # checking mode -----------------------------------------------------------
    def check(self, ctx: Context, p, goal, path=()):
        if isinstance(p, P.Lam):
            imp = self.expose(goal, S.Imp, path, "an implication")
            if p.ann is not None:
                self.conv(p.ann, imp.left, path, "hypothesis annotation")
            self.check(ctx.extend(p.hyp, imp.left), p.body, imp.right, path + (0,))
            return
        if isinstance(p, P.Pair):
            conj = self.expose(goal, S.And, path, "a conjunction")
            self.check(ctx, p.left, conj.left, path + (0,))
            self.check(ctx, p.right, conj.right, path + (1,))
            return
        if isinstance(p, (P.Inl, P.Inr)):
            d = self.expose(goal, S.Or, path, "a disjunction")
            side = d.left if isinstance(p, P.Inl) else d.right
            self.check(ctx, p.proof, side, path + (0,))
            return
        if isinstance(p, P.TopI):
            if isinstance(goal, S.Top):
                return
            self.expose(goal, S.Top, path, "true")
            return
        if isinstance(p, P.AllI):
            q = self.expose(goal, S.Forall, path, "a universal formula")
            if q.var.sort != p.var.sort:
                raise _Fail(f"eigenvariable {p.var.name} has sort {p.var.sort}, "
                            f"quantifier ranges over {q.var.sort}", path)
            self._eigen(ctx, p.var, [goal], path)
            body = S.substitute(q.body, {q.var: p.var})
            self.check(ctx, p.body, body, path + (0,))
            return
        if isinstance(p, P.ExI):
            q = self.expose(goal, S.Exists, path, "an existential formula")
            s = self.term_sort(p.witness, path)
            if s != q.var.sort:
                raise _Fail(f"witness has sort {s}, quantifier ranges over {q.var.sort}", path)
            self.check(ctx, p.proof, S.substitute(q.body, {q.var: p.witness}), path + (0,))
            return
        if isinstance(p, P.Case):
            d = self.expose(self.infer(ctx, p.scrut, path + (0,)), S.Or, path + (0,), "a disjunction")
            self.check(ctx.extend(p.left_hyp, d.left), p.left, goal, path + (1,))
            self.check(ctx.extend(p.right_hyp, d.right), p.right, goal, path + (2,))
            return
        if isinstance(p, P.ExE):
            e = self.expose(self.infer(ctx, p.proof, path + (0,)), S.Exists, path + (0,),
                            "an existential formula")
            if e.var.sort != p.var.sort:
                raise _Fail(f"eigenvariable {p.var.name} has sort {p.var.sort}, "
                            f"quantifier ranges over {e.var.sort}", path)
            self._eigen(ctx, p.var, [goal, e], path)
            body = S.substitute(e.body, {e.var: p.var})
            self.check(ctx.extend(p.hyp, body), p.body, goal, path + (1,))
            return
        if isinstance(p, P.BotE):
            self.check(ctx, p.proof, S.BOT, path + (0,))
            self.conv(p.target, goal, path)
            return
        got = self.infer(ctx, p, path)
        self.conv(got, goal, path)

    def _eigen(self, ctx, var, formulas, path):
        if any(v.name == var.name for v in ctx.free_objvars()):
            raise _Fail(f"eigenvariable {var.name} occurs free in a hypothesis", path)
        for f in formulas:
            if var in S.free_vars(f):
                raise _Fail(f"eigenvariable {var.name} occurs free in {self._show(f)}", path)

    # inference mode ------------------------------------------------------------
    def infer(self, ctx: Context, p, path=()):
        if isinstance(p, P.Hyp):
            f = ctx.lookup(p.name)
            if f is None:
                raise _Fail(f"unknown hypothesis {p.name}", path)
            return f
        if isinstance(p, P.App):
            imp = self.expose(self.infer(ctx, p.fn, path + (0,)), S.Imp, path + (0,), "an implication")
            self.check(ctx, p.arg, imp.left, path + (1,))
            return imp.right
        if isinstance(p, (P.Fst, P.Snd)):
            c = self.expose(self.infer(ctx, p.proof, path + (0,)), S.And, path + (0,), "a conjunction")
            return c.left if isinstance(p, P.Fst) else c.right
        if isinstance(p, P.AllE):
            q = self.expose(self.infer(ctx, p.proof, path + (0,)), S.Forall, path + (0,),
                            "a universal formula")
            s = self.term_sort(p.term, path)
            if s != q.var.sort:
                raise _Fail(f"instance has sort {s}, quantifier ranges over {q.var.sort}", path)
            return S.substitute(q.body, {q.var: p.term})
        if isinstance(p, P.Asc):
            self.check(ctx, p.proof, p.formula, path + (0,))
            return p.formula
        if isinstance(p, P.BotE):
            self.check(ctx, p.proof, S.BOT, path + (0,))
            return p.target
        if isinstance(p, P.TopI):
            return S.TOP
        if isinstance(p, P.Lam) and p.ann is not None:
            body = self.infer(ctx.extend(p.hyp, p.ann), p.body, path + (0,))
            return S.Imp(p.ann, body)
        if isinstance(p, P.Pair):
            return S.And(self.infer(ctx, p.left, path + (0,)), self.infer(ctx, p.right, path + (1,)))
        raise _Fail(f"cannot infer a formula for {P.tag(p)}; add an ascription", path)


def check(ctx: Context, p, phi, fuel=None, cache: Optional[NormalFormCache] = None) -> Judgment:
    """Check that ``p`` proves ``phi`` from ``ctx`` modulo ``ctx.system``."""
    checker = Checker(ctx.system, fuel, cache)
    try:
        checker.check(ctx, p, phi)
    except _Fail as f:
        return Judgment(ctx, p, phi, "undetermined" if f.undetermined else FAILED, f.reason, f.path)
    return Judgment(ctx, p, phi, CHECKED)


def infer(ctx: Context, p, fuel=None, cache=None):
    checker = Checker(ctx.system, fuel, cache)
    try:
        return checker.infer(ctx, p)
    except _Fail as f:
        raise ValueError(f.reason) from None
