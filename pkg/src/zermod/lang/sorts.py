"""Well-sortedness checking against a signature."""
from __future__ import annotations

from dataclasses import dataclass

from . import syntax as S
from .signatures import get_language


@dataclass(frozen=True)
class SortReport:
    ok: bool
    sort: str | None = None     # sort of a term; ``None`` for formulas
    error: str | None = None
    path: tuple = ()            # child indices; ``"body"`` steps into a binder body

    def __bool__(self):
        return self.ok


class _Violation(Exception):
    def __init__(self, msg, path):
        super().__init__(msg)
        self.path = path


def check_sorts(obj, sig="zermod") -> SortReport:
    """Check ranks, binder-family invariants and sort consistency.

    The first violation is reported together with its path.  Rule patterns
    (metavariables) are accepted where a formula or an argument list is
    expected.
    """
    sig = get_language(sig)
    try:
        if S.is_term(obj):
            return SortReport(True, _term(obj, sig, ()))
        _formula(obj, sig, ())
        return SortReport(True)
    except _Violation as v:
        return SortReport(False, None, str(v), tuple(v.path))


def term_sort(t, sig="zermod"):
    rep = check_sorts(t, sig)
    if not rep.ok:
        raise ValueError(rep.error)
    return rep.sort


def _term(t, sig, path):
    if isinstance(t, S.Var):
        if t.sort not in sig.sorts:
            raise _Violation(f"variable {t.name} has sort {t.sort}, unknown in {sig.name}", path)
        return t.sort
    if isinstance(t, S.App):
        rank = sig.functions.get(t.fn)
        if rank is None:
            raise _Violation(f"unknown function symbol {t.fn!r}", path)
        argsorts, result = rank
        if len(argsorts) != len(t.args):
            raise _Violation(f"{t.fn} expects {len(argsorts)} argument(s), got {len(t.args)}", path)
        for k, (a, s) in enumerate(zip(t.args, argsorts)):
            got = _term(a, sig, path + (k,))
            if got != s:
                raise _Violation(f"argument {k + 1} of {t.fn} has sort {got}, expected {s}", path + (k,))
        return result
    if isinstance(t, S.Bind):
        return _bind(t, sig, path)
    raise _Violation(f"not a term: {type(t).__name__}", path)


def _bind(t, sig, path):
    fam = sig.families.get(t.family)
    if fam is None:
        raise _Violation(f"binder family {t.family!r} is not part of {sig.name}", path)
    if tuple(v.sort for v in t.bound) != fam.bound:
        raise _Violation(f"{t.family} must bind variables of sorts {fam.bound}", path)
    seq = isinstance(t.params, S.SeqMeta)
    if not seq:
        for v in t.params:
            if v.sort not in fam.param_sorts:
                raise _Violation(f"{t.family} parameter {v.name} has disallowed sort {v.sort}", path)
        names = [v.name for v in t.bound] + [v.name for v in t.params]
        if len(set(names)) != len(names):
            raise _Violation(f"{t.family} binds a name twice", path)
        if not fam.closed and t.params:
            raise _Violation(f"{t.family} takes no parameters", path)
    # arguments
    args = list(t.args)
    if seq:
        if not args or args[0] != t.params or not isinstance(args[0], S.SeqMeta):
            raise _Violation(f"{t.family} pattern must pass its parameter sequence", path)
        expected = list(fam.extra)
        rest = list(enumerate(args))[1:]
    else:
        expected = [v.sort for v in t.params] + list(fam.extra)
        rest = list(enumerate(args))
    if len(rest) != len(expected):
        raise _Violation(f"{t.family} expects {len(expected)} argument(s), got {len(rest)}", path)
    for (k, a), s in zip(rest, expected):
        got = _term(a, sig, path + (k,))
        if got != s:
            raise _Violation(f"argument {k + 1} of {t.family} has sort {got}, expected {s}", path + (k,))
    body = t.body
    if isinstance(body, S.Meta):
        return fam.result
    bpath = path + ("body",)
    _formula(body, sig, bpath)
    if fam.closed:
        allowed = set(t.bound) | set(t.params)
        extra = [v for v in S.free_vars(body) if v not in allowed]
        if extra:
            names = ", ".join(sorted(v.name for v in extra))
            raise _Violation(f"indexing formula of {t.family} has stray free variable(s) {names}", bpath)
    if t.family in ("nclass", "nrel"):
        bad = S.symbols(body) & {"nclass", "nrel"}
        if bad:
            raise _Violation(f"indexing formula of {t.family} mentions {sorted(bad)[0]}", bpath)
    if t.family == "compr":
        _check_compr_body(body, bpath)
    return fam.result


def _check_compr_body(body, path):
    stack = [body]
    while stack:
        f = stack.pop()
        if isinstance(f, S.Atom):
            if f.pred not in ("in", "~~"):
                raise _Violation(f"comprehension formula may only use in and ~~, found {f.pred}", path)
        elif isinstance(f, S.QUANTIFIERS):
            if f.var.sort != "G":
                raise _Violation(f"comprehension formula quantifies over sort {f.var.sort}", path)
            stack.append(f.body)
        elif isinstance(f, S.BINARY):
            stack.extend((f.left, f.right))


def _formula(f, sig, path):
    # iterative over connectives: formulas can be very deep
    stack = [(f, path)]
    while stack:
        g, p = stack.pop()
        if isinstance(g, (S.Top, S.Bot, S.Meta)):
            continue
        if isinstance(g, S.MetaInst):
            for k, (_, t) in enumerate(g.pairs):
                _term(t, sig, p + (k,))
            continue
        if isinstance(g, S.Atom):
            rank = sig.predicates.get(g.pred)
            if rank is None:
                if g.args or not sig.allow_letters:
                    raise _Violation(f"unknown predicate symbol {g.pred!r}", p)
                continue
            if len(rank) != len(g.args):
                raise _Violation(f"{g.pred} expects {len(rank)} argument(s), got {len(g.args)}", p)
            for k, (a, s) in enumerate(zip(g.args, rank)):
                got = _term(a, sig, p + (k,))
                if got != s:
                    raise _Violation(f"argument {k + 1} of {g.pred} has sort {got}, expected {s}",
                                     p + (k,))
            continue
        if isinstance(g, S.BINARY):
            stack.append((g.right, p + (1,)))
            stack.append((g.left, p + (0,)))
            continue
        if isinstance(g, S.QUANTIFIERS):
            if g.var.sort not in sig.sorts:
                raise _Violation(f"quantifier over unknown sort {g.var.sort}", p)
            stack.append((g.body, p + (0,)))
            continue
        raise _Violation(f"not a formula: {type(g).__name__}", p)
