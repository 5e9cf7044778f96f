"""Matching, one-step rewriting, normalization and the congruence test.

Terms are normalized outermost-first: the root is rewritten while some rule
applies, then the arguments left to right, then the root again.  Inside a
formula every atom first has its arguments normalized, then its head is
rewritten by a formula rule and the result is normalized in place.

Formula normalization is iterative: the naive comprehension system produces
formulas thousands of levels deep before fuel runs out.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..lang import syntax as S
from .rules import Rule, RewriteSystem, ordered_free_vars

UNDETERMINED = "undetermined"
NORMAL = "normal"
EXHAUSTED = "fuel-exhausted"


class NoMatch(Exception):
    pass


@dataclass
class NormalizationResult:
    outcome: str         # NORMAL or EXHAUSTED
    value: object
    steps: int
    trace: Optional[list] = None   # [(rule name, path)] when requested

    @property
    def normal(self) -> bool:
        return self.outcome == NORMAL

    def __repr__(self):  # values can be huge; never print them implicitly
        return f"NormalizationResult({self.outcome}, steps={self.steps})"

    __eq__ = object.__eq__
    __hash__ = object.__hash__


class Budget:
    __slots__ = ("left", "used")

    def __init__(self, fuel):
        self.left = fuel
        self.used = 0

    def spend(self):
        self.left -= 1
        self.used += 1

    @property
    def empty(self):
        return self.left <= 0


# ---------------------------------------------------------------------------
# Matching

def match(pattern, target, subst=None):
    """First-order matching; returns the extended substitution or ``None``.

    The substitution maps pattern :class:`Var` to terms, formula
    metavariable names to ``("meta", local names, instance)`` and sequence
    metavariable names to ``("seq", arguments)``.
    """
    subst = dict(subst or {})
    try:
        _match(pattern, target, subst)
    except NoMatch:
        return None
    return subst


def _match(p, t, s):
    if isinstance(p, S.Var):
        if p in s:
            if not S.alpha_eq(s[p], t):
                raise NoMatch
        else:
            s[p] = t
        return
    if type(p) is not type(t):
        raise NoMatch
    if isinstance(p, S.App):
        if p.fn != t.fn or len(p.args) != len(t.args):
            raise NoMatch
        for a, b in zip(p.args, t.args):
            _match(a, b, s)
        return
    if isinstance(p, S.Atom):
        if p.pred != t.pred or len(p.args) != len(t.args):
            raise NoMatch
        for a, b in zip(p.args, t.args):
            _match(a, b, s)
        return
    if isinstance(p, S.Bind):
        _match_bind(p, t, s)
        return
    if isinstance(p, (S.Top, S.Bot)):
        return
    if isinstance(p, S.BINARY):
        _match(p.left, t.left, s)
        _match(p.right, t.right, s)
        return
    raise NoMatch


def _match_bind(p, t, s):
    if p.family != t.family or len(p.bound) != len(t.bound):
        raise NoMatch
    if isinstance(t.params, S.SeqMeta):
        raise NoMatch
    if any(a.sort != b.sort for a, b in zip(p.bound, t.bound)):
        raise NoMatch
    if isinstance(p.body, S.Meta):
        n = len(t.params)
        if isinstance(p.params, S.SeqMeta):
            seq = p.params.name
            if not p.args or p.args[0] != p.params:
                raise NoMatch
            extra = p.args[1:]
            if len(t.args) != n + len(extra):
                raise NoMatch
            prev = s.get(seq)
            vals = ("seq", t.args[:n])
            if prev is not None and (len(prev[1]) != n or not all(
                    S.alpha_eq(a, b) for a, b in zip(prev[1], vals[1]))):
                raise NoMatch
            s[seq] = vals
            for a, b in zip(extra, t.args[n:]):
                _match(a, b, s)
        else:
            if len(p.params) != n or len(p.args) != len(t.args):
                raise NoMatch
            if any(a.sort != b.sort for a, b in zip(p.params, t.params)):
                raise NoMatch
            for a, b in zip(p.args, t.args):
                _match(a, b, s)
        key = p.body.name
        info = ("meta", tuple(v.name for v in p.bound), S.Bind(t.family, t.bound, t.params, t.body, t.args))
        prev = s.get(key)
        if prev is not None and not S.alpha_eq(prev[2], info[2]):
            raise NoMatch
        s[key] = info
        return
    # concrete indexing formula: the binder parts must be alpha-equal
    if isinstance(p.params, S.SeqMeta) or len(p.params) != len(t.params):
        raise NoMatch
    if S.canonical(S.Bind(p.family, p.bound, p.params, p.body)) != \
            S.canonical(S.Bind(t.family, t.bound, t.params, t.body)):
        raise NoMatch
    if len(p.args) != len(t.args):
        raise NoMatch
    for a, b in zip(p.args, t.args):
        _match(a, b, s)


# ---------------------------------------------------------------------------
# Instantiation

def instantiate(rhs, subst):
    """Build the right-hand side under a match.

    Binders of the right-hand side are renamed away from the free variables
    of every matched value, so nothing from the redex gets captured.
    """
    avoid = set()
    for k, v in subst.items():
        if isinstance(k, S.Var):
            avoid |= S.free_names(v)
        elif v[0] == "seq":
            for a in v[1]:
                avoid |= S.free_names(a)
        else:
            avoid |= S.free_names(v[2])
    rhs = S.rename_bound(rhs, avoid) if avoid else rhs
    return _inst(rhs, subst, frozenset())


def _inst(o, s, bound):
    if isinstance(o, S.Var):
        if o in bound:
            return o
        return s.get(o, o)
    if isinstance(o, S.App):
        return S.App(o.fn, tuple(_inst(a, s, bound) for a in o.args)) if o.args else o
    if isinstance(o, S.Atom):
        return S.Atom(o.pred, tuple(_inst(a, s, bound) for a in o.args)) if o.args else o
    if isinstance(o, (S.Top, S.Bot)):
        return o
    if isinstance(o, S.BINARY):
        return type(o)(_inst(o.left, s, bound), _inst(o.right, s, bound))
    if isinstance(o, S.QUANTIFIERS):
        return type(o)(o.var, _inst(o.body, s, bound | {o.var}))
    if isinstance(o, S.MetaInst):
        _, local, inst = s[o.name]
        mapping = {}
        for name, t in o.pairs:
            mapping[inst.bound[local.index(name)]] = _inst(t, s, bound)
        for v, a in zip(inst.params, inst.args):
            mapping[v] = a
        return S.substitute(inst.body, mapping)
    if isinstance(o, S.Meta):
        return s[o.name][2].body
    if isinstance(o, S.Bind):
        args = []
        for a in o.args:
            if isinstance(a, S.SeqMeta):
                args.extend(s[a.name][1])
            else:
                args.append(_inst(a, s, bound))
        params = o.params
        body = o.body
        if isinstance(params, S.SeqMeta) or isinstance(body, S.Meta):
            # reuse of a matched binder instance on the right-hand side
            meta = s.get(body.name) if isinstance(body, S.Meta) else None
            if meta is None:
                raise ValueError("cannot instantiate a schematic binder on the right-hand side")
            inst = meta[2]
            return S.Bind(inst.family, inst.bound, inst.params, inst.body, tuple(args))
        return S.Bind(o.family, o.bound, params, body, tuple(args))
    raise TypeError(f"cannot instantiate {o!r}")


def apply_rule(rule: Rule, obj):
    """Rewrite ``obj`` at its root with ``rule``; ``None`` if it does not match."""
    s = match(rule.lhs, obj)
    if s is None:
        return None
    return instantiate(rule.rhs, s)


def rewrite_root(obj, system: RewriteSystem):
    """First rule (in list order) applicable at the root: ``(rule, result)``."""
    for rule in system.candidates(obj):
        out = apply_rule(rule, obj)
        if out is not None:
            return rule, out
    return None


def reduce_atom(atom, system: RewriteSystem):
    """One formula-rule step at the head of ``atom``; ``None`` when irreducible."""
    if not isinstance(atom, S.Atom):
        raise TypeError(f"reduce_atom expects an atomic formula, got {type(atom).__name__}")
    hit = rewrite_root(atom, system)
    return None if hit is None else hit[1]


# ---------------------------------------------------------------------------
# Normalization

def _norm_term(t, system, budget, trace, path):
    while True:
        if budget.empty:
            return t
        hit = rewrite_root(t, system) if not isinstance(t, S.Var) else None
        if hit is not None:
            rule, t = hit
            budget.spend()
            if trace is not None:
                trace.append((rule.name, path))
            continue
        kids = S.children(t)
        if not kids:
            return t
        if trace is None:
            new = [_norm_term(k, system, budget, None, None) for k in kids]
        else:
            new = [_norm_term(k, system, budget, trace, path + (i,)) for i, k in enumerate(kids)]
        if all(a is b for a, b in zip(new, kids)):
            return t
        t = S.with_children(t, new)
        if budget.empty:
            return t
        if rewrite_root_possible(t, system):
            continue
        return t


def rewrite_root_possible(t, system):
    return bool(system.candidates(t))


def normalize_term(t, system: RewriteSystem, fuel=None, trace=False) -> NormalizationResult:
    budget = Budget(system.fuel if fuel is None else fuel)
    tr = [] if trace else None
    value = _norm_term(t, system, budget, tr, ())
    outcome = NORMAL
    if budget.empty and _term_reducible(value, system):
        outcome = EXHAUSTED
    return NormalizationResult(outcome, value, budget.used, tr)


def _term_reducible(t, system):
    stack = [t]
    while stack:
        o = stack.pop()
        if rewrite_root(o, system) is not None:
            return True
        stack.extend(S.children(o))
    return False


def _norm_atom_args(atom, system, budget, trace, path):
    if not atom.args:
        return atom
    if trace is None:
        new = [_norm_term(a, system, budget, None, None) for a in atom.args]
    else:
        new = [_norm_term(a, system, budget, trace, path + (i,)) for i, a in enumerate(atom.args)]
    if all(a is b for a, b in zip(new, atom.args)):
        return atom
    return S.Atom(atom.pred, tuple(new))


def _normalize_formula(phi, system, budget, trace):
    # frame: [node, path, index of next child, finished children]; paths
    # are only built when a trace is requested (they get very long).
    result = None
    stack = [[phi, () if trace is not None else None, 0, []]]
    while stack:
        frame = stack[-1]
        node, path = frame[0], frame[1]
        if isinstance(node, S.Atom):
            node = _norm_atom_args(node, system, budget, trace, path)
            hit = None if budget.empty else rewrite_root(node, system)
            if hit is not None:
                rule, new = hit
                budget.spend()
                if trace is not None:
                    trace.append((rule.name, path))
                frame[0] = new
                continue
            result = node
        elif isinstance(node, (S.Top, S.Bot)):
            result = node
        elif isinstance(node, (S.BINARY + S.QUANTIFIERS)):
            kids = S.children(node)
            if frame[2] < len(kids):
                i = frame[2]
                frame[2] += 1
                stack.append([kids[i], None if path is None else path + (i,), 0, []])
                continue
            done = frame[3]
            if all(a is b for a, b in zip(done, kids)):
                result = node
            else:
                result = S.with_children(node, done)
        else:
            raise TypeError(f"not a formula: {type(node).__name__}")
        stack.pop()
        if stack:
            stack[-1][3].append(result)
    return result


def normalize_formula(phi, system: RewriteSystem, fuel=None, trace=False) -> NormalizationResult:
    budget = Budget(system.fuel if fuel is None else fuel)
    tr = [] if trace else None
    value = _normalize_formula(phi, system, budget, tr)
    outcome = NORMAL
    if budget.empty and is_reducible(value, system):
        outcome = EXHAUSTED
    return NormalizationResult(outcome, value, budget.used, tr)


def normalize(obj, system: RewriteSystem, fuel=None, trace=False) -> NormalizationResult:
    if S.is_term(obj):
        return normalize_term(obj, system, fuel, trace)
    return normalize_formula(obj, system, fuel, trace)


def is_reducible(obj, system: RewriteSystem) -> bool:
    """Whether some rule applies to a subterm or atom (binder bodies excluded)."""
    stack = [obj]
    while stack:
        o = stack.pop()
        if isinstance(o, (S.App, S.Bind, S.Atom)) and rewrite_root(o, system) is not None:
            return True
        stack.extend(S.children(o))
    return False


# ---------------------------------------------------------------------------
# Congruence

class NormalFormCache:
    """Normal forms keyed by (system, fuel, alpha-canonical input).

    Only completed normalizations are stored, so a cached answer is always
    the one an uncached run would give.
    """

    def __init__(self):
        self._data = {}
        self.hits = 0
        self.misses = 0

    def normalize(self, phi, system, fuel):
        key = (system.name, id(system), fuel, S.canonical(phi))
        hit = self._data.get(key)
        if hit is not None:
            self.hits += 1
            return hit
        self.misses += 1
        res = normalize(phi, system, fuel)
        if res.normal:
            self._data[key] = res
        return res

    def __len__(self):
        return len(self._data)


def congruent(a, b, system: RewriteSystem, fuel=None, cache: Optional[NormalFormCache] = None):
    """``True``/``False`` when both sides normalize; ``UNDETERMINED`` otherwise."""
    fuel = system.fuel if fuel is None else fuel
    if S.alpha_eq(a, b):
        return True
    norm = cache.normalize if cache is not None else (lambda p, s, f: normalize(p, s, f))
    ra = norm(a, system, fuel)
    if not ra.normal:
        return UNDETERMINED
    rb = norm(b, system, fuel)
    if not rb.normal:
        return UNDETERMINED
    return S.alpha_eq(ra.value, rb.value)


# ---------------------------------------------------------------------------
# Rules as axioms

def equality_for(sort, system: RewriteSystem):
    """Predicate used by :func:`axiomatize` for a term rule at ``sort``."""
    sig = system.signature
    eq = sig.predicates.get("=")
    if eq is not None and eq[0] == sort:
        return "="
    return "eq" + sort


def axiomatize(system: RewriteSystem):
    """Universal closures ``l = r`` (term rules) and ``l <-> r`` (formula rules)."""
    from ..lang.sorts import check_sorts
    out = []
    for rule in system.rules:
        if rule.kind == "term":
            sort = check_sorts(rule.lhs, system.signature).sort
            body = S.Atom(equality_for(sort, system), (rule.lhs, rule.rhs))
        else:
            body = S.Iff(rule.lhs, rule.rhs)
        out.append(S.forall_many(ordered_free_vars(rule.lhs), body))
    return out
