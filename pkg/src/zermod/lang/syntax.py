"""Abstract syntax shared by every object language.

Terms are variables, applications and binder-family applications; formulas
are the usual first-order connectives over atoms.  Negation is encoded as
``Imp(A, BOT)`` and the biconditional as a conjunction of two implications;
the printer recovers both notations.

All nodes are frozen dataclasses, so values may be shared freely.  Equality
on nodes is syntactic; use :func:`alpha_eq` to compare up to bound names.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Union


@dataclass(frozen=True, slots=True)
class Var:
    name: str
    sort: str

    def __repr__(self):
        return f"Var({self.name}:{self.sort})"


@dataclass(frozen=True, slots=True)
class App:
    fn: str
    args: tuple = ()


@dataclass(frozen=True, slots=True)
class Bind:
    """Application of a binder-family symbol.

    ``family`` is one of ``compr``, ``nclass``, ``nrel`` (indexed symbol
    families, whose indexing formula ``body`` has its free variables among
    ``bound + params``) or ``sep``, ``cabs`` (set separation and class
    abstraction, which bind ``bound`` only; ``params`` is then empty).
    """

    family: str
    bound: tuple
    params: tuple
    body: object
    args: tuple = ()


@dataclass(frozen=True, slots=True)
class Atom:
    pred: str
    args: tuple = ()


@dataclass(frozen=True, slots=True)
class Top:
    pass


@dataclass(frozen=True, slots=True)
class Bot:
    pass


@dataclass(frozen=True, slots=True)
class And:
    left: object
    right: object


@dataclass(frozen=True, slots=True)
class Or:
    left: object
    right: object


@dataclass(frozen=True, slots=True)
class Imp:
    left: object
    right: object


@dataclass(frozen=True, slots=True)
class Forall:
    var: Var
    body: object


@dataclass(frozen=True, slots=True)
class Exists:
    var: Var
    body: object


# Pattern-only nodes; they occur in rewrite rules and nowhere else.

@dataclass(frozen=True, slots=True)
class Meta:
    """Formula metavariable standing for the indexing formula of a binder."""

    name: str


@dataclass(frozen=True, slots=True)
class MetaInst:
    """``P[u := t, ...]``: the matched indexing formula, instantiated.

    The keys are the binder-local names used in the rule's left-hand side;
    the parameters of the matched instance are replaced by its arguments.
    """

    name: str
    pairs: tuple  # of (local name, term)


@dataclass(frozen=True, slots=True)
class SeqMeta:
    """Sequence metavariable (``ys...``) for parameter and argument lists."""

    name: str


TOP = Top()
BOT = Bot()

Term = Union[Var, App, Bind]
Formula = Union[Atom, Top, Bot, And, Or, Imp, Forall, Exists, Meta, MetaInst]

TERM_TYPES = (Var, App, Bind)
FORMULA_TYPES = (Atom, Top, Bot, And, Or, Imp, Forall, Exists, Meta, MetaInst)
BINARY = (And, Or, Imp)
QUANTIFIERS = (Forall, Exists)


def is_term(obj) -> bool:
    return isinstance(obj, TERM_TYPES)


def is_formula(obj) -> bool:
    return isinstance(obj, FORMULA_TYPES)


def Not(phi):
    return Imp(phi, BOT)


def Iff(a, b):
    return And(Imp(a, b), Imp(b, a))


def conj(*parts):
    """Left-nested conjunction; ``TOP`` when empty."""
    if not parts:
        return TOP
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disj(*parts):
    if not parts:
        return BOT
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def forall_many(variables, body):
    for v in reversed(list(variables)):
        body = Forall(v, body)
    return body


def exists_many(variables, body):
    for v in reversed(list(variables)):
        body = Exists(v, body)
    return body


def numeral(n: int):
    t = App("0")
    for _ in range(n):
        t = App("S", (t,))
    return t


def as_numeral(t):
    """Return ``n`` when ``t`` is ``S^n(0)``, else ``None``."""
    n = 0
    while isinstance(t, App) and t.fn == "S" and len(t.args) == 1:
        t = t.args[0]
        n += 1
    if isinstance(t, App) and t.fn == "0" and not t.args:
        return n
    return None


def iff_parts(phi):
    """Return ``(a, b)`` when ``phi`` is ``(a -> b) /\\ (b -> a)``."""
    if (isinstance(phi, And) and isinstance(phi.left, Imp)
            and isinstance(phi.right, Imp)
            and phi.left.left == phi.right.right
            and phi.left.right == phi.right.left):
        return phi.left.left, phi.left.right
    return None


# ---------------------------------------------------------------------------
# Variables

def free_vars(obj) -> frozenset:
    """Free variables (as :class:`Var` values) of a term or formula."""
    out: set = set()
    _fv(obj, frozenset(), out)
    return frozenset(out)


def _fv(obj, bound, out):
    if isinstance(obj, Var):
        if obj not in bound:
            out.add(obj)
    elif isinstance(obj, (App, Atom)):
        for a in obj.args:
            _fv(a, bound, out)
    elif isinstance(obj, Bind):
        for a in obj.args:
            if not isinstance(a, SeqMeta):
                _fv(a, bound, out)
        inner = bound | set(obj.bound)
        if not isinstance(obj.params, SeqMeta):
            inner |= set(obj.params)
        _fv(obj.body, inner, out)
    elif isinstance(obj, BINARY):
        _fv(obj.left, bound, out)
        _fv(obj.right, bound, out)
    elif isinstance(obj, QUANTIFIERS):
        _fv(obj.body, bound | {obj.var}, out)
    elif isinstance(obj, MetaInst):
        for _, t in obj.pairs:
            _fv(t, bound, out)
    elif isinstance(obj, (Top, Bot, Meta, SeqMeta)):
        pass
    else:
        raise TypeError(f"not syntax: {obj!r}")


def free_names(obj) -> frozenset:
    return frozenset(v.name for v in free_vars(obj))


def all_names(obj) -> set:
    """Every variable name occurring in ``obj``, free or bound."""
    out: set = set()
    stack = [obj]
    while stack:
        o = stack.pop()
        if isinstance(o, Var):
            out.add(o.name)
        elif isinstance(o, (App, Atom)):
            stack.extend(o.args)
        elif isinstance(o, Bind):
            stack.extend(a for a in o.args if not isinstance(a, SeqMeta))
            stack.extend(o.bound)
            if not isinstance(o.params, SeqMeta):
                stack.extend(o.params)
            stack.append(o.body)
        elif isinstance(o, BINARY):
            stack.extend((o.left, o.right))
        elif isinstance(o, QUANTIFIERS):
            stack.extend((o.var, o.body))
        elif isinstance(o, MetaInst):
            stack.extend(t for _, t in o.pairs)
    return out


_TRAILING_DIGITS = re.compile(r"\d+$")


def fresh_name(base: str, avoid: Iterable[str]) -> str:
    """First of ``base``, ``base1``, ``base2``, ... not in ``avoid``."""
    avoid = set(avoid)
    if base not in avoid:
        return base
    stem = _TRAILING_DIGITS.sub("", base) or base
    for k in itertools.count(1):
        cand = f"{stem}{k}"
        if cand not in avoid:
            return cand
    raise AssertionError("unreachable")


def fresh_var(base: str, sort: str, avoid: Iterable[str]) -> Var:
    return Var(fresh_name(base, avoid), sort)


# ---------------------------------------------------------------------------
# Substitution

def substitute(obj, binding: Mapping[Var, object]):
    """Capture-avoiding simultaneous substitution.

    Raises :class:`ValueError` when a variable is bound to a term whose sort
    is known to differ (see :func:`term_sort_hint`).
    """
    binding = {v: t for v, t in binding.items() if v != t}
    for v, t in binding.items():
        s = term_sort_hint(t)
        if s is not None and s != v.sort:
            raise ValueError(f"sort mismatch: {v.name}:{v.sort} := term of sort {s}")
    if not binding:
        return obj
    range_names = set()
    for t in binding.values():
        range_names |= free_names(t)
    return _subst(obj, binding, range_names)


def term_sort_hint(t):
    """Sort of a term when evident without a signature (variables only)."""
    return t.sort if isinstance(t, Var) else None


def _rename_binder(var, body, binding, range_names):
    """Pick a name for ``var`` that cannot capture anything in the range."""
    if var.name in range_names:
        avoid = range_names | all_names(body) | {v.name for v in binding}
        new = Var(fresh_name(var.name, avoid), var.sort)
        return new, True
    return var, False


def _subst(obj, binding, range_names):
    if isinstance(obj, Var):
        return binding.get(obj, obj)
    if isinstance(obj, App):
        if not obj.args:
            return obj
        return App(obj.fn, tuple(_subst(a, binding, range_names) for a in obj.args))
    if isinstance(obj, Atom):
        if not obj.args:
            return obj
        return Atom(obj.pred, tuple(_subst(a, binding, range_names) for a in obj.args))
    if isinstance(obj, (Top, Bot, Meta, SeqMeta)):
        return obj
    if isinstance(obj, BINARY):
        return type(obj)(_subst(obj.left, binding, range_names),
                         _subst(obj.right, binding, range_names))
    if isinstance(obj, QUANTIFIERS):
        inner = {v: t for v, t in binding.items() if v != obj.var}
        if not inner:
            return obj
        inner = {v: t for v, t in inner.items() if v in free_vars(obj.body)}
        if not inner:
            return obj
        rn = set()
        for t in inner.values():
            rn |= free_names(t)
        var, renamed = _rename_binder(obj.var, obj.body, inner, rn)
        body = obj.body
        if renamed:
            body = _subst(body, {obj.var: var}, {var.name})
        return type(obj)(var, _subst(body, inner, rn))
    if isinstance(obj, Bind):
        args = tuple(a if isinstance(a, SeqMeta) else _subst(a, binding, range_names)
                     for a in obj.args)
        locals_ = list(obj.bound)
        if not isinstance(obj.params, SeqMeta):
            locals_ += list(obj.params)
        inner = {v: t for v, t in binding.items() if v not in locals_}
        if isinstance(obj.body, Meta):
            inner = {}
        else:
            fvb = free_vars(obj.body)
            inner = {v: t for v, t in inner.items() if v in fvb}
        if not inner:
            return Bind(obj.family, obj.bound, obj.params, obj.body, args)
        rn = set()
        for t in inner.values():
            rn |= free_names(t)
        renaming = {}
        avoid = rn | all_names(obj.body) | {v.name for v in inner}
        new_locals = []
        for v in locals_:
            if v.name in rn:
                nv = Var(fresh_name(v.name, avoid), v.sort)
                avoid.add(nv.name)
                renaming[v] = nv
                new_locals.append(nv)
            else:
                new_locals.append(v)
        body = obj.body
        if renaming:
            body = _subst(body, renaming, {v.name for v in renaming.values()})
        nb = len(obj.bound)
        bound = tuple(new_locals[:nb])
        params = obj.params if isinstance(obj.params, SeqMeta) else tuple(new_locals[nb:])
        return Bind(obj.family, bound, params, _subst(body, inner, rn), args)
    if isinstance(obj, MetaInst):
        return MetaInst(obj.name, tuple((k, _subst(t, binding, range_names))
                                        for k, t in obj.pairs))
    raise TypeError(f"not syntax: {obj!r}")


def rename_bound(obj, avoid: Iterable[str]):
    """Alpha-rename every binder whose name is in ``avoid``."""
    avoid = set(avoid)
    return _rename_all(obj, avoid)


def _rename_all(obj, avoid):
    if isinstance(obj, (Var, Top, Bot, Meta, SeqMeta)):
        return obj
    if isinstance(obj, App):
        return App(obj.fn, tuple(_rename_all(a, avoid) for a in obj.args))
    if isinstance(obj, Atom):
        return Atom(obj.pred, tuple(_rename_all(a, avoid) for a in obj.args))
    if isinstance(obj, BINARY):
        return type(obj)(_rename_all(obj.left, avoid), _rename_all(obj.right, avoid))
    if isinstance(obj, QUANTIFIERS):
        body = obj.body
        var = obj.var
        if var.name in avoid:
            nv = Var(fresh_name(var.name, avoid | all_names(body)), var.sort)
            body = _subst(body, {var: nv}, {nv.name})
            var = nv
        return type(obj)(var, _rename_all(body, avoid | {var.name}))
    if isinstance(obj, Bind):
        args = tuple(a if isinstance(a, SeqMeta) else _rename_all(a, avoid) for a in obj.args)
        return Bind(obj.family, obj.bound, obj.params, obj.body, args)
    if isinstance(obj, MetaInst):
        return MetaInst(obj.name, tuple((k, _rename_all(t, avoid)) for k, t in obj.pairs))
    raise TypeError(f"not syntax: {obj!r}")


# ---------------------------------------------------------------------------
# Alpha-equivalence

def alpha_eq(a, b) -> bool:
    """True iff ``a`` and ``b`` differ only in the names of bound variables."""
    return _aeq(a, b, {}, {}, 0)


def _aeq(a, b, ea, eb, depth):
    if type(a) is not type(b):
        return False
    if isinstance(a, Var):
        ia, ib = ea.get(a), eb.get(b)
        if ia is None and ib is None:
            return a == b
        return ia == ib and a.sort == b.sort
    if isinstance(a, (App, Atom)):
        head_a = a.fn if isinstance(a, App) else a.pred
        head_b = b.fn if isinstance(b, App) else b.pred
        return (head_a == head_b and len(a.args) == len(b.args)
                and all(_aeq(x, y, ea, eb, depth) for x, y in zip(a.args, b.args)))
    if isinstance(a, (Top, Bot)):
        return True
    if isinstance(a, BINARY):
        return _aeq(a.left, b.left, ea, eb, depth) and _aeq(a.right, b.right, ea, eb, depth)
    if isinstance(a, QUANTIFIERS):
        if a.var.sort != b.var.sort:
            return False
        return _aeq(a.body, b.body, {**ea, a.var: depth}, {**eb, b.var: depth}, depth + 1)
    if isinstance(a, Bind):
        if a.family != b.family or len(a.args) != len(b.args):
            return False
        if not all(_aeq_seq(x, y, ea, eb, depth) for x, y in zip(a.args, b.args)):
            return False
        if isinstance(a.params, SeqMeta) or isinstance(b.params, SeqMeta):
            if a.params != b.params:
                return False
            la, lb = list(a.bound), list(b.bound)
        else:
            if len(a.params) != len(b.params):
                return False
            la, lb = list(a.bound) + list(a.params), list(b.bound) + list(b.params)
        if len(la) != len(lb) or any(x.sort != y.sort for x, y in zip(la, lb)):
            return False
        ea2, eb2 = dict(ea), dict(eb)
        for k, (x, y) in enumerate(zip(la, lb)):
            ea2[x] = depth + k
            eb2[y] = depth + k
        return _aeq(a.body, b.body, ea2, eb2, depth + len(la))
    if isinstance(a, Meta):
        return a == b
    if isinstance(a, MetaInst):
        return (a.name == b.name and len(a.pairs) == len(b.pairs)
                and all(k1 == k2 and _aeq(t1, t2, ea, eb, depth)
                        for (k1, t1), (k2, t2) in zip(a.pairs, b.pairs)))
    if isinstance(a, SeqMeta):
        return a == b
    raise TypeError(f"not syntax: {a!r}")


def _aeq_seq(x, y, ea, eb, depth):
    if isinstance(x, SeqMeta) or isinstance(y, SeqMeta):
        return x == y
    return _aeq(x, y, ea, eb, depth)


def canonical(obj):
    """Rename bound variables to positional names (``%0``, ``%1``, ...).

    Two objects are alpha-equivalent iff their canonical forms are equal,
    which makes the result usable as a cache key.
    """
    return _canon(obj, {}, 0)


def _canon(obj, env, depth):
    if isinstance(obj, Var):
        return env.get(obj, obj)
    if isinstance(obj, App):
        return App(obj.fn, tuple(_canon(a, env, depth) for a in obj.args)) if obj.args else obj
    if isinstance(obj, Atom):
        return Atom(obj.pred, tuple(_canon(a, env, depth) for a in obj.args)) if obj.args else obj
    if isinstance(obj, (Top, Bot, Meta, SeqMeta)):
        return obj
    if isinstance(obj, BINARY):
        return type(obj)(_canon(obj.left, env, depth), _canon(obj.right, env, depth))
    if isinstance(obj, QUANTIFIERS):
        nv = Var(f"%{depth}", obj.var.sort)
        return type(obj)(nv, _canon(obj.body, {**env, obj.var: nv}, depth + 1))
    if isinstance(obj, Bind):
        args = tuple(a if isinstance(a, SeqMeta) else _canon(a, env, depth) for a in obj.args)
        locals_ = list(obj.bound)
        if not isinstance(obj.params, SeqMeta):
            locals_ += list(obj.params)
        env2 = dict(env)
        new = []
        for k, v in enumerate(locals_):
            nv = Var(f"%{depth + k}", v.sort)
            env2[v] = nv
            new.append(nv)
        nb = len(obj.bound)
        params = obj.params if isinstance(obj.params, SeqMeta) else tuple(new[nb:])
        return Bind(obj.family, tuple(new[:nb]), params,
                    _canon(obj.body, env2, depth + len(locals_)), args)
    if isinstance(obj, MetaInst):
        return MetaInst(obj.name, tuple((k, _canon(t, env, depth)) for k, t in obj.pairs))
    raise TypeError(f"not syntax: {obj!r}")


# ---------------------------------------------------------------------------
# Traversal helpers

def children(obj) -> tuple:
    """Positional children used by rewrite positions and traces.

    Binder bodies are symbol indices, not subterms, so they are not children.
    """
    if isinstance(obj, (App, Atom, Bind)):
        return obj.args
    if isinstance(obj, BINARY):
        return (obj.left, obj.right)
    if isinstance(obj, QUANTIFIERS):
        return (obj.body,)
    return ()


def with_children(obj, new):
    if isinstance(obj, App):
        return App(obj.fn, tuple(new))
    if isinstance(obj, Atom):
        return Atom(obj.pred, tuple(new))
    if isinstance(obj, Bind):
        return Bind(obj.family, obj.bound, obj.params, obj.body, tuple(new))
    if isinstance(obj, BINARY):
        return type(obj)(*new)
    if isinstance(obj, QUANTIFIERS):
        return type(obj)(obj.var, new[0])
    if new:
        raise ValueError("leaf has no children")
    return obj


def subterm_at(obj, path):
    for i in path:
        obj = children(obj)[i]
    return obj


def replace_at(obj, path, new):
    if not path:
        return new
    kids = list(children(obj))
    kids[path[0]] = replace_at(kids[path[0]], path[1:], new)
    return with_children(obj, kids)


def size(obj) -> int:
    """Number of nodes, counted iteratively (safe on very deep formulas)."""
    n = 0
    stack = [obj]
    while stack:
        o = stack.pop()
        n += 1
        stack.extend(children(o))
        if isinstance(o, Bind) and not isinstance(o.body, Meta):
            stack.append(o.body)
    return n


def depth(obj) -> int:
    best = 0
    stack = [(obj, 1)]
    while stack:
        o, d = stack.pop()
        best = max(best, d)
        stack.extend((c, d + 1) for c in children(o))
    return best


def symbols(obj) -> set:
    """Function/predicate/family names used anywhere, binder bodies included."""
    out = set()
    stack = [obj]
    while stack:
        o = stack.pop()
        if isinstance(o, App):
            out.add(o.fn)
        elif isinstance(o, Atom):
            out.add(o.pred)
        elif isinstance(o, Bind):
            out.add(o.family)
            stack.append(o.body)
        stack.extend(c for c in children(o) if not isinstance(c, SeqMeta))
    return out
