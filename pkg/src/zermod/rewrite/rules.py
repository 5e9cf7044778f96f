"""Rewrite rules, rewrite systems and the rule-file format.

A rule file looks like::

    language zermod
    [root_reroot]  root(a / x) --> x
    [eta_union]    eta(Union(a), x, x') -->
        (exists y:N. exists y':N. (x = i(y) /\\ x' = i(y') /\\ eta(a, y, y')))
        \\/ ...

Indented lines continue the previous rule; ``#`` starts a comment.  Inside
a binder on the left-hand side a bare name in place of the indexing formula
is a formula metavariable, ``ys...`` a parameter-sequence metavariable, and
``P[u := t]`` on the right-hand side instantiates the matched formula.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from ..lang import syntax as S
from ..lang.parser import (
    ParseError, SortError, TokenStream, elaborate_formula, elaborate_term,
    parse_raw_formula, parse_raw_term,
)
from ..lang.printer import show
from ..lang.signatures import Signature, get_language
from ..lang.sorts import check_sorts

DEFAULT_FUEL = 10_000


@dataclass(frozen=True)
class Rule:
    name: str
    lhs: object
    rhs: object
    kind: str            # "term" or "formula"
    variables: tuple = ()  # pattern variables in order of first occurrence

    def head(self):
        return head_key(self.lhs)

    def text(self, lang="zermod"):
        return f"{show(self.lhs, lang)} --> {show(self.rhs, lang)}"


def head_key(obj):
    if isinstance(obj, S.App):
        return ("fn", obj.fn)
    if isinstance(obj, S.Bind):
        return ("bind", obj.family)
    if isinstance(obj, S.Atom):
        return ("pred", obj.pred)
    return None


@dataclass(frozen=True)
class RewriteSystem:
    name: str
    rules: tuple
    signature: Signature
    fuel: int = DEFAULT_FUEL
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        idx = {}
        for r in self.rules:
            idx.setdefault(r.head(), []).append(r)
        object.__setattr__(self, "_index", {k: tuple(v) for k, v in idx.items()})
        names = [r.name for r in self.rules]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate rule names in system {self.name}")

    def candidates(self, obj):
        return self._index.get(head_key(obj), ())

    def rule(self, name) -> Rule:
        for r in self.rules:
            if r.name == name:
                return r
        raise KeyError(name)

    @property
    def language(self):
        return self.signature.name

    def __len__(self):
        return len(self.rules)

    def __repr__(self):
        return f"RewriteSystem({self.name!r}, {len(self.rules)} rules, fuel={self.fuel})"


def ordered_free_vars(obj):
    """Free variables in order of first occurrence (left to right)."""
    seen = []
    bound_stack = []

    def walk(o, bound):
        if isinstance(o, S.Var):
            if o not in bound and o not in seen:
                seen.append(o)
        elif isinstance(o, (S.App, S.Atom)):
            for a in o.args:
                walk(a, bound)
        elif isinstance(o, S.Bind):
            inner = bound | set(o.bound)
            if not isinstance(o.params, S.SeqMeta):
                inner |= set(o.params)
            if not isinstance(o.body, S.Meta):
                walk(o.body, inner)
            for a in o.args:
                if not isinstance(a, S.SeqMeta):
                    walk(a, bound)
        elif isinstance(o, S.BINARY):
            walk(o.left, bound)
            walk(o.right, bound)
        elif isinstance(o, S.QUANTIFIERS):
            walk(o.body, bound | {o.var})
        elif isinstance(o, S.MetaInst):
            for _, t in o.pairs:
                walk(t, bound)

    del bound_stack
    walk(obj, frozenset())
    return tuple(seen)


def make_rule(name, lhs, rhs, sig="zermod") -> Rule:
    sig = get_language(sig)
    if isinstance(lhs, S.Var):
        raise ValueError(f"rule {name}: left-hand side is a bare variable")
    if S.is_formula(lhs):
        if not isinstance(lhs, S.Atom):
            raise ValueError(f"rule {name}: formula rule must have an atomic left-hand side")
        if not S.is_formula(rhs):
            raise ValueError(f"rule {name}: formula rule needs a formula right-hand side")
        kind = "formula"
    else:
        if not S.is_term(rhs):
            raise ValueError(f"rule {name}: term rule needs a term right-hand side")
        kind = "term"
    pv = ordered_free_vars(lhs)
    extra = S.free_vars(rhs) - set(pv)
    if extra:
        raise ValueError(f"rule {name}: right-hand side has unbound variable(s) "
                         + ", ".join(sorted(v.name for v in extra)))
    for side, obj in (("left", lhs), ("right", rhs)):
        rep = check_sorts(obj, sig)
        if not rep.ok:
            raise ValueError(f"rule {name}: {side}-hand side is ill-sorted: {rep.error}")
    return Rule(name, lhs, rhs, kind, pv)


_NAME_RE = re.compile(r"\s*\[([A-Za-z0-9_'.-]+)\]\s*")


def _logical_lines(text):
    """Join continuation lines; yield (line number, text)."""
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if raw[:1] in (" ", "\t") and out:
            out[-1][1] += " " + line.strip()
        else:
            out.append([no, line.strip()])
    return out


def parse_rule(text, sig="zermod", name="rule") -> Rule:
    sig = get_language(sig)
    m = _NAME_RE.match(text)
    if m:
        name = m.group(1)
        text = text[m.end():]
    if "-->" not in text:
        raise ParseError(f"rule {name}: missing '-->'")
    stream = TokenStream(text)
    kind = None
    raw_lhs = None
    try:
        raw_lhs = parse_raw_formula(stream, sig, rule_mode=True)
        if stream.at_op("-->") and raw_lhs[0] == "atom":
            kind = "formula"
    except ParseError:
        pass
    if kind is None:
        stream.i = 0
        raw_lhs = parse_raw_term(stream, sig, rule_mode=True)
        kind = "term"
    stream.expect("-->")
    if kind == "formula":
        raw_rhs = parse_raw_formula(stream, sig, rule_mode=True)
    else:
        raw_rhs = parse_raw_term(stream, sig, rule_mode=True)
    if stream.tok.kind != "eof":
        stream.error(f"unexpected {stream.tok.value!r} after rule")
    metas = {}
    if kind == "formula":
        lhs, free = elaborate_formula(raw_lhs, sig, text, metas=metas)
        rhs, _ = elaborate_formula(raw_rhs, sig, text, known=free, metas=metas)
    else:
        lhs, free = elaborate_term(raw_lhs, sig, text, metas=metas)
        rhs, _ = elaborate_term(raw_rhs, sig, text, known=free, metas=metas,
                                expected=_sort_of(lhs, sig))
    return make_rule(name, lhs, rhs, sig)


def _sort_of(t, sig):
    rep = check_sorts(t, sig)
    return rep.sort if rep.ok else None


def parse_rules(text, name=None, language=None, fuel=DEFAULT_FUEL) -> RewriteSystem:
    lang = language
    rules = []
    for no, line in _logical_lines(text):
        head = line.split()
        if head[0] == "language" and len(head) == 2:
            lang = head[1]
            continue
        if head[0] == "system" and len(head) == 2:
            name = name or head[1]
            continue
        try:
            rules.append(parse_rule(line, lang or "zermod", name=f"rule{len(rules) + 1}"))
        except (ParseError, SortError, ValueError) as e:
            raise type(e)(f"line {no}: {e}") if not isinstance(e, ParseError) \
                else ParseError(f"line {no}: {e}") from None
    return RewriteSystem(name or "rules", tuple(rules), get_language(lang or "zermod"), fuel)


def format_rules(system: RewriteSystem) -> str:
    """Print a system in the rule-file format (re-parseable)."""
    lang = system.signature.name
    lines = [f"system {system.name}", f"language {lang}"]
    for r in system.rules:
        lines.append(f"[{r.name}] {r.text(lang)}")
    return "\n".join(lines) + "\n"


def with_fuel(system: RewriteSystem, fuel: Optional[int]) -> RewriteSystem:
    if fuel is None or fuel == system.fuel:
        return system
    return RewriteSystem(system.name, system.rules, system.signature, fuel)
