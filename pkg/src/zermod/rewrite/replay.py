"""Independent single-step checker for rewrite traces."""
from __future__ import annotations

from ..lang import syntax as S
from .engine import match, instantiate
from .rules import RewriteSystem


class ReplayError(ValueError):
    pass


def replay_step(obj, rule_name, path, system: RewriteSystem):
    """Apply the named rule at ``path``; raise if it is not a legal instance."""
    try:
        rule = system.rule(rule_name)
    except KeyError:
        raise ReplayError(f"unknown rule {rule_name!r}") from None
    try:
        target = S.subterm_at(obj, path)
    except (IndexError, TypeError):
        raise ReplayError(f"no subterm at position {path}") from None
    s = match(rule.lhs, target)
    if s is None:
        raise ReplayError(f"rule {rule_name} does not match at position {path}")
    return S.replace_at(obj, tuple(path), instantiate(rule.rhs, s))


def replay(start, trace, system: RewriteSystem):
    """Re-run a trace step by step and return the final value."""
    obj = start
    for k, (name, path) in enumerate(trace):
        try:
            obj = replay_step(obj, name, path, system)
        except ReplayError as e:
            raise ReplayError(f"step {k}: {e}") from None
    return obj
