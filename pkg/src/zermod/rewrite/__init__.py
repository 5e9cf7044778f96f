"""Rewriting on terms and atomic formulas, and the congruence it generates."""
from .rules import (
    DEFAULT_FUEL, Rule, RewriteSystem, make_rule, parse_rule, parse_rules,
    format_rules, with_fuel,
)
from .engine import (
    NORMAL, EXHAUSTED, UNDETERMINED, NormalizationResult, NormalFormCache,
    match, instantiate, apply_rule, rewrite_root, reduce_atom, normalize,
    normalize_term, normalize_formula, is_reducible, congruent, axiomatize,
)
from .replay import ReplayError, replay, replay_step
from .builtin import zermod_rules, arith_rules, naive_comprehension_rules, load_system

__all__ = [
    "DEFAULT_FUEL", "Rule", "RewriteSystem", "make_rule", "parse_rule", "parse_rules",
    "format_rules", "with_fuel", "NORMAL", "EXHAUSTED", "UNDETERMINED",
    "NormalizationResult", "NormalFormCache", "match", "instantiate", "apply_rule",
    "rewrite_root", "reduce_atom", "normalize", "normalize_term", "normalize_formula",
    "is_reducible", "congruent", "axiomatize", "ReplayError", "replay", "replay_step",
    "zermod_rules", "arith_rules", "naive_comprehension_rules", "load_system",
]
