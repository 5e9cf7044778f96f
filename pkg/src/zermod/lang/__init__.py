"""Object-language syntax: terms, formulas, signatures, parsing and printing."""
from .syntax import (
    Var, App, Bind, Atom, Top, Bot, And, Or, Imp, Forall, Exists,
    Meta, MetaInst, SeqMeta, TOP, BOT, Not, Iff, conj, disj,
    forall_many, exists_many, numeral, as_numeral, free_vars, free_names,
    fresh_name, substitute, alpha_eq, canonical, is_term, is_formula,
)
from .signatures import (
    Signature, Family, ZERMOD, ARITH, ZST, ZCLASS, ZSKOL, LANGUAGES, get_language,
)
from .parser import ParseError, SortError, parse, parse_formula, parse_term, tokenize
from .printer import show
from .sorts import SortReport, check_sorts, term_sort

__all__ = [
    "Var", "App", "Bind", "Atom", "Top", "Bot", "And", "Or", "Imp", "Forall", "Exists",
    "Meta", "MetaInst", "SeqMeta", "TOP", "BOT", "Not", "Iff", "conj", "disj",
    "forall_many", "exists_many", "numeral", "as_numeral", "free_vars", "free_names",
    "fresh_name", "substitute", "alpha_eq", "canonical", "is_term", "is_formula",
    "Signature", "Family", "ZERMOD", "ARITH", "ZST", "ZCLASS", "ZSKOL", "LANGUAGES",
    "get_language", "ParseError", "SortError", "parse", "parse_formula", "parse_term",
    "tokenize", "show", "SortReport", "check_sorts", "term_sort",
]
