"""The bundled proof corpus and helpers for running proof-file entries."""
from __future__ import annotations

from functools import lru_cache

from ..rewrite.builtin import fixture_text, load_system
from .check import make_context
from .parser import parse_proof_file


@lru_cache(maxsize=None)
def load_corpus():
    return tuple(parse_proof_file(fixture_text("proofs.txt")))


def entry_system(entry, fuel=None):
    sys = load_system(entry.ruleset)
    if fuel is not None:
        from ..rewrite.rules import with_fuel
        sys = with_fuel(sys, fuel)
    return sys


def entry_context(entry, fuel=None):
    """Context of a proof entry; its ``given`` hypotheses count as axioms."""
    return make_context(entry_system(entry, fuel), entry.given)
