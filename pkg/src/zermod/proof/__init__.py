"""Natural deduction modulo: proof terms, checking, cut elimination and witnesses."""
from .terms import (
    Hyp, Lam, App, Pair, Fst, Snd, Inl, Inr, Case, TopI, BotE, AllI, AllE, ExI, ExE, Asc,
    TT, TAGS, INTRODUCTIONS, PROOF_TYPES, tag, strip_asc, free_hyps, free_objvars,
    subst_hyp, subst_obj, constructors_used,
)
from .check import CHECKED, FAILED, Context, Judgment, Checker, make_context, check, infer
from .reduce import contract, find_redex, is_normal, step, reduce, ProofReplayError, replay, replay_step
from .witness import WitnessError, Witness, head_of_normal, extract_witness
from .parser import ProofEntry, parse_proof, parse_proof_file, show_proof, show_entry
from .corpus import load_corpus, entry_context, entry_system

__all__ = [
    "Hyp", "Lam", "App", "Pair", "Fst", "Snd", "Inl", "Inr", "Case", "TopI", "BotE",
    "AllI", "AllE", "ExI", "ExE", "Asc", "TT", "TAGS", "INTRODUCTIONS", "PROOF_TYPES",
    "tag", "strip_asc", "free_hyps", "free_objvars", "subst_hyp", "subst_obj",
    "constructors_used", "CHECKED", "FAILED", "Context", "Judgment", "Checker",
    "make_context", "check", "infer", "contract", "find_redex", "is_normal", "step",
    "reduce", "ProofReplayError", "replay", "replay_step", "WitnessError", "Witness",
    "head_of_normal", "extract_witness", "ProofEntry", "parse_proof", "parse_proof_file",
    "show_proof", "show_entry", "load_corpus", "entry_context", "entry_system",
]
