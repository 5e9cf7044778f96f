"""Head constructors and witnesses of closed normal proofs."""
from __future__ import annotations

from dataclasses import dataclass

from ..lang import syntax as S
from . import terms as P
from .check import Context, Judgment, check
from .reduce import is_normal


class WitnessError(ValueError):
    pass


def _require_closed_normal(p, axioms):
    if not is_normal(p):
        raise WitnessError("proof is not normal")
    open_hyps = P.free_hyps(p) - frozenset(axioms)
    if open_hyps:
        raise WitnessError("proof is not closed: free hypotheses " + ", ".join(sorted(open_hyps)))


def head_of_normal(p, axioms=()) -> str:
    """Tag of the top constructor of a closed normal proof (ascriptions skipped).

    ``axioms`` names hypotheses that stand for theory axioms; they may occur
    free in an otherwise closed proof.
    """
    _require_closed_normal(p, axioms)
    return P.tag(P.strip_asc(p))


@dataclass(frozen=True)
class Witness:
    term: object
    subproof: object
    instance: object        # the formula the subproof proves
    judgment: Judgment


def extract_witness(p, phi, ctx: Context, fuel=None, cache=None) -> Witness:
    """Witness of the top existential introduction of a proof of ``exists x. P``."""
    _require_closed_normal(p, ctx.axioms)
    j = check(ctx, p, phi, fuel, cache)
    if not j.ok:
        raise WitnessError(f"proof does not check: {j.reason}")
    head = P.strip_asc(p)
    if not isinstance(head, P.ExI):
        raise WitnessError(f"head of the proof is {P.tag(head)}, not existential-intro")
    from .check import Checker
    checker = Checker(ctx.system, fuel, cache)
    ex = checker.expose(phi, S.Exists, (), "an existential formula")
    instance = S.substitute(ex.body, {ex.var: head.witness})
    sub = check(ctx, head.proof, instance, fuel, cache)
    if not sub.ok:
        raise WitnessError(f"subproof does not check at the instance: {sub.reason}")
    return Witness(head.witness, head.proof, instance, sub)
