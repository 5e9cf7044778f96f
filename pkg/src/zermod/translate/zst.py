"""The axioms of Zermelo set theory as Zst syntax.

The two schemes are functions of the formula they are instantiated with.
"""
from __future__ import annotations

from ..lang import syntax as S
from ..lang.parser import parse_formula

SUBSET = "forall x:Set. (x in a -> x in b)"

FIXED_AXIOMS = {
    "reflexivity": "forall x:Set. x = x",
    "equality_compat": "forall x:Set. forall x':Set. forall y:Set. (x = x' /\\ x = y -> x' = y)",
    "mem_left_compat": "forall x:Set. forall x':Set. forall y:Set. (x = x' /\\ x in y -> x' in y)",
    "mem_right_compat": "forall x:Set. forall y:Set. forall y':Set. (y = y' /\\ x in y -> x in y')",
    "pairing": "forall a:Set. forall b:Set. exists e:Set. forall x:Set. (x in e <-> x = a \\/ x = b)",
    "union": "forall a:Set. exists e:Set. forall x:Set. (x in e <-> (exists y:Set. (x in y /\\ y in a)))",
    "powerset": "forall a:Set. exists e:Set. forall x:Set. (x in e <-> (forall y:Set. (y in x -> y in a)))",
    "infinity": "exists e:Set. ((forall a:Set. ((forall x:Set. ~x in a) -> a in e))"
                " /\\ (forall a:Set. (a in e -> (forall b:Set. ((forall x:Set. (x in b <-> x in a \\/ x = a)) -> b in e)))))",
    "transitive_closure": "forall a:Set. exists e:Set. ((forall x:Set. (x in a -> x in e))"
                          " /\\ (forall x:Set. forall y:Set. (x in y /\\ y in e -> x in e)))",
}


def fixed_axioms() -> dict:
    return {k: parse_formula(v, "zst") for k, v in FIXED_AXIOMS.items()}


def comprehension(p, x: S.Var, a: S.Var = None):
    """``forall params. forall a. exists e. forall x. (x in e <-> x in a /\\ P)``."""
    a = a or S.Var(S.fresh_name("a", S.all_names(p)), "Set")
    e = S.Var(S.fresh_name("e", S.all_names(p) | {a.name, x.name}), "Set")
    body = S.Forall(x, S.Iff(S.Atom("in", (x, e)), S.And(S.Atom("in", (x, a)), p)))
    params = sorted(S.free_vars(p) - {x, a}, key=lambda v: v.name)
    return S.forall_many(params + [a], S.Exists(e, body))


def strong_extensionality(r, x: S.Var, y: S.Var):
    """The scheme for a relation ``R(x, y)`` given as a formula in ``x`` and ``y``."""
    used = S.all_names(r) | {x.name, y.name}
    names = {}
    for hint in ("a", "b", "x'", "y'"):
        names[hint] = S.Var(S.fresh_name(hint, used), "Set")
        used.add(names[hint].name)
    a, b, x2, y2 = names["a"], names["b"], names["x'"], names["y'"]

    def R(u, v):
        return S.substitute(r, {x: u, y: v})
    forth = S.forall_many([x, x2, y], S.Imp(S.And(S.Atom("in", (x2, x)), r),
                                            S.Exists(y2, S.And(S.Atom("in", (y2, y)), R(x2, y2)))))
    back = S.forall_many([y, y2, x], S.Imp(S.And(S.Atom("in", (y2, y)), r),
                                           S.Exists(x2, S.And(S.Atom("in", (x2, x)), R(x2, y2)))))
    body = S.Imp(S.conj(R(a, b), forth, back), S.Atom("=", (a, b)))
    params = sorted(S.free_vars(r) - {x, y}, key=lambda v: v.name)
    return S.forall_many(params + [a, b], body)
