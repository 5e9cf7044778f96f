"""Sorts, signatures and the object languages.

Five languages share one abstract syntax: ``zst`` (Zermelo set theory over
``=`` and ``in``), ``zclass`` (adds classes and ``mem``), ``zskol`` (adds
Skolem term formers and the usual abbreviations), ``zermod`` (the pointed
graph theory) and ``arith`` (the small arithmetic used for the even-four
example).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType

G, N, C, R = "G", "N", "C", "R"
SET, CLASS = "Set", "Class"
ALL_SORTS = (G, N, C, R, SET, CLASS)


@dataclass(frozen=True)
class Family:
    """Rank of a binder family.

    ``bound`` gives the sorts of the bound variables, ``param_sorts`` the
    sorts a parameter may take (first one is the default), ``extra`` the
    sorts of the arguments that follow the parameter arguments, ``result``
    the sort of the term.  ``closed`` families index their body by
    ``bound + params``; open ones (separation, class abstraction) leave the
    remaining variables of the body free.
    """

    bound: tuple
    param_sorts: tuple
    extra: tuple
    result: str
    closed: bool = True


@dataclass(frozen=True)
class Signature:
    name: str
    sorts: tuple
    functions: MappingProxyType   # name -> (argument sorts, result sort)
    predicates: MappingProxyType  # name -> argument sorts
    families: MappingProxyType    # family name -> Family
    default_sort: str
    allow_letters: bool = True    # undeclared 0-ary predicates are propositional letters
    numerals: bool = False        # ``S^n(0)`` parses from and prints as a digit string
    defined: frozenset = field(default_factory=frozenset)  # abbreviation symbols

    def __post_init__(self):
        if len(set(self.sorts)) != len(self.sorts):
            raise ValueError(f"duplicate sort names in signature {self.name}")

    def function_rank(self, fn):
        return self.functions.get(fn)

    def predicate_rank(self, pred):
        return self.predicates.get(pred)


def _sig(name, sorts, functions, predicates, families, default, **kw):
    return Signature(name, tuple(sorts), MappingProxyType(dict(functions)),
                     MappingProxyType(dict(predicates)), MappingProxyType(dict(families)),
                     default, **kw)


ZERMOD = _sig(
    "zermod", (G, N, C, R),
    {
        "root": ((G,), N),
        "/": ((G, N), G),
        "o": ((), N),
        "i": ((N,), N), "i'": ((N,), N),
        "j": ((N,), N), "j'": ((N,), N),
        "0": ((), N), "S": ((N,), N), "Pred": ((N,), N),
        "rho": ((G,), N), "rho'": ((N,), G),
        "Union": ((G,), G),
        "Pair": ((G, G), G),
        "Pow": ((G,), G),
        "Omega": ((), G),
        "TC": ((G,), G),
    },
    {
        "eta": (G, N, N),
        "=": (N, N),
        "mem": (N, C),
        "rel": (N, N, R),
        "I": (N,), "J": (N,), "Null": (N,), "Nat": (N,),
        "<": (N, N),
        "~~": (G, G),
        "in": (G, G),
        # Identity of graphs; only used when rules on graph terms are
        # turned into axioms.
        "eqG": (G, G),
    },
    {
        "compr": Family((G,), (G,), (G,), G),
        # The parameters of g/g' may be graphs as well as nodes; see the
        # Leibniz-style uses of node equality.
        "nclass": Family((N,), (N, G), (), C),
        "nrel": Family((N, N), (N, G), (), R),
    },
    G, numerals=True,
)

ARITH = _sig(
    "arith", (N,),
    {"0": ((), N), "S": ((N,), N), "+": ((N, N), N), "*": ((N, N), N)},
    {"=": (N, N)},
    {}, N, numerals=True,
)

ZST = _sig("zst", (SET,), {}, {"=": (SET, SET), "in": (SET, SET)}, {}, SET)

ZCLASS = _sig(
    "zclass", (SET, CLASS), {},
    {"=": (SET, SET), "in": (SET, SET), "mem": (SET, CLASS),
     # Zst-level abbreviations kept atomic by the translations.
     "Nat": (SET,), "Rgraph": (SET,), "~~": (SET, SET), "Subset": (SET, SET),
     "ISeg": (SET, SET), "Collapse": (SET, SET)},
    {}, SET,
    defined=frozenset({"Nat", "Rgraph", "~~", "Subset", "ISeg", "Collapse"}),
)

# Abbreviation term formers of Zskol, expanded by ``translate.zskol``.
ZSKOL_ABBREVIATIONS = frozenset({
    "Empty", "cup", "sing", "opair", "pi1", "pi2", "prod", "0", "1",
    "app", "restrict", "Car", "Clos", "proj", "LCS",
})

ZSKOL = _sig(
    "zskol", (SET, CLASS),
    {
        "Union": ((SET,), SET),
        "Pair": ((SET, SET), SET),
        "Pow": ((SET,), SET),
        "Nats": ((), SET),
        "TC": ((SET,), SET),
        "Empty": ((), SET),
        "cup": ((SET, SET), SET),
        "sing": ((SET,), SET),
        "opair": ((SET, SET), SET),
        "pi1": ((SET,), SET), "pi2": ((SET,), SET),
        "prod": ((SET, SET), SET),
        "0": ((), SET), "1": ((), SET),
        "app": ((SET, SET), SET),
        "restrict": ((SET, SET), SET),
        "Car": ((SET,), SET),
        "Clos": ((SET,), SET),
        "proj": ((SET,), SET),
        "LCS": ((SET,), SET),
    },
    dict(ZCLASS.predicates),
    {
        "sep": Family((SET,), (), (SET,), SET, closed=False),
        "cabs": Family((SET,), (), (), CLASS, closed=False),
    },
    SET,
    defined=ZCLASS.defined | ZSKOL_ABBREVIATIONS,
)

LANGUAGES = {s.name: s for s in (ZERMOD, ARITH, ZST, ZCLASS, ZSKOL)}


def get_language(name) -> Signature:
    if isinstance(name, Signature):
        return name
    try:
        return LANGUAGES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown language {name!r}; expected one of {sorted(LANGUAGES)}") from None
