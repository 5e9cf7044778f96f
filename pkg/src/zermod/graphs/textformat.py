"""Text format for pointed graphs.

::

    graph g2 { nodes: 2, 3; edges: (3,2); root: 2 }

Node ids are integers or identifiers.  Graphs whose ids are anything else
(tuples from the constructions, sets from ``graph_of_set``) are printed
with integer labels, the root first.
"""
from __future__ import annotations

import re

from .pointed import FinitePointedGraph, integer_labels

_TOKEN = re.compile(r"\s*(?:(#[^\n]*)|([A-Za-z_][A-Za-z0-9_'.\-]*)|(-?\d+)|([{}();:,]))")


class GraphSyntaxError(ValueError):
    def __init__(self, message, text, pos):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line, self.col = line, col


def _tokens(text):
    pos, out = 0, []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise GraphSyntaxError(f"unexpected character {text[start]!r}", text, start)
        if m.group(2):
            out.append(("id", m.group(2), m.start(2)))
        elif m.group(3):
            out.append(("int", int(m.group(3)), m.start(3)))
        elif m.group(4):
            out.append(("op", m.group(4), m.start(4)))
        pos = m.end()
    out.append(("eof", None, len(text)))
    return out


class _Reader:
    def __init__(self, text):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def next(self):
        t = self.tok
        if t[0] != "eof":
            self.i += 1
        return t

    def expect(self, value):
        t = self.tok
        if t[0] == "eof" or t[1] != value:
            self.fail(f"expected {value!r}")
        return self.next()

    def fail(self, msg):
        found = self.tok[1]
        raise GraphSyntaxError(f"{msg}, found {'end of input' if found is None else repr(found)}",
                               self.text, self.tok[2])

    def node(self):
        t = self.tok
        if t[0] not in ("id", "int"):
            self.fail("expected a node id")
        self.next()
        return t[1]

    def graph(self):
        self.expect("graph")
        if self.tok[0] != "id":
            self.fail("expected a graph name")
        name = self.next()[1]
        self.expect("{")
        self.expect("nodes")
        self.expect(":")
        nodes = []
        if self.tok[1] != ";":
            nodes.append(self.node())
            while self.tok[1] == ",":
                self.next()
                nodes.append(self.node())
        self.expect(";")
        self.expect("edges")
        self.expect(":")
        edges = []
        if self.tok[1] == "(":
            edges.append(self.edge())
            while self.tok[1] == ",":
                self.next()
                edges.append(self.edge())
        self.expect(";")
        self.expect("root")
        self.expect(":")
        pos = self.tok[2]
        root = self.node()
        if self.tok[1] == ";":
            self.next()
        self.expect("}")
        if len(set(nodes)) != len(nodes):
            raise GraphSyntaxError("duplicate node id", self.text, pos)
        try:
            g = FinitePointedGraph(frozenset(nodes), frozenset(edges), root)
        except ValueError as e:
            raise GraphSyntaxError(str(e), self.text, pos) from None
        return name, g

    def edge(self):
        self.expect("(")
        c = self.node()
        self.expect(",")
        p = self.node()
        self.expect(")")
        return (c, p)


def parse_graphs(text: str) -> dict:
    """All graphs of a text, by name, in file order."""
    r = _Reader(text)
    out = {}
    while r.tok[0] != "eof":
        name, g = r.graph()
        if name in out:
            raise GraphSyntaxError(f"graph {name!r} defined twice", text, 0)
        out[name] = g
    return out


def parse_graph(text: str) -> FinitePointedGraph:
    gs = parse_graphs(text)
    if len(gs) != 1:
        raise ValueError(f"expected exactly one graph, found {len(gs)}")
    return next(iter(gs.values()))


def parse_pairs(text: str) -> frozenset:
    """A comma-separated list of node pairs ``(a, b), ...`` (possibly empty)."""
    r = _Reader(text)
    out = []
    if r.tok[1] == "(":
        out.append(r.edge())
        while r.tok[1] == ",":
            r.next()
            out.append(r.edge())
    if r.tok[0] != "eof":
        r.fail("expected end of input")
    return frozenset(out)


def show_pairs(pairs) -> str:
    return ", ".join(f"({a},{b})" for a, b in sorted(pairs, key=lambda e: (_key(e[0]), _key(e[1]))))


def _plain(n):
    return (isinstance(n, int) and not isinstance(n, bool)) or \
        (isinstance(n, str) and re.fullmatch(r"[A-Za-z_][A-Za-z0-9_'.\-]*", n) is not None
         and n not in ("graph", "nodes", "edges", "root"))


def _key(n):
    return (0, n, "") if isinstance(n, int) else (1, 0, n)


def printable(g: FinitePointedGraph) -> FinitePointedGraph:
    return g if all(_plain(n) for n in g.nodes) else integer_labels(g)


def show_graph(g: FinitePointedGraph, name="g") -> str:
    g = printable(g)
    nodes = ", ".join(str(n) for n in sorted(g.nodes, key=_key))
    edges = ", ".join(f"({c},{p})" for c, p in sorted(g.edges, key=lambda e: (_key(e[1]), _key(e[0]))))
    return f"graph {name} {{ nodes: {nodes}; edges: {edges}; root: {g.root} }}"
