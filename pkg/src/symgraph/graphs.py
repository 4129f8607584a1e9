"""Alphabets and directed graphs over them.

A directed graph on an alphabet generates a symbolic dynamics: the
admissible words are exactly the walks on the graph, read off as letter
sequences.  This module holds the graph value types, the JSON graph-spec
document format, structural diagnostics, and the derived second-order
graph whose vertices are the edges of the original.

Conventions
-----------
* adjacency[i][j] == 1 means there is an arrow from symbol i to symbol j;
  at most one arrow per ordered pair, self-loops allowed.
* "weakly connected" means the undirected shadow is connected and no
  vertex is isolated.  (The two notions only differ for a single vertex
  without a self-loop, which counts as disconnected here.)
* all types are frozen; every function is pure, so values can be shared
  freely across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .intmat import IntMatrix, mat_total

HIGHER_ORDER_SEP = ">"


class GraphSpecError(ValueError):
    """Raised for malformed graph-spec documents or inconsistent graphs."""


@dataclass(frozen=True)
class Alphabet:
    """Ordered tuple of distinct symbols; index <-> symbol is a bijection."""

    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.symbols:
            raise GraphSpecError("alphabet must contain at least one symbol")
        for sym in self.symbols:
            if not isinstance(sym, str) or not sym or sym != sym.strip():
                raise GraphSpecError(f"bad symbol {sym!r}: need non-empty stripped string")
        if len(set(self.symbols)) != len(self.symbols):
            dupes = sorted({s for s in self.symbols if self.symbols.count(s) > 1})
            raise GraphSpecError(f"duplicate symbols in alphabet: {dupes}")

    @property
    def k(self) -> int:
        return len(self.symbols)

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise GraphSpecError(f"unknown symbol {symbol!r}") from None

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)


@dataclass(frozen=True)
class DirectedGraph:
    """0/1 adjacency over an alphabet; the generator of a symbolic dynamics."""

    alphabet: Alphabet
    adjacency: IntMatrix
    name: str | None = None
    _succ: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        k = self.alphabet.k
        if len(self.adjacency) != k or any(len(row) != k for row in self.adjacency):
            raise GraphSpecError(f"adjacency must be {k}x{k}")
        for row in self.adjacency:
            for entry in row:
                if entry not in (0, 1):
                    raise GraphSpecError(f"adjacency entries must be 0 or 1, got {entry!r}")
        succ = tuple(
            tuple(j for j in range(k) if row[j]) for row in self.adjacency
        )
        object.__setattr__(self, "_succ", succ)

    @property
    def k(self) -> int:
        return self.alphabet.k

    @property
    def edge_count(self) -> int:
        return mat_total(self.adjacency)

    def successors(self, i: int) -> tuple[int, ...]:
        return self._succ[i]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i][j])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as index pairs, row-major order."""
        return [(i, j) for i in range(self.k) for j in range(self.k) if self.adjacency[i][j]]


@dataclass(frozen=True)
class GraphDiagnostics:
    weakly_connected: bool
    strongly_connected: bool
    absorbing_states: tuple[str, ...]
    edge_count: int


def graph_from_edges(
    symbols: tuple[str, ...] | list[str],
    edges: list[tuple[str, str]],
    name: str | None = None,
) -> DirectedGraph:
    """Build a graph from symbol pairs; rejects duplicate edges."""
    alphabet = Alphabet(tuple(symbols))
    k = alphabet.k
    adj = [[0] * k for _ in range(k)]
    for frm, to in edges:
        i, j = alphabet.index(frm), alphabet.index(to)
        if adj[i][j]:
            raise GraphSpecError(f"duplicate edge {frm!r} -> {to!r}")
        adj[i][j] = 1
    return DirectedGraph(alphabet, tuple(tuple(row) for row in adj), name=name)


def parse_graph(text: str) -> DirectedGraph:
    """Parse a JSON graph-spec document.

    Expected shape: {"alphabet": [sym, ...], "edges": [[from, to], ...]}
    with an optional "name".  The result is independent of edge order.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphSpecError(f"malformed graph document: {exc}") from None
    if not isinstance(doc, dict):
        raise GraphSpecError("graph document must be a JSON object")
    unknown = set(doc) - {"alphabet", "edges", "name"}
    if unknown:
        raise GraphSpecError(f"unknown fields in graph document: {sorted(unknown)}")
    if "alphabet" not in doc or "edges" not in doc:
        raise GraphSpecError('graph document needs "alphabet" and "edges" fields')
    symbols = doc["alphabet"]
    if not isinstance(symbols, list) or not all(isinstance(s, str) for s in symbols):
        raise GraphSpecError('"alphabet" must be a list of strings')
    edges_raw = doc["edges"]
    if not isinstance(edges_raw, list):
        raise GraphSpecError('"edges" must be a list of [from, to] pairs')
    edges: list[tuple[str, str]] = []
    for item in edges_raw:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(s, str) for s in item)):
            raise GraphSpecError(f"bad edge entry {item!r}: expected [from, to]")
        edges.append((item[0], item[1]))
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise GraphSpecError('"name" must be a string')
    return graph_from_edges(symbols, edges, name=name)


def graph_to_json(graph: DirectedGraph) -> str:
    """Serialize to the graph-spec format; edges sorted lexicographically."""
    syms = graph.alphabet.symbols
    edges = sorted([syms[i], syms[j]] for i, j in graph.edges())
    doc: dict = {"alphabet": list(syms), "edges": edges}
    if graph.name is not None:
        doc["name"] = graph.name
    return json.dumps(doc, indent=2)


def _undirected_components(graph: DirectedGraph) -> int:
    k = graph.k
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in graph.edges():
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    return len({find(i) for i in range(k)})


def _reachable(succ, start: int, k: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in succ[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def validate(graph: DirectedGraph) -> GraphDiagnostics:
    """Pure structural report; callers decide what to reject.

    Weak connectivity is computed on the undirected shadow (an isolated
    vertex disconnects), strong connectivity on the digraph itself.
    Absorbing states are vertices with no outgoing edge besides a
    possible self-loop.
    """
    k = graph.k
    isolated = any(
        not graph.successors(i) and all(graph.adjacency[j][i] == 0 for j in range(k))
        for i in range(k)
    )
    weakly = not isolated and _undirected_components(graph) == 1
    rev = tuple(
        tuple(j for j in range(k) if graph.adjacency[j][i]) for i in range(k)
    )
    strongly = (
        len(_reachable(graph._succ, 0, k)) == k and len(_reachable(rev, 0, k)) == k
    )
    absorbing = tuple(
        graph.alphabet.symbols[i]
        for i in range(k)
        if all(graph.adjacency[i][j] == 0 for j in range(k) if j != i)
    )
    return GraphDiagnostics(
        weakly_connected=weakly,
        strongly_connected=strongly,
        absorbing_states=absorbing,
        edge_count=graph.edge_count,
    )


def higher_order_graph(graph: DirectedGraph) -> DirectedGraph:
    """Second-order graph: vertices are the edges of the input.

    Vertex "i>j" stands for the edge i->j; there is an arrow
    "i>j" -> "j>k" exactly when the two edges chain into a 2-step walk
    i->j->k.  Walks on the result correspond to walks on the input that
    are one step longer.
    """
    edges = graph.edges()
    if not edges:
        raise GraphSpecError("higher-order graph of an edgeless graph is undefined")
    syms = graph.alphabet.symbols
    for sym in syms:
        if HIGHER_ORDER_SEP in sym:
            raise GraphSpecError(
                f"symbol {sym!r} contains the reserved separator {HIGHER_ORDER_SEP!r}"
            )
    labels = tuple(f"{syms[i]}{HIGHER_ORDER_SEP}{syms[j]}" for i, j in edges)
    m = len(edges)
    adj = tuple(
        tuple(1 if edges[a][1] == edges[b][0] else 0 for b in range(m))
        for a in range(m)
    )
    name = f"{graph.name}^(2)" if graph.name else None
    return DirectedGraph(Alphabet(labels), adj, name=name)
