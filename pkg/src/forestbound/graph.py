"""Simple undirected graphs with stable vertex identifiers, plus the
recognizers for the three hereditary target classes (linear forests,
degree-bounded caterpillar forests, star forests).

Graphs are immutable: every mutation-like operation returns a new graph.
Vertex identifiers survive deletions, so a vertex subset computed on a
derived graph is directly meaningful in the graph it was derived from.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import ParseError, UnknownVertex


class Graph:
    """Immutable simple undirected graph over integer vertex ids."""

    __slots__ = ("_adj", "_vertices", "_m")

    def __init__(self, adjacency: dict[int, frozenset[int]]):
        self._adj = adjacency
        self._vertices = tuple(sorted(adjacency))
        self._m = sum(len(nbrs) for nbrs in adjacency.values()) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph on vertices 0..n-1 from an iterable of edges."""
        adj: dict[int, set[int]] = {v: set() for v in range(n)}
        for u, v in edges:
            if u == v:
                raise ParseError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise UnknownVertex(f"edge ({u}, {v}) outside 0..{n - 1}")
            adj[u].add(v)
            adj[v].add(u)
        return cls({v: frozenset(nbrs) for v, nbrs in adj.items()})

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(f"vertex {v} not in graph") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors(u)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self._vertices for v in sorted(self._adj[u]) if u < v]

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self._adj.values()), default=0)

    def min_degree(self) -> int:
        return min((len(nbrs) for nbrs in self._adj.values()), default=0)

    def induced(self, s: Iterable[int]) -> "Graph":
        keep = frozenset(s)
        for v in keep:
            if v not in self._adj:
                raise UnknownVertex(f"vertex {v} not in graph")
        return Graph({v: self._adj[v] & keep for v in keep})

    def delete_vertices(self, s: Iterable[int]) -> "Graph":
        drop = frozenset(s)
        for v in drop:
            if v not in self._adj:
                raise UnknownVertex(f"vertex {v} not in graph")
        return Graph({v: self._adj[v] - drop for v in self._adj if v not in drop})

    def delete_vertex(self, v: int) -> "Graph":
        return self.delete_vertices((v,))

    def add_edge(self, u: int, v: int) -> "Graph":
        """Return a copy with edge uv added (no-op if already present)."""
        if u == v:
            raise ParseError(f"self-loop at vertex {u}")
        if u not in self._adj or v not in self._adj:
            raise UnknownVertex(f"edge ({u}, {v}) has an endpoint outside the graph")
        if v in self._adj[u]:
            return self
        adj = dict(self._adj)
        adj[u] = adj[u] | {v}
        adj[v] = adj[v] | {u}
        return Graph(adj)

    def components(self) -> list[frozenset[int]]:
        """Connected components, sorted by their minimum vertex id."""
        seen: set[int] = set()
        comps = []
        for root in self._vertices:
            if root in seen:
                continue
            comp = {root}
            stack = [root]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def degree_histogram(self) -> "DegreeHistogram":
        return DegreeHistogram.from_graph(self)

    def edge_hash(self) -> str:
        """Stable hash of the labelled edge set, used in certificate records."""
        payload = f"n={self.n};v={','.join(map(str, self._vertices))};" + ";".join(
            f"{u}-{v}" for u, v in self.edges()
        )
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self):
        return hash((self._vertices, frozenset(self.edges())))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced on s, original identifiers preserved."""
    return g.induced(s)


@dataclass(frozen=True)
class DegreeHistogram:
    """Counts n_d of vertices of each degree d."""

    counts: dict[int, int]
    max_degree: int = field(default=0)

    @classmethod
    def from_graph(cls, g: Graph) -> "DegreeHistogram":
        counts: dict[int, int] = {}
        for v in g.vertices:
            d = g.degree(v)
            counts[d] = counts.get(d, 0) + 1
        return cls(counts, max(counts, default=0))

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "DegreeHistogram":
        cleaned = {d: c for d, c in counts.items() if c > 0}
        if any(d < 0 or c < 0 for d, c in counts.items()):
            raise ValueError("degrees and counts must be nonnegative")
        return cls(cleaned, max(cleaned, default=0))

    @property
    def n(self) -> int:
        return sum(self.counts.values())

    def count(self, d: int) -> int:
        return self.counts.get(d, 0)


@dataclass(frozen=True)
class ForestClass:
    """One of the three hereditary target classes.

    kind is "linear", "caterpillar", or "star"; k bounds the maximum degree
    for caterpillar forests (None means unbounded).
    """

    kind: str
    k: int | None = None

    def __post_init__(self):
        if self.kind not in ("linear", "caterpillar", "star"):
            raise ValueError(f"unknown forest class {self.kind!r}")
        if self.kind != "caterpillar" and self.k is not None:
            raise ValueError("only caterpillar forests take a degree bound")
        if self.k is not None and self.k < 2:
            raise ValueError("caterpillar degree bound must be >= 2")

    @classmethod
    def caterpillar(cls, k: int | None = None) -> "ForestClass":
        return cls("caterpillar", k)

    def contains(self, g: Graph) -> bool:
        if self.kind == "linear":
            return is_linear_forest(g)
        if self.kind == "star":
            return is_star_forest(g)
        return is_caterpillar_forest(g, self.k)

    def to_text(self) -> str:
        if self.kind == "caterpillar" and self.k is not None:
            return f"caterpillar:k={self.k}"
        return self.kind

    @classmethod
    def from_text(cls, text: str) -> "ForestClass":
        text = text.strip()
        if text.startswith("caterpillar:k="):
            try:
                return cls.caterpillar(int(text.split("=", 1)[1]))
            except ValueError as exc:
                raise ParseError(f"bad forest class {text!r}") from exc
        if text in ("linear", "caterpillar", "star"):
            return cls(text, None)
        raise ParseError(f"bad forest class {text!r}")


LINEAR_FOREST = ForestClass("linear")
CATERPILLAR_FOREST = ForestClass("caterpillar")
STAR_FOREST = ForestClass("star")


@dataclass(frozen=True)
class ForestCertificate:
    """A vertex subset together with the class and rational bound it claims."""

    vertex_set: frozenset[int]
    forest_class: ForestClass
    claimed_bound: Fraction

    def size(self) -> int:
        return len(self.vertex_set)

    def meets_bound(self) -> bool:
        return Fraction(len(self.vertex_set)) >= self.claimed_bound


def is_forest(g: Graph) -> bool:
    """Acyclicity via the edge-count identity m = n - #components."""
    return g.m == g.n - len(g.components())


def is_linear_forest(g: Graph) -> bool:
    """True iff g is acyclic with maximum degree at most 2."""
    return g.max_degree() <= 2 and is_forest(g)


def is_caterpillar_forest(g: Graph, k: int | None = None) -> bool:
    """True iff g is a forest of caterpillars, with max degree <= k if bounded.

    In a forest the non-leaf vertices of each component induce a path exactly
    when no vertex has three or more non-leaf neighbors.
    """
    if k is not None and k < 2:
        raise ValueError("degree bound k must be >= 2")
    if k is not None and g.max_degree() > k:
        return False
    if not is_forest(g):
        return False
    spine = {v for v in g.vertices if g.degree(v) >= 2}
    return all(len(g.neighbors(v) & spine) <= 2 for v in spine)


def is_star_forest(g: Graph) -> bool:
    """True iff g is acyclic and each component has at most one vertex of degree >= 2."""
    if not is_forest(g):
        return False
    return not any(
        g.degree(u) >= 2 and g.degree(v) >= 2 for u, v in g.edges()
    )


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: header `n m`, then m lines `u v`.

    Blank lines and lines starting with `#` are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise ParseError("empty edge list: missing `n m` header")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"line {lineno}: header must be `n m`, got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise ParseError(f"line {lineno}: header must be two integers") from exc
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: negative counts in header")
    if len(rows) - 1 != m:
        raise ParseError(f"header declares {m} edges but {len(rows) - 1} edge lines found")
    edges = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected `u v`, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: vertices must be integers") from exc
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at {u}")
        if (min(u, v), max(u, v)) in seen:
            raise ParseError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add((min(u, v), max(u, v)))
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except UnknownVertex as exc:  # pragma: no cover - guarded above
        raise ParseError(str(exc)) from exc


def format_edge_list(g: Graph) -> str:
    """Serialize to the edge-list format (vertices renumbered 0..n-1 if needed)."""
    index = {v: i for i, v in enumerate(g.vertices)}
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{index[u]} {index[v]}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
