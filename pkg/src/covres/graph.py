"""Finite simple graphs on the vertex set 1..n."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from . import _bits
from .errors import EmptyCoverIdeal, InvalidArgument, InvalidFamilyParameter

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple graph on ``1..n``; ``edges`` holds pairs ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidArgument(f"vertex count must be >= 0, got {self.n}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InvalidArgument(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InvalidArgument(f"edge {e} not inside 1..{self.n}")
            norm.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """``adjacency[v]`` is the neighbour bitmask of vertex ``v`` (index 0 unused)."""
        adj = [0] * (self.n + 1)
        for u, v in self.edges:
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        return tuple(adj)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return _bits.popcount(self.adjacency[v])

    @property
    def has_isolated_vertex(self) -> bool:
        return any(self.adjacency[v] == 0 for v in self.vertices)

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph relabelled to ``1..k``; also returns the embedding."""
        emb = tuple(sorted(set(vertices)))
        pos = {v: i + 1 for i, v in enumerate(emb)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph.from_edges(len(emb), edges), emb

    def encode(self) -> int:
        """Bit-encoding of the edge set over the lexicographic pair order."""
        code = 0
        for idx, (u, v) in enumerate(itertools.combinations(self.vertices, 2)):
            if (u, v) in self.edges:
                code |= 1 << idx
        return code

    def __str__(self) -> str:
        es = ", ".join(f"{u}-{v}" for u, v in self.sorted_edges())
        return f"Graph(n={self.n}; {es})"


# --- standard families -----------------------------------------------------

def path_graph(n: int) -> Graph:
    if n < 2:
        raise InvalidFamilyParameter(f"path needs n >= 2, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidFamilyParameter(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidFamilyParameter(f"complete bipartite needs a, b >= 1, got ({a}, {b})")
    return Graph.from_edges(a + b, [(i, j) for i in range(1, a + 1) for j in range(a + 1, a + b + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(1, n + 1), 2))


def complement(g: Graph) -> Graph:
    return Graph.from_edges(
        g.n, [e for e in itertools.combinations(g.vertices, 2) if e not in g.edges]
    )


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled simple graph on ``1..n``, ordered by edge encoding."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for code in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if code >> i & 1))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(
        n, [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < p]
    )


# --- chordality -------------------------------------------------------------

def maximum_cardinality_search(g: Graph) -> list[int]:
    """Visit order of maximum cardinality search, ties to the smallest label."""
    weight = [0] * (g.n + 1)
    visited = [False] * (g.n + 1)
    order = []
    for _ in range(g.n):
        best = -1
        pick = 0
        for v in g.vertices:
            if not visited[v] and weight[v] > best:
                best, pick = weight[v], v
        visited[pick] = True
        order.append(pick)
        for low in _bits.iter_bits(g.adjacency[pick]):
            weight[low.bit_length()] += 1
    return order


def is_perfect_elimination_order(g: Graph, order: list[int]) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in _bits.to_tuple(g.adjacency[v]) if pos[u] > pos[v]]
        for a, b in itertools.combinations(later, 2):
            if not g.adjacency[a] >> (b - 1) & 1:
                return False
    return True


def perfect_elimination_order(g: Graph) -> tuple[int, ...] | None:
    """A perfect elimination order of ``g``, or ``None`` when ``g`` is not chordal."""
    peo = list(reversed(maximum_cardinality_search(g)))
    return tuple(peo) if is_perfect_elimination_order(g, peo) else None


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_order(g) is not None


def is_complete_bipartite(g: Graph) -> bool:
    """True iff ``g`` is K_{a,b} for some a, b >= 1 on some split of its vertices."""
    if g.n < 2 or g.has_isolated_vertex:
        return False
    adj = g.adjacency
    side_a = adj[1]
    side_b = _bits.full(g.n) & ~side_a
    if side_a == 0 or side_a & side_b:
        return False
    return all(adj[v] == (side_a if side_b >> (v - 1) & 1 else side_b) for v in g.vertices)


# --- cliques and covers -------------------------------------------------------

def maximal_cliques_masks(g: Graph) -> list[int]:
    """Maximal cliques as bitmasks (Bron-Kerbosch with pivoting)."""
    adj = [0] + [g.adjacency[v] for v in g.vertices]
    out: list[int] = []
    if g.n == 0:
        return [0]

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        px = p | x
        pivot = max(_bits.iter_bits(px), key=lambda b: _bits.popcount(p & adj[b.bit_length()]))
        for low in _bits.iter_bits(p & ~adj[pivot.bit_length()]):
            nb = adj[low.bit_length()]
            expand(r | low, p & nb, x & nb)
            p &= ~low
            x |= low

    expand(0, _bits.full(g.n), 0)
    return _bits.sort_masks(out)


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    return [_bits.to_tuple(m) for m in maximal_cliques_masks(g)]


def minimal_vertex_covers_masks(g: Graph) -> list[int]:
    if not g.edges:
        raise EmptyCoverIdeal("graph has no edges; its cover ideal is degenerate")
    full = _bits.full(g.n)
    return _bits.sort_masks(full & ~c for c in maximal_cliques_masks(complement(g)))


def minimal_vertex_covers(g: Graph) -> list[tuple[int, ...]]:
    """Inclusion-minimal vertex covers, computed as complements of maximal cliques of the complement."""
    return [_bits.to_tuple(m) for m in minimal_vertex_covers_masks(g)]


# --- text format --------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by ``u v`` lines; ``#`` starts a comment."""
    n = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise InvalidArgument(f"line {lineno}: expected 'n <count>', got {line!r}")
            if not parts[1].isdigit():
                raise InvalidArgument(f"line {lineno}: bad vertex count {parts[1]!r}")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise InvalidArgument(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InvalidArgument(f"line {lineno}: non-integer vertex in {line!r}") from None
        e = _norm_edge(u, v)
        if e in seen:
            raise InvalidArgument(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(e)
        edges.append((u, v))
    if n is None:
        raise InvalidArgument("missing 'n <count>' header")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    return "\n".join([f"n {g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges()]) + "\n"
