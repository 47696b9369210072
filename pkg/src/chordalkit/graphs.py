"""Simple undirected graphs over dense 0-based vertex ids.

Adjacency rows are integer bitmasks so the exhaustive suites (all labeled
graphs on six vertices, etc.) stay cheap.  Graphs are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import PreconditionError

VertexSet = frozenset  # members must lie in range(n) of the host graph


def _normalize_pair(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise PreconditionError(f"self-loop on vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Symmetric irreflexive adjacency over vertices 0..n-1."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise PreconditionError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & (1 << v):
                raise PreconditionError(f"self-loop on vertex {v}")
            if row & ~full:
                raise PreconditionError(f"out-of-range neighbor bit for vertex {v}")
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                if not self.adj[u] & (1 << v):
                    raise PreconditionError(f"asymmetric adjacency {v}-{u}")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        seen = set()
        for u, v in edges:
            u, v = _normalize_pair(u, v)
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u},{v}) out of range for n={n}")
            if (u, v) in seen:
                raise PreconditionError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    @staticmethod
    def from_edge_mask(n: int, mask: int) -> "Graph":
        """Graph whose edges are the set bits of ``mask`` over lexicographic pairs."""
        edges = []
        for idx, pair in enumerate(combinations(range(n), 2)):
            if mask & (1 << idx):
                edges.append(pair)
        return Graph.from_edges(n, edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def neighbors_mask(self, v: int) -> int:
        return self.adj[v]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_into(self, v: int, members: int) -> int:
        """Degree of v into the vertex bitmask ``members``."""
        return (self.adj[v] & members).bit_count()

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1), offset=u + 1):
                yield (u, v)

    def edge_mask_key(self) -> tuple[int, int]:
        """Hashable identity (n, lexicographic edge bitmask) for memo tables."""
        mask = 0
        for idx, (u, v) in enumerate(combinations(range(self.n), 2)):
            if self.has_edge(u, v):
                mask |= 1 << idx
        return (self.n, mask)

    def apply_edits(self, edits: "EditSet") -> "Graph":
        rows = list(self.adj)
        for u, v in edits.adds:
            if rows[u] & (1 << v):
                raise PreconditionError(f"add of existing edge ({u},{v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        for u, v in edits.deletes:
            if not rows[u] & (1 << v):
                raise PreconditionError(f"delete of missing edge ({u},{v})")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))


def _bits(mask: int, offset: int = 0) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1 + offset
        mask ^= low


def bits_of(mask: int) -> Iterator[int]:
    """Iterate set bit positions of a vertex bitmask, ascending."""
    return _bits(mask)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class EditSet:
    """Unordered pair edits against a base graph: adds are non-edges, deletes edges."""

    adds: frozenset
    deletes: frozenset

    def __post_init__(self) -> None:
        for u, v in self.adds | self.deletes:
            if u >= v:
                raise PreconditionError("edit pairs must be normalized (u < v)")
        if self.adds & self.deletes:
            raise PreconditionError("a pair may appear at most once in an edit set")

    @property
    def size(self) -> int:
        return len(self.adds) + len(self.deletes)

    @staticmethod
    def empty() -> "EditSet":
        return EditSet(frozenset(), frozenset())

    @staticmethod
    def between(g: Graph, h: Graph) -> "EditSet":
        """Edits transforming g into h (pairs of E(g) symmetric-difference E(h))."""
        if g.n != h.n:
            raise PreconditionError("vertex-count mismatch")
        adds, deletes = set(), set()
        for u in range(g.n):
            diff = (g.adj[u] ^ h.adj[u]) >> (u + 1)
            for v in _bits(diff, offset=u + 1):
                if h.has_edge(u, v):
                    adds.add((u, v))
                else:
                    deletes.add((u, v))
        return EditSet(frozenset(adds), frozenset(deletes))

    def validate_against(self, g: Graph) -> None:
        for u, v in self.adds:
            if g.has_edge(u, v):
                raise PreconditionError(f"add pair ({u},{v}) is an edge of the base graph")
        for u, v in self.deletes:
            if not g.has_edge(u, v):
                raise PreconditionError(f"delete pair ({u},{v}) is a non-edge of the base graph")


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``s`` with an order-preserving relabeling.

    Returns (subgraph, mapping) where mapping[new_id] = original id.
    """
    order = sorted(set(s))
    for v in order:
        if not 0 <= v < g.n:
            raise PreconditionError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for u in _bits(g.adj[v]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    return Graph(len(order), tuple(rows)), tuple(order)


def sample_subset(n: int, m: int, rng: random.Random) -> frozenset:
    """Uniform m-subset of range(n); identical seeds give identical output."""
    if not 0 <= m <= n:
        raise PreconditionError(f"cannot sample {m} of {n} vertices")
    return frozenset(rng.sample(range(n), m))


def nonedges_in_neighborhood(g: Graph, v: int) -> int:
    """Number of non-adjacent pairs inside N(v); zero iff v is simplicial."""
    if not 0 <= v < g.n:
        raise PreconditionError(f"vertex {v} out of range")
    nbrs = g.neighbors(v)
    missing = 0
    for i, a in enumerate(nbrs):
        rest = mask_of(nbrs[i + 1 :])
        missing += (rest & ~g.adj[a]).bit_count()
    return missing


def count_p3_through(g: Graph, a_set: Iterable[int], u: int) -> int:
    """Induced paths {u, a, v} whose middle vertex a lies in ``a_set``."""
    if not 0 <= u < g.n:
        raise PreconditionError(f"vertex {u} out of range")
    a_mask = mask_of(a_set)
    total = 0
    for a in _bits(g.adj[u] & a_mask):
        others = g.adj[a] & ~g.adj[u] & ~(1 << u)
        total += others.bit_count()
    return total


def symmetric_difference_count(g: Graph, h: Graph) -> int:
    """|E(g) symmetric-difference E(h)| for graphs on the same vertex count."""
    if g.n != h.n:
        raise PreconditionError("vertex-count mismatch")
    return sum((g.adj[v] ^ h.adj[v]).bit_count() for v in range(g.n)) // 2


def parse_edge_list(text: str) -> Graph:
    """Edge-list format: first line "n m", then m lines "u v" with u < v."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise PreconditionError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise PreconditionError('first line must be "n m"')
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise PreconditionError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise PreconditionError(f"malformed edge line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if u >= v:
            raise PreconditionError(f"edge lines require u < v, got {u} {v}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# Small named constructions used throughout the test suites.

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
