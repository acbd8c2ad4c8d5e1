"""Simple undirected graphs with exact BFS distances.

Graphs are immutable: a vertex tuple (ids are arbitrary ints, order is
preserved and used everywhere a deterministic iteration order matters)
plus an adjacency map with sorted neighbor tuples.  Distances are hop
counts computed by breadth-first search; no floating point anywhere.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .errors import (
    DisconnectedGraph,
    EmptyGraph,
    GraphFormatError,
    TooLarge,
    UnknownVertex,
)

# All-pairs distance storage is O(n^2); keep orders sane.
MAX_ORDER = 10_000


class Graph:
    """Finite simple undirected graph."""

    __slots__ = ("_vertices", "_adjacency", "_edge_count")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]]):
        vertex_list = list(vertices)
        for v in vertex_list:
            if not isinstance(v, int) or isinstance(v, bool):
                raise GraphFormatError(f"vertex ids must be integers, got {v!r}")
        if len(set(vertex_list)) != len(vertex_list):
            raise GraphFormatError("duplicate vertex ids")
        if len(vertex_list) > MAX_ORDER:
            raise TooLarge(f"graph order {len(vertex_list)} exceeds cap {MAX_ORDER}")
        vertex_set = set(vertex_list)
        neighbor_sets: dict[int, set[int]] = {v: set() for v in vertex_list}
        count = 0
        for edge in edges:
            try:
                u, v = edge
            except (TypeError, ValueError):
                raise GraphFormatError(f"edge {edge!r} is not a pair") from None
            if u not in vertex_set or v not in vertex_set:
                raise GraphFormatError(f"edge ({u!r}, {v!r}) has an unknown endpoint")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u!r}")
            if v in neighbor_sets[u]:
                raise GraphFormatError(f"duplicate edge ({u!r}, {v!r})")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
            count += 1
        self._vertices: tuple[int, ...] = tuple(vertex_list)
        self._adjacency: dict[int, tuple[int, ...]] = {
            v: tuple(sorted(neighbor_sets[v])) for v in vertex_list
        }
        self._edge_count = count

    # -- basic accessors ------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def order(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def has_vertex(self, v: int) -> bool:
        return v in self._adjacency

    def __contains__(self, v: int) -> bool:
        return v in self._adjacency

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._require(v)
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        self._require(v)
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._require(u)
        self._require(v)
        return v in self._adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each edge once, as (u, v) with u appearing before v's sort order."""
        for u in self._vertices:
            for v in self._adjacency[u]:
                if u < v:
                    yield (u, v)

    def _require(self, v: int) -> None:
        if v not in self._adjacency:
            raise UnknownVertex(f"vertex {v!r} is not in the graph")

    # -- equality is structural (same vertex set, same edge set) --------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            set(self._vertices) == set(other._vertices)
            and self._adjacency == other._adjacency
        )

    def __hash__(self) -> int:
        return hash((frozenset(self._vertices), frozenset(self.edges())))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edge_count})"


# -- traversal ----------------------------------------------------------


def _bfs_reached(g: Graph, source: int) -> dict[int, int]:
    """Hop counts from source to every vertex BFS can reach."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        d = dist[u] + 1
        for v in g.neighbors(u):
            if v not in dist:
                dist[v] = d
                queue.append(v)
    return dist


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    """Exact distances from source to every vertex of a connected graph."""
    if source not in g:
        raise UnknownVertex(f"vertex {source!r} is not in the graph")
    dist = _bfs_reached(g, source)
    if len(dist) != g.order:
        raise DisconnectedGraph(
            f"only {len(dist)} of {g.order} vertices reachable from {source!r}"
        )
    return dist


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        raise EmptyGraph("connectivity is undefined for the empty graph")
    return len(_bfs_reached(g, g.vertices[0])) == g.order


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts of a connected graph, in vertex order."""

    vertices: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    def _index(self, v: int) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise UnknownVertex(f"vertex {v!r} is not in the matrix") from None

    def entry(self, u: int, v: int) -> int:
        return self.entries[self._index(u)][self._index(v)]

    def row(self, v: int) -> tuple[int, ...]:
        return self.entries[self._index(v)]

    def row_sum(self, v: int) -> int:
        return sum(self.row(v))

    @property
    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)

    @property
    def total(self) -> int:
        """Sum over all ordered vertex pairs."""
        return sum(self.row_sums)


def distance_matrix(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; raises DisconnectedGraph / EmptyGraph."""
    if g.order == 0:
        raise EmptyGraph("distance matrix of the empty graph")
    order = g.vertices
    rows = []
    for u in order:
        dist = _bfs_reached(g, u)
        if len(dist) != g.order:
            raise DisconnectedGraph(
                f"only {len(dist)} of {g.order} vertices reachable from {u!r}"
            )
        rows.append(tuple(dist[v] for v in order))
    return DistanceMatrix(order, tuple(rows))


# -- isomorphism --------------------------------------------------------

DEFAULT_ISO_CAP = 16


def _vertex_signature(g: Graph, v: int) -> tuple[int, tuple[int, ...]]:
    """Relabeling-invariant fingerprint: degree plus sorted reachable distances."""
    reached = _bfs_reached(g, v)
    return (g.degree(v), tuple(sorted(reached.values())))


def _search_order(g: Graph, rarity: Mapping[int, int]) -> list[int]:
    """Visit rare signatures first, preferring vertices tied to placed ones."""
    placed: list[int] = []
    placed_set: set[int] = set()
    remaining = set(g.vertices)
    while remaining:
        best = min(
            remaining,
            key=lambda v: (
                -sum(1 for w in g.neighbors(v) if w in placed_set),
                rarity[v],
                v,
            ),
        )
        placed.append(best)
        placed_set.add(best)
        remaining.remove(best)
    return placed


def are_isomorphic(g1: Graph, g2: Graph, *, cap: int = DEFAULT_ISO_CAP) -> bool:
    """Exact isomorphism test by signature-pruned backtracking.

    The cap bounds the order of either input; raise it explicitly for
    larger graphs (search is exponential in the worst case).
    """
    if g1.order > cap or g2.order > cap:
        raise TooLarge(
            f"isomorphism test capped at order {cap}; "
            f"got {g1.order} and {g2.order}"
        )
    if g1.order != g2.order or g1.edge_count != g2.edge_count:
        return False
    if g1.order == 0:
        return True
    sig1 = {v: _vertex_signature(g1, v) for v in g1.vertices}
    sig2 = {v: _vertex_signature(g2, v) for v in g2.vertices}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return False

    counts: dict[tuple[int, tuple[int, ...]], int] = {}
    for s in sig1.values():
        counts[s] = counts.get(s, 0) + 1
    rarity = {v: counts[sig1[v]] for v in g1.vertices}
    order = _search_order(g1, rarity)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        want = sig1[v]
        for u in g2.vertices:
            if u in used or sig2[u] != want:
                continue
            if all(
                g1.has_edge(v, a) == g2.has_edge(u, b) for a, b in mapping.items()
            ):
                mapping[v] = u
                used.add(u)
                if extend(k + 1):
                    return True
                del mapping[v]
                used.remove(u)
        return False

    return extend(0)


# -- small named builders ------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """C_n for n >= 3; n = 2 gives a single edge, n = 1 a single vertex."""
    if n < 1:
        raise GraphFormatError("cycle needs at least one vertex")
    if n <= 2:
        return path_graph(n)
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(range(n), combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: center 0 joined to 1..leaves."""
    return Graph(range(leaves + 1), [(0, i) for i in range(1, leaves + 1)])


def diamond_graph() -> Graph:
    """K4 minus one edge; 0 and 1 have degree 3, 2 and 3 degree 2."""
    return Graph(range(4), [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


# -- JSON ----------------------------------------------------------------


def graph_from_json_dict(obj: object) -> Graph:
    """Parse {"vertices": [...], "edges": [[u, v], ...]}."""
    if not isinstance(obj, dict):
        raise GraphFormatError("graph JSON must be an object")
    unknown = set(obj) - {"vertices", "edges"}
    if unknown:
        raise GraphFormatError(f"unexpected graph keys: {sorted(unknown)}")
    vertices = obj.get("vertices")
    edges = obj.get("edges")
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise GraphFormatError('graph JSON needs "vertices" and "edges" lists')
    parsed_edges = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise GraphFormatError(f"edge {e!r} is not a two-element list")
        parsed_edges.append((e[0], e[1]))
    return Graph(vertices, parsed_edges)


def graph_to_json_dict(g: Graph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [[u, v] for u, v in sorted(g.edges())],
    }
