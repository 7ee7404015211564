"""Core types: red/blue edge-colored graphs, perfect matchings, alternating cycles.

Vertices are 0-based integers and an undirected edge is always stored as the
canonical ``(min, max)`` pair.  All types here are immutable value objects;
operations are pure functions, so instances can be shared freely between
threads.

The central weight scheme, relative to a reference perfect matching M:
blue edges weigh 0, red matching edges weigh -1, red non-matching edges
weigh +1.  Under it, ``r(M') = r(M) + w(M symdiff M')`` for any two perfect
matchings, where r counts red edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

RED = "red"
BLUE = "blue"
COLORS = frozenset({RED, BLUE})

Edge = tuple[int, int]


class GraphError(ValueError):
    """Malformed graph, edge, matching, or cycle input."""


def edge_key(u: int, v: int) -> Edge:
    """Canonical ``(min, max)`` form of an undirected edge."""
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class ColoredGraph:
    """A simple undirected graph whose every edge is red or blue.

    Parameters
    ----------
    n:
        Number of vertices; vertices are ``0 .. n-1``.
    colors:
        Mapping from canonical edge to ``"red"`` or ``"blue"``.
    bipartition:
        Optional pair ``(side_a, side_b)`` of disjoint vertex sets covering
        all vertices.  When present, every edge must cross it.  Solvers use
        its presence to select the bipartite code path.
    """

    n: int
    colors: Mapping[Edge, str]
    bipartition: tuple[frozenset[int], frozenset[int]] | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be >= 0, got {self.n}")
        object.__setattr__(self, "colors", dict(sorted(self.colors.items())))
        for e, c in self.colors.items():
            u, v = e
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge {e} is not canonical or out of range for n={self.n}")
            if c not in COLORS:
                raise GraphError(f"edge {e} has unknown color {c!r}")
        if self.bipartition is not None:
            a, b = self.bipartition
            a, b = frozenset(a), frozenset(b)
            object.__setattr__(self, "bipartition", (a, b))
            if a & b:
                raise GraphError(f"bipartition sides overlap on {sorted(a & b)}")
            if a | b != frozenset(range(self.n)):
                missing = sorted(set(range(self.n)) - (a | b))
                extra = sorted((a | b) - set(range(self.n)))
                raise GraphError(f"bipartition does not cover the vertex set exactly "
                                 f"(missing {missing}, extra {extra})")
            for u, v in self.colors:
                if (u in a) == (v in a):
                    raise GraphError(f"edge ({u}, {v}) does not cross the bipartition")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int, str]],
        bipartition: tuple[Iterable[int], Iterable[int]] | None = None,
    ) -> "ColoredGraph":
        """Build a graph from ``(u, v, color)`` triples, canonicalizing edges."""
        colors: dict[Edge, str] = {}
        for u, v, c in edges:
            e = edge_key(u, v)
            if e in colors:
                raise GraphError(f"duplicate edge ({u}, {v})")
            colors[e] = c
        bip = None
        if bipartition is not None:
            bip = (frozenset(bipartition[0]), frozenset(bipartition[1]))
        return cls(n, colors, bip)

    # -- queries ------------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.colors)

    def edges(self) -> list[Edge]:
        """All edges, sorted."""
        return list(self.colors)

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return ((u, v) if u < v else (v, u)) in self.colors

    def color(self, e: Edge) -> str:
        try:
            return self.colors[e]
        except KeyError:
            raise GraphError(f"unknown edge {e}") from None

    def is_red(self, e: Edge) -> bool:
        return self.color(e) == RED

    def red_edges(self) -> list[Edge]:
        return [e for e, c in self.colors.items() if c == RED]

    def blue_edges(self) -> list[Edge]:
        return [e for e, c in self.colors.items() if c == BLUE]

    def adjacency(self) -> dict[int, list[int]]:
        """Neighbor lists, each sorted ascending."""
        adj: dict[int, list[int]] = {v: [] for v in range(self.n)}
        for u, v in self.colors:
            adj[u].append(v)
            adj[v].append(u)
        for v in adj:
            adj[v].sort()
        return adj

    def side_of(self, v: int) -> int:
        """0 or 1 for the bipartition side of ``v``; requires a bipartition."""
        if self.bipartition is None:
            raise GraphError("graph has no bipartition")
        return 0 if v in self.bipartition[0] else 1


@dataclass(frozen=True)
class PerfectMatching:
    """A perfect matching together with its red-edge count."""

    edges: frozenset[Edge]
    red_count: int

    @classmethod
    def from_edges(cls, graph: ColoredGraph, edges: Iterable[tuple[int, int]]) -> "PerfectMatching":
        """Validate ``edges`` as a perfect matching of ``graph`` and count reds."""
        canon = frozenset(edge_key(u, v) for u, v in edges)
        if not validate_matching(graph, canon):
            raise GraphError("edge set is not a perfect matching of the graph")
        reds = sum(1 for e in canon if graph.colors[e] == RED)
        return cls(canon, reds)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def partner_map(self) -> dict[int, int]:
        partner: dict[int, int] = {}
        for u, v in self.edges:
            partner[u] = v
            partner[v] = u
        return partner

    def covers(self, v: int) -> bool:
        return any(v in e for e in self.edges)

    def __contains__(self, e: Edge) -> bool:
        return e in self.edges

    def __len__(self) -> int:
        return len(self.edges)


def validate_matching(graph: ColoredGraph, matching: Iterable[tuple[int, int]] | PerfectMatching) -> bool:
    """True iff ``matching`` is a perfect matching of ``graph``.

    Total: returns False rather than raising on structural violations
    (unknown edges, repeated vertices, uncovered vertices).
    """
    if isinstance(matching, PerfectMatching):
        edges: Iterable[tuple[int, int]] = matching.edges
    else:
        edges = matching
    seen: set[int] = set()
    count = 0
    for u, v in edges:
        if u == v:
            return False
        e = (u, v) if u < v else (v, u)
        if e not in graph.colors:
            return False
        if e[0] in seen or e[1] in seen:
            return False
        seen.update(e)
        count += 1
    return count * 2 == graph.n


def red_count(matching: PerfectMatching) -> int:
    """Number of red edges in the matching."""
    return matching.red_count


def edge_weight(graph: ColoredGraph, matching: PerfectMatching, e: Edge) -> int:
    """Weight of one edge relative to a reference matching.

    Blue edges weigh 0; a red edge weighs -1 inside the matching and +1
    outside it.
    """
    if graph.color(e) == BLUE:
        return 0
    return -1 if e in matching.edges else 1


@dataclass(frozen=True)
class AlternatingCycle:
    """An even cycle alternating between matching and non-matching edges.

    ``vertices`` is the canonical rotation: it starts at the cycle's lowest
    vertex and proceeds toward that vertex's lower-indexed neighbor.
    ``edges[i]`` joins ``vertices[i]`` and ``vertices[i+1]`` (cyclically).
    ``weight`` is the total edge weight relative to the reference matching
    the cycle was built against.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    weight: int

    @classmethod
    def from_vertices(
        cls,
        graph: ColoredGraph,
        matching: PerfectMatching,
        vertices: Iterable[int],
    ) -> "AlternatingCycle":
        seq = list(vertices)
        if len(seq) < 4 or len(seq) % 2 != 0:
            raise GraphError(f"alternating cycle needs even length >= 4, got {len(seq)}")
        if len(set(seq)) != len(seq):
            raise GraphError("cycle repeats a vertex")
        seq = _canonical_rotation(seq)
        edges = []
        for i, u in enumerate(seq):
            v = seq[(i + 1) % len(seq)]
            e = edge_key(u, v)
            if e not in graph.colors:
                raise GraphError(f"cycle uses unknown edge ({u}, {v})")
            edges.append(e)
        in_m = [e in matching.edges for e in edges]
        for i, flag in enumerate(in_m):
            if flag == in_m[(i + 1) % len(in_m)]:
                raise GraphError(f"cycle does not alternate at edge {edges[i]}")
        weight = sum(edge_weight(graph, matching, e) for e in edges)
        return cls(tuple(seq), tuple(edges), weight)

    def __len__(self) -> int:
        return len(self.edges)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)


def _canonical_rotation(seq: list[int]) -> list[int]:
    """Rotate/flip a cyclic vertex sequence into the canonical orientation."""
    i = seq.index(min(seq))
    nxt = seq[(i + 1) % len(seq)]
    prv = seq[(i - 1) % len(seq)]
    if nxt < prv:
        return seq[i:] + seq[:i]
    rev = seq[i::-1] + seq[:i:-1]
    return rev


@dataclass(frozen=True)
class CycleSet:
    """Vertex-disjoint alternating cycles, ordered by their lowest vertex."""

    cycles: tuple[AlternatingCycle, ...]
    total_weight: int

    @classmethod
    def from_cycles(cls, cycles: Iterable[AlternatingCycle]) -> "CycleSet":
        cyc = sorted(cycles, key=lambda c: c.vertices[0])
        used: set[int] = set()
        for c in cyc:
            vs = c.vertex_set()
            if vs & used:
                raise GraphError(f"cycles share vertices {sorted(vs & used)}")
            used |= vs
        return cls(tuple(cyc), sum(c.weight for c in cyc))

    def edge_count(self) -> int:
        return sum(len(c) for c in self.cycles)

    def all_edges(self) -> frozenset[Edge]:
        out: set[Edge] = set()
        for c in self.cycles:
            out |= c.edge_set()
        return frozenset(out)

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self) -> Iterator[AlternatingCycle]:
        return iter(self.cycles)


def symmetric_difference(
    graph: ColoredGraph,
    matching: PerfectMatching,
    other: PerfectMatching,
) -> CycleSet:
    """Decompose ``matching symdiff other`` into alternating cycles.

    Weights are taken relative to ``matching`` (the first argument).  Total
    weight of the result equals ``other.red_count - matching.red_count``.
    """
    for m in (matching, other):
        if not validate_matching(graph, m):
            raise GraphError("argument is not a perfect matching of the graph")
    diff = matching.edges ^ other.edges
    adj: dict[int, list[int]] = {}
    for u, v in diff:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    cycles = []
    seen: set[int] = set()
    for start in sorted(adj):
        if start in seen:
            continue
        walk = [start]
        prev = None
        cur = start
        while True:
            a, b = adj[cur]
            nxt = b if a == prev else a
            if nxt == start:
                break
            walk.append(nxt)
            prev, cur = cur, nxt
        seen.update(walk)
        cycles.append(AlternatingCycle.from_vertices(graph, matching, walk))
    return CycleSet.from_cycles(cycles)


def apply_cycles(matching: PerfectMatching, cycle_set: CycleSet) -> PerfectMatching:
    """Flip every cycle of ``cycle_set`` on ``matching``.

    Each cycle must alternate relative to ``matching`` and the cycles must
    have been weighted against it; the result then is a perfect matching with
    ``red_count = matching.red_count + cycle_set.total_weight``.  Applying
    the same cycle set twice is the identity.
    """
    for c in cycle_set:
        in_m = [e in matching.edges for e in c.edges]
        for i, flag in enumerate(in_m):
            if flag == in_m[(i + 1) % len(in_m)]:
                raise GraphError(f"cycle at {c.vertices[0]} does not alternate "
                                 f"with the matching being modified")
    new_edges = matching.edges ^ cycle_set.all_edges()
    if len(new_edges) != len(matching.edges):
        raise GraphError("cycle flip did not preserve matching size")
    return PerfectMatching(frozenset(new_edges), matching.red_count + cycle_set.total_weight)
