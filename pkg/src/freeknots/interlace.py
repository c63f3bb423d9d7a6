"""Parity machinery lifted to abstract simple graphs.

Everything the one-component theory uses from a diagram passes through
its interlacement graph, so oddness arguments run on plain Z2 adjacency
data.  A graph that is irreducibly odd but not a circle graph (the wheel
over the pentagon is the standard one) certifies statements no chord
diagram can realize.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .diagram import (
    CENSUS_LIMIT,
    FramedDiagram,
    InterlacementMatrix,
    census,
    interlacement,
    parse_gauss,
)
from .errors import BudgetExceededError


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1 (Z2 adjacency)."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v}) for {self.n} vertices")

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(v) for v in range(self.n)))

    def adjacency_matrix(self) -> tuple[tuple[int, ...], ...]:
        rows = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            rows[u][v] = rows[v][u] = 1
        return tuple(tuple(r) for r in rows)

    def to_adjacency_text(self) -> str:
        """One line per vertex: ``v: sorted neighbours``."""
        lines = []
        for v in range(self.n):
            nbrs = sorted(u for u in range(self.n) if self.adjacent(u, v))
            lines.append(f"{v}: {' '.join(str(u) for u in nbrs)}".rstrip())
        return "\n".join(lines)

    @classmethod
    def from_adjacency_text(cls, text: str) -> "SimpleGraph":
        rows: dict[int, set[int]] = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            head, _, rest = line.partition(":")
            v = int(head)
            rows[v] = {int(tok) for tok in rest.split()}
        if sorted(rows) != list(range(len(rows))):
            raise ValueError("vertex lines must cover 0..n-1")
        edges = set()
        for v, nbrs in rows.items():
            for u in nbrs:
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                edges.add((min(u, v), max(u, v)))
        return cls(len(rows), frozenset(edges))


def graph(n: int, edges: list[tuple[int, int]]) -> SimpleGraph:
    return SimpleGraph(n, frozenset((min(u, v), max(u, v)) for u, v in edges))


def from_interlacement(matrix: InterlacementMatrix) -> SimpleGraph:
    """Forget the chord labels; vertex i is the i-th matrix label."""
    n = len(matrix.labels)
    edges = {
        (i, j)
        for i, j in itertools.combinations(range(n), 2)
        if matrix.rows[i][j]
    }
    return SimpleGraph(n, frozenset(edges))


@dataclass(frozen=True)
class GraphOddnessReport:
    ok: bool
    even_vertex: int | None = None
    ambiguous_pair: tuple[int, int] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def graph_is_irreducibly_odd(g: SimpleGraph) -> GraphOddnessReport:
    """All degrees odd, every vertex pair split by a third vertex."""
    if g.n == 0:
        return GraphOddnessReport(False, reason="no vertices")
    for v in range(g.n):
        if g.degree(v) % 2 == 0:
            return GraphOddnessReport(False, even_vertex=v, reason="even vertex")
    for u, v in itertools.combinations(range(g.n), 2):
        if not any(
            g.adjacent(u, w) != g.adjacent(v, w)
            for w in range(g.n)
            if w not in (u, v)
        ):
            return GraphOddnessReport(
                False, ambiguous_pair=(u, v), reason="indistinguishable pair"
            )
    return GraphOddnessReport(True)


def wheel_graph(k: int) -> SimpleGraph:
    """Hub 0 joined to a k-cycle on 1..k."""
    if k < 3:
        raise ValueError("a wheel needs a rim cycle of length >= 3")
    edges = [(0, i) for i in range(1, k + 1)]
    edges += [(i, i % k + 1) for i in range(1, k + 1)]
    return graph(k + 1, edges)


def are_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    """Brute-force vertex permutations with a degree-sequence cutoff."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    hdeg = [h.degree(v) for v in range(h.n)]
    gdeg = [g.degree(v) for v in range(g.n)]
    for perm in itertools.permutations(range(g.n)):
        if any(gdeg[v] != hdeg[perm[v]] for v in range(g.n)):
            continue
        if all(h.adjacent(perm[u], perm[v]) for u, v in g.edges):
            return True
    return False


def realizable_bruteforce(
    g: SimpleGraph, limit: int = CENSUS_LIMIT
) -> FramedDiagram | None:
    """A one-component diagram whose interlacement graph is isomorphic to
    ``g``, or None after exhausting the census of g.n-chord diagrams."""
    if g.n > limit:
        raise BudgetExceededError(
            f"realizability scan over {g.n} chords exceeds the guard of {limit}"
        )
    for code in sorted(census(g.n, limit)):
        cand = parse_gauss(code)
        if are_isomorphic(from_interlacement(interlacement(cand)), g):
            return cand
    return None
