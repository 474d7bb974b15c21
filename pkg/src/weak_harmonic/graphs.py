"""Finite labeled graphs and multigraphs.

Vertices are the integers ``0..n-1`` and each vertex is its own label, so a
graph object *is* a labeled graph.  Both types are immutable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union


class GraphError(ValueError):
    """Raised when a graph violates the data-model invariants."""


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def _adjacency(n: int, weighted: Iterable[tuple[tuple[int, int], int]]) -> tuple[dict[int, int], ...]:
    adj: list[dict[int, int]] = [{} for _ in range(n)]
    for (a, b), m in weighted:
        adj[a][b] = m
        adj[b][a] = m
    return tuple(adj)


def _connected(adj) -> bool:
    n = len(adj)
    if n == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == n


@dataclass(frozen=True)
class LabeledGraph:
    """Simple graph on ``0..n-1`` whose identity map is the labeling.

    Disconnected graphs must be requested with ``allow_disconnected=True``.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    allow_disconnected: bool = field(default=False, compare=False, repr=False)

    def __init__(self, n: int, edges: Iterable[Iterable[int]], allow_disconnected: bool = False):
        if n < 3:
            raise GraphError(f"need at least 3 vertices, got {n}")
        norm = set()
        for e in edges:
            a, b = e
            a, b = int(a), int(b)
            if a == b:
                raise GraphError(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a}, {b}) outside [0, {n - 1}]")
            p = _pair(a, b)
            if p in norm:
                raise GraphError(f"duplicate edge {p}")
            norm.add(p)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "allow_disconnected", allow_disconnected)
        adj = _adjacency(n, ((p, 1) for p in norm))
        object.__setattr__(self, "_adj", adj)
        if not allow_disconnected and not _connected(adj):
            raise GraphError("graph is disconnected")

    @property
    def adjacency(self) -> tuple[dict[int, int], ...]:
        """Per-vertex ``{neighbor: multiplicity}`` maps (multiplicity 1 here)."""
        return self._adj  # type: ignore[attr-defined]

    def neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])  # type: ignore[attr-defined]

    def degree(self, v: int) -> int:
        return len(self._adj[v])  # type: ignore[attr-defined]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_multigraph(self) -> LabeledMultigraph:
        return LabeledMultigraph(self.n, {e: 1 for e in self.edges},
                                 allow_disconnected=self.allow_disconnected)

    def __repr__(self) -> str:
        return f"LabeledGraph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class LabeledMultigraph:
    """Loopless multigraph on ``0..n-1``; ``mult`` maps pairs ``(a, b)``, a < b, to m >= 1."""

    n: int
    mult: tuple[tuple[tuple[int, int], int], ...]
    allow_disconnected: bool = field(default=False, compare=False, repr=False)

    def __init__(self, n: int, mult: Union[Mapping, Iterable], allow_disconnected: bool = False):
        if n < 3:
            raise GraphError(f"need at least 3 vertices, got {n}")
        items = mult.items() if isinstance(mult, Mapping) else ((tuple(t[:2]), t[2]) for t in mult)
        norm: dict[tuple[int, int], int] = {}
        for (a, b), m in items:
            a, b, m = int(a), int(b), int(m)
            if a == b:
                raise GraphError(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a}, {b}) outside [0, {n - 1}]")
            if m < 1:
                raise GraphError(f"multiplicity of ({a}, {b}) must be positive, got {m}")
            p = _pair(a, b)
            if p in norm:
                raise GraphError(f"duplicate edge {p}")
            norm[p] = m
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mult", tuple(sorted(norm.items())))
        object.__setattr__(self, "allow_disconnected", allow_disconnected)
        adj = _adjacency(n, norm.items())
        object.__setattr__(self, "_adj", adj)
        if not allow_disconnected and not _connected(adj):
            raise GraphError("multigraph is disconnected")

    @property
    def adjacency(self) -> tuple[dict[int, int], ...]:
        return self._adj  # type: ignore[attr-defined]

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(p for p, _ in self.mult)

    def multiplicity(self, a: int, b: int) -> int:
        return self._adj[a].get(b, 0)  # type: ignore[attr-defined]

    def neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])  # type: ignore[attr-defined]

    def degree(self, v: int) -> int:
        """Number of edges at ``v`` counted with multiplicity."""
        return sum(self._adj[v].values())  # type: ignore[attr-defined]

    def simplification(self) -> LabeledGraph:
        return LabeledGraph(self.n, self.edges, allow_disconnected=self.allow_disconnected)

    def __repr__(self) -> str:
        return f"LabeledMultigraph(n={self.n}, mult={list(self.mult)})"


AnyGraph = Union[LabeledGraph, LabeledMultigraph]


@dataclass(frozen=True)
class IntegerInterval:
    """``[lo, hi]`` with ``None`` standing for an infinite end."""

    lo: int | None
    hi: int | None

    def __post_init__(self):
        if self.lo is not None and self.hi is not None and self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def __contains__(self, x: int) -> bool:
        return (self.lo is None or x >= self.lo) and (self.hi is None or x <= self.hi)

    @property
    def finite(self) -> bool:
        return self.lo is not None and self.hi is not None

    def __len__(self) -> int:
        if not self.finite:
            raise TypeError("infinite interval has no length")
        return self.hi - self.lo + 1  # type: ignore[operator]

    def __repr__(self) -> str:
        lo = "-inf" if self.lo is None else self.lo
        hi = "inf" if self.hi is None else self.hi
        return f"[{lo}, {hi}]"


def is_interval(values: Iterable[int]) -> bool:
    """True iff the integers in ``values`` are a non-empty run of consecutive integers."""
    s = set(values)
    return bool(s) and max(s) - min(s) + 1 == len(s)


def leaves(g: AnyGraph) -> set[int]:
    """Vertices with exactly one distinct neighbor."""
    return {v for v, nb in enumerate(g.adjacency) if len(nb) == 1}


def is_connected(g: AnyGraph) -> bool:
    return _connected(g.adjacency)


def components(g: AnyGraph) -> list[list[int]]:
    adj = g.adjacency
    seen: set[int] = set()
    out = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def invert(g: AnyGraph) -> AnyGraph:
    """Relabel every vertex ``v`` as ``n - 1 - v``."""
    top = g.n - 1
    if isinstance(g, LabeledMultigraph):
        return LabeledMultigraph(g.n, {(top - a, top - b): m for (a, b), m in g.mult},
                                 allow_disconnected=g.allow_disconnected)
    return LabeledGraph(g.n, [(top - a, top - b) for a, b in g.edges],
                        allow_disconnected=g.allow_disconnected)


def labeled_equal(g1: AnyGraph, g2: AnyGraph) -> bool:
    """Label-preserving isomorphism, which for labels ``0..n-1`` is edge (multi)set equality."""
    if g1.n != g2.n:
        return False
    m1 = {(a, b): m for a, nb in enumerate(g1.adjacency) for b, m in nb.items()}
    m2 = {(a, b): m for a, nb in enumerate(g2.adjacency) for b, m in nb.items()}
    return m1 == m2


def relabel(g: LabeledGraph, perm) -> LabeledGraph:
    """Graph obtained by moving vertex ``v`` to label ``perm[v]``."""
    return LabeledGraph(g.n, [(perm[a], perm[b]) for a, b in g.edges],
                        allow_disconnected=g.allow_disconnected)


def is_path(g: AnyGraph) -> bool:
    """True iff the simplification is the path ``0-1-...-(n-1)`` up to labeling."""
    adj = g.adjacency
    degs = sorted(len(nb) for nb in adj)
    return is_connected(g) and degs == [1, 1] + [2] * (g.n - 2)


def is_star(g: AnyGraph) -> bool:
    adj = g.adjacency
    degs = sorted(len(nb) for nb in adj)
    return is_connected(g) and degs == [1] * (g.n - 1) + [g.n - 1]

