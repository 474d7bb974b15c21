"""Averages, harmonic (multi)sets and the labeling verifiers.

All arithmetic is exact: averages are :class:`fractions.Fraction` and vertex
equations are checked over Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

import numpy as np

from .graphs import AnyGraph, LabeledGraph, LabeledMultigraph, leaves

Multiset = Union[Mapping[int, int], Iterable[int]]


def _as_counts(s: Multiset) -> dict[int, int]:
    if isinstance(s, Mapping):
        counts = {int(k): int(m) for k, m in s.items()}
    else:
        counts = {}
        for k in s:
            counts[int(k)] = counts.get(int(k), 0) + 1
    for k, m in counts.items():
        if m < 1:
            raise ValueError(f"multiplicity of {k} must be positive, got {m}")
    return counts


def av(s: Multiset) -> Fraction:
    """Exact (multiplicity-weighted) average.

    ``s`` is either an iterable of integers (repeats count) or a mapping
    ``{element: multiplicity}``.
    """
    counts = _as_counts(s)
    if not counts:
        raise ValueError("average of an empty multiset")
    total = sum(counts.values())
    return Fraction(sum(k * m for k, m in counts.items()), total)


def is_harmonic(s: Multiset) -> bool:
    a = av(s)
    return a.denominator == 1 and a.numerator in _as_counts(s)


def is_nontrivial_harmonic(s: Multiset) -> bool:
    return len(_as_counts(s)) >= 3 and is_harmonic(s)


def harmonize_multiset(m: Multiset, x: int) -> dict[int, int]:
    """Rescale multiplicities so that the weighted average becomes ``x``.

    With ``P = sum((x - z) * m(z) for z < x)`` and ``N = sum((z - x) * m(z) for z > x)``,
    elements below ``x`` are multiplied by ``N`` and elements above by ``P``;
    the multiplicity of ``x`` itself is kept.  The underlying set never changes.
    """
    counts = _as_counts(m)
    if x not in counts:
        raise ValueError(f"{x} is not an element of the multiset")
    if x == min(counts) or x == max(counts):
        raise ValueError(f"{x} is an extreme element; no positive rescaling averages to it")
    below = sum((x - z) * c for z, c in counts.items() if z < x)
    above = sum((z - x) * c for z, c in counts.items() if z > x)
    out = {}
    for z, c in counts.items():
        if z < x:
            out[z] = c * above
        elif z > x:
            out[z] = c * below
        else:
            out[z] = c
    return out


@dataclass(frozen=True)
class VertexCheck:
    vertex: int
    lhs: int  # weighted neighbor-label sum
    rhs: int  # degree * label

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    @property
    def deficit(self) -> int:
        return self.lhs - self.rhs

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[VertexCheck, ...]
    leaves: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self) -> bool:
        return self.ok

    @property
    def failures(self) -> list[VertexCheck]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {
            "verified": self.ok,
            "leaves": list(self.leaves),
            "vertices": [dict(c.to_json(), ok=c.ok) for c in self.checks],
            "failures": [dict(c.to_json(), deficit=c.deficit) for c in self.failures],
        }


def _verify(g: AnyGraph) -> VerificationReport:
    adj = g.adjacency
    lv = leaves(g)
    checks = []
    for v, nb in enumerate(adj):
        if v in lv:
            continue
        deg = sum(nb.values())
        checks.append(VertexCheck(v, sum(m * w for w, m in nb.items()), deg * v))
    return VerificationReport(tuple(checks), tuple(sorted(lv)))


def verify_weak(g: LabeledGraph) -> VerificationReport:
    """Check that every non-leaf label is the average of its neighbors' labels."""
    if isinstance(g, LabeledMultigraph):
        raise TypeError("use verify_weak_multi for multigraphs")
    return _verify(g)


def verify_weak_multi(g: LabeledMultigraph) -> VerificationReport:
    """Multiplicity-weighted form of :func:`verify_weak`."""
    if isinstance(g, LabeledGraph):
        g = g.to_multigraph()
    return _verify(g)


def laplacian_kernel_check(g: LabeledGraph) -> bool:
    """Independent check: is ``(0, 1, ..., n-1)`` in the kernel of the reduced Laplacian?

    The reduced Laplacian is ``D - A`` with the rows of leaves removed.
    Entries stay far below int64 range for any graph that fits in memory.
    """
    n = g.n
    lap = np.zeros((n, n), dtype=np.int64)
    for a, b in g.edges:
        lap[a, b] -= 1
        lap[b, a] -= 1
        lap[a, a] += 1
        lap[b, b] += 1
    keep = [v for v in range(n) if lap[v, v] != 1]
    labels = np.arange(n, dtype=np.int64)
    return bool(np.all(lap[keep] @ labels == 0))


def verify_total(t) -> VerificationReport:
    """Verify a total labeling: edge weights act as multiplicities.

    ``t`` is a :class:`~weak_harmonic.total.TotalLabeling` (anything with
    ``graph`` and ``weights``).
    """
    for e, w in t.weights.items():
        if w < 1:
            raise ValueError(f"edge {e} has non-positive weight {w}")
    if set(t.weights) != set(t.graph.edges):
        raise ValueError("weights must be defined on exactly the edge set")
    mg = LabeledMultigraph(t.graph.n, dict(t.weights), allow_disconnected=t.graph.allow_disconnected)
    return _verify(mg)
