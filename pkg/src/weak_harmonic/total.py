"""Total weak harmonic labelings: positive edge weights that make every
non-leaf label the weighted average of its neighbors' labels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .graphs import LabeledGraph, LabeledMultigraph, leaves
from .harmonic import VerificationReport, harmonize_multiset, verify_total


class NotAdmissibleError(ValueError):
    def __init__(self, report: "AdmissibilityReport"):
        super().__init__(f"labeling is not admissible at vertices {report.failures}")
        self.report = report


@dataclass(frozen=True)
class TotalLabeling:
    graph: LabeledGraph
    weights: Mapping[tuple[int, int], int]

    def __init__(self, graph: LabeledGraph, weights: Mapping):
        norm = {}
        for (a, b), w in weights.items():
            key = (a, b) if a < b else (b, a)
            if w < 1:
                raise ValueError(f"edge {key} has non-positive weight {w}")
            norm[key] = int(w)
        if set(norm) != set(graph.edges):
            raise ValueError("weights must be given for exactly the edges of the graph")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "weights", dict(sorted(norm.items())))

    def as_multigraph(self) -> LabeledMultigraph:
        return LabeledMultigraph(self.graph.n, self.weights, allow_disconnected=self.graph.allow_disconnected)

    @classmethod
    def uniform(cls, graph: LabeledGraph, weight: int = 1) -> TotalLabeling:
        return cls(graph, {e: weight for e in graph.edges})

    def verify(self) -> VerificationReport:
        return verify_total(self)


@dataclass(frozen=True)
class AdmissibilityReport:
    failures: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok


def check_admissible(g: LabeledGraph) -> AdmissibilityReport:
    """Every non-leaf must lie strictly between its smallest and largest neighbor."""
    bad = []
    for v, nb in enumerate(g.adjacency):
        if len(nb) == 1:
            continue
        if not nb or not (min(nb) < v < max(nb)):
            bad.append(v)
    return AdmissibilityReport(tuple(bad))


def total_label(g: LabeledGraph) -> TotalLabeling:
    """Edge weights for an admissible labeled graph.

    Non-leaves are processed by increasing label.  At vertex ``v`` the edges
    to already processed neighbors (all below ``v``) carry fixed weights; the
    closed neighborhood is harmonized around ``v``, which multiplies the lower
    side by some factor.  Every fixed edge (those touching a processed vertex)
    is then rescaled by that same factor so the shared weights keep agreeing;
    a uniform rescale at a vertex preserves its equation, so earlier vertices
    stay balanced.
    """
    report = check_admissible(g)
    if not report.ok:
        raise NotAdmissibleError(report)
    adj = g.adjacency
    weight: dict[tuple[int, int], int] = {}
    fixed: set[tuple[int, int]] = set()

    def key(a, b):
        return (a, b) if a < b else (b, a)

    for v in sorted(set(range(g.n)) - leaves(g)):
        mset = {v: 1}
        for w in adj[v]:
            mset[w] = weight.get(key(v, w), 1)
        harmonized = harmonize_multiset(mset, v)
        below = next(harmonized[w] // mset[w] for w in mset if w < v)
        above = next(harmonized[w] // mset[w] for w in mset if w > v)
        g_ab = math.gcd(below, above)
        below //= g_ab
        above //= g_ab
        if below != 1:
            for e in fixed:
                weight[e] *= below
        for w in adj[v]:
            e = key(v, w)
            weight[e] = mset[w] * (below if w < v else above)
            fixed.add(e)
    for e in g.edges:
        weight.setdefault(e, 1)
    result = TotalLabeling(g, weight)
    check = verify_total(result)
    if not check.ok:
        raise AssertionError(f"total_label produced an unbalanced labeling at {check.failures}")
    return result


def _coupled_components(t: TotalLabeling) -> list[list[tuple[int, int]]]:
    # edges sharing a non-leaf endpoint must be scaled together
    g = t.graph
    lv = leaves(g)
    parent = {e: e for e in t.weights}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for v, nb in enumerate(g.adjacency):
        if v in lv or not nb:
            continue
        es = [(v, w) if v < w else (w, v) for w in nb]
        for e in es[1:]:
            parent[find(e)] = find(es[0])
    groups: dict[tuple[int, int], list] = {}
    for e in t.weights:
        groups.setdefault(find(e), []).append(e)
    return [sorted(es) for _, es in sorted(groups.items())]


def minimize_weights(t: TotalLabeling) -> TotalLabeling:
    """Divide each coupled group of edge weights by its gcd, keeping only verified reductions."""
    if not verify_total(t).ok:
        raise ValueError("input is not a total weak harmonic labeling")
    weights = dict(t.weights)
    for comp in _coupled_components(t):
        d = math.gcd(*(weights[e] for e in comp))
        if d <= 1:
            continue
        trial = dict(weights)
        for e in comp:
            trial[e] //= d
        if verify_total(TotalLabeling(t.graph, trial)).ok:
            weights = trial
    return TotalLabeling(t.graph, weights)
