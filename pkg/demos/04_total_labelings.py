"""
Edge weights that repair a labeling
===================================

When a labeling is not weak harmonic but every inner vertex has a neighbor
on each side, positive integer edge weights can make each inner label the
weighted average of its neighbors.
"""

import itertools

from weak_harmonic import check_admissible, minimize_weights, total_label
from weak_harmonic.graphs import LabeledGraph
from weak_harmonic.harmonic import verify_weak


def complete_with_two_leaves(k):
    """K_k on labels 1..k, plus leaves 0 and k+1 on the ends."""
    inner = list(range(1, k + 1))
    edges = list(itertools.combinations(inner, 2)) + [(0, 1), (k, k + 1)]
    return LabeledGraph(k + 2, edges)


for k in (3, 4, 5, 6):
    g = complete_with_two_leaves(k)
    print(f"K_{k} plus two leaves: weak harmonic as is? {verify_weak(g).ok}; admissible? {check_admissible(g).ok}")
    t = minimize_weights(total_label(g))
    heavy = {e: w for e, w in t.weights.items() if w != 1}
    print("  weights other than 1:", heavy)
    print("  verified:", t.verify().ok)

# a vertex with nothing above it can never be balanced
bad = LabeledGraph(4, [(0, 1), (1, 2), (0, 3), (0, 2)])
print("not admissible at", check_admissible(bad).failures)
