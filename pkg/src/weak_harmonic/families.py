"""Constructive families of weakly labeled graphs.

Finite generators return :class:`LabeledGraph` values and check their own
output with :func:`verify_weak`.  Infinite families (inner cylinders, the
spanning-edge graphs ``P_B``, half-lines) are :class:`WindowedFamily` values
that only answer "who are the neighbors of this label", so they can be checked
or materialized on any finite window.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

from .graphs import LabeledGraph
from .harmonic import verify_weak


class FamilyError(ValueError):
    pass


class CoalescenceError(ValueError):
    """``reason`` is one of ``left_not_leaf``, ``right_not_leaf``, ``label_sum``."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


def _checked(g: LabeledGraph) -> LabeledGraph:
    report = verify_weak(g)
    if not report.ok:
        raise AssertionError(f"generator produced an unverified graph: {report.failures}")
    return g


# -- finite families ------------------------------------------------------------

def path(n: int) -> LabeledGraph:
    if n < 3:
        raise FamilyError("a path needs at least 3 vertices")
    return _checked(LabeledGraph(n, [(i, i + 1) for i in range(n - 1)]))


def star(n_leaves: int) -> LabeledGraph:
    """``K_{1,n}`` with the center labeled ``n/2``; ``n`` must be even."""
    if n_leaves < 2 or n_leaves % 2:
        raise FamilyError(f"star needs an even number of leaves >= 2, got {n_leaves}")
    c = n_leaves // 2
    return _checked(LabeledGraph(n_leaves + 1, [(c, v) for v in range(n_leaves + 1) if v != c]))


def star_path(m: int, n: int, k: int) -> LabeledGraph:
    """Path on the multiples ``km, (k+1)m, ..., (n-k-1)m`` plus every other label of
    ``[0, (n-1)m]`` hung as a leaf on the central vertex ``(n-1)m/2``.

    ``k = 0, m = 1`` gives ``P_n``; ``k = (n-1)/2, m = 1`` gives the star.
    """
    if m < 1 or n < 3 or n % 2 == 0 or not (0 <= k <= (n - 1) // 2):
        raise FamilyError(f"need m >= 1, odd n >= 3 and 0 <= k <= (n-1)/2; got m={m}, n={n}, k={k}")
    top = (n - 1) * m
    center = top // 2
    on_path = list(range(k * m, (n - k - 1) * m + 1, m))
    edges = set(zip(on_path, on_path[1:]))
    path_set = set(on_path)
    edges |= {(v, center) for v in range(top + 1) if v not in path_set}
    return _checked(LabeledGraph(top + 1, edges))


def c_grid(k: int, h: int) -> LabeledGraph:
    """``C^{k,h}`` on ``[0, (h+1)k - 2]``: rungs ``{a, a+1}`` for ``k-1 <= a <= hk-2``
    and ``{a, a+k}`` for ``0 <= a <= hk-2`` with ``a mod k != k-1``."""
    if k < 2 or h < 2:
        raise FamilyError(f"need k, h >= 2; got k={k}, h={h}")
    edges = [(a, a + 1) for a in range(k - 1, h * k - 1)]
    edges += [(a, a + k) for a in range(h * k - 1) if a % k != k - 1]
    return _checked(LabeledGraph((h + 1) * k - 1, edges))


def _sole_neighbor(g: LabeledGraph, v: int) -> int:
    (w,) = g.adjacency[v]
    return w


def coalesce(left: LabeledGraph, right: Union[LabeledGraph, "WindowedFamily"]):
    """Glue the top leaf ``n-1`` of ``left`` to the bottom leaf ``0`` of ``right``.

    Labels of ``right`` are shifted by ``n-1``.  Requires the two leaves'
    neighbors to satisfy ``v + w = n - 1``.  A half-line ``right`` family
    yields a half-line family.
    """
    n = left.n
    top = n - 1
    if len(left.adjacency[top]) != 1:
        raise CoalescenceError("left_not_leaf", f"vertex {top} of the left graph is not a leaf")
    v = _sole_neighbor(left, top)
    if isinstance(right, WindowedFamily):
        if right.domain_lo != 0:
            raise CoalescenceError("right_not_leaf", "right family must be labeled onto [0, inf]")
        nb0 = right.neighbors(0)
        if len(set(nb0)) != 1:
            raise CoalescenceError("right_not_leaf", "vertex 0 of the right family is not a leaf")
        w = nb0[0]
    else:
        if len(right.adjacency[0]) != 1:
            raise CoalescenceError("right_not_leaf", "vertex 0 of the right graph is not a leaf")
        w = _sole_neighbor(right, 0)
    if v + w != top:
        raise CoalescenceError("label_sum", f"neighbors {v} + {w} != {top}")
    if isinstance(right, WindowedFamily):
        return WindowedFamily("coalesced", left=left, right=right)
    edges = set(left.edges) | {(a + top, b + top) for a, b in right.edges}
    return _checked(LabeledGraph(n + right.n - 1, edges))


# -- infinite families -------------------------------------------------------------

@dataclass(frozen=True)
class WindowedFamily:
    """A lazily evaluated infinite labeled graph.

    ``kind`` is one of

    * ``"pb"``: the integer line plus chords ``{sk+i, (s+1)k+i}`` for each ``(i, k)`` in ``base``;
    * ``"inner_cylinder"``: layers ``graph + s*n`` joined vertically at non-leaves;
    * ``"c_grid_ray"``: ``C^{k,inf}`` labeled onto ``[0, inf]`` (``k`` in ``base``);
    * ``"ray"``: the path labeled onto ``[0, inf]``;
    * ``"coalesced"``: a finite ``left`` glued to a half-line ``right``.
    """

    kind: str
    base: frozenset = field(default_factory=frozenset)
    graph: LabeledGraph | None = None
    k: int = 0
    left: LabeledGraph | None = None
    right: "WindowedFamily | None" = None

    def __post_init__(self):
        if self.kind == "pb":
            base = frozenset((int(i), int(k)) for i, k in self.base)
            for i, k in base:
                if k < 2 or not 0 <= i <= k - 1:
                    raise FamilyError(f"base pair ({i}, {k}) needs k >= 2 and 0 <= i <= k-1")
            object.__setattr__(self, "base", base)
        elif self.kind == "inner_cylinder":
            if self.graph is None:
                raise FamilyError("inner cylinder needs a base graph")
        elif self.kind == "c_grid_ray":
            if self.k < 2:
                raise FamilyError("c_grid_ray needs k >= 2")
        elif self.kind == "coalesced":
            if self.left is None or self.right is None:
                raise FamilyError("coalesced family needs left and right")
        elif self.kind != "ray":
            raise FamilyError(f"unknown family kind {self.kind!r}")

    @property
    def domain_lo(self) -> int | None:
        """Smallest label, or None for families labeled onto all of Z."""
        return None if self.kind in ("pb", "inner_cylinder") else 0

    def neighbors(self, label: int) -> list[int]:
        return family_neighbors(self, label)


def pb(base: Iterable[tuple[int, int]] = ()) -> WindowedFamily:
    return WindowedFamily("pb", base=frozenset(base))


def inner_cylinder(g: LabeledGraph) -> WindowedFamily:
    return WindowedFamily("inner_cylinder", graph=g)


def family_neighbors(f: WindowedFamily, label: int) -> list[int]:
    """Sorted neighbor labels of ``label`` in the infinite graph ``f``."""
    t = label
    if f.domain_lo is not None and t < f.domain_lo:
        raise ValueError(f"label {t} is outside the domain [{f.domain_lo}, inf]")
    if f.kind == "pb":
        out = [t - 1, t + 1]
        for i, k in f.base:
            if (t - i) % k == 0:
                out += [t - k, t + k]
        return sorted(out)
    if f.kind == "inner_cylinder":
        g = f.graph
        n = g.n
        s, v = divmod(t, n)  # floor division keeps negative layers right
        nb = g.adjacency[v]
        out = [w + s * n for w in nb]
        if len(nb) != 1:
            out += [t - n, t + n]
        return sorted(out)
    if f.kind == "c_grid_ray":
        k = f.k
        out = []
        if t >= k:
            out.append(t + 1)
            if t - 1 >= k - 1:
                out.append(t - 1)
        elif t == k - 1:
            out.append(t + 1)
        if t % k != k - 1:
            out.append(t + k)
        if t - k >= 0 and (t - k) % k != k - 1:
            out.append(t - k)
        return sorted(out)
    if f.kind == "ray":
        return [1] if t == 0 else [t - 1, t + 1]
    # coalesced
    top = f.left.n - 1
    if t < top:
        return sorted(f.left.adjacency[t])
    right = [w + top for w in family_neighbors(f.right, t - top)]
    if t == top:
        right += list(f.left.adjacency[top])
    return sorted(right)


def c_grid_ray(k: int) -> WindowedFamily:
    return WindowedFamily("c_grid_ray", k=k)


def ray() -> WindowedFamily:
    return WindowedFamily("ray")


@dataclass
class WindowReport:
    lo: int
    hi: int
    checked: int
    failures: list[tuple[int, int, int]]  # (label, neighbor sum, degree * label)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok


def verify_window(f: WindowedFamily, lo: int, hi: int) -> WindowReport:
    """Check the averaging condition at every non-leaf label in ``[lo, hi]``."""
    if lo > hi:
        raise ValueError("empty window")
    if f.domain_lo is not None:
        lo = max(lo, f.domain_lo)
    failures = []
    checked = 0
    for t in range(lo, hi + 1):
        nb = family_neighbors(f, t)
        if len(set(nb)) == 1:
            continue
        checked += 1
        if sum(nb) != len(nb) * t:
            failures.append((t, sum(nb), len(nb) * t))
    return WindowReport(lo, hi, checked, failures)


def window_edges(f: WindowedFamily, lo: int, hi: int) -> set[tuple[int, int]]:
    """Edges of ``f`` with both endpoint labels in ``[lo, hi]``."""
    if f.domain_lo is not None:
        lo = max(lo, f.domain_lo)
    out = set()
    for t in range(lo, hi + 1):
        for w in family_neighbors(f, t):
            if t < w <= hi:
                out.add((t, w))
    return out


def window_graph(f: WindowedFamily, lo: int, hi: int) -> tuple[LabeledGraph, list[int]]:
    """Materialize ``[lo, hi]`` as a graph on ``0..hi-lo``; also return the original labels."""
    if f.domain_lo is not None:
        lo = max(lo, f.domain_lo)
    g = LabeledGraph(hi - lo + 1, [(a - lo, b - lo) for a, b in window_edges(f, lo, hi)],
                     allow_disconnected=True)
    return g, list(range(lo, hi + 1))


def distinct_bases_distinct_graphs(b1, b2, window: tuple[int, int] | None = None) -> bool:
    """True iff the window separates ``P_{b1}`` from ``P_{b2}`` exactly when ``b1 != b2``.

    The window must span at least two periods of every chord length involved.
    """
    f1, f2 = pb(b1), pb(b2)
    kmax = max([k for _, k in f1.base | f2.base], default=2)
    if window is None:
        window = (0, 2 * kmax + 1)
    lo, hi = window
    if hi - lo < 2 * kmax:
        raise ValueError(f"window {window} is shorter than two periods of k={kmax}")
    differ = window_edges(f1, lo, hi) != window_edges(f2, lo, hi)
    return differ == (f1.base != f2.base)


# -- the {0, 1}-spanning linear system -------------------------------------------

def _solve_exact(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Gauss-Jordan elimination over the rationals; None if singular."""
    n = len(a)
    m = [row[:] + [rhs] for row, rhs in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def spanning_matrix(k: int) -> tuple[list[list[int]], list[int]]:
    """Matrix and right-hand side for the labels ``x_{k+1}..x_{2k}`` of ``C^{k,inf}``."""
    if k < 2:
        raise ValueError("k must be at least 2")
    a = [[0] * k for _ in range(k)]
    a[0][0] += 1
    a[0][k - 1] += 1
    a[1][0] = 2
    a[1][1] = -1
    for r in range(2, k):
        a[r][r - 2] = -1
        a[r][r - 1] = 2
        a[r][r] = -1
    rhs = [3 * k + 1, k] + [0] * (k - 2)
    return a, rhs


def spanning_solution(k: int) -> list[Fraction] | None:
    """Exact solution of the system from :func:`spanning_matrix`, or None if singular."""
    a, rhs = spanning_matrix(k)
    return _solve_exact([[Fraction(x) for x in row] for row in a], [Fraction(x) for x in rhs])


def spanning_check(k: int) -> bool:
    """True iff the system is non-singular with solution ``k+1, ..., 2k``."""
    return spanning_solution(k) == [Fraction(k + 1 + i) for i in range(k)]
