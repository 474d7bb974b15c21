"""Exhaustive enumeration of weakly labeled graphs on ``[0, n-1]``.

The search picks the set ``M`` of averages (the non-leaves) first, then
sweeps the labels upward.  When label ``v`` is reached all of its lower
neighbors are known; a non-leaf must then receive upper neighbors whose
offsets ``u - v`` (times multiplicity) add up exactly to the accumulated lower
offset, and a leaf must end with exactly one neighbor, which lies in ``M``.
Every graph is produced once, and its harmonic collection is read off the
closed neighborhoods of ``M``.
"""

from __future__ import annotations

import itertools
import json
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

import numpy as np

from .correspondence import HarmonicCollection, build, extract, format_collection, parse_collection
from .graphs import LabeledGraph, LabeledMultigraph, is_connected
from .harmonic import verify_weak, verify_weak_multi

log = logging.getLogger(__name__)

ORACLE_MAX_N = 7


@dataclass(frozen=True)
class EnumOptions:
    n: int
    connected: bool = True
    max_multiplicity: int = 1
    dedup_inversion: bool = False
    max_n: int = 12

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"n must be at least 3, got {self.n}")
        if self.max_multiplicity < 1:
            raise ValueError("max_multiplicity must be positive")
        if self.n > self.max_n:
            raise ValueError(f"n={self.n} exceeds the configured limit max_n={self.max_n}")

    def to_json(self) -> dict:
        d = asdict(self)
        del d["max_n"]
        return d


@dataclass
class Catalog:
    options: EnumOptions
    entries: list[HarmonicCollection] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.entries)

    def serialized(self) -> list[str]:
        return [format_collection(c) for c in self.entries]

    def to_json(self) -> dict:
        return {
            "n": self.options.n,
            "options": self.options.to_json(),
            "count": self.count,
            "collections": self.serialized(),
        }

    def dumps(self) -> str:
        """Byte-stable JSON text."""
        return json.dumps(self.to_json(), indent=1, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, data: dict) -> Catalog:
        opts = EnumOptions(**data["options"])
        multi = opts.max_multiplicity > 1
        return cls(opts, [parse_collection(s, multi=multi) for s in data["collections"]])

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


# -- core search ---------------------------------------------------------------

def _serialize(n: int, inm: list[bool], adj: list[dict[int, int]]) -> str:
    parts = []
    for t in range(n):
        if inm[t]:
            nb = adj[t]
            elems = sorted(list(nb) + [t])
            parts.append(",".join(str(k) if k == t or nb[k] == 1 else f"{k}^{nb[k]}" for k in elems))
    return ";".join(parts)


def _connected_adj(n: int, adj: list[dict[int, int]]) -> bool:
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def _search(n: int, averages, max_mult: int, connected: bool,
            emit: Callable[[list[dict[int, int]]], bool], rng: random.Random | None = None,
            budget: list[int] | None = None) -> None:
    """Depth-first search for graphs whose non-leaves are exactly ``averages``.

    ``emit`` receives the adjacency of each solution and returns True to stop.
    ``rng`` randomizes branch order; ``budget`` is a one-element node counter.
    """
    inm = [False] * n
    for t in averages:
        inm[t] = True
    adj: list[dict[int, int]] = [{} for _ in range(n)]
    deficit = [0] * n  # sum of m * (v - w) over lower neighbors w
    lower = [0] * n  # distinct lower neighbors
    # largest balance an M vertex can still collect from above
    cap = [max_mult * (n - 1 - u) * (n - u) // 2 for u in range(n)]
    mults = list(range(1, max_mult + 1))
    stop = False

    def link(v, u, m):
        adj[v][u] = m
        adj[u][v] = m
        deficit[u] += m * (u - v)
        lower[u] += 1

    def unlink(v, u, m):
        del adj[v][u]
        del adj[u][v]
        deficit[u] -= m * (u - v)
        lower[u] -= 1

    def order(seq):
        if rng is None:
            return seq
        seq = list(seq)
        rng.shuffle(seq)
        return seq

    def upper(v, cands, idx, remaining, room):
        # choose multiplicities for cands[idx:] so offsets sum to `remaining`
        if remaining == 0:
            advance(v + 1)
            return
        if idx == len(cands) or room[idx] < remaining:
            return
        u = cands[idx]
        d = u - v
        options = [0] + mults
        if rng is not None:
            rng.shuffle(options)
        for m in options:
            if stop:
                return
            if m == 0:
                upper(v, cands, idx + 1, remaining, room)
                continue
            if m * d > remaining:
                continue
            if inm[u] and deficit[u] + m * d > cap[u]:
                continue
            link(v, u, m)
            upper(v, cands, idx + 1, remaining - m * d, room)
            unlink(v, u, m)

    def advance(v):
        nonlocal stop
        if stop:
            return
        if budget is not None:
            budget[0] -= 1
            if budget[0] < 0:
                stop = True
                return
        if v == n:
            if not connected or _connected_adj(n, adj):
                stop = bool(emit(adj))
            return
        if not inm[v]:
            if lower[v] == 1:
                advance(v + 1)
            elif lower[v] == 0:
                for u in order(range(v + 1, n)):
                    if not inm[u]:
                        continue
                    for m in order(mults):
                        if stop:
                            return
                        if deficit[u] + m * (u - v) > cap[u]:
                            continue
                        link(v, u, m)
                        advance(v + 1)
                        unlink(v, u, m)
            return
        target = deficit[v]
        if target == 0:
            return
        # an upper leaf may only be taken if nothing has claimed it yet
        cands = [u for u in range(v + 1, n) if inm[u] or lower[u] == 0]
        if rng is not None:
            rng.shuffle(cands)
        room = [0] * (len(cands) + 1)
        for i in range(len(cands) - 1, -1, -1):
            room[i] = room[i + 1] + max_mult * (cands[i] - v)
        upper(v, cands, 0, target, room)

    advance(0)


def _averages_choices(n: int) -> Iterator[tuple[int, ...]]:
    inner = range(1, n - 1)
    for r in range(1, n - 1):
        yield from itertools.combinations(inner, r)


def _solve_root(args) -> list[str]:
    n, averages, max_mult, connected = args
    inm = [False] * n
    for t in averages:
        inm[t] = True
    out: list[str] = []

    def emit(adj):
        out.append(_serialize(n, inm, adj))
        return False

    _search(n, averages, max_mult, connected, emit)
    return out


def enumerate_catalog(opts: EnumOptions, workers: int = 1) -> Catalog:
    """Every harmonic collection on ``[0, n-1]`` satisfying the axioms.

    Connectivity (P5) is dropped when ``opts.connected`` is false; with
    ``max_multiplicity > 1`` multigraph collections with edge multiplicities
    up to that bound are listed.  Work is split on the set of averages and the
    merged output is sorted, so it does not depend on ``workers``.
    """
    if opts.n > 10:
        log.warning("enumerating n=%d: runtime grows roughly fourfold per extra vertex "
                    "(about 1 s at n=12 for simple graphs)", opts.n)
    tasks = [(opts.n, m, opts.max_multiplicity, opts.connected) for m in _averages_choices(opts.n)]
    found: list[str] = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_solve_root, tasks, chunksize=4):
                found.extend(part)
    else:
        for t in tasks:
            found.extend(_solve_root(t))
    multi = opts.max_multiplicity > 1
    if opts.dedup_inversion:
        reps = set()
        for s in found:
            inv = format_collection(parse_collection(s, multi=multi).inverted(opts.n))
            reps.add(min(s, inv))
        found = list(reps)
    found.sort()
    return Catalog(opts, [parse_collection(s, multi=multi) for s in found])


def sample_collection(n: int, rng: random.Random, max_multiplicity: int = 1,
                      connected: bool = True, budget: int = 20000, attempts: int = 200) -> HarmonicCollection | None:
    """One random axiom-satisfying collection on ``[0, n-1]``, or None if none was found."""
    inner = list(range(1, n - 1))
    for _ in range(attempts):
        k = rng.randint(1, len(inner))
        averages = sorted(rng.sample(inner, k))
        inm = [t in averages for t in range(n)]
        hit: list[str] = []

        def emit(adj):
            hit.append(_serialize(n, inm, adj))
            return True

        _search(n, averages, max_multiplicity, connected, emit, rng=rng, budget=[budget])
        if hit:
            return parse_collection(hit[0], multi=max_multiplicity > 1)
    return None


# -- independent brute force -------------------------------------------------

def _pair_matrices(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    inc = np.zeros((len(pairs), n), dtype=np.int64)
    other = np.zeros((len(pairs), n), dtype=np.int64)
    for i, (a, b) in enumerate(pairs):
        inc[i, a] = inc[i, b] = 1
        other[i, a] = b
        other[i, b] = a
    return pairs, inc, other


def _sweep(n: int, max_mult: int, chunk: int) -> Iterator[np.ndarray]:
    # every vector in {0..max_mult}^pairs, in blocks of `chunk` rows
    e = n * (n - 1) // 2
    base = max_mult + 1
    place = base ** np.arange(e, dtype=np.int64)
    total = base ** e
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield (idx[:, None] // place) % base


def _oracle_candidates(n: int, max_mult: int = 1, chunk: int = 1 << 16) -> Iterator[list[int]]:
    """Multiplicity vectors over all vertex pairs where every vertex is a leaf or balanced.

    Vectorized filter over every vector in ``{0..max_mult}^pairs``: a vertex
    passes with exactly one distinct neighbor, or with two or more and
    weighted neighbor sum equal to weighted degree times its label.
    Isolated vertices are rejected (the graph must be connected).
    """
    _, inc, other = _pair_matrices(n)
    labels = np.arange(n, dtype=np.int64)
    for mult in _sweep(n, max_mult, chunk):
        distinct = (mult > 0).astype(np.int64) @ inc
        deg = mult @ inc
        nsum = mult @ other
        good = (distinct == 1) | ((distinct >= 2) & (nsum == deg * labels))
        yield from mult[good.all(axis=1)].tolist()


def admissible_graphs(n: int, chunk: int = 1 << 16) -> Iterator[LabeledGraph]:
    """Every connected simple graph on ``[0, n-1]`` in which each non-leaf has
    a neighbor below and a neighbor above it."""
    if n > ORACLE_MAX_N:
        raise ValueError(f"sweep is limited to n <= {ORACLE_MAX_N}, got {n}")
    pairs, inc, _ = _pair_matrices(n)
    below = np.zeros_like(inc)
    above = np.zeros_like(inc)
    for i, (a, b) in enumerate(pairs):
        above[i, a] = 1  # b is above a
        below[i, b] = 1
    for mult in _sweep(n, 1, chunk):
        deg = mult @ inc
        good = (deg == 1) | ((deg >= 2) & (mult @ below > 0) & (mult @ above > 0))
        for vec in mult[good.all(axis=1)].tolist():
            g = LabeledGraph(n, [p for p, m in zip(pairs, vec) if m], allow_disconnected=True)
            if is_connected(g):
                yield g


def brute_force_oracle(n: int, max_multiplicity: int = 1) -> Catalog:
    """Try every (multi)graph on ``[0, n-1]``; keep connected ones with a weak labeling.

    Independent of :func:`enumerate_catalog`: nothing about harmonic
    collections is used to generate candidates.
    """
    if n > ORACLE_MAX_N:
        raise ValueError(f"brute force is limited to n <= {ORACLE_MAX_N}, got {n}")
    opts = EnumOptions(n, max_multiplicity=max_multiplicity)
    pairs = list(itertools.combinations(range(n), 2))
    found = []
    for vec in _oracle_candidates(n, max_multiplicity):
        mult = {p: m for p, m in zip(pairs, vec) if m}
        if max_multiplicity == 1:
            g = LabeledGraph(n, mult, allow_disconnected=True)
            ok = verify_weak(g).ok
        else:
            g = LabeledMultigraph(n, mult, allow_disconnected=True)
            ok = verify_weak_multi(g).ok
        if ok and is_connected(g):
            found.append(format_collection(extract(g)))
    found.sort()
    multi = max_multiplicity > 1
    return Catalog(opts, [parse_collection(s, multi=multi) for s in found])


# -- disconnected graphs ------------------------------------------------------

def disconnected_samples(n: int, workers: int = 1) -> Catalog:
    """Weakly labeled disconnected graphs on ``[0, n-1]`` (components have >= 3 vertices)."""
    full = enumerate_catalog(EnumOptions(n, connected=False), workers=workers)
    keep = [c for c in full.entries if not is_connected(build(c, connected=False))]
    return Catalog(full.options, keep)


def disjoint_copies(g: LabeledGraph, k: int) -> LabeledGraph:
    """``k`` copies of ``g``; vertex ``v`` of copy ``i`` (1-based) gets label ``k*v + i - 1``."""
    if k < 1:
        raise ValueError("k must be positive")
    edges = [(k * a + i, k * b + i) for i in range(k) for a, b in g.edges]
    return LabeledGraph(g.n * k, edges, allow_disconnected=k > 1 or g.allow_disconnected)
