"""Harmonic collections and the two maps between them and labeled graphs.

A weakly labeled graph is encoded by the closed neighborhoods of its
non-leaves; each such neighborhood is a harmonic (multi)set whose average is
the vertex it came from.  :func:`extract` and :func:`build` are mutually
inverse on verified graphs and on collections passing :func:`check_axioms`.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .graphs import AnyGraph, LabeledGraph, LabeledMultigraph, is_connected, is_interval, labeled_equal
from .harmonic import av, is_nontrivial_harmonic, verify_weak_multi

Member = tuple[tuple[int, int], ...]  # sorted (element, multiplicity) pairs


class NotationError(ValueError):
    """Malformed collection notation; ``token`` is the first offending token."""

    def __init__(self, message: str, token: str, position: int):
        super().__init__(f"{message}: {token!r} at position {position}")
        self.token = token
        self.position = position


class AxiomError(ValueError):
    def __init__(self, report: "AxiomReport"):
        super().__init__(f"collection fails axioms: {', '.join(report.failed)}")
        self.report = report


class UnverifiedGraphError(ValueError):
    def __init__(self, report):
        bad = ", ".join(str(c.vertex) for c in report.failures)
        super().__init__(f"graph is not weakly harmonic at vertices {bad}")
        self.report = report


def _member(s) -> Member:
    if isinstance(s, Mapping):
        counts = {int(k): int(m) for k, m in s.items()}
    else:
        counts = {}
        for k in s:
            if isinstance(k, tuple):
                counts[int(k[0])] = counts.get(int(k[0]), 0) + int(k[1])
            else:
                counts[int(k)] = counts.get(int(k), 0) + 1
    if not counts:
        raise ValueError("empty member in collection")
    return tuple(sorted(counts.items()))


def _member_key(m: Member):
    return (av(dict(m)), m)


@dataclass(frozen=True)
class HarmonicCollection:
    """Finite collection of harmonic sets (``multi=False``) or multisets.

    Members are stored canonically: elements ascending, members ordered by
    average.  Nothing is validated here; see :func:`check_axioms`.
    """

    members: tuple[Member, ...]
    multi: bool = False

    def __init__(self, members: Iterable, multi: bool = False):
        ms = [_member(s) for s in members]
        if not multi:
            for m in ms:
                if any(c != 1 for _, c in m):
                    raise ValueError("multiplicities above 1 need multi=True")
        object.__setattr__(self, "members", tuple(sorted(ms, key=_member_key)))
        object.__setattr__(self, "multi", multi)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def sets(self) -> list[frozenset[int]]:
        """Underlying sets of the members."""
        return [frozenset(k for k, _ in m) for m in self.members]

    @property
    def averages(self) -> list[Fraction]:
        return [av(dict(m)) for m in self.members]

    @property
    def union(self) -> set[int]:
        return {k for m in self.members for k, _ in m}

    def inverted(self, n: int) -> HarmonicCollection:
        """Image under ``x -> n - 1 - x``."""
        top = n - 1
        return HarmonicCollection(({top - k: c for k, c in m} for m in self.members), multi=self.multi)

    def translated(self, shift: int) -> HarmonicCollection:
        return HarmonicCollection(({k + shift: c for k, c in m} for m in self.members), multi=self.multi)

    def __str__(self) -> str:
        return format_collection(self)

    def __repr__(self) -> str:
        return f"HarmonicCollection({format_collection(self)!r}, multi={self.multi})"


# -- notation ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(-?\d+|[;,^{}]|\S)")


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        out.append((m.group(1), m.start(1)))
        pos = m.end()
    return out


def parse_collection(text: str, multi: bool | None = None) -> HarmonicCollection:
    """Parse ``"0,1,2;1,2,3"``, ``"{0^6,1,2,3,4}"`` or the compact ``"012;123"``.

    The compact all-digit form is used only when the text has no ``,`` or ``^``.
    ``multi=None`` infers multigraph mode from the presence of ``^``.
    """
    body = text.strip()
    if body.startswith("{"):
        if not body.endswith("}"):
            raise NotationError("unbalanced brace", "{", text.index("{"))
        body = body[1:-1]
    elif "}" in body:
        raise NotationError("unbalanced brace", "}", text.index("}"))
    if multi is None:
        multi = "^" in body
    if "," not in body and "^" not in body:
        return _parse_compact(body, text, multi)

    members: list[dict[int, int]] = []
    current: dict[int, int] = {}
    expect = "elem"
    toks = _tokens(body)
    offset = text.find(body) if body else 0
    i = 0
    while i < len(toks):
        tok, pos = toks[i]
        pos += offset
        if expect == "elem":
            if not re.fullmatch(r"-?\d+", tok):
                raise NotationError("expected an integer", tok, pos)
            elem = int(tok)
            mult = 1
            if i + 1 < len(toks) and toks[i + 1][0] == "^":
                if i + 2 >= len(toks) or not re.fullmatch(r"\d+", toks[i + 2][0]) or int(toks[i + 2][0]) < 1:
                    bad = toks[i + 2] if i + 2 < len(toks) else ("^", toks[i + 1][1])
                    raise NotationError("expected a positive multiplicity", bad[0], bad[1] + offset)
                mult = int(toks[i + 2][0])
                i += 2
            if elem in current:
                raise NotationError("repeated element (use ^ for multiplicity)", tok, pos)
            current[elem] = mult
            expect = "sep"
        else:
            if tok == ",":
                expect = "elem"
            elif tok == ";":
                members.append(current)
                current = {}
                expect = "elem"
            else:
                raise NotationError("expected ',' or ';'", tok, pos)
        i += 1
    if expect == "elem":
        last = toks[-1] if toks else ("", 0)
        raise NotationError("dangling separator or empty input", last[0], last[1] + offset)
    members.append(current)
    return HarmonicCollection(members, multi=multi)


def _parse_compact(body: str, text: str, multi: bool) -> HarmonicCollection:
    members = []
    for part in body.split(";"):
        digits = "".join(part.split())
        if not digits:
            raise NotationError("empty set", ";", text.find(";"))
        for ch in digits:
            if not ch.isdigit():
                raise NotationError("compact form takes single digits only", ch, text.find(ch))
        if len(set(digits)) != len(digits):
            dup = next(ch for ch in digits if digits.count(ch) > 1)
            raise NotationError("repeated element", dup, text.find(dup))
        members.append([int(ch) for ch in digits])
    return HarmonicCollection(members, multi=multi)


def format_collection(c: HarmonicCollection, compact: bool = False) -> str:
    """Canonical notation; ``compact=True`` gives ``"012;123"`` when every element is a digit."""
    if compact and all(0 <= k <= 9 and m == 1 for mem in c.members for k, m in mem):
        return ";".join("".join(str(k) for k, _ in mem) for mem in c.members)
    return ";".join(",".join(f"{k}^{m}" if m != 1 else str(k) for k, m in mem) for mem in c.members)


# -- the two maps -----------------------------------------------------------

def extract(g: AnyGraph) -> HarmonicCollection:
    """Closed (multi-)neighborhood of every non-leaf, as a harmonic collection."""
    report = verify_weak_multi(g if isinstance(g, LabeledMultigraph) else g.to_multigraph())
    if not report.ok:
        raise UnverifiedGraphError(report)
    multi = isinstance(g, LabeledMultigraph)
    members = []
    for v, nb in enumerate(g.adjacency):
        if len(nb) >= 2:
            mem = dict(nb)
            mem[v] = 1
            members.append(mem)
    return HarmonicCollection(members, multi=multi)


@dataclass
class AxiomReport:
    """Outcome per axiom; ``P5`` is ``None`` when connectivity was not requested."""

    results: dict[str, bool | None] = field(default_factory=dict)
    details: dict[str, list[str]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v is not False for v in self.results.values())

    def __bool__(self) -> bool:
        return self.ok

    @property
    def failed(self) -> list[str]:
        return [k for k, v in self.results.items() if v is False]

    def to_json(self) -> dict:
        return {"ok": self.ok, "results": self.results, "details": self.details}


def check_axioms(c: HarmonicCollection, connected: bool = True) -> AxiomReport:
    """Evaluate membership, P1 to P5 (MP1 to MP5 for multisets).

    ``members``: each member is a non-trivial harmonic (multi)set; in multi
    mode the average itself has multiplicity 1.
    P1 union is an interval; P2 distinct averages; P3 shared elements are
    averages; P4 ``av(A) in B`` implies ``av(B) in A`` (with matching
    multiplicities in multi mode); P5 the relation ``av(A) in B`` links all
    members.  P5 is skipped when ``connected`` is false.
    """
    rep = AxiomReport()
    members = [dict(m) for m in c.members]
    sets = c.sets

    bad = []
    for mem in members:
        if not is_nontrivial_harmonic(mem):
            bad.append(_fmt(mem))
        elif c.multi and mem[int(av(mem))] != 1:
            bad.append(_fmt(mem) + " (average must have multiplicity 1)")
    rep.results["members"] = not bad and bool(members)
    rep.details["members"] = bad if members else ["empty collection"]

    # Averages as ints where possible; non-harmonic members get None.
    avs = []
    for mem in members:
        a = av(mem)
        avs.append(a.numerator if a.denominator == 1 else None)

    rep.results["P1"] = is_interval(c.union)
    rep.details["P1"] = [] if rep.results["P1"] else [f"union {sorted(c.union)} is not an interval"]

    seen: dict[int, int] = {}
    dup = []
    for i, a in enumerate(avs):
        if a is None:
            continue
        if a in seen:
            dup.append(f"average {a} shared by members {seen[a]} and {i}")
        seen[a] = i
    rep.results["P2"] = not dup
    rep.details["P2"] = dup

    av_set = set(seen)
    shared = []
    count: dict[int, int] = {}
    for s in sets:
        for k in s:
            count[k] = count.get(k, 0) + 1
    for k, cnt in sorted(count.items()):
        if cnt >= 2 and k not in av_set:
            shared.append(f"{k} is shared but is not an average")
    rep.results["P3"] = not shared
    rep.details["P3"] = shared

    asym = []
    for i, a in enumerate(avs):
        if a is None:
            continue
        for j, b in enumerate(avs):
            if i == j or b is None or a not in members[j]:
                continue
            if b not in members[i]:
                asym.append(f"{a} in member {j} but {b} not in member {i}")
            elif c.multi and members[j][a] != members[i][b]:
                asym.append(f"{a}^{members[j][a]} in member {j} but {b}^{members[i][b]} in member {i}")
    rep.results["P4"] = not asym
    rep.details["P4"] = asym

    if connected:
        rep.results["P5"] = _linked(avs, members)
        rep.details["P5"] = [] if rep.results["P5"] else ["members are not linked by averages"]
    else:
        rep.results["P5"] = None
        rep.details["P5"] = []
    return rep


def _linked(avs, members) -> bool:
    k = len(members)
    if k <= 1:
        return True
    # directed relation i -> j iff av(i) in member j; require every pair reachable
    succ = [[j for j in range(k) if j != i and avs[i] is not None and avs[i] in members[j]] for i in range(k)]
    for start in range(k):
        seen = {start}
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in succ[i]:
                if j not in seen:
                    seen.add(j)
                    queue.append(j)
        if len(seen) != k:
            return False
    return True


def _fmt(mem: Mapping[int, int]) -> str:
    return "{" + ",".join(f"{k}^{m}" if m != 1 else str(k) for k, m in sorted(mem.items())) + "}"


def build(c: HarmonicCollection, connected: bool = True) -> Union[LabeledGraph, LabeledMultigraph]:
    """Graph whose non-leaves are the averages and whose closed neighborhoods are the members.

    The union of the members is translated to start at 0.
    """
    report = check_axioms(c, connected=connected)
    if not report.ok:
        raise AxiomError(report)
    lo = min(c.union)
    n = max(c.union) - lo + 1
    mult: dict[tuple[int, int], int] = {}
    for mem in c.members:
        d = dict(mem)
        center = int(av(d))
        for j, m in d.items():
            if j == center:
                continue
            a, b = center - lo, j - lo
            key = (a, b) if a < b else (b, a)
            prev = mult.get(key)
            if prev is not None and prev != m:
                raise AssertionError(f"inconsistent multiplicity on edge {key}: {prev} vs {m}")
            mult[key] = m
    if c.multi:
        return LabeledMultigraph(n, mult, allow_disconnected=not connected)
    return LabeledGraph(n, mult.keys(), allow_disconnected=not connected)


def roundtrip_check(g: AnyGraph) -> bool:
    """Both compositions of :func:`extract` and :func:`build` are identities at ``g``."""
    connected = is_connected(g)
    c = extract(g)
    rebuilt = build(c, connected=connected)
    return labeled_equal(rebuilt, g) and extract(rebuilt) == c


# -- collections on all of Z, checked in a window -----------------------------

def check_zp_window(members: Iterable, lo: int, hi: int) -> AxiomReport:
    """Harmonic-labeling axioms for a (finite piece of an) infinite collection.

    ``ZP1`` (every integer is an average) can only be checked on ``[lo, hi]``;
    ``ZP2`` and ``ZP3`` are checked on the members given.
    """
    c = HarmonicCollection(members, multi=True)
    rep = AxiomReport()
    avs = [a.numerator if a.denominator == 1 else None for a in c.averages]
    missing = sorted(set(range(lo, hi + 1)) - {a for a in avs if a is not None})
    rep.results["ZP1_window"] = not missing
    rep.details["ZP1_window"] = [f"{k} is not an average" for k in missing]
    full = check_axioms(c, connected=False)
    rep.results["ZP2"] = full.results["P2"]
    rep.details["ZP2"] = full.details["P2"]
    rep.results["ZP3"] = full.results["P4"]
    rep.details["ZP3"] = full.details["P4"]
    return rep
