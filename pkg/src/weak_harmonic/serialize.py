"""JSON and Graphviz DOT forms of graphs, total labelings and catalogs.

Graph JSON is ``{"n": n, "edges": [[a, b], ...]}``; multigraphs and total
labelings use ``[a, b, m]`` triples.  Edges are written sorted with ``a < b``.
Window graphs carry an extra ``"labels"`` list mapping vertex ``i`` to its
original (possibly negative) label.
"""

from __future__ import annotations

import json
from typing import Union

from .graphs import LabeledGraph, LabeledMultigraph, leaves
from .total import TotalLabeling


class FormatError(ValueError):
    pass


def graph_to_json(g: Union[LabeledGraph, LabeledMultigraph, TotalLabeling], labels=None) -> dict:
    if isinstance(g, TotalLabeling):
        out = {"n": g.graph.n, "edges": [[a, b, w] for (a, b), w in sorted(g.weights.items())]}
    elif isinstance(g, LabeledMultigraph):
        out = {"n": g.n, "edges": [[a, b, m] for (a, b), m in g.mult]}
    else:
        out = {"n": g.n, "edges": [[a, b] for a, b in g.sorted_edges()]}
    if labels is not None:
        out["labels"] = list(labels)
    return out


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def graph_from_json(data: dict, multi: bool | None = None, total: bool = False):
    """Inverse of :func:`graph_to_json`.

    ``multi=None`` picks a multigraph when any edge is a triple.  Connectivity
    is not enforced here (windows may be disconnected).
    """
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise FormatError("graph JSON needs 'n' and 'edges'")
    n = data["n"]
    if not isinstance(n, int):
        raise FormatError(f"'n' must be an integer, got {n!r}")
    edges = data["edges"]
    for e in edges:
        if not isinstance(e, list) or len(e) not in (2, 3) or not all(isinstance(x, int) for x in e):
            raise FormatError(f"bad edge {e!r}")
    triples = any(len(e) == 3 for e in edges)
    if multi is None:
        multi = triples
    if total:
        g = LabeledGraph(n, [e[:2] for e in edges], allow_disconnected=True)
        return TotalLabeling(g, {(e[0], e[1]): (e[2] if len(e) == 3 else 1) for e in edges})
    if multi:
        return LabeledMultigraph(n, [(e[0], e[1], e[2] if len(e) == 3 else 1) for e in edges],
                                 allow_disconnected=True)
    if triples and any(e[2] != 1 for e in edges if len(e) == 3):
        raise FormatError("multiplicities above 1 in a simple graph (use --multi)")
    return LabeledGraph(n, [e[:2] for e in edges], allow_disconnected=True)


def to_dot(g, name: str = "G", labels=None) -> str:
    """DOT text: leaves green, other vertices red, edge weights above 1 as labels."""
    if isinstance(g, TotalLabeling):
        base, weights = g.graph, g.weights
    elif isinstance(g, LabeledMultigraph):
        base, weights = g, dict(g.mult)
    else:
        base, weights = g, {e: 1 for e in g.edges}
    lv = leaves(base)
    lines = [f"graph {name} {{", "  node [style=filled, shape=circle];"]
    for v in range(base.n):
        color = "green" if v in lv else "red"
        text = labels[v] if labels is not None else v
        lines.append(f'  {v} [label="{text}", fillcolor={color}];')
    for (a, b), w in sorted(weights.items()):
        attr = f' [label="{w}"]' if w != 1 else ""
        lines.append(f"  {a} -- {b}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
