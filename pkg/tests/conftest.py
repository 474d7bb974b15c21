from __future__ import annotations

import itertools
import json
from pathlib import Path

import pytest
from hypothesis import strategies as st

from weak_harmonic.graphs import LabeledGraph, LabeledMultigraph

GOLDEN = Path(__file__).parent / "golden"


def load_golden(name: str):
    with open(GOLDEN / name) as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def reference():
    return load_golden("reference_graphs.json")


@pytest.fixture(scope="session")
def weighted():
    return load_golden("reference_weights.json")


@st.composite
def simple_graphs(draw, min_n=3, max_n=8, connected=False):
    """Any labeled simple graph on [0, n-1]; disconnected ones are allowed unless asked."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if connected:
        # a random spanning tree keeps the draw connected
        tree = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
        extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
        return LabeledGraph(n, set(tree) | set(extra))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return LabeledGraph(n, edges, allow_disconnected=True)


@st.composite
def multigraphs(draw, min_n=3, max_n=7, max_mult=4):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    mult = {p: draw(st.integers(1, max_mult)) for p in chosen}
    return LabeledMultigraph(n, mult, allow_disconnected=True)
