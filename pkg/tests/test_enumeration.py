from __future__ import annotations

import itertools
import json
import random

import pytest

from weak_harmonic.correspondence import build, check_axioms, extract, format_collection, parse_collection
from weak_harmonic.enumeration import (
    Catalog,
    EnumOptions,
    admissible_graphs,
    brute_force_oracle,
    disconnected_samples,
    disjoint_copies,
    enumerate_catalog,
    sample_collection,
)
from weak_harmonic.graphs import LabeledGraph, is_connected
from weak_harmonic.harmonic import verify_weak, verify_weak_multi


def reference_strings(reference, n):
    return sorted(format_collection(extract(LabeledGraph(e["n"], e["edges"]))) for e in reference if e["n"] == n)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
def test_matches_reference_graphs(reference, n):
    assert enumerate_catalog(EnumOptions(n)).serialized() == reference_strings(reference, n)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_matches_brute_force(n):
    assert enumerate_catalog(EnumOptions(n)).serialized() == brute_force_oracle(n).serialized()


@pytest.mark.parametrize("n, m", [(3, 4), (4, 3), (5, 2)])
def test_multigraphs_match_brute_force(n, m):
    opts = EnumOptions(n, max_multiplicity=m)
    assert enumerate_catalog(opts).serialized() == brute_force_oracle(n, m).serialized()


def test_small_multigraph_counts():
    assert [enumerate_catalog(EnumOptions(n, max_multiplicity=4)).count for n in (3, 4, 5)] == [4, 8, 46]


def test_every_entry_satisfies_axioms_and_verifies():
    for n in range(3, 9):
        for c in enumerate_catalog(EnumOptions(n)):
            assert check_axioms(c).ok
            assert verify_weak(build(c)).ok
    for c in enumerate_catalog(EnumOptions(5, max_multiplicity=3)):
        assert verify_weak_multi(build(c)).ok


def test_workers_do_not_change_output():
    opts = EnumOptions(8)
    assert enumerate_catalog(opts, workers=2).dumps() == enumerate_catalog(opts).dumps()


def test_dedup_inversion_keeps_one_per_pair():
    full = enumerate_catalog(EnumOptions(8))
    reduced = enumerate_catalog(EnumOptions(8, dedup_inversion=True))
    orbits = {min(s, format_collection(c.inverted(8))) for s, c in zip(full.serialized(), full.entries)}
    assert sorted(orbits) == reduced.serialized()
    assert reduced.count < full.count


def test_catalog_json_roundtrip():
    cat = enumerate_catalog(EnumOptions(6, max_multiplicity=2))
    text = cat.dumps()
    again = Catalog.from_json(json.loads(text))
    assert again.entries == cat.entries
    assert again.dumps() == text


@pytest.mark.parametrize("kwargs", [{"n": 2}, {"n": 5, "max_multiplicity": 0}, {"n": 13}])
def test_options_validation(kwargs):
    with pytest.raises(ValueError):
        EnumOptions(**kwargs)


def test_brute_force_size_guard():
    with pytest.raises(ValueError):
        brute_force_oracle(8)


def test_disconnected_samples():
    assert disconnected_samples(5).count == 0
    assert disconnected_samples(6).serialized() == ["0,1,2;3,4,5", "0,2,4;1,3,5"]
    eight = disconnected_samples(8).serialized()
    assert "0,2,3,7;1,4,5,6" in eight
    assert "1,2,3,6;0,4,5,7" in eight
    for s in eight:
        g = build(parse_collection(s), connected=False)
        assert not is_connected(g) and verify_weak(g).ok


def test_disjoint_copies_stay_weakly_labeled():
    base = build(parse_collection("01347;23456"))
    for k in (1, 2, 3):
        g = disjoint_copies(base, k)
        assert verify_weak(g).ok
        assert g.n == 8 * k


def test_sample_collection_is_valid():
    rng = random.Random(7)
    for n in range(3, 11):
        c = sample_collection(n, rng)
        assert c is not None and check_axioms(c).ok
        assert build(c).n == n


def _admissible_by_definition(n):
    pairs = list(itertools.combinations(range(n), 2))
    out = set()
    for r in range(n - 1, len(pairs) + 1):
        for edges in itertools.combinations(pairs, r):
            g = LabeledGraph(n, edges, allow_disconnected=True)
            if is_connected(g) and all(len(nb) == 1 or min(nb) < v < max(nb) for v, nb in enumerate(g.adjacency)):
                out.add(g.edges)
    return out


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_admissible_sweep_matches_definition(n):
    assert {g.edges for g in admissible_graphs(n)} == _admissible_by_definition(n)


def test_printed_labels_differ_from_drawings_in_three_places(reference):
    # printed labels use ", " or "; " between sets; the drawn edges are authoritative
    differ = []
    for e in reference:
        drawn = extract(LabeledGraph(e["n"], e["edges"]))
        printed = parse_collection(e["printed"].replace(",", ";").replace(" ", ""))
        if printed != drawn:
            differ.append((e["printed"], format_collection(drawn, compact=True)))
    assert differ == [
        ("01347; 13457", "01347;23456"),
        ("045678; 345; 456; 123", "123;234;345;045678"),
        ("01347; 345; 2456", "01347;345;24568"),
    ]
