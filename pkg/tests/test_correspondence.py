from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from weak_harmonic.correspondence import (
    AxiomError,
    HarmonicCollection,
    NotationError,
    UnverifiedGraphError,
    build,
    check_axioms,
    check_zp_window,
    extract,
    format_collection,
    parse_collection,
    roundtrip_check,
)
from weak_harmonic.enumeration import sample_collection
from weak_harmonic.families import pb
from weak_harmonic.graphs import LabeledGraph, LabeledMultigraph, invert


def test_parse_forms_agree():
    a = parse_collection("0,1,3,4,7;2,3,4,5,6")
    assert parse_collection("01347;23456") == a
    assert parse_collection("{ 0, 1, 3, 4, 7 ; 2,3,4,5,6 }") == a
    assert format_collection(a) == "0,1,3,4,7;2,3,4,5,6"
    assert format_collection(a, compact=True) == "01347;23456"


def test_members_are_ordered_by_average():
    c = parse_collection("3,4,5;1,2,3")
    assert format_collection(c) == "1,2,3;3,4,5"
    assert c.averages == [2, 4]


def test_multiset_notation():
    c = parse_collection("0^6,1,2,3,4")
    assert c.multi
    assert format_collection(c) == "0^6,1,2,3,4"
    assert build(c) == LabeledMultigraph(5, {(0, 1): 6, (1, 2): 1, (1, 3): 1, (1, 4): 1})


@pytest.mark.parametrize("text, token", [
    ("0,1,x", "x"),
    ("0,,1", ","),
    ("0,1,2;", ";"),
    ("0^0,1,2", "0"),
    ("0,1,1", "1"),
    ("{0,1,2", "{"),
    ("01a", "a"),
])
def test_parse_errors_name_the_token(text, token):
    with pytest.raises(NotationError) as info:
        parse_collection(text)
    assert info.value.token == token


def test_build_table_graph():
    g = build(parse_collection("123;02346;345"))
    assert g == LabeledGraph(7, [(1, 2), (2, 3), (0, 3), (3, 4), (3, 6), (4, 5)])


def test_build_translates_to_zero():
    assert build(parse_collection("5,6,7")) == LabeledGraph(3, [(0, 1), (1, 2)])


@pytest.mark.parametrize("text, axiom", [
    ("0,2,4;2,4,6", "P1"),
    ("0,1,2,3,4;1,2,3", "P2"),
    ("0,1,2;2,3,4", "P3"),
    ("0,1,2;1,3,5", "P4"),
    ("0,1,3", "members"),
    ("0,1,2;3,4,5", "P5"),
])
def test_axiom_violations(text, axiom):
    rep = check_axioms(parse_collection(text))
    assert axiom in rep.failed
    with pytest.raises(AxiomError):
        build(parse_collection(text))


def test_only_p1_fails_on_gapped_union():
    assert check_axioms(parse_collection("0,2,4;2,4,6")).failed == ["P1"]


def test_multi_p4_requires_matching_multiplicities():
    # 1 sits in the second member once, 2 sits in the first twice
    rep = check_axioms(parse_collection("0^2,1,2^2;1,2,3"))
    assert rep.failed == ["P4"]
    assert check_axioms(parse_collection("0^2,1,2^2;1^2,2,3^2")).ok


def test_multi_average_has_multiplicity_one():
    rep = check_axioms(parse_collection("0,1^2,2", multi=True))
    assert "members" in rep.failed


def test_disconnected_mode_skips_p5():
    c = parse_collection("0,1,2;3,4,5")
    assert check_axioms(c, connected=False).ok
    g = build(c, connected=False)
    assert extract(g) == c


def test_extract_refuses_unverified():
    with pytest.raises(UnverifiedGraphError):
        extract(LabeledGraph(4, [(0, 2), (1, 2), (2, 3)]))


def test_inversion_commutes_with_extract():
    g = build(parse_collection("01347;23456"))
    assert extract(invert(g)) == extract(g).inverted(g.n)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 9), st.integers(0, 2**32 - 1))
def test_roundtrip_on_random_collections(n, seed):
    c = sample_collection(n, random.Random(seed))
    if c is None:
        return
    g = build(c)
    assert extract(g) == c
    assert roundtrip_check(g)
    assert parse_collection(format_collection(c)) == c


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 6), st.integers(0, 2**32 - 1))
def test_roundtrip_on_random_multicollections(n, seed):
    c = sample_collection(n, random.Random(seed), max_multiplicity=4)
    if c is None:
        return
    assert extract(build(c)) == c
    assert parse_collection(format_collection(c), multi=True) == c


def test_zp_window_on_integer_line_family():
    f = pb([(0, 2), (1, 3)])
    members = [{t: 1, **{w: 1 for w in f.neighbors(t)}} for t in range(-10, 11)]
    rep = check_zp_window(members, -10, 10)
    assert rep.ok
    rep = check_zp_window(members[:-1], -10, 10)
    assert rep.failed == ["ZP1_window"]


def test_collection_equality_ignores_input_order():
    a = HarmonicCollection([[3, 4, 5], [1, 2, 3]])
    b = HarmonicCollection([{1: 1, 2: 1, 3: 1}, {5: 1, 4: 1, 3: 1}])
    assert a == b and hash(a) == hash(b)
