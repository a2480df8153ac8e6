import pytest
from hypothesis import given, strategies as st

from pants_census.complex import (
    ALPHABET,
    BOUNDARY_EDGES,
    SEAM_EDGES,
    Hexagon,
    build_complex,
    parse_edge,
    reverse,
    x,
    y,
)

letters = st.sampled_from(ALPHABET)


@pytest.fixture(scope="module")
def cx():
    return build_complex()


def test_alphabet_sizes():
    assert len(set(BOUNDARY_EDGES)) == 12
    assert len(set(SEAM_EDGES)) == 6
    assert len(ALPHABET) == 18


@pytest.mark.parametrize("e,r", [(x(1), x(1, True)), (x(4, True), x(4)), (y(2), y(2, True))])
def test_reverse(e, r):
    assert reverse(e) == r


@given(letters)
def test_reverse_is_involution(e):
    assert reverse(reverse(e)) == e


@given(letters)
def test_labels_round_trip(e):
    assert parse_edge(e.label) == e


@pytest.mark.parametrize("bad", ["x7", "y4", "z1", "x", "x1--", ""])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_edge(bad)


def test_components(cx):
    assert cx.component_of[x(1)] == cx.component_of[x(4)]
    for c in (1, 2, 3):
        hexes = {cx.hexagon_of[x(c)], cx.hexagon_of[x(c + 3)]}
        assert hexes == {Hexagon.FRONT, Hexagon.BACK}


def test_successor_alternates_hexagons(cx):
    for e in BOUNDARY_EDGES:
        s = cx.boundary_successor[e]
        assert cx.hexagon_of[s] != cx.hexagon_of[e]
        assert cx.component_of[s] == cx.component_of[e]
    for j in range(1, 7):
        assert cx.boundary_successor[x(j)] == x(j + 3, True)


def test_seam_between(cx):
    assert cx.seam_between(x(4, True), x(3, True)) is not None
    assert cx.seam_between(x(1), x(4, True)) is None
    for a in BOUNDARY_EDGES:
        for b in BOUNDARY_EDGES:
            s = cx.seam_between(a, b)
            if s is None:
                continue
            assert cx.component_of[a] != cx.component_of[b]
            assert cx.can_concatenate(a, s) and cx.can_concatenate(s, b)


def test_seam_between_matches_concatenation(cx):
    for a in BOUNDARY_EDGES:
        for b in BOUNDARY_EDGES:
            via = [s for s in SEAM_EDGES if cx.can_concatenate(a, s) and cx.can_concatenate(s, b)]
            assert len(via) <= 1
            assert cx.seam_between(a, b) == (via[0] if via else None)


def test_concatenation_examples(cx):
    assert cx.can_concatenate(x(1), x(4, True))
    assert not cx.can_concatenate(x(1), x(1, True))
    assert not cx.can_concatenate(y(1), y(2))


@given(letters, letters)
def test_concatenation_reversal_symmetry(a, b):
    cx = build_complex()
    assert cx.can_concatenate(a, b) == cx.can_concatenate(reverse(b), reverse(a))


def test_every_boundary_edge_has_a_seam_continuation(cx):
    for e in BOUNDARY_EDGES:
        nexts = [b for b in ALPHABET if cx.can_concatenate(e, b)]
        assert sum(b.is_boundary for b in nexts) == 1
        assert sum(b.is_seam for b in nexts) >= 1


def test_hexagons_are_closed_cycles(cx):
    for cyc in cx.hexagon_cycles.values():
        assert len(cyc) == 6
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            assert cx.end[a] == cx.start[b]


def test_json_dump(cx):
    d = cx.to_json()
    assert len(d["letters"]) == 18
    assert d["components"] == {"1": ["x1", "x4"], "2": ["x2", "x5"], "3": ["x3", "x6"]}
    assert set(d["hexagons"]) == {"front", "back"}
