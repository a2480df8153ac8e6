"""Acceptance criteria.  Each test is tagged with its criterion number; a
PASS/FAIL line per criterion is printed in the terminal summary."""

import math
import time

import pytest
import sympy

from oracles import closed_walk_orbits
from pants_census.census import (
    CensusQuery,
    HypothesisViolated,
    SurfaceParams,
    collar_constant,
    pants_lower_bound,
    run_census,
    surface_lower_bound,
)
from pants_census.hyperbolic import (
    FreeGroupElement,
    build_holonomy,
    geodesic_length,
    symmetric_pants,
    word_to_group,
)
from pants_census.oracle import self_intersection_number
from pants_census.path_graph import (
    characteristic_polynomial,
    count_cyclic_paths,
    iter_primitive_paths,
    make_path,
    path_to_word,
    trace_power,
)
from pants_census.words import decompose, self_intersection, validate

LENGTH_RTOL = 1e-9


def criterion(n, title):
    return pytest.mark.criterion(n, title)


@pytest.fixture(scope="module")
def sym():
    m = symmetric_pants()
    return m, build_holonomy(m)


@criterion(1, "counting exactness, n <= 16, against brute-force orbits")
def test_counting_exactness():
    t0 = time.perf_counter()
    for n in range(1, 17):
        assert count_cyclic_paths(n) == len(closed_walk_orbits(n))
    assert (count_cyclic_paths(2), count_cyclic_paths(4), count_cyclic_paths(6)) == (6, 12, 26)
    assert all(count_cyclic_paths(n) == 0 for n in range(1, 17, 2))
    assert time.perf_counter() - t0 < 10


@criterion(2, "characteristic polynomial and exact traces")
def test_spectral_identities():
    cp, lam = characteristic_polynomial()
    stated = -(lam**6) * (lam - 2) * (lam - 1) ** 2 * (lam + 1) ** 2 * (lam + 2)
    # a 12x12 characteristic polynomial has leading coefficient +1 in either
    # convention det(lam I - M) = det(M - lam I), so the stated form can only
    # match up to its overall sign
    assert sympy.expand(cp + stated) == 0
    for k in range(1, 21):
        expected = 2 * (2**k + 2) if k % 2 == 0 else 0
        assert trace_power(k) == expected


@criterion(3, "example path reproduces its word, |w| = 14, i(w,w) = 26")
def test_example_reproduction():
    w = path_to_word(make_path(["x1", "x2", "x4-", "x3-"]))
    runs = [[e.label for e in s.boundary] for s in decompose(w).subwords]
    assert runs == [["x1", "x4-", "x1"], ["x2", "x5-"], ["x4-", "x1", "x4-"], ["x3-", "x6"]]
    assert w.labels == "x1 x4- x1 y3 x2 x5- y3- x4- x1 x4- y2- x3- x6 y2".split()
    assert validate(w.labels) == w
    assert len(w) == 14
    assert self_intersection(w) == 26


@criterion(4, "injectivity for primitive paths of length <= 8")
def test_injectivity():
    t0 = time.perf_counter()
    paths = list(iter_primitive_paths(8))
    assert len(paths) == 6 + 6 + 20 + 60
    words = [path_to_word(p) for p in paths]
    forms = [word_to_group(w).conjugacy_form() for w in words]
    assert len(set(words)) == len(paths)
    assert len(set(forms)) == len(paths)
    assert time.perf_counter() - t0 < 60


@criterion(5, "length bracket on the symmetric pants, paths <= 6")
def test_length_bracket(sym):
    m, h = sym
    checked = 0
    for p in iter_primitive_paths(6):
        w = path_to_word(p)
        L = geodesic_length(word_to_group(w), h)
        assert m.l_min * len(w) / 3 <= L * (1 + LENGTH_RTOL)
        assert L <= m.l_max * len(w) * (1 + LENGTH_RTOL)
        checked += 1
    assert checked == 32


@criterion(6, "oracle <= i(w,w) <= 3|tau|^2; boundary 0, figure-eight 1")
def test_intersection_inequalities(sym):
    _, h = sym
    t0 = time.perf_counter()
    for p in iter_primitive_paths(4):
        w = path_to_word(p)
        n = len(p)
        assert self_intersection_number(word_to_group(w), h) <= self_intersection(w) <= 3 * n * n
    for boundary in ("a", "b", "AB"):
        assert self_intersection_number(FreeGroupElement(boundary), h) == 0
    eight = word_to_group(path_to_word(make_path(["x1", "x3-"])))
    assert self_intersection_number(eight, h) == 1
    assert time.perf_counter() - t0 < 120


@criterion(7, "census size >= closed-form bound on the (L, K) grid")
def test_census_meets_pants_bound(sym):
    m, _ = sym
    for a in (8, 12, 16, 24):
        for K in (12, 27, 48, 108):
            L = a * m.l_max
            c = run_census(CensusQuery(L, K, m.boundary_lengths))
            assert len(c) >= pants_lower_bound(L, K, m.l_max)
    c = run_census(CensusQuery(16 * m.l_max, 48, m.boundary_lengths))
    assert len(c) == 12
    assert pants_lower_bound(16 * m.l_max, 48, m.l_max) == 4


@criterion(8, "formula evaluators and hypothesis errors")
def test_formula_evaluators(sym):
    m, _ = sym
    assert pants_lower_bound(8 * m.l_max, 12, m.l_max) == 3
    assert abs(collar_constant(4 * math.pi, 1.0) - 3 * math.asinh(4 * math.pi)) <= 1e-12
    genus2 = SurfaceParams(2, 0, 4 * math.pi, 1.0, 1.0)
    assert surface_lower_bound(genus2, 1000, 48).s_X == collar_constant(4 * math.pi, 1.0)
    with pytest.raises(HypothesisViolated):
        pants_lower_bound(8 * m.l_max, 11, m.l_max)
    with pytest.raises(HypothesisViolated):
        pants_lower_bound(7 * m.l_max, 12, m.l_max)
    with pytest.raises(HypothesisViolated):
        surface_lower_bound(genus2, 1000, 12)
    with pytest.raises(HypothesisViolated):
        surface_lower_bound(genus2, 100, 48)


@criterion(9, "asymptotics replaced by monotonicity and hypothesis properties")
def test_asymptotics_via_properties(sym):
    m, _ = sym
    genus2 = SurfaceParams(2, 0, 4 * math.pi, 1.0, 1.0)
    values = [surface_lower_bound(genus2, L, 48).value for L in (600, 800, 1000, 2000, 4000)]
    assert values == sorted(values) and len(set(values)) == len(values)
    # polynomial growth in L of degree 6g - 6 = 6
    assert values[-1] / values[-2] == pytest.approx(2**6, rel=1e-12)
    # the pants bound saturates in L once the K term is the minimum
    Ls = [a * m.l_max for a in (8, 16, 32, 64)]
    vals = [pants_lower_bound(L, 48, m.l_max) for L in Ls]
    assert vals == sorted(vals) and vals[-1] == vals[-2] == 4
    # and grows in K while the L term is not binding
    ks = [pants_lower_bound(1e6, K, m.l_max) for K in (12, 48, 108, 192)]
    assert ks == [3, 4, 6, 10]
