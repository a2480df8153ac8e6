import math

import pytest
from hypothesis import given, strategies as st

from pants_census.census import (
    CensusQuery,
    HypothesisViolated,
    SurfaceParams,
    collar_constant,
    pants_lower_bound,
    run_census,
    surface_lower_bound,
)
from pants_census.hyperbolic import symmetric_pants
from pants_census.path_graph import BudgetExceeded, enumerate_cyclic_paths

M = symmetric_pants()
LMAX = M.l_max
SYM = M.boundary_lengths
GENUS2 = SurfaceParams(2, 0, 4 * math.pi, 1.0, 1.0)


def test_pants_bound_examples():
    assert pants_lower_bound(8 * LMAX, 12, LMAX) == 3
    assert pants_lower_bound(16 * LMAX, 48, LMAX) == 4
    with pytest.raises(HypothesisViolated) as e:
        pants_lower_bound(8 * LMAX, 11, LMAX)
    assert e.value.condition == "K"
    with pytest.raises(HypothesisViolated) as e:
        pants_lower_bound(7.99 * LMAX, 12, LMAX)
    assert e.value.condition == "L"


def test_symmetric_census():
    c = run_census(CensusQuery(16 * LMAX, 48, SYM))
    assert c.max_path_length == 4
    lengths = [len(r.path) for r in c.records]
    assert lengths.count(2) == 6 and lengths.count(4) == 6
    assert len(c) == 12 >= c.lower_bound == 4
    assert len({r.conjugacy_form for r in c.records}) == 12


def test_small_K_census():
    c = run_census(CensusQuery(1e6, 12, SYM))
    assert c.max_path_length == 2
    assert len(c) == 6 >= c.lower_bound == 3


def test_record_certificates():
    q = CensusQuery(24 * LMAX, 108, SYM)
    c = run_census(q, with_oracle=True)
    for r in c.records:
        assert r.exact_length <= r.length_upper_bound <= q.L + 1e-9
        assert r.word_intersection <= q.K
        assert r.word_intersection <= 3 * len(r.path) ** 2
        assert r.oracle_intersections <= r.word_intersection


def test_census_is_complete():
    c = run_census(CensusQuery(24 * LMAX, 108, SYM))
    total = sum(len(enumerate_cyclic_paths(n, primitive_only=True)) for n in range(2, 7))
    assert len(c) == total == 32


def test_census_budget():
    with pytest.raises(BudgetExceeded):
        run_census(CensusQuery(1e6, 1e6, SYM))
    with pytest.raises(BudgetExceeded):
        run_census(CensusQuery(16 * LMAX, 48, SYM), budget=3)


def test_census_outside_hypotheses_has_no_bound():
    c = run_census(CensusQuery(4 * LMAX, 48, SYM))
    assert c.lower_bound is None
    assert len(c) == 0


def test_census_is_monotone():
    grid = [(a * LMAX, K) for a in (8, 12, 16, 24) for K in (12, 27, 48, 108)]
    keys = {}
    for L, K in grid:
        keys[(L, K)] = {r.conjugacy_form for r in run_census(CensusQuery(L, K, SYM)).records}
    for (L1, K1), s1 in keys.items():
        for (L2, K2), s2 in keys.items():
            if L1 <= L2 and K1 <= K2:
                assert s1 <= s2


def test_census_json():
    d = run_census(CensusQuery(16 * LMAX, 48, SYM)).to_json()
    assert d["schema"] == "pants-census/1"
    assert d["count"] == 12
    assert d["geodesics"] == "oriented"


def test_invalid_query():
    with pytest.raises(ValueError):
        CensusQuery(0, 12, SYM)
    with pytest.raises(ValueError):
        CensusQuery(1, -1, SYM)


def test_collar_constant():
    assert collar_constant(4 * math.pi, 1.0) == pytest.approx(3 * math.asinh(4 * math.pi), abs=1e-12)


def test_surface_example_frozen():
    b = surface_lower_bound(GENUS2, 1000, 48)
    assert b.value == pytest.approx(4 * (1000 / (6 * math.sqrt(48))) ** 6, rel=1e-12)
    assert b.value == pytest.approx(775226797.8712596, rel=1e-12)
    assert b.s_prime_X == pytest.approx(b.s_X + 1.0)
    assert b.margin > 0
    assert all(b.variants.values())


def test_surface_hypotheses():
    with pytest.raises(HypothesisViolated) as e:
        surface_lower_bound(GENUS2, 1000, 12)
    assert e.value.condition == "K"
    s_prime = collar_constant(4 * math.pi, 1.0) + 1
    edge = 6 * s_prime * math.sqrt(48)
    with pytest.raises(HypothesisViolated) as e:
        surface_lower_bound(GENUS2, edge, 48)
    assert e.value.condition == "L"
    assert surface_lower_bound(GENUS2, edge * (1 + 1e-9), 48).margin > 0


def test_surface_reports_weaker_variants():
    s = collar_constant(4 * math.pi, 1.0)
    L = 6 * (s + 1) * math.sqrt(48) + 1
    b = surface_lower_bound(GENUS2, L, 48)
    assert b.variants["L > 3 s_X sqrt(K)"] and b.variants["L > 6 s_X sqrt(K)"]


@pytest.mark.parametrize(
    "args", [(1, 0, 1.0, 1.0, 1.0), (0, 3, 1.0, 1.0, 1.0), (2, 0, -1.0, 1.0, 1.0), (2, 0, 1.0, 0.0, 1.0), (2, 0, 1.0, 1.0, 0.0)]
)
def test_surface_params_validation(args):
    with pytest.raises(ValueError):
        SurfaceParams(*args)


@given(st.floats(600, 1e5), st.floats(1.0001, 2.0), st.floats(12.5, 60))
def test_surface_bound_monotone_in_L(L, factor, K):
    assert surface_lower_bound(GENUS2, L * factor, K).value > surface_lower_bound(GENUS2, L, K).value


@given(st.floats(0.01, 100), st.floats(1.0001, 3.0))
def test_surface_bound_monotone_in_cX(c, factor):
    lo = SurfaceParams(2, 0, 4 * math.pi, 1.0, c)
    hi = SurfaceParams(2, 0, 4 * math.pi, 1.0, c * factor)
    assert surface_lower_bound(hi, 1000, 48).value > surface_lower_bound(lo, 1000, 48).value


@given(st.floats(8, 200), st.floats(12, 1000))
def test_pants_bound_range(a, K):
    v = pants_lower_bound(a * LMAX, K, LMAX)
    assert 3 <= v <= 2 + 0.5 * 2 ** (a / 8) + 1e-9
