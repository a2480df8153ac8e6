"""Lower bounds on #G(L, K) and witness censuses of geodesics in G(L, K)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .hyperbolic import (
    PantsMetric,
    build_holonomy,
    geodesic_length,
    solve_hexagon,
    word_to_group,
)
from .oracle import self_intersection_number
from .path_graph import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    CyclicPath,
    enumerate_cyclic_paths,
    path_budget,
    path_to_word,
)
from .words import CyclicWord, self_intersection

SCHEMA = "pants-census/1"

# relative slack for comparing L against multiples of l_max: L = 16 * l_max
# typed on a command line must give N = 4, not 3.999...
BUDGET_ROUNDING = 1e-12


class HypothesisViolated(ValueError):
    def __init__(self, condition: str, message: str):
        self.condition = condition
        super().__init__(message)


class CensusInvariantError(AssertionError):
    """A census certificate failed; this is a bug, not bad input."""


def pants_lower_bound(L: float, K: float, l_max: float) -> float:
    """2 + 1/2 * min(2^(L / (8 l_max)), 2^sqrt(K / 12)) for L >= 8 l_max, K >= 12."""
    if l_max <= 0:
        raise ValueError("l_max must be positive")
    if K < 12:
        raise HypothesisViolated("K", f"need K >= 12, got K = {K}")
    if L < 8 * l_max * (1 - BUDGET_ROUNDING):
        raise HypothesisViolated("L", f"need L >= 8 l_max = {8 * l_max}, got L = {L}")
    # 2^x is monotone, so take the min of the exponents; avoids overflow for huge L
    return 2 + 0.5 * 2 ** min(L / (8 * l_max), math.sqrt(K / 12))


@dataclass(frozen=True)
class SurfaceParams:
    genus: int
    boundary_count: int
    area: float
    systole: float
    c_X: float

    def __post_init__(self):
        if self.genus < 0 or self.boundary_count < 0:
            raise ValueError("genus and boundary count must be nonnegative")
        if self.exponent < 2:
            raise ValueError(f"6g - 6 + 2n = {self.exponent} < 2")
        for name in ("area", "systole", "c_X"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive, got {v}")

    @property
    def exponent(self) -> int:
        return 6 * self.genus - 6 + 2 * self.boundary_count


def collar_constant(area: float, systole: float) -> float:
    """s_X = 3 asinh(area / systole)."""
    return 3 * math.asinh(area / systole)


@dataclass(frozen=True)
class SurfaceBound:
    value: float
    s_X: float
    s_prime_X: float
    margin: float  # L - 6 s'_X sqrt(K)
    variants: Dict[str, bool]

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "s_X": self.s_X,
            "s_prime_X": self.s_prime_X,
            "hypothesis_margin": self.margin,
            "variants": self.variants,
        }


def surface_lower_bound(p: SurfaceParams, L: float, K: float) -> SurfaceBound:
    """c_X (L / (6 sqrt K))^(6g-6+2n) (2 + 1/2 2^sqrt(K/12)).

    Enforces K > 12 and L > 6 s'_X sqrt(K) with s'_X = s_X + systole, the
    strongest of the stated variants; the weaker ones are reported.
    """
    s = collar_constant(p.area, p.systole)
    s_prime = s + p.systole
    if not K > 12:
        raise HypothesisViolated("K", f"need K > 12, got K = {K}")
    rk = math.sqrt(K)
    threshold = 6 * s_prime * rk
    if not L > threshold:
        raise HypothesisViolated("L", f"need L > 6 s'_X sqrt(K) = {threshold}, got L = {L}")
    value = p.c_X * (L / (6 * rk)) ** p.exponent * (2 + 0.5 * 2 ** math.sqrt(K / 12))
    variants = {
        "L > 3 s_X sqrt(K)": L > 3 * s * rk,
        "L > 6 s_X sqrt(K)": L > 6 * s * rk,
        "L > (4/sqrt 3) s'_X sqrt(K)": L > 4 / math.sqrt(3) * s_prime * rk,
        "L > 6 s'_X sqrt(K)": True,
    }
    return SurfaceBound(value, s, s_prime, L - threshold, variants)


# -- census ------------------------------------------------------------------


@dataclass(frozen=True)
class CensusQuery:
    L: float
    K: float
    boundary_lengths: Tuple[float, float, float]

    def __post_init__(self):
        if not self.L > 0:
            raise ValueError("L must be positive")
        if self.K < 0:
            raise ValueError("K must be nonnegative")


@dataclass(frozen=True)
class CensusRecord:
    path: CyclicPath
    word: CyclicWord
    word_length: int
    word_intersection: int
    length_upper_bound: float
    exact_length: float
    conjugacy_form: str
    oracle_intersections: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "path": self.path.labels,
            "path_length": len(self.path),
            "word": self.word.labels,
            "word_length": self.word_length,
            "word_intersection": self.word_intersection,
            "length_upper_bound": self.length_upper_bound,
            "exact_length": self.exact_length,
            "conjugacy_form": self.conjugacy_form,
            "oracle_intersections": self.oracle_intersections,
        }


@dataclass
class Census:
    query: CensusQuery
    metric: PantsMetric
    budget: float
    max_path_length: int
    records: List[CensusRecord] = field(default_factory=list)
    lower_bound: Optional[float] = None

    def __len__(self) -> int:
        return len(self.records)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "query": {
                "L": self.query.L,
                "K": self.query.K,
                "boundary_lengths": list(self.query.boundary_lengths),
            },
            "l_max": self.metric.l_max,
            "l_max_convention": "longest hexagon edge; the boundary/distance variant is at most 2 * l_max",
            "N": self.budget,
            "max_path_length": self.max_path_length,
            "count": len(self.records),
            "pants_lower_bound": self.lower_bound,
            "geodesics": "oriented",
            "records": [r.to_json() for r in self.records],
        }


def run_census(
    q: CensusQuery,
    with_oracle: bool = False,
    budget: int = DEFAULT_BUDGET,
    tolerance: float = 1e-9,
    workers: int = 1,
) -> Census:
    """Every primitive cyclic path with |tau| <= N(L, K), turned into a
    certified geodesic of G(L, K)."""
    metric = solve_hexagon(*q.boundary_lengths)
    hol = build_holonomy(metric)
    N = path_budget(q.L, q.K, metric.l_max)
    nmax = math.floor(N * (1 + BUDGET_ROUNDING))
    if nmax > budget:
        raise BudgetExceeded(f"N(L, K) = {N} exceeds the enumeration budget {budget}")
    census = Census(q, metric, N, nmax)
    try:
        census.lower_bound = pants_lower_bound(q.L, q.K, metric.l_max)
    except HypothesisViolated:
        census.lower_bound = None

    paths: List[CyclicPath] = []
    for n in range(2, nmax + 1):
        paths.extend(enumerate_cyclic_paths(n, primitive_only=True, budget=budget, workers=workers))
    paths.sort(key=lambda p: (len(p), p.vertices))

    for p in paths:
        w = path_to_word(p)
        g = word_to_group(w)
        rec = CensusRecord(
            path=p,
            word=w,
            word_length=len(w),
            word_intersection=self_intersection(w),
            length_upper_bound=metric.l_max * len(w),
            exact_length=geodesic_length(g, hol),
            conjugacy_form=g.conjugacy_form(),
            oracle_intersections=self_intersection_number(g, hol) if with_oracle else None,
        )
        census.records.append(rec)
    _certify(census, tolerance)
    return census


def _certify(c: Census, tol: float) -> None:
    def fail(msg: str):
        raise CensusInvariantError(msg)

    L, K = c.query.L, c.query.K
    seen = set()
    for r in c.records:
        n = len(r.path)
        if r.word_length > 4 * n:
            fail(f"{r.path}: |w| > 4|tau|")
        if r.exact_length > r.length_upper_bound * (1 + tol):
            fail(f"{r.path}: geodesic longer than its edge path bound")
        if r.length_upper_bound > L * (1 + BUDGET_ROUNDING):
            fail(f"{r.path}: length certificate exceeds L")
        if r.word_intersection > 3 * n * n or r.word_intersection > K:
            fail(f"{r.path}: intersection certificate exceeds the budget")
        if r.oracle_intersections is not None and r.oracle_intersections > r.word_intersection:
            fail(f"{r.path}: geometric self-intersection exceeds i(w, w)")
        if r.conjugacy_form in seen:
            fail(f"{r.path}: repeated conjugacy class {r.conjugacy_form}")
        seen.add(r.conjugacy_form)
    if c.lower_bound is not None and len(c.records) < c.lower_bound:
        fail(f"census of {len(c.records)} is below the closed-form bound {c.lower_bound}")
