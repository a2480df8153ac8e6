"""Self-intersection numbers of closed geodesics by fundamental-domain tracing.

The pants group is Schottky: four pairwise disjoint geodesics W_a, W_A,
W_b, W_B cut out a fundamental domain F with ``a(W_A) = W_a`` and
``b(W_B) = W_b``.  Here W_a, W_A are the perpendiculars to the axis of a at
distance L1/2 on either side of the foot of the common perpendicular
between the axes of a and b (lifts of the seams, extended), shifted along
the axis by a small offset so that seam-symmetric double points do not
land on a wall; likewise for b.

For a cyclically reduced primitive g = g_1 ... g_n, the lifts of the
closed geodesic that meet F are exactly the axes of the n cyclic rotations
of g, each meeting F in one arc.  Self-intersection points are the points
of F where two of those arcs cross.

Computation happens in the Klein disk, where geodesics are straight chords.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .hyperbolic import INV, FreeGroupElement, Holonomy, translation_length

TANGENCY_TOL = 1e-6

# wall offsets along the generator axes, as fractions of min(L)/2
DEFAULT_SHIFT = (0.0713, 0.0419)
PERTURBED_SHIFTS = ((-0.0531, 0.0877), (0.1093, -0.0613), (-0.0297, -0.1171))


class DomainOverlap(ArithmeticError):
    pass


class NotPrimitive(ValueError):
    pass


class UnresolvedCrossing(ArithmeticError):
    pass


class NumericalDegeneracy(ArithmeticError):
    pass


Point = np.ndarray  # Klein coordinates, shape (2,)


def ideal_point(v: Sequence[float]) -> Point:
    """Projective point (v0 : v1) of RP^1 = boundary of the upper half-plane,
    sent to the unit circle by the Cayley map z -> (z - i)/(z + i)."""
    z = complex(v[0], -v[1]) / complex(v[0], v[1])
    return np.array([z.real, z.imag])


def upper_half_plane_to_klein(z: complex) -> Point:
    w = (z - 1j) / (z + 1j)
    r2 = abs(w) ** 2
    k = 2 * w / (1 + r2)
    return np.array([k.real, k.imag])


def klein_distance(p: Point, q: Point) -> float:
    num = 1 - float(p @ q)
    den = math.sqrt((1 - float(p @ p)) * (1 - float(q @ q)))
    return math.acosh(max(1.0, num / den))


def fixed_points(m: np.ndarray) -> Tuple[Point, Point]:
    """(repelling, attracting) ideal fixed points of a hyperbolic matrix."""
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    t = a + d
    disc = t * t - 4 * (a * d - b * c)
    if disc <= 0:
        raise ValueError("matrix is not hyperbolic")
    big = (t + math.copysign(math.sqrt(disc), t)) / 2
    small = (a * d - b * c) / big

    def eigvec(lam: float) -> np.ndarray:
        u = np.array([b, lam - a])
        v = np.array([lam - d, c])
        return u if np.hypot(*u) >= np.hypot(*v) else v

    return ideal_point(eigvec(small)), ideal_point(eigvec(big))


@dataclass(frozen=True)
class Wall:
    """A geodesic chord with a unit normal pointing into F."""

    ends: Tuple[Point, Point]
    normal: np.ndarray
    offset: float

    @classmethod
    def through(cls, e1: Point, e2: Point, inside: Point) -> "Wall":
        d = e2 - e1
        n = np.array([-d[1], d[0]])
        n = n / np.hypot(*n)
        c = float(n @ e1)
        if float(n @ inside) - c < 0:
            n, c = -n, -c
        return cls((e1, e2), n, c)

    def side(self, p: Point) -> float:
        """Signed Euclidean distance; positive on the F side."""
        return float(self.normal @ p) - self.offset


@dataclass(frozen=True)
class SchottkyDomain:
    walls: Dict[str, Wall]  # walls["a"] bounds the half-plane holding a's attracting point
    pairings: Dict[str, np.ndarray]  # pairings[X] maps walls[INV[X]] onto walls[X]
    basepoint: Point
    shift: Tuple[float, float]

    def contains(self, p: Point, tol: float = 0.0) -> bool:
        return all(w.side(p) > tol for w in self.walls.values())

    def wall_margin(self, p: Point) -> float:
        return min(abs(w.side(p)) for w in self.walls.values())

    def to_json(self) -> dict:
        return {
            "shift": list(self.shift),
            "walls": {k: [w.ends[0].tolist(), w.ends[1].tolist()] for k, w in self.walls.items()},
        }


def _mobius_real(p: np.ndarray, t: float) -> np.ndarray:
    return np.array([p[0, 0] * t + p[0, 1], p[1, 0] * t + p[1, 1]])


def _wall_pair(m: np.ndarray, shift: float) -> Tuple[Tuple[Point, Point], Tuple[Point, Point]]:
    """Walls for generator m: perpendiculars to its axis at distance
    l/2 on either side of the foot of the perpendicular from i, moved by shift."""
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    t = a + d
    big = (t + math.copysign(math.sqrt(t * t - 4), t)) / 2
    small = 1 / big

    def eigvec(lam):
        u = np.array([b, lam - a])
        v = np.array([lam - d, c])
        return u if np.hypot(*u) >= np.hypot(*v) else v

    vp, vm = eigvec(big), eigvec(small)
    p = np.column_stack([vp, vm])
    if np.linalg.det(p) < 0:
        p[:, 1] *= -1
    # P^{-1}(i)
    q = np.linalg.inv(p)
    w = (q[0, 0] * 1j + q[0, 1]) / (q[1, 0] * 1j + q[1, 1])
    t0 = abs(w)
    half = math.log(abs(big))  # l / 2
    r_plus = t0 * math.exp(half + shift)
    r_minus = t0 * math.exp(-half + shift)
    plus = (ideal_point(_mobius_real(p, r_plus)), ideal_point(_mobius_real(p, -r_plus)))
    minus = (ideal_point(_mobius_real(p, r_minus)), ideal_point(_mobius_real(p, -r_minus)))
    return plus, minus


def build_domain(h: Holonomy, shift: Tuple[float, float] = DEFAULT_SHIFT) -> SchottkyDomain:
    scale = min(h.metric.boundary_lengths) / 2
    origin = np.zeros(2)
    walls: Dict[str, Wall] = {}
    pairings: Dict[str, np.ndarray] = {}
    for gen, mat, frac in (("a", h.gen_a, shift[0]), ("b", h.gen_b, shift[1])):
        plus, minus = _wall_pair(mat, frac * scale)
        walls[gen] = Wall.through(*plus, origin)
        walls[INV[gen]] = Wall.through(*minus, origin)
        pairings[gen] = mat
        pairings[INV[gen]] = np.linalg.inv(mat)
    dom = SchottkyDomain(walls, pairings, origin, tuple(shift))
    _check_domain(dom, h)
    return dom


def _check_domain(dom: SchottkyDomain, h: Holonomy) -> None:
    for k, w in dom.walls.items():
        if w.side(dom.basepoint) <= 0:
            raise DomainOverlap(f"basepoint outside wall {k}")
        _, attracting = fixed_points(dom.pairings[k])
        if w.side(attracting) >= 0:
            raise DomainOverlap(f"wall {k} does not cut off the attracting point of {k}")
    keys = list(dom.walls)
    for i, k in enumerate(keys):
        for j in keys[i + 1 :]:
            for e in dom.walls[j].ends:
                if dom.walls[k].side(e) <= 1e-12:
                    raise DomainOverlap(f"walls {k} and {j} are not disjoint")
            for e in dom.walls[k].ends:
                if dom.walls[j].side(e) <= 1e-12:
                    raise DomainOverlap(f"walls {k} and {j} are not disjoint")


@dataclass(frozen=True)
class Piece:
    rotation: str
    start: Point
    end: Point
    entry_wall: str
    exit_wall: str
    length: float
    axis: Tuple[Point, Point]


@dataclass(frozen=True)
class TracedGeodesic:
    element: str
    pieces: Tuple[Piece, ...]
    total_length: float


def _clip(e1: Point, e2: Point, dom: SchottkyDomain) -> Tuple[float, float, str, str]:
    lo, hi = 0.0, 1.0
    lo_wall = hi_wall = ""
    for k, w in dom.walls.items():
        f1, f2 = w.side(e1), w.side(e2)
        if f1 == f2:
            if f1 < 0:
                return 1.0, 0.0, "", ""
            continue
        s = f1 / (f1 - f2)  # zero crossing
        if f2 > f1:  # entering F
            if s > lo:
                lo, lo_wall = s, k
        else:
            if s < hi:
                hi, hi_wall = s, k
    return lo, hi, lo_wall, hi_wall


def _check_input(g: FreeGroupElement) -> str:
    w = g.letters
    if not w:
        raise ValueError("the identity has no geodesic")
    if not g.is_cyclically_reduced():
        raise ValueError(f"{w} is not cyclically reduced")
    if not g.is_primitive():
        raise NotPrimitive(f"{w} is a proper power; the oracle needs primitive classes")
    return w


def trace_geodesic(g: FreeGroupElement, h: Holonomy, dom: SchottkyDomain) -> TracedGeodesic:
    w = _check_input(g)
    n = len(w)
    pieces: List[Piece] = []
    for k in range(n):
        r = w[k:] + w[:k]
        rep, att = fixed_points(h.matrix(r))
        lo, hi, entry, exit_ = _clip(rep, att, dom)
        if not lo < hi:
            raise NumericalDegeneracy(f"axis of {r} misses the domain")
        p0 = rep + lo * (att - rep)
        p1 = rep + hi * (att - rep)
        if entry != INV[r[-1]] or exit_ != r[0]:
            raise NumericalDegeneracy(
                f"axis of {r} crosses walls {entry}->{exit_}, expected {INV[r[-1]]}->{r[0]}"
            )
        pieces.append(Piece(r, p0, p1, entry, exit_, klein_distance(p0, p1), (rep, att)))
    total = sum(p.length for p in pieces)
    return TracedGeodesic(w, tuple(pieces), total)


def _chord_crossing(p: Tuple[Point, Point], q: Tuple[Point, Point]) -> Optional[Point]:
    """Intersection of two chords of the unit circle, None if they do not cross."""
    a, b = p
    c, d = q
    r = b - a
    s = d - c
    den = r[0] * s[1] - r[1] * s[0]
    if abs(den) < 1e-15:
        return None
    qa = c - a
    t = (qa[0] * s[1] - qa[1] * s[0]) / den
    u = (qa[0] * r[1] - qa[1] * r[0]) / den
    if not (0 < t < 1 and 0 < u < 1):
        return None
    return a + t * r


def count_self_crossings(
    t: TracedGeodesic, dom: SchottkyDomain, tol: float = TANGENCY_TOL
) -> int:
    """Crossings of distinct pieces inside F.

    Raises UnresolvedCrossing if some crossing lies within ``tol`` of a wall,
    since then the domain cut cannot tell whether it belongs to F.
    """
    count = 0
    ps = t.pieces
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            pt = _chord_crossing(ps[i].axis, ps[j].axis)
            if pt is None:
                continue
            if dom.wall_margin(pt) <= tol:
                raise UnresolvedCrossing(
                    f"crossing of {ps[i].rotation} and {ps[j].rotation} sits on a wall"
                )
            if dom.contains(pt):
                count += 1
    return count


def self_intersection_number(
    g: FreeGroupElement, h: Holonomy, tol: float = TANGENCY_TOL
) -> int:
    """Geometric self-intersection number of the closed geodesic of g.

    Retries on perturbed domains when a crossing lands on a wall.
    """
    g = g.cyclically_reduced()
    last: Optional[Exception] = None
    for shift in (DEFAULT_SHIFT,) + PERTURBED_SHIFTS:
        dom = build_domain(h, shift)
        try:
            return count_self_crossings(trace_geodesic(g, h, dom), dom, tol)
        except (UnresolvedCrossing, NumericalDegeneracy) as exc:
            last = exc
    raise UnresolvedCrossing(f"no domain separates the crossings of {g}: {last}")


def crossings_per_domain(
    g: FreeGroupElement, h: Holonomy, shifts=PERTURBED_SHIFTS, tol: float = TANGENCY_TOL
) -> List[int]:
    g = g.cyclically_reduced()
    out = []
    for shift in shifts:
        dom = build_domain(h, shift)
        out.append(count_self_crossings(trace_geodesic(g, h, dom), dom, tol))
    return out
