"""Hexagon trigonometry, the pants group and translation lengths.

pi_1 of the pants is free on ``a``, ``b``; ``A`` and ``B`` denote inverses.
With the boundary orientation induced from the surface, beta_1 ~ a,
beta_2 ~ b and beta_3 ~ (ab)^-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .complex import BOUNDARY_EDGES, Hexagon, Kind, OrientedEdge, PantsComplex, build_complex, reverse, x, y
from .words import CyclicWord, least_rotation, smallest_period

MAX_GROUP_LENGTH = 60

INV = {"a": "A", "A": "a", "b": "B", "B": "b"}
_ORDER = {"a": 0, "A": 1, "b": 2, "B": 3}


class NonPositiveLength(ValueError):
    pass


class IdentityElement(ValueError):
    pass


class ParabolicOrElliptic(ArithmeticError):
    pass


class TraceOverflow(ArithmeticError):
    pass


# -- metric ------------------------------------------------------------------


@dataclass(frozen=True)
class PantsMetric:
    boundary_lengths: Tuple[float, float, float]
    boundary_edge_lengths: Tuple[float, float, float]
    seam_lengths: Tuple[float, float, float]  # seam_lengths[k-1] avoids beta_k
    l_max: float
    l_min: float

    def edge_length(self, e: OrientedEdge) -> float:
        if e.kind is Kind.BOUNDARY:
            return self.boundary_edge_lengths[(e.index - 1) % 3]
        return self.seam_lengths[e.index - 1]

    def to_json(self) -> dict:
        return {
            "boundary_lengths": list(self.boundary_lengths),
            "boundary_edge_lengths": list(self.boundary_edge_lengths),
            "seam_lengths": {f"y{k + 1}": v for k, v in enumerate(self.seam_lengths)},
            "l_max": self.l_max,
            "l_min": self.l_min,
            "l_max_intro_bound": 2 * self.l_max,
        }


def seam_length(L_i: float, L_j: float, L_k: float) -> float:
    """Common perpendicular between beta_i and beta_j in a right-angled
    hexagon with alternate sides L_i/2, L_j/2, L_k/2."""
    hi, hj, hk = L_i / 2, L_j / 2, L_k / 2
    c = (math.cosh(hk) + math.cosh(hi) * math.cosh(hj)) / (math.sinh(hi) * math.sinh(hj))
    return math.acosh(c)


def solve_hexagon(L1: float, L2: float, L3: float) -> PantsMetric:
    Ls = (float(L1), float(L2), float(L3))
    if not all(math.isfinite(v) and v > 0 for v in Ls):
        raise NonPositiveLength(f"boundary lengths must be positive and finite, got {Ls}")
    seams = tuple(
        seam_length(Ls[(k + 1) % 3], Ls[(k + 2) % 3], Ls[k]) for k in range(3)
    )
    edges = tuple(v / 2 for v in Ls)
    return PantsMetric(Ls, edges, seams, max(edges + seams), min(edges))


def symmetric_pants() -> PantsMetric:
    """All boundary lengths 2*arccosh(2); every edge then has length arccosh(2)."""
    L = 2 * math.acosh(2.0)
    return solve_hexagon(L, L, L)


# -- free group --------------------------------------------------------------


def free_reduce(letters: Iterable[str]) -> str:
    out: List[str] = []
    for c in letters:
        if c not in INV:
            raise ValueError(f"bad generator {c!r}")
        if out and out[-1] == INV[c]:
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def cyclic_reduce(word: str) -> str:
    w = free_reduce(word)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == INV[w[j - 1]]:
        i += 1
        j -= 1
    return w[i:j]


@dataclass(frozen=True)
class FreeGroupElement:
    letters: str = ""

    def __post_init__(self):
        object.__setattr__(self, "letters", free_reduce(self.letters))

    def __mul__(self, other: "FreeGroupElement") -> "FreeGroupElement":
        return FreeGroupElement(self.letters + other.letters)

    def inverse(self) -> "FreeGroupElement":
        return FreeGroupElement("".join(INV[c] for c in reversed(self.letters)))

    def __pow__(self, k: int) -> "FreeGroupElement":
        if k < 0:
            return self.inverse() ** (-k)
        return FreeGroupElement(self.letters * k)

    def __len__(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def cyclically_reduced(self) -> "FreeGroupElement":
        return FreeGroupElement(cyclic_reduce(self.letters))

    def is_cyclically_reduced(self) -> bool:
        return cyclic_reduce(self.letters) == self.letters

    def is_primitive(self) -> bool:
        """Not a proper power (decided on the cyclically reduced form)."""
        w = cyclic_reduce(self.letters)
        return bool(w) and smallest_period(w) == len(w)

    def conjugacy_form(self) -> str:
        w = cyclic_reduce(self.letters)
        if not w:
            return ""
        return "".join(
            min(
                (w[k:] + w[:k] for k in range(len(w))),
                key=lambda s: [_ORDER[c] for c in s],
            )
        )

    def __str__(self) -> str:
        return self.letters or "1"


# -- word -> pi_1 ------------------------------------------------------------

# the 5-edge spanning tree of the 1-skeleton and the two surviving generators
SPANNING_TREE: Tuple[OrientedEdge, ...] = (x(4), x(5), y(1), y(2), y(3))
BASIS: Dict[OrientedEdge, str] = {x(1): "a", x(6): "b"}


def _unoriented(e: OrientedEdge) -> OrientedEdge:
    return reverse(e) if e.reversed else e


@lru_cache(maxsize=None)
def edge_dictionary(complex: Optional[PantsComplex] = None) -> Dict[OrientedEdge, str]:
    """Image in F(a, b) of every oriented letter.

    Tree edges are trivial; the four remaining edges generate F_4; each
    hexagon relator contains exactly one of the non-basis generators once,
    which is solved for in terms of the basis (a Tietze elimination).
    """
    cx = complex or build_complex()
    tree = set(SPANNING_TREE)
    verts = {v for e in tree for v in (cx.start[e], cx.end[e])}
    if len(verts) != 6 or len(tree) != 5:
        raise RuntimeError("spanning tree does not span")
    image: Dict[OrientedEdge, str] = {e: "" for e in tree}
    image.update(BASIS)
    for h in (Hexagon.FRONT, Hexagon.BACK):
        cyc = cx.hexagon_cycles[h]
        unknown = [
            (i, e) for i, e in enumerate(cyc) if _unoriented(e) not in image
        ]
        if len(unknown) != 1:
            raise RuntimeError(f"{h.value} relator does not eliminate exactly one generator")
        i, e = unknown[0]

        def img(f: OrientedEdge) -> str:
            u = _unoriented(f)
            w = image[u]
            return w if not f.reversed else free_reduce(INV[c] for c in reversed(w))

        # relator: prefix * e * suffix = 1  =>  e = prefix^-1 suffix^-1
        prefix = "".join(img(f) for f in cyc[:i])
        suffix = "".join(img(f) for f in cyc[i + 1 :])
        inv = lambda w: "".join(INV[c] for c in reversed(w))
        val = free_reduce(inv(prefix) + inv(suffix))
        image[_unoriented(e)] = val if not e.reversed else inv(val)
    full: Dict[OrientedEdge, str] = {}
    for e, w in image.items():
        full[e] = w
        full[reverse(e)] = free_reduce(INV[c] for c in reversed(w))
    return full


def word_to_group(w: CyclicWord, complex: Optional[PantsComplex] = None) -> FreeGroupElement:
    """Cyclically reduced representative of the free homotopy class of w."""
    d = edge_dictionary(complex or build_complex())
    g = FreeGroupElement("".join(d[e] for e in w.letters))
    return g.cyclically_reduced()


# -- holonomy ----------------------------------------------------------------


@dataclass(frozen=True)
class Holonomy:
    gen_a: np.ndarray
    gen_b: np.ndarray
    metric: PantsMetric = field(compare=False)

    def matrix(self, g: FreeGroupElement | str) -> np.ndarray:
        letters = g.letters if isinstance(g, FreeGroupElement) else free_reduce(g)
        mats = {
            "a": self.gen_a,
            "b": self.gen_b,
            "A": _sl2_inverse(self.gen_a),
            "B": _sl2_inverse(self.gen_b),
        }
        m = np.eye(2)
        for c in letters:
            m = m @ mats[c]
        return m

    def to_json(self) -> dict:
        return {
            "gen_a": self.gen_a.tolist(),
            "gen_b": self.gen_b.tolist(),
            "trace_a": float(np.trace(self.gen_a)),
            "trace_b": float(np.trace(self.gen_b)),
            "trace_ab": float(np.trace(self.gen_a @ self.gen_b)),
        }


def _sl2_inverse(m: np.ndarray) -> np.ndarray:
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]])


def build_holonomy(m: PantsMetric) -> Holonomy:
    """Normal form: gen_a = diag(e^{L1/2}, e^{-L1/2}); gen_b solves
    tr b = 2cosh(L2/2), tr ab = -2cosh(L3/2) with upper-right entry > 0
    and off-diagonal entries of equal size."""
    L1, L2, L3 = m.boundary_lengths
    lam = math.exp(L1 / 2)
    ta = 2 * math.cosh(L1 / 2)
    tb = 2 * math.cosh(L2 / 2)
    tab = -2 * math.cosh(L3 / 2)
    p = (tab - tb / lam) / (lam - 1 / lam)
    s = tb - p
    qr = p * s - 1
    if not qr < 0:
        raise ArithmeticError("trace system has no Schottky solution")  # cannot happen
    q = math.sqrt(-qr)
    gen_a = np.array([[lam, 0.0], [0.0, 1 / lam]])
    gen_b = np.array([[p, q], [-q, s]])
    h = Holonomy(gen_a, gen_b, m)
    for got, want in (
        (np.trace(gen_a), ta),
        (np.trace(gen_b), tb),
        (np.trace(gen_a @ gen_b), tab),
    ):
        if abs(got - want) > 1e-9 * abs(want):
            raise ArithmeticError("holonomy trace check failed")
    return h


def translation_length(trace: float) -> float:
    t = abs(trace)
    if not math.isfinite(t):
        raise TraceOverflow("trace overflowed")
    if t <= 2:
        raise ParabolicOrElliptic(f"|trace| = {t} <= 2")
    return 2 * math.acosh(t / 2)


def geodesic_length(g: FreeGroupElement, h: Holonomy) -> float:
    """2 arccosh(|tr rho(g)| / 2); conjugacy invariant."""
    w = g.cyclically_reduced()
    if w.is_identity():
        raise IdentityElement("the identity has no geodesic")
    if len(w) > MAX_GROUP_LENGTH:
        raise TraceOverflow(f"group word of length {len(w)} exceeds {MAX_GROUP_LENGTH}")
    return translation_length(float(np.trace(h.matrix(w))))


def path_length(w: CyclicWord, m: PantsMetric) -> float:
    """Length of the edge path p(w) itself, an upper bound for l(gamma(w))."""
    return sum(m.edge_length(e) for e in w.letters)
