"""Edge alphabet of the hexagon decomposition of a pair of pants.

The pants is cut along three seams into a front and a back right-angled
hexagon.  Each boundary component carries two boundary edges (one per
hexagon) and each seam is shared by both hexagons, giving 6 + 3 unoriented
edges and 18 oriented letters.

Labeling used throughout the package::

    boundary components   beta_1 = {x1, x4}   beta_2 = {x2, x5}   beta_3 = {x3, x6}
    front hexagon         x1, x3, x5
    back hexagon          x2, x4, x6

The six vertices are P_c, Q_c on beta_c.  Both boundary edges of beta_c run
from P_c to Q_c, so going once around beta_c reads ``x_c x_{c+3}^-``.  The
seam leaving Q_c ends at P_{c+1} (indices mod 3); the seam joining beta_i
and beta_j is named after the third component, ``y_k``, and its forward
orientation runs beta_c -> beta_{c+1}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Tuple


class Kind(str, enum.Enum):
    BOUNDARY = "x"
    SEAM = "y"


class Hexagon(str, enum.Enum):
    FRONT = "front"
    BACK = "back"


@dataclass(frozen=True, order=True)
class OrientedEdge:
    """One letter of the 18-letter alphabet.

    The dataclass ordering (kind, index, reversed) is the total order used
    for canonical rotations: boundary before seam, then index, then the
    forward orientation before the reversed one.
    """

    kind: Kind
    index: int
    reversed: bool = False

    def __post_init__(self):
        top = 6 if self.kind is Kind.BOUNDARY else 3
        if not 1 <= self.index <= top:
            raise ValueError(f"no {self.kind.value}{self.index} in the alphabet")

    @property
    def is_boundary(self) -> bool:
        return self.kind is Kind.BOUNDARY

    @property
    def is_seam(self) -> bool:
        return self.kind is Kind.SEAM

    @property
    def label(self) -> str:
        return f"{self.kind.value}{self.index}{'-' if self.reversed else ''}"

    def __str__(self) -> str:
        return self.label

    def __repr__(self) -> str:
        return f"OrientedEdge({self.label})"


def reverse(e: OrientedEdge) -> OrientedEdge:
    return OrientedEdge(e.kind, e.index, not e.reversed)


def x(i: int, reversed: bool = False) -> OrientedEdge:
    return OrientedEdge(Kind.BOUNDARY, (i - 1) % 6 + 1, reversed)


def y(k: int, reversed: bool = False) -> OrientedEdge:
    return OrientedEdge(Kind.SEAM, k, reversed)


def parse_edge(label: str) -> OrientedEdge:
    """Parse ``x<1-6>``, ``x<1-6>-``, ``y<1-3>`` or ``y<1-3>-``."""
    s = label.strip()
    rev = s.endswith("-")
    body = s[:-1] if rev else s
    if len(body) != 2 or body[0] not in "xy" or not body[1].isdigit():
        raise ValueError(f"bad edge label {label!r}")
    try:
        return OrientedEdge(Kind(body[0]), int(body[1]), rev)
    except ValueError as exc:
        raise ValueError(f"bad edge label {label!r}") from exc


BOUNDARY_EDGES: Tuple[OrientedEdge, ...] = tuple(
    OrientedEdge(Kind.BOUNDARY, i, r) for i in range(1, 7) for r in (False, True)
)
SEAM_EDGES: Tuple[OrientedEdge, ...] = tuple(
    OrientedEdge(Kind.SEAM, k, r) for k in range(1, 4) for r in (False, True)
)
ALPHABET: Tuple[OrientedEdge, ...] = BOUNDARY_EDGES + SEAM_EDGES

Vertex = Tuple[str, int]  # ("P", c) or ("Q", c)


def _component(i: int) -> int:
    return (i - 1) % 3 + 1


class IncidenceError(RuntimeError):
    """The hard-coded incidence table failed its own consistency check."""


@dataclass(frozen=True, eq=False)
class PantsComplex:
    """Incidence tables over the 18-letter alphabet.  Build with build_complex()."""

    start: Dict[OrientedEdge, Vertex]
    end: Dict[OrientedEdge, Vertex]
    hexagon_of: Dict[OrientedEdge, Hexagon]
    component_of: Dict[OrientedEdge, int]
    boundary_successor: Dict[OrientedEdge, OrientedEdge]
    seam_from: Dict[Vertex, OrientedEdge]
    seam_components: Dict[int, Tuple[int, int]]
    hexagon_cycles: Dict[Hexagon, Tuple[OrientedEdge, ...]]

    def seam_between(self, a: OrientedEdge, b: OrientedEdge) -> Optional[OrientedEdge]:
        """The oriented seam s with ``a s b`` a non-backtracking arc, or None."""
        if not (a.is_boundary and b.is_boundary):
            return None
        s = self.seam_from[self.end[a]]
        if self.end[s] != self.start[b]:
            return None
        return s

    def can_concatenate(self, a: OrientedEdge, b: OrientedEdge) -> bool:
        if b == reverse(a):
            return False
        if a.is_seam and b.is_seam:
            return False
        return self.end[a] == self.start[b]

    def to_json(self) -> dict:
        def vname(v: Vertex) -> str:
            return f"{v[0]}{v[1]}"

        return {
            "letters": [
                {
                    "label": e.label,
                    "kind": "boundary" if e.is_boundary else "seam",
                    "start": vname(self.start[e]),
                    "end": vname(self.end[e]),
                    "hexagon": self.hexagon_of[e].value if e in self.hexagon_of else None,
                    "component": self.component_of.get(e),
                    "boundary_successor": (
                        self.boundary_successor[e].label if e.is_boundary else None
                    ),
                    "continuations": [
                        b.label for b in ALPHABET if self.can_concatenate(e, b)
                    ],
                }
                for e in ALPHABET
            ],
            "seams": {
                f"y{k}": {"components": list(pair)} for k, pair in self.seam_components.items()
            },
            "hexagons": {h.value: [e.label for e in cyc] for h, cyc in self.hexagon_cycles.items()},
            "components": {
                str(c): [e.label for e in BOUNDARY_EDGES if self.component_of[e] == c and not e.reversed]
                for c in (1, 2, 3)
            },
        }


@lru_cache(maxsize=None)
def build_complex() -> PantsComplex:
    start: Dict[OrientedEdge, Vertex] = {}
    end: Dict[OrientedEdge, Vertex] = {}
    hexagon_of: Dict[OrientedEdge, Hexagon] = {}
    component_of: Dict[OrientedEdge, int] = {}

    for i in range(1, 7):
        c = _component(i)
        fwd, bwd = x(i), x(i, True)
        start[fwd], end[fwd] = ("P", c), ("Q", c)
        start[bwd], end[bwd] = ("Q", c), ("P", c)
        hex_ = Hexagon.FRONT if i % 2 else Hexagon.BACK
        hexagon_of[fwd] = hexagon_of[bwd] = hex_
        component_of[fwd] = component_of[bwd] = c

    # seam leaving Q_c lands on P_{c+1}; it avoids the third component k
    seam_components: Dict[int, Tuple[int, int]] = {}
    seam_from: Dict[Vertex, OrientedEdge] = {}
    for c in (1, 2, 3):
        nxt = c % 3 + 1
        k = 6 - c - nxt
        s = y(k)
        seam_components[k] = (c, nxt)
        start[s], end[s] = ("Q", c), ("P", nxt)
        start[reverse(s)], end[reverse(s)] = ("P", nxt), ("Q", c)
        seam_from[("Q", c)] = s
        seam_from[("P", nxt)] = reverse(s)

    boundary_successor = {}
    for e in BOUNDARY_EDGES:
        (succ,) = [
            b for b in BOUNDARY_EDGES if b != reverse(e) and start[b] == end[e]
        ]
        boundary_successor[e] = succ

    def seam_to(c: int) -> OrientedEdge:
        return seam_from[("Q", c)]

    hexagon_cycles = {
        Hexagon.FRONT: (x(1), seam_to(1), x(5), seam_to(2), x(3), seam_to(3)),
        Hexagon.BACK: (x(4), seam_to(1), x(2), seam_to(2), x(6), seam_to(3)),
    }

    cx = PantsComplex(
        start=start,
        end=end,
        hexagon_of=hexagon_of,
        component_of=component_of,
        boundary_successor=boundary_successor,
        seam_from=seam_from,
        seam_components=seam_components,
        hexagon_cycles=hexagon_cycles,
    )
    _check(cx)
    return cx


def _check(cx: PantsComplex) -> None:
    def fail(msg: str):
        raise IncidenceError(msg)

    if len(set(ALPHABET)) != 18 or len(BOUNDARY_EDGES) != 12 or len(SEAM_EDGES) != 6:
        fail("alphabet size")
    for c in (1, 2, 3):
        members = {e.index for e in BOUNDARY_EDGES if cx.component_of[e] == c}
        if members != {c, c + 3}:
            fail(f"component {c} holds {members}")
        if {cx.hexagon_of[x(c)], cx.hexagon_of[x(c + 3)]} != set(Hexagon):
            fail(f"component {c} does not meet both hexagons")
    for e in BOUNDARY_EDGES:
        succ = cx.boundary_successor[e]
        if cx.hexagon_of[succ] == cx.hexagon_of[e]:
            fail(f"successor of {e} stays in one hexagon")
        if cx.component_of[succ] != cx.component_of[e]:
            fail(f"successor of {e} leaves its component")
    for j in range(1, 7):
        # pure boundary runs read x_j x_{j+3}^- ...
        if cx.boundary_successor[x(j)] != x(j + 3, True):
            fail(f"x{j} is not followed by x{j + 3}-")
        # ... and the e-arc rule needs a seam x_{j+3}^- -> x_{j+2}^-
        if cx.seam_between(x(j + 3, True), x(j + 2, True)) is None:
            fail(f"no seam from x{j + 3}- to x{j + 2}-")
    for a in BOUNDARY_EDGES:
        for b in BOUNDARY_EDGES:
            s = cx.seam_between(a, b)
            if cx.component_of[a] == cx.component_of[b] and s is not None:
                fail("seam inside one component")
            if s is not None and not (cx.can_concatenate(a, s) and cx.can_concatenate(s, b)):
                fail("seam_between disagrees with can_concatenate")
    for v, s in cx.seam_from.items():
        if cx.start[s] != v:
            fail("seam_from table")
    for h, cyc in cx.hexagon_cycles.items():
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if cx.end[a] != cx.start[b]:
                fail(f"{h.value} hexagon boundary is not a cycle")
        if {cx.hexagon_of[e] for e in cyc if e.is_boundary} != {h}:
            fail(f"{h.value} hexagon holds a foreign boundary edge")
