"""Cyclic words over the edge alphabet.

A word is valid when its letters close up into a non-backtracking loop that
splits as ``b_1 s_1 ... b_n s_n`` with boundary runs ``|b_i| >= 2`` separated
by single seams, or is a single boundary run.  Words are stored literally,
never freely reduced, in their lexicographically least rotation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .complex import OrientedEdge, PantsComplex, build_complex, parse_edge


class WordError(ValueError):
    pass


class NotClosed(WordError):
    pass


class Backtracks(WordError):
    pass


class SeamRunTooLong(WordError):
    pass


class ShortBoundarySubword(WordError):
    pass


class NoBoundaryEdge(WordError):
    pass


class NoConnectingSeam(WordError):
    def __init__(self, i: int, msg: str = ""):
        self.i = i
        super().__init__(msg or f"no seam joins boundary subword {i} to the next one")


def least_rotation(seq: Sequence) -> Tuple:
    seq = tuple(seq)
    if not seq:
        return seq
    return min(seq[k:] + seq[:k] for k in range(len(seq)))


def smallest_period(seq: Sequence) -> int:
    """Smallest d dividing len(seq) with seq equal to its rotation by d."""
    n = len(seq)
    seq = tuple(seq)
    for d in range(1, n + 1):
        if n % d == 0 and seq[d:] + seq[:d] == seq:
            return d
    return n


@dataclass(frozen=True)
class CyclicWord:
    letters: Tuple[OrientedEdge, ...]

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def labels(self) -> List[str]:
        return [e.label for e in self.letters]

    def __str__(self) -> str:
        return " ".join(self.labels)


@dataclass(frozen=True)
class Subword:
    boundary: Tuple[OrientedEdge, ...]
    seam: Optional[OrientedEdge]
    component: int


@dataclass(frozen=True)
class SubwordDecomposition:
    subwords: Tuple[Subword, ...]

    @property
    def lengths(self) -> Tuple[int, ...]:
        return tuple(len(s.boundary) for s in self.subwords)

    @property
    def components(self) -> Tuple[int, ...]:
        return tuple(s.component for s in self.subwords)

    def letters(self) -> Tuple[OrientedEdge, ...]:
        out: List[OrientedEdge] = []
        for s in self.subwords:
            out.extend(s.boundary)
            if s.seam is not None:
                out.append(s.seam)
        return tuple(out)


def _as_edges(letters: Iterable) -> Tuple[OrientedEdge, ...]:
    return tuple(parse_edge(e) if isinstance(e, str) else e for e in letters)


def validate(letters: Iterable, complex: Optional[PantsComplex] = None) -> CyclicWord:
    """Check the closed-path conditions and return the canonical CyclicWord.

    Accepts OrientedEdge values or their string labels.
    """
    cx = complex or build_complex()
    w = _as_edges(letters)
    if not w:
        raise WordError("empty word")
    n = len(w)
    if not any(e.is_boundary for e in w):
        raise NoBoundaryEdge("word has no boundary edge")
    for i in range(n):
        a, b = w[i], w[(i + 1) % n]
        if a.is_seam and b.is_seam:
            raise SeamRunTooLong(f"seams {a} {b} are adjacent at position {i}")
    for i in range(n):
        a, b = w[i], w[(i + 1) % n]
        if b.kind == a.kind and b.index == a.index and b.reversed != a.reversed:
            raise Backtracks(f"{a} {b} backtracks at position {i}")
        if cx.end[a] != cx.start[b]:
            raise NotClosed(f"{a} does not end where {b} starts (position {i})")
    if any(e.is_seam for e in w):
        for run in _boundary_runs(w):
            if len(run) < 2:
                raise ShortBoundarySubword(f"boundary subword {' '.join(map(str, run))} has length 1")
    return CyclicWord(least_rotation(w))


def _rotation_to_subword_start(w: Sequence[OrientedEdge]) -> Tuple[OrientedEdge, ...]:
    n = len(w)
    for i in range(n):
        if w[i].is_boundary and w[i - 1].is_seam:
            return tuple(w[i:]) + tuple(w[:i])
    return tuple(w)


def _boundary_runs(w: Sequence[OrientedEdge]) -> List[Tuple[OrientedEdge, ...]]:
    r = _rotation_to_subword_start(w)
    runs: List[Tuple[OrientedEdge, ...]] = []
    cur: List[OrientedEdge] = []
    for e in r:
        if e.is_boundary:
            cur.append(e)
        elif cur:
            runs.append(tuple(cur))
            cur = []
    if cur:
        runs.append(tuple(cur))
    return runs


def decompose(w: CyclicWord, complex: Optional[PantsComplex] = None) -> SubwordDecomposition:
    """Split into (boundary run, seam) pairs.

    The rotation starts at the first boundary letter of the canonical word
    that follows a seam, so the last entry ends with a seam unless the word
    is a single boundary run.
    """
    cx = complex or build_complex()
    r = _rotation_to_subword_start(w.letters)
    out: List[Subword] = []
    cur: List[OrientedEdge] = []
    for e in r:
        if e.is_boundary:
            cur.append(e)
        else:
            out.append(Subword(tuple(cur), e, cx.component_of[cur[0]]))
            cur = []
    if cur:
        out.append(Subword(tuple(cur), None, cx.component_of[cur[0]]))
    return SubwordDecomposition(tuple(out))


def reconstruct_seams(
    boundary_subwords: Sequence[Sequence], complex: Optional[PantsComplex] = None
) -> CyclicWord:
    """Rebuild ``b_1 s_1 ... b_n s_n`` from its boundary runs; seams are forced."""
    cx = complex or build_complex()
    runs = [_as_edges(b) for b in boundary_subwords]
    if not runs:
        raise WordError("no boundary subwords")
    for i, b in enumerate(runs):
        if not b or not all(e.is_boundary for e in b):
            raise WordError(f"subword {i} is not a nonempty boundary run")
        for p, q in zip(b, b[1:]):
            if cx.boundary_successor[p] != q:
                raise WordError(f"subword {i}: {q} does not follow {p} along the boundary")
    if len(runs) == 1:
        return validate(runs[0], cx)
    letters: List[OrientedEdge] = []
    n = len(runs)
    for i, b in enumerate(runs):
        if len(b) < 2:
            raise ShortBoundarySubword(f"subword {i} has length {len(b)}")
        s = cx.seam_between(b[-1], runs[(i + 1) % n][0])
        if s is None:
            raise NoConnectingSeam(i)
        letters.extend(b)
        letters.append(s)
    return validate(letters, cx)


def is_primitive(w: CyclicWord) -> bool:
    return smallest_period(w.letters) == len(w.letters)


def is_alternating(w: CyclicWord, complex: Optional[PantsComplex] = None) -> bool:
    """No two consecutive boundary letters (seams skipped) share a hexagon."""
    cx = complex or build_complex()
    hexes = [cx.hexagon_of[e] for e in w.letters if e.is_boundary]
    return all(hexes[i] != hexes[i - 1] for i in range(len(hexes))) if len(hexes) > 1 else False


def self_intersection(w: CyclicWord, complex: Optional[PantsComplex] = None) -> int:
    """Word self-intersection number.

    Boundary runs are grouped by component and ranked longest first within
    each group; the i-th ranked run of length m contributes 2*i*m.  Ties in
    length do not change the sum, so they are broken by position.
    """
    dec = decompose(w, complex)
    total = 0
    for c in (1, 2, 3):
        group = sorted(
            (len(s.boundary) for s in dec.subwords if s.component == c), reverse=True
        )
        total += sum(rank * m for rank, m in enumerate(group, start=1))
    return 2 * total
