"""The transition graph on the twelve oriented boundary edges.

Arcs of two kinds, indices mod 6:

* ``o``: x_i -> x_{i+1} and x_i^- -> x_{i-1}^- (one-way);
* ``e``: x_i <-> x_{i+2}^- (both ways).

A closed path v_1 ... v_n turns into the word b_1 s_1 ... b_n s_n where b_i
starts with v_i and has length 3 after an o-arc, 2 after an e-arc.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .complex import BOUNDARY_EDGES, OrientedEdge, PantsComplex, build_complex, parse_edge, x
from .words import CyclicWord, least_rotation, reconstruct_seams, smallest_period

DEFAULT_BUDGET = 24

Matrix = List[List[int]]


class BudgetExceeded(ValueError):
    pass


class GraphError(ValueError):
    """A vertex sequence that is not a closed path of the graph."""


@dataclass(frozen=True)
class EdgeGraph:
    vertices: Tuple[OrientedEdge, ...]
    o_edges: Tuple[Tuple[OrientedEdge, OrientedEdge], ...]
    e_edges: Tuple[Tuple[OrientedEdge, OrientedEdge], ...]
    arcs: Dict[OrientedEdge, Tuple[Tuple[OrientedEdge, str], ...]]
    adjacency_matrix: Tuple[Tuple[int, ...], ...]

    def arc_label(self, u: OrientedEdge, v: OrientedEdge) -> Optional[str]:
        for w, lab in self.arcs[u]:
            if w == v:
                return lab
        return None

    def has_arc(self, u: OrientedEdge, v: OrientedEdge) -> bool:
        return self.arc_label(u, v) is not None

    def index(self, v: OrientedEdge) -> int:
        return self.vertices.index(v)


def block_order() -> Tuple[OrientedEdge, ...]:
    """x_1..x_6 then x_1^-..x_6^-: the numbering behind the block form of M."""
    return tuple(x(i) for i in range(1, 7)) + tuple(x(i, True) for i in range(1, 7))


def adjacency_in_order(g: EdgeGraph, order: Sequence[OrientedEdge]) -> Matrix:
    return [[1 if g.has_arc(u, v) else 0 for v in order] for u in order]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return [[sum(p * q for p, q in zip(row, col)) for col in bt] for row in a]


def mat_pow(m: Matrix, k: int) -> Matrix:
    n = len(m)
    result = [[int(i == j) for j in range(n)] for i in range(n)]
    base = [list(r) for r in m]
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def expected_trace(k: int) -> int:
    """Power sum of the nonzero spectrum {-2, -1, -1, 1, 1, 2}."""
    return (-2) ** k + 2 * (-1) ** k + 2 ** k + 2


@lru_cache(maxsize=None)
def build_graph(complex: Optional[PantsComplex] = None) -> EdgeGraph:
    complex = complex or build_complex()
    o_edges = tuple((x(i), x(i + 1)) for i in range(1, 7)) + tuple(
        (x(i, True), x(i - 1, True)) for i in range(1, 7)
    )
    e_edges = tuple((x(i), x(i + 2, True)) for i in range(1, 7))
    arcs: Dict[OrientedEdge, List[Tuple[OrientedEdge, str]]] = {v: [] for v in BOUNDARY_EDGES}
    for u, v in o_edges:
        arcs[u].append((v, "o"))
    for u, v in e_edges:
        arcs[u].append((v, "e"))
        arcs[v].append((u, "e"))
    verts = tuple(sorted(BOUNDARY_EDGES))
    frozen = {v: tuple(sorted(arcs[v])) for v in verts}
    m = tuple(
        tuple(1 if any(w == v for w, _ in frozen[u]) else 0 for v in verts) for u in verts
    )
    g = EdgeGraph(verts, o_edges, e_edges, frozen, m)
    _check_graph(g, complex)
    return g


def _check_graph(g: EdgeGraph, cx: PantsComplex) -> None:
    if len(g.o_edges) != 12 or len(g.e_edges) != 6:
        raise GraphError("arc count")
    for v in g.vertices:
        labels = sorted(lab for _, lab in g.arcs[v])
        if labels != ["e", "o"]:
            raise GraphError(f"{v} has out-arcs {labels}")
        if g.has_arc(v, v):
            raise GraphError(f"loop at {v}")
    # tr(M^k) for k = 1..12 pins the whole spectrum (Newton's identities)
    m = [list(r) for r in g.adjacency_matrix]
    p = m
    for k in range(1, 13):
        if sum(p[i][i] for i in range(12)) != expected_trace(k):
            raise GraphError(f"tr(M^{k}) disagrees with the spectrum")
        p = mat_mul(p, m)
    # every arc must yield a seam for the path -> word rule
    for u in g.vertices:
        for v, lab in g.arcs[u]:
            run = _subword(u, lab, cx)
            if cx.seam_between(run[-1], v) is None:
                raise GraphError(f"arc {u}->{v} has no connecting seam")


@lru_cache(maxsize=None)
def trace_power(k: int) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    m = [list(r) for r in build_graph().adjacency_matrix]
    p = mat_pow(m, k)
    return sum(p[i][i] for i in range(len(p)))


def characteristic_polynomial():
    """det(lambda*I - M) as an exact sympy polynomial in ``lam``."""
    import sympy

    lam = sympy.Symbol("lam")
    m = sympy.Matrix(build_graph().adjacency_matrix)
    return m.charpoly(lam).as_expr(), lam


def block_form() -> Tuple[Matrix, Matrix, Matrix, Matrix]:
    """The four 6x6 blocks of M in block_order()."""
    full = adjacency_in_order(build_graph(), block_order())
    tl = [r[:6] for r in full[:6]]
    tr = [r[6:] for r in full[:6]]
    bl = [r[:6] for r in full[6:]]
    br = [r[6:] for r in full[6:]]
    return tl, tr, bl, br


@dataclass(frozen=True)
class CyclicPath:
    vertices: Tuple[OrientedEdge, ...]
    edge_labels: Tuple[str, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def labels(self) -> List[str]:
        return [v.label for v in self.vertices]

    def __str__(self) -> str:
        return " ".join(self.labels)


def make_path(vertices: Iterable, graph: Optional[EdgeGraph] = None) -> CyclicPath:
    g = graph or build_graph()
    vs = tuple(parse_edge(v) if isinstance(v, str) else v for v in vertices)
    if not vs:
        raise GraphError("empty path")
    for v in vs:
        if v not in g.arcs:
            raise GraphError(f"{v} is not a vertex")
    vs = least_rotation(vs)
    labels = []
    for i, u in enumerate(vs):
        lab = g.arc_label(u, vs[(i + 1) % len(vs)])
        if lab is None:
            raise GraphError(f"no arc {u} -> {vs[(i + 1) % len(vs)]}")
        labels.append(lab)
    return CyclicPath(vs, tuple(labels))


def is_primitive_path(p: CyclicPath) -> bool:
    return smallest_period(p.vertices) == len(p)


def primitive_root(p: CyclicPath) -> CyclicPath:
    """Strip a path to its fundamental period."""
    d = smallest_period(p.vertices)
    return make_path(p.vertices[:d])


def _subword(v: OrientedEdge, label: str, cx: PantsComplex) -> Tuple[OrientedEdge, ...]:
    run = [v]
    for _ in range(2 if label == "o" else 1):
        run.append(cx.boundary_successor[run[-1]])
    return tuple(run)


def path_to_word(p: CyclicPath, complex: Optional[PantsComplex] = None) -> CyclicWord:
    cx = complex or build_complex()
    if len(p) < 2:
        raise GraphError("paths of length < 2 do not exist in this graph")
    runs = [_subword(v, lab, cx) for v, lab in zip(p.vertices, p.edge_labels)]
    return reconstruct_seams(runs, cx)


# -- enumeration -------------------------------------------------------------


def _succ_table(g: EdgeGraph) -> List[List[int]]:
    idx = {v: i for i, v in enumerate(g.vertices)}
    return [sorted(idx[w] for w, _ in g.arcs[v]) for v in g.vertices]


def _necklaces_from(first: int, n: int, succ: List[List[int]], lyndon: bool) -> List[Tuple[int, ...]]:
    """Constrained necklaces of length n starting at vertex ``first``.

    Depth-first over prenecklaces (Fredricksen-Kessler-Maiorana): a prefix
    a_1..a_t with period p extends by a_{t+1} >= a_{t+1-p}; equality keeps
    the period, anything larger resets it to t+1.  Only graph arcs are
    followed, and a full prefix is a necklace iff p divides n.
    """
    out: List[Tuple[int, ...]] = []
    a = [first] + [0] * (n - 1)
    # stack frames: (t, p, candidate list, position in list)
    stack = [(1, 1, [c for c in succ[first] if c >= first], 0)] if n > 1 else []
    if n == 1:
        if first in succ[first]:
            out.append((first,))
        return out
    while stack:
        t, p, cands, pos = stack[-1]
        if pos == len(cands):
            stack.pop()
            continue
        stack[-1] = (t, p, cands, pos + 1)
        c = cands[pos]
        a[t] = c
        q = p if c == a[t - p] else t + 1
        if t + 1 == n:
            if first in succ[c] and n % q == 0 and (not lyndon or q == n):
                out.append(tuple(a))
            continue
        ref = a[t + 1 - q]
        stack.append((t + 1, q, [d for d in succ[c] if d >= ref], 0))
    return out


def _shard(args) -> List[Tuple[int, ...]]:
    first, n, primitive_only = args
    g = build_graph()
    return _necklaces_from(first, n, _succ_table(g), primitive_only)


def enumerate_cyclic_paths(
    n: int,
    primitive_only: bool = False,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> List[CyclicPath]:
    """All cyclic paths of length exactly n, canonical and sorted.

    Shards by first vertex; ``workers > 1`` runs shards in processes.  The
    result does not depend on ``workers``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > budget:
        raise BudgetExceeded(f"length {n} exceeds the enumeration budget {budget}")
    g = build_graph()
    jobs = [(f, n, primitive_only) for f in range(len(g.vertices))]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            shards = list(ex.map(_shard, jobs))
    else:
        shards = [_shard(j) for j in jobs]
    codes = sorted(c for shard in shards for c in shard)
    out = []
    for code in codes:
        vs = tuple(g.vertices[i] for i in code)
        labels = tuple(g.arc_label(vs[i], vs[(i + 1) % n]) for i in range(n))
        out.append(CyclicPath(vs, labels))
    return out


def iter_primitive_paths(max_length: int, budget: int = DEFAULT_BUDGET) -> Iterator[CyclicPath]:
    for n in range(2, max_length + 1):
        yield from enumerate_cyclic_paths(n, primitive_only=True, budget=budget)


# -- counting ----------------------------------------------------------------


def _divisors(n: int) -> List[int]:
    from sympy import divisors

    return [int(d) for d in divisors(n)]


def _totient(n: int) -> int:
    from sympy import totient

    return int(totient(n))


def count_cyclic_paths(n: int) -> int:
    """Number of cyclic paths of length n: 0 for odd n, else
    2 + (1/m) * sum_{d | m} phi(d) 4^(m/d) with n = 2m."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2:
        return 0
    m = n // 2
    s = sum(_totient(d) * 4 ** (m // d) for d in _divisors(m))
    q, r = divmod(s, m)
    if r:
        raise ArithmeticError("necklace sum not divisible")  # cannot happen
    return 2 + q


def burnside_count(n: int) -> int:
    """(1/n) * sum_{d | n} phi(d) tr(M^(n/d)), straight from the orbit count."""
    s = sum(_totient(d) * trace_power(n // d) for d in _divisors(n))
    q, r = divmod(s, n)
    if r:
        raise ArithmeticError("orbit sum not divisible")
    return q


def path_budget(L: float, K: float, l_max: float) -> float:
    """N(L, K) = min(L / (4 l_max), sqrt(K / 3))."""
    if L <= 0 or K < 0 or l_max <= 0:
        raise ValueError("need L > 0, K >= 0, l_max > 0")
    return min(L / (4 * l_max), math.sqrt(K / 3))
