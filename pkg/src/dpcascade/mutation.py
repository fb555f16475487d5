"""Polygon mutations, the weight-vector group M/Λ, and the quivers Q_P and Q'_P.

A move is a primitive weight vector ``w`` in M and a factor segment
F = [0, factor] with <w, factor> = 0. Mutating adds h·F to the slice at
height h >= 0 and removes h·F from the slice at height h < 0. The slice
width is piecewise linear in h with breaks only at vertex heights and at 0,
so slices at those heights are enough to recover the hull.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Callable, Iterable, Sequence

from .errors import InvalidMove
from .lattice import det2, hermite_rows, primitive, smith_invariants, vector_gcd
from .polygon import (
    LatticePolygon,
    _hull,
    _rotate_to_min,
    edge_decomposition,
    normal_form,
    polygon_edges,
)


@dataclass(frozen=True)
class MutationMove:
    w: tuple[int, int]
    factor: tuple[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "w", (int(self.w[0]), int(self.w[1])))
        object.__setattr__(self, "factor", (int(self.factor[0]), int(self.factor[1])))

    @property
    def length(self) -> int:
        return vector_gcd(self.factor)

    def inverse(self) -> "MutationMove":
        return MutationMove((-self.w[0], -self.w[1]), self.factor)


def _dot(u: Sequence, v: Sequence):
    return u[0] * v[0] + u[1] * v[1]


def _slice(vertices: Sequence, w: Sequence[int], h) -> tuple[tuple, tuple] | None:
    """Endpoints of {x in P : <w, x> = h}, or None if empty."""
    pts = []
    n = len(vertices)
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        ha, hb = _dot(w, a), _dot(w, b)
        if ha == h:
            pts.append((Fraction(a[0]), Fraction(a[1])))
        if (ha - h) * (hb - h) < 0:
            t = Fraction(h - ha, hb - ha)
            pts.append((a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])))
    if not pts:
        return None
    pts.sort()
    return pts[0], pts[-1]


def _check_move(m: MutationMove) -> None:
    if vector_gcd(m.w) != 1:
        raise InvalidMove(f"weight vector {m.w} is not primitive")
    if _dot(m.w, m.factor) != 0:
        raise InvalidMove(f"factor {m.factor} is not orthogonal to {m.w}")


def is_valid_move(P: LatticePolygon, m: MutationMove) -> bool:
    try:
        _check_move(m)
    except InvalidMove:
        return False
    if m.factor == (0, 0):
        return True
    hmin = min(_dot(m.w, v) for v in P.vertices)
    if hmin >= 0:
        return False
    lo, hi = _slice(P.vertices, m.w, hmin)
    f = primitive(m.factor)
    width = _dot((hi[0] - lo[0], hi[1] - lo[1]), f) / _dot(f, f)
    return abs(width) >= -hmin * m.length


def mutate(P: LatticePolygon, m: MutationMove) -> LatticePolygon:
    _check_move(m)
    if m.factor == (0, 0):
        return P
    if not is_valid_move(P, m):
        raise InvalidMove(f"the bottom edge for w={m.w} is too short for factor {m.factor}")
    f = m.factor
    heights = sorted({_dot(m.w, v) for v in P.vertices} | {0})
    pts = []
    for h in heights:
        s = _slice(P.vertices, m.w, h)
        if s is None:
            continue
        p, q = s
        # Order the slice along f so the moving end is q.
        if _dot((q[0] - p[0], q[1] - p[1]), f) < 0:
            p, q = q, p
        pts.append(p)
        pts.append((q[0] + h * f[0], q[1] + h * f[1]))
    # Hull over integers after clearing denominators; Fraction hulls are slow.
    D = lcm(*(c.denominator for p in pts for c in p))
    hull = _hull([(int(x * D), int(y * D)) for x, y in pts])
    if any(c % D for v in hull for c in v):
        raise InvalidMove(f"mutation by {m} leaves the lattice")
    return LatticePolygon(tuple(_rotate_to_min([(x // D, y // D) for x, y in hull])))


def mutation_moves(P: LatticePolygon) -> list[MutationMove]:
    """Every nontrivial move: an edge with a T-cone, its inner normal, multiples of its direction."""
    moves = []
    for e in polygon_edges(P):
        d = e.direction
        for a in range(1, e.n_T + 1):
            moves.append(MutationMove(e.normal, (a * d[0], a * d[1])))
    return moves


def mutation_neighbors(P: LatticePolygon) -> set[LatticePolygon]:
    return {normal_form(mutate(P, m)) for m in mutation_moves(P)}


@dataclass(frozen=True)
class FiniteAbelianGroup:
    invariant_factors: tuple[int, ...]
    free_rank: int = 0

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def is_trivial(self) -> bool:
        return not self.invariant_factors and not self.free_rank

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors] + ["Z"] * self.free_rank
        return " x ".join(parts) if parts else "trivial"


@dataclass(frozen=True)
class GroupReport:
    group: FiniteAbelianGroup
    stabilized: bool
    explored: int
    exhausted: bool
    weight_vectors: tuple[tuple[int, int], ...]


def _group_of(gens: Iterable[tuple[int, int]]) -> FiniteAbelianGroup:
    gens = [list(g) for g in gens]
    inv = smith_invariants(gens) if gens else []
    return FiniteAbelianGroup(tuple(d for d in inv if d > 1), 2 - len(inv))


def fundamental_group_invariant(P: LatticePolygon, search_bound: int = 500) -> GroupReport:
    """M / Λ with Λ spanned by the weight vectors met in a bounded breadth-first search.

    Polygons are kept in their actual coordinates (no normal form): the
    weight vectors of different class members must live in one copy of M.
    Λ is carried as a Hermite basis, so each new vector costs a 3x2 reduction.
    """
    seen = {P.vertices}
    queue = deque([P])
    gens: list[tuple[int, int]] = []
    basis: list[list[int]] = []
    current = _group_of([])
    last_change = 0
    explored = 0
    while queue and explored < search_bound:
        Q = queue.popleft()
        explored += 1
        for m in mutation_moves(Q):
            if m.w not in gens:
                gens.append(m.w)
                new_basis = hermite_rows(basis + [list(m.w)])
                if new_basis != basis:
                    basis = new_basis
                    current = _group_of(basis)
                    last_change = explored
            R = mutate(Q, m)
            if R.vertices not in seen:
                seen.add(R.vertices)
                queue.append(R)
        if current.is_trivial():
            break
    exhausted = not queue
    stabilized = exhausted or current.is_trivial() or last_change * 2 <= explored
    return GroupReport(current, stabilized, explored, exhausted, tuple(gens))


@dataclass(frozen=True)
class QuiverNode:
    edge_index: int
    normal: tuple[int, int]
    height: int


@dataclass(frozen=True)
class Quiver:
    nodes: tuple[QuiverNode, ...]
    arrows: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.nodes)

    def arrow_count(self) -> int:
        return sum(sum(r) for r in self.arrows)

    def is_discrete(self) -> bool:
        return self.arrow_count() == 0


def _arrows(normals: Sequence[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(max(det2(a, b), 0) for b in normals) for a in normals)


def quiver(P: LatticePolygon) -> Quiver:
    pieces = [p for p in edge_decomposition(P) if p.kind == "T"]
    heights = {i: e.height for i, e in enumerate(polygon_edges(P))}
    nodes = tuple(QuiverNode(p.edge_index, p.normal, heights[p.edge_index]) for p in pieces)
    return Quiver(nodes, _arrows([n.normal for n in nodes]))


def reduced_quiver(P: LatticePolygon) -> Quiver:
    """Drop one node for every height-1 edge.

    A height-1 edge of length 1 is a smooth cone, so its only node goes;
    a longer height-1 edge is a Gorenstein cone and loses one of its nodes.
    """
    Q = quiver(P)
    dropped: set[int] = set()
    keep = []
    for i, n in enumerate(Q.nodes):
        if n.height == 1 and n.edge_index not in dropped:
            dropped.add(n.edge_index)
            continue
        keep.append(i)
    nodes = tuple(Q.nodes[i] for i in keep)
    return Quiver(nodes, _arrows([n.normal for n in nodes]))


class _NotFound:
    def __repr__(self) -> str:
        return "NotFound"

    def __bool__(self) -> bool:
        return False


NotFound = _NotFound()


def find_representative_with_quiver(
    P: LatticePolygon, predicate: Callable[[Quiver], bool], search_bound: int = 500
) -> LatticePolygon | _NotFound:
    start = normal_form(P)
    seen = {start}
    queue = deque([start])
    explored = 0
    while queue and explored < search_bound:
        Q = queue.popleft()
        explored += 1
        if predicate(reduced_quiver(Q)):
            return Q
        for R in sorted(mutation_neighbors(Q), key=lambda R: R.vertices):
            if R not in seen:
                seen.add(R)
                queue.append(R)
    return NotFound
