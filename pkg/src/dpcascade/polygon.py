"""Lattice polygons in a rank-2 lattice and their cone singularities.

Conventions: vertices run counterclockwise; an edge's primitive inner normal
``n`` takes the value ``-height`` on the edge. T-cones are packed along each
edge starting at its counterclockwise-first vertex, and whatever is left at
the far end is the residual cone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Sequence

from .errors import DegenerateInput, DependentRays, NotFano, OriginNotInterior
from .lattice import det2, hermite_rows, primitive, vector_gcd, xgcd


class LatticePoint(NamedTuple):
    x: int
    y: int


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull(points: Iterable[Sequence]) -> list[tuple]:
    """Monotone chain; counterclockwise, collinear points dropped."""
    pts = sorted(set((p[0], p[1]) for p in points))
    if len(pts) < 3:
        raise DegenerateInput(f"need 3 non-collinear points, got {len(pts)} distinct")
    lower: list[tuple] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("all points are collinear")
    return hull


def _shoelace2(vertices: Sequence[Sequence]):
    n = len(vertices)
    return sum(det2(vertices[i], vertices[(i + 1) % n]) for i in range(n))


def _rotate_to_min(vertices: list[tuple]) -> list[tuple]:
    i = vertices.index(min(vertices))
    return vertices[i:] + vertices[:i]


@dataclass(frozen=True)
class LatticePolygon:
    vertices: tuple[LatticePoint, ...]

    def __post_init__(self) -> None:
        vs = tuple(LatticePoint(int(v[0]), int(v[1])) for v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        n = len(vs)
        if n < 3:
            raise DegenerateInput("a polygon needs at least 3 vertices")
        for i in range(n):
            if _cross(vs[i - 1], vs[i], vs[(i + 1) % n]) <= 0:
                raise DegenerateInput(f"vertex {tuple(vs[i])} is not a strictly convex counterclockwise corner")
        # Strictly convex turns plus a single winding rule out self-crossing lists.
        turning = sum(1 for i in range(n) if (vs[i][1], vs[i][0]) > (vs[i - 1][1], vs[i - 1][0])
                      and (vs[i][1], vs[i][0]) > (vs[(i + 1) % n][1], vs[(i + 1) % n][0]))
        if turning != 1:
            raise DegenerateInput("vertex list winds more than once")

    @classmethod
    def from_points(cls, points: Iterable[Sequence[int]]) -> "LatticePolygon":
        return convex_hull(points)

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list["Edge"]:
        return polygon_edges(self)

    def as_lists(self) -> list[list[int]]:
        return [[v.x, v.y] for v in self.vertices]

    def transform(self, u: Sequence[Sequence[int]]) -> "LatticePolygon":
        """Image under the integer matrix ``u`` (acting on column vectors)."""
        pts = [(u[0][0] * x + u[0][1] * y, u[1][0] * x + u[1][1] * y) for x, y in self.vertices]
        return convex_hull(pts)

    def translate(self, t: Sequence[int]) -> "LatticePolygon":
        return LatticePolygon(tuple((x + t[0], y + t[1]) for x, y in self.vertices))


@dataclass(frozen=True)
class RationalPolygon:
    vertices: tuple[tuple[Fraction, Fraction], ...]

    def area(self) -> Fraction:
        return abs(Fraction(_shoelace2(self.vertices))) / 2

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for v in self.vertices for c in v)

    def to_lattice(self) -> LatticePolygon:
        return LatticePolygon(tuple((int(x), int(y)) for x, y in self.vertices))


def convex_hull(points: Iterable[Sequence[int]]) -> LatticePolygon:
    """Counterclockwise hull, starting at the lexicographically least vertex."""
    return LatticePolygon(tuple(_rotate_to_min(_hull(points))))


def rational_hull(points: Iterable[Sequence]) -> RationalPolygon:
    pts = [(Fraction(p[0]), Fraction(p[1])) for p in points]
    return RationalPolygon(tuple(_rotate_to_min(_hull(pts))))


def area(P: LatticePolygon) -> Fraction:
    return Fraction(_shoelace2(P.vertices), 2)


def is_fano(P: LatticePolygon) -> bool:
    if any(vector_gcd(v) != 1 for v in P.vertices):
        return False
    return _origin_interior(P.vertices)


def _origin_interior(vertices: Sequence[Sequence]) -> bool:
    n = len(vertices)
    return all(det2(vertices[i], vertices[(i + 1) % n]) > 0 for i in range(n))


def _require_fano(P: LatticePolygon) -> None:
    if not is_fano(P):
        raise NotFano(f"polygon {P.as_lists()} is not Fano (primitive vertices, origin interior)")


@dataclass(frozen=True)
class QuotientSingularity:
    """The cyclic quotient singularity 1/R(1, c), stored normalized."""

    R: int
    c: int

    @property
    def is_smooth(self) -> bool:
        return self.R == 1

    def __str__(self) -> str:
        return "smooth" if self.R == 1 else f"1/{self.R}(1,{self.c})"


def normalize_singularity(R: int, a: int, b: int) -> QuotientSingularity:
    """Normalize 1/R(a, b) to 1/R(1, c) with ``c`` the smaller of c and c^-1 mod R."""
    if R < 1:
        raise ValueError("index must be positive")
    if R == 1:
        return QuotientSingularity(1, 0)
    if gcd(a, R) != 1 or gcd(b, R) != 1:
        raise ValueError(f"weights ({a},{b}) must be coprime to {R}")
    c = (b * pow(a, -1, R)) % R
    return QuotientSingularity(R, min(c, pow(c, -1, R)))


def cone_singularity(u: Sequence[int], v: Sequence[int]) -> QuotientSingularity:
    d = det2(u, v)
    if d == 0:
        raise DependentRays(f"rays {tuple(u)} and {tuple(v)} are linearly dependent")
    u, v = primitive(u), primitive(v)
    R = det2(u, v)
    if R < 0:
        u, v, R = v, u, -R
    if R == 1:
        return QuotientSingularity(1, 0)
    # n2 . u = 1; in a basis sending u to (0,1) the other ray becomes (R, -n2.v).
    _, s, t = xgcd(u[0], u[1])
    c = (-(s * v[0] + t * v[1])) % R
    return normalize_singularity(R, 1, c)


@dataclass(frozen=True)
class SingularityClass:
    tag: str  # "Smooth", "T", "Rsing" or "Neither"
    k: int
    c: int
    r: int


def classify_singularity(s: QuotientSingularity, a: int = 1, b: int | None = None) -> SingularityClass:
    """T/R classification of 1/R(a, b); by default (a, b) = (1, c)."""
    if b is None:
        b = s.c
    R = s.R
    if R == 1:
        return SingularityClass("Smooth", 1, a + b, 1)
    k = gcd(a + b, R)
    c = (a + b) // k
    r = R // k
    if k % r == 0:
        tag = "T"
    elif k < r:
        tag = "Rsing"
    else:
        tag = "Neither"
    return SingularityClass(tag, k, c, r)


@dataclass(frozen=True)
class Edge:
    start: LatticePoint
    end: LatticePoint
    length: int
    height: int
    normal: tuple[int, int]  # primitive inner normal, value -height on the edge

    @property
    def direction(self) -> tuple[int, int]:
        return ((self.end.x - self.start.x) // self.length, (self.end.y - self.start.y) // self.length)

    @property
    def n_T(self) -> int:
        return self.length // self.height

    @property
    def residue(self) -> int:
        return self.length % self.height


def polygon_edges(P: LatticePolygon) -> list[Edge]:
    vs = P.vertices
    out = []
    for i in range(len(vs)):
        a, b = vs[i], vs[(i + 1) % len(vs)]
        e = (b[0] - a[0], b[1] - a[1])
        ell = vector_gcd(e)
        d = det2(a, b)
        # Inner normal for a counterclockwise edge: rotate the direction by +90 degrees.
        n = (-e[1] // ell, e[0] // ell)
        h = -(n[0] * a[0] + n[1] * a[1])
        if d <= 0 or h <= 0:
            raise OriginNotInterior(f"origin is not strictly inside edge {tuple(a)}-{tuple(b)}")
        out.append(Edge(a, b, ell, h, n))
    return out


@dataclass(frozen=True)
class ConePiece:
    """One cone of the edge decomposition; ``kind`` is "T" or "R"."""

    kind: str
    edge_index: int
    start: tuple[int, int]
    end: tuple[int, int]
    normal: tuple[int, int]
    singularity: QuotientSingularity


def edge_decomposition(P: LatticePolygon) -> list[ConePiece]:
    """Primitive T-cones packed from each edge's first vertex, then the residual cone."""
    _require_fano(P)
    pieces = []
    for i, e in enumerate(polygon_edges(P)):
        d = e.direction
        r = e.height
        for j in range(e.n_T):
            p = (e.start[0] + j * r * d[0], e.start[1] + j * r * d[1])
            q = (p[0] + r * d[0], p[1] + r * d[1])
            pieces.append(ConePiece("T", i, p, q, e.normal, cone_singularity(p, q)))
        if e.residue:
            p = (e.start[0] + e.n_T * r * d[0], e.start[1] + e.n_T * r * d[1])
            q = (e.end[0], e.end[1])
            pieces.append(ConePiece("R", i, p, q, e.normal, cone_singularity(p, q)))
    return pieces


@dataclass(frozen=True)
class SingularityContent:
    n: int
    basket: tuple[QuotientSingularity, ...]

    def __str__(self) -> str:
        b = ", ".join(str(s) for s in self.basket) or "{}"
        return f"({self.n}, {b})"


def singularity_content(P: LatticePolygon) -> SingularityContent:
    pieces = edge_decomposition(P)
    n = sum(1 for p in pieces if p.kind == "T")
    basket = tuple(sorted((p.singularity for p in pieces if p.kind == "R"), key=lambda s: (s.R, s.c)))
    return SingularityContent(n, basket)


def dual_polygon(P: LatticePolygon) -> RationalPolygon:
    if not _origin_interior(P.vertices):
        raise OriginNotInterior(f"origin is not strictly inside {P.as_lists()}")
    verts = [(Fraction(e.normal[0], e.height), Fraction(e.normal[1], e.height)) for e in polygon_edges(P)]
    return rational_hull(verts)


def dual_of_rational(Q: RationalPolygon) -> RationalPolygon:
    """Polar dual {u : <u, v> >= -1} of a rational polygon with the origin inside."""
    vs = Q.vertices
    n = len(vs)
    out = []
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        # Solve <u, a> = <u, b> = -1.
        dd = a[0] * b[1] - a[1] * b[0]
        if dd <= 0:
            raise OriginNotInterior("origin is not strictly inside the rational polygon")
        out.append(((-b[1] + a[1]) / dd, (b[0] - a[0]) / dd))
    return rational_hull(out)


def degree(P: LatticePolygon) -> Fraction:
    _require_fano(P)
    return 2 * dual_polygon(P).area()


def _hnf_key(cols: list[tuple[int, int]]) -> tuple:
    h = hermite_rows([[c[0] for c in cols], [c[1] for c in cols]])
    return tuple(tuple(row) for row in h)


def normal_form(P: LatticePolygon) -> LatticePolygon:
    """Canonical representative of the GL(2, Z)-orbit of ``P``.

    Every cyclic relabelling in both directions gives a 2 x n matrix whose
    row Hermite form is a GL(2, Z) invariant of the labelled polygon; the
    lexicographically least one wins.
    """
    _require_fano(P)
    vs = list(P.vertices)
    n = len(vs)
    best = None
    for order in (vs, vs[::-1]):
        for s in range(n):
            key = _hnf_key(order[s:] + order[:s])
            if best is None or key < best:
                best = key
    pts = list(zip(best[0], best[1]))
    return convex_hull(pts)


def gl_equivalent(P: LatticePolygon, Q: LatticePolygon) -> bool:
    return normal_form(P) == normal_form(Q)


def boundary_points(P: LatticePolygon) -> int:
    return sum(e.length for e in polygon_edges_any(P))


def polygon_edges_any(P: LatticePolygon) -> list[tuple[LatticePoint, LatticePoint, int]]:
    vs = P.vertices
    out = []
    for i in range(len(vs)):
        a, b = vs[i], vs[(i + 1) % len(vs)]
        out.append((a, b, vector_gcd((b[0] - a[0], b[1] - a[1]))))
    return [_E(a, b, ell) for a, b, ell in out]


class _E(NamedTuple):
    start: LatticePoint
    end: LatticePoint
    length: int


def lattice_points(P: LatticePolygon) -> list[tuple[int, int]]:
    xs = [v.x for v in P.vertices]
    ys = [v.y for v in P.vertices]
    n = len(P.vertices)
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if all(_cross(P.vertices[i], P.vertices[(i + 1) % n], (x, y)) >= 0 for i in range(n)):
                out.append((x, y))
    return out
