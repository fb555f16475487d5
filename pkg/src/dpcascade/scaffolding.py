"""Scaffoldings of Fano polygons and the Laurent inversion weight matrix.

A shape is a product of projective spaces whose fan lives in ``Mbar``.  A
ℙ^n factor contributes the rays e_1, ..., e_n, -(e_1 + ... + e_n) in its own
block of coordinates, and divisor coefficients are listed factor by factor in
that ray order.

``N`` is identified with ``Nbar + N_U`` through a *frame*: two basis vectors of
``N``, the first ``2 - u`` spanning ``Nbar`` and the rest spanning ``N_U``. A
point with coordinates (xbar, chi) sits at ``sum xbar_i f_i + sum chi_j f_{2-u+j}``.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidScaffolding, NoSuchDivisor, NotNef
from .lattice import det, inverse, matmul, rank
from .polygon import LatticePolygon, _hull, is_fano

STANDARD_FRAME = ((1, 0), (0, 1))


@dataclass(frozen=True)
class Shape:
    factor_dims: tuple[int, ...]

    def __post_init__(self) -> None:
        dims = tuple(int(n) for n in self.factor_dims)
        if not dims or any(n < 1 for n in dims):
            raise ValueError("a shape needs at least one factor, each of positive dimension")
        object.__setattr__(self, "factor_dims", dims)

    @property
    def dim(self) -> int:
        return sum(self.factor_dims)

    @property
    def ray_count(self) -> int:
        return sum(n + 1 for n in self.factor_dims)

    def factor_slices(self) -> list[slice]:
        out, start = [], 0
        for n in self.factor_dims:
            out.append(slice(start, start + n + 1))
            start += n + 1
        return out

    def rays(self) -> list[tuple[int, ...]]:
        out = []
        offset = 0
        for n in self.factor_dims:
            for i in range(n):
                v = [0] * self.dim
                v[offset + i] = 1
                out.append(tuple(v))
            v = [0] * self.dim
            for i in range(n):
                v[offset + i] = -1
            out.append(tuple(v))
            offset += n
        return out

    def __str__(self) -> str:
        return "x".join(f"P{n}" for n in self.factor_dims)


@dataclass(frozen=True)
class NefDivisor:
    coefficients: tuple[int, ...]

    def multidegree(self, shape: Shape) -> tuple[int, ...]:
        return tuple(sum(self.coefficients[s]) for s in shape.factor_slices())

    def is_zero(self) -> bool:
        return not any(self.coefficients)


@dataclass(frozen=True)
class SectionPolytope:
    """Vertices (in ``Nbar`` coordinates) of a polyhedron of sections."""

    dim: int
    vertices: tuple[tuple[int, ...], ...]


def _check_nef(shape: Shape, D: NefDivisor) -> None:
    if len(D.coefficients) != shape.ray_count:
        raise NotNef(f"divisor has {len(D.coefficients)} coefficients, shape {shape} has {shape.ray_count} rays")
    md = D.multidegree(shape)
    if any(d < 0 for d in md):
        raise NotNef(f"multidegree {md} has a negative entry")


def polyhedron_of_sections(shape: Shape, D: NefDivisor) -> SectionPolytope:
    """{x in Nbar : <x, rho_j> >= -c_j}, a product of dilated simplices."""
    _check_nef(shape, D)
    per_factor = []
    for n, s in zip(shape.factor_dims, shape.factor_slices()):
        c = D.coefficients[s]
        d = sum(c)
        base = tuple(-x for x in c[:n])
        pts = [base]
        if d > 0:
            for i in range(n):
                v = list(base)
                v[i] += d
                pts.append(tuple(v))
        per_factor.append(pts)
    verts = tuple(sorted(set(tuple(itertools.chain.from_iterable(p)) for p in itertools.product(*per_factor))))
    return SectionPolytope(shape.dim, verts)


def in_sections(shape: Shape, D: NefDivisor, x: Sequence) -> bool:
    return all(sum(a * b for a, b in zip(x, rho)) >= -c for rho, c in zip(shape.rays(), D.coefficients))


@dataclass(frozen=True)
class Strut:
    divisor: NefDivisor
    chi: tuple[int, ...]
    uneliminated: bool = False


@dataclass(frozen=True)
class Scaffolding:
    shape: Shape
    u: int
    struts: tuple[Strut, ...]
    frame: tuple[tuple[int, int], tuple[int, int]] = STANDARD_FRAME

    @classmethod
    def build(
        cls,
        shape: Sequence[int],
        u: int,
        struts: Sequence[tuple[Sequence[int], Sequence[int]] | tuple[Sequence[int], Sequence[int], bool]],
        frame: Sequence[Sequence[int]] = STANDARD_FRAME,
    ) -> "Scaffolding":
        ss = []
        for s in struts:
            unelim = bool(s[2]) if len(s) > 2 else False
            ss.append(Strut(NefDivisor(tuple(s[0])), tuple(s[1]), unelim))
        fr = (tuple(frame[0]), tuple(frame[1]))
        return cls(Shape(tuple(shape)), u, tuple(ss), fr)

    def to_point(self, xbar: Sequence, chi: Sequence) -> tuple:
        coords = list(xbar) + list(chi)
        return tuple(sum(c * f[i] for c, f in zip(coords, self.frame)) for i in range(2))

    def from_point(self, p: Sequence[int]) -> tuple[tuple, tuple]:
        """Split a point of ``N`` into (xbar, chi) frame coordinates."""
        inv = inverse([[self.frame[0][0], self.frame[1][0]], [self.frame[0][1], self.frame[1][1]]])
        coords = [sum(inv[i][j] * p[j] for j in range(2)) for i in range(2)]
        nb = 2 - self.u
        return tuple(coords[:nb]), tuple(coords[nb:])

    def strut_points(self, strut: Strut) -> list[tuple]:
        P = polyhedron_of_sections(self.shape, strut.divisor)
        return [self.to_point(v, strut.chi) for v in P.vertices]

    def strut_contains(self, strut: Strut, p: Sequence[int]) -> bool:
        xbar, chi = self.from_point(p)
        return tuple(chi) == tuple(strut.chi) and in_sections(self.shape, strut.divisor, xbar)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def validate_scaffolding(P: LatticePolygon, S: Scaffolding) -> ValidationReport:
    problems: list[str] = []
    if not 0 <= S.u <= 2 or S.shape.dim != 2 - S.u:
        problems.append(f"shape {S.shape} has dimension {S.shape.dim} but N_U has rank {S.u}")
        return ValidationReport(False, tuple(problems))
    if abs(det([list(S.frame[0]), list(S.frame[1])])) != 1:
        problems.append(f"frame {S.frame} is not a lattice basis")
        return ValidationReport(False, tuple(problems))
    for i, s in enumerate(S.struts):
        if len(s.chi) != S.u:
            problems.append(f"strut {i}: chi {s.chi} must have length {S.u}")
        try:
            _check_nef(S.shape, s.divisor)
        except NotNef as exc:
            problems.append(f"strut {i}: {exc}")
    if problems:
        return ValidationReport(False, tuple(problems))
    unelim = [s for s in S.struts if s.uneliminated]
    if len(unelim) != S.u:
        problems.append(f"expected {S.u} uneliminated struts, found {len(unelim)}")
    basis = {tuple(1 if i == j else 0 for i in range(S.u)) for j in range(S.u)}
    seen = set()
    for s in unelim:
        if not s.divisor.is_zero():
            problems.append(f"uneliminated strut {s.chi} has nonzero divisor")
        if s.chi not in basis or s.chi in seen:
            problems.append(f"uneliminated strut chi {s.chi} is not a fresh basis vector of N_U")
        seen.add(s.chi)
    if len(S.struts) - S.u < 1:
        problems.append("no struts left to index rows of the weight matrix")
    pts = [p for s in S.struts for p in S.strut_points(s)]
    try:
        hull = set(_hull(pts))
    except Exception:
        hull = set()
    target = set((v.x, v.y) for v in P.vertices)
    if hull != target:
        problems.append(f"hull mismatch: struts span {sorted(hull)}, polygon has {sorted(target)}")
    for v in P.vertices:
        hits = sum(1 for s in S.struts if S.strut_contains(s, v))
        if hits != 1:
            problems.append(f"vertex {tuple(v)} lies in {hits} struts, expected exactly 1")
    return ValidationReport(not problems, tuple(problems))


@dataclass(frozen=True)
class GitData:
    weight_matrix: tuple[tuple[int, ...], ...]
    stability: tuple[int, ...]
    equation_degrees: tuple[tuple[int, ...], ...]
    n_struts: int = 0

    @property
    def rows(self) -> int:
        return len(self.weight_matrix)

    @property
    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(c) for c in zip(*self.weight_matrix)]

    def invariant_problems(self) -> list[str]:
        out = []
        r = self.rows
        cols = self.columns
        for j in range(r):
            if cols[j] != tuple(1 if i == j else 0 for i in range(r)):
                out.append(f"column {j} breaks the identity block")
        omega = tuple(sum(c[i] for c in cols[: self.n_struts]) for i in range(r))
        if omega != self.stability:
            out.append(f"stability {self.stability} != sum of first {self.n_struts} columns {omega}")
        total = [sum(c[i] for c in cols) for i in range(r)]
        rel = tuple(total[i] - sum(d[i] for d in self.equation_degrees) for i in range(r))
        if rel != self.stability:
            out.append(f"sum of columns minus equation degrees is {rel}, not {self.stability}")
        return out

    def weights(self) -> tuple[int, ...]:
        """The single row, for weighted projective outputs."""
        if self.rows != 1:
            raise ValueError("weights() needs a one-row weight matrix")
        return self.weight_matrix[0]


def laurent_invert(P: LatticePolygon, S: Scaffolding) -> GitData:
    report = validate_scaffolding(P, S)
    if not report:
        raise InvalidScaffolding("; ".join(report.problems))
    main = [s for s in S.struts if not s.uneliminated]
    r = len(main)
    rows = []
    for i, s in enumerate(main):
        ident = [1 if j == i else 0 for j in range(r)]
        # The chi block carries -chi so the first model matrix comes out verbatim.
        chi_block = [-s.chi[j] for j in range(S.u)]
        rows.append(tuple(ident + chi_block + list(s.divisor.coefficients)))
    n_s = len(S.struts)
    omega = tuple(sum(row[:n_s]) for row in rows)
    eq = []
    for sl in S.shape.factor_slices():
        eq.append(tuple(sum(row[n_s:][sl]) for row in rows))
    return GitData(tuple(rows), omega, tuple(eq), n_s)


def anti_canonical_scaffolding(P: LatticePolygon, shape: Shape | Sequence[int]) -> Scaffolding:
    if not isinstance(shape, Shape):
        shape = Shape(tuple(shape))
    if shape.dim != 2:
        raise NoSuchDivisor(f"shape {shape} does not have dimension 2, so no single strut can fill a polygon")
    coeffs = tuple(-min(v[0] * rho[0] + v[1] * rho[1] for v in P.vertices) for rho in shape.rays())
    D = NefDivisor(coeffs)
    try:
        PD = polyhedron_of_sections(shape, D)
    except NotNef as exc:
        raise NoSuchDivisor(str(exc)) from exc
    try:
        hull = set(_hull(PD.vertices))
    except Exception:
        hull = set()
    if hull != set((v.x, v.y) for v in P.vertices):
        raise NoSuchDivisor(f"polygon {P.as_lists()} is not a polyhedron of sections on {shape}")
    return Scaffolding(shape, 0, (Strut(D, ()),))


def _int_matrix(m) -> list[list[int]] | None:
    out = []
    for row in m:
        r = []
        for x in row:
            x = Fraction(x)
            if x.denominator != 1:
                return None
            r.append(int(x))
        out.append(r)
    return out


def git_equivalent(A: GitData, B: GitData) -> bool:
    """Is ``B = U A P_sigma`` with ``U`` unimodular and ``U omega_A = omega_B``?"""
    if A.rows != B.rows or len(A.columns) != len(B.columns):
        return False
    r = A.rows
    ca, cb = A.columns, B.columns
    basis_idx = None
    for idx in itertools.combinations(range(len(ca)), r):
        if rank([ca[i] for i in idx]) == r:
            basis_idx = idx
            break
    if basis_idx is None:
        return Counter(ca) == Counter(cb) and A.stability == B.stability
    AJ = [[ca[j][i] for j in basis_idx] for i in range(r)]
    AJinv = inverse(AJ)
    target = Counter(cb)
    for pick in itertools.permutations(range(len(cb)), r):
        BK = [[cb[j][i] for j in pick] for i in range(r)]
        U = _int_matrix(matmul(BK, AJinv))
        if U is None or abs(det(U)) != 1:
            continue
        mapped = Counter(tuple(sum(U[i][t] * c[t] for t in range(r)) for i in range(r)) for c in ca)
        if mapped != target:
            continue
        w = tuple(sum(U[i][t] * A.stability[t] for t in range(r)) for i in range(r))
        if w == B.stability:
            return True
    return False


def git_from_matrix(matrix: Sequence[Sequence[int]], stability: Sequence[int], equation_degrees=()) -> GitData:
    """Wrap a printed weight matrix (no identity-block requirement)."""
    return GitData(tuple(tuple(r) for r in matrix), tuple(stability), tuple(tuple(d) for d in equation_degrees), 0)


def random_valid_scaffolding(rng: random.Random, max_tries: int = 1000) -> tuple[LatticePolygon, Scaffolding]:
    """Draw random struts on one of the three standard shapes until they scaffold a Fano polygon."""
    for _ in range(max_tries):
        kind = rng.choice(["P1", "P1xP1", "P2"])
        if kind == "P1":
            a, b = rng.choice([((1, 0), (0, 1)), ((0, 1), (1, 0)), ((1, 0), (1, 1)), ((1, 1), (0, 1))])
            frame = (a, b)
            struts = [((0, 0), (1,), True)]
            for _ in range(rng.randint(1, 3)):
                lo = rng.randint(-6, 2)
                hi = rng.randint(lo, lo + 8)
                struts.append(((-lo, hi), (rng.randint(-3, 0),)))
            S = Scaffolding.build([1], 1, struts, frame)
        elif kind == "P1xP1":
            struts = []
            for _ in range(rng.randint(1, 3)):
                x0 = rng.randint(-4, 1)
                y0 = rng.randint(-4, 1)
                struts.append(((-x0, x0 + rng.randint(0, 6), -y0, y0 + rng.randint(0, 6)), ()))
            S = Scaffolding.build([1, 1], 0, struts)
        else:
            struts = []
            for _ in range(rng.randint(1, 3)):
                c1, c2 = rng.randint(0, 3), rng.randint(0, 3)
                struts.append(((c1, c2, rng.randint(-min(c1, c2), 6)), ()))
            S = Scaffolding.build([2], 0, struts)
        pts = [p for s in S.struts for p in S.strut_points(s)]
        try:
            P = LatticePolygon(tuple(_rotate(_hull(pts))))
        except Exception:
            continue
        if is_fano(P) and validate_scaffolding(P, S):
            return P, S
    raise RuntimeError("no valid random scaffolding found")


def _rotate(vs: list) -> list:
    i = vs.index(min(vs))
    return vs[i:] + vs[:i]
