"""Cascade polygons, their scaffoldings and models, and the regenerated tables."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Callable, Sequence

from . import hilbert, mutation, quasismooth, rootsys
from .errors import OutOfRange, UnknownId
from .polygon import (
    LatticePolygon,
    QuotientSingularity,
    SingularityContent,
    cone_singularity,
    convex_hull,
    degree,
    is_fano,
    singularity_content,
)
from .scaffolding import (
    GitData,
    Scaffolding,
    anti_canonical_scaffolding,
    git_equivalent,
    git_from_matrix,
    laurent_invert,
    validate_scaffolding,
)

GOLDEN_DIR = Path(__file__).parent / "golden"
K_RANGE = range(3, 11)
PAIRS = ((3, 5), (3, 6), (5, 5), (5, 6))


def max_l(k: int) -> int:
    """Largest l with l k < (k+2)^2."""
    return ((k + 2) ** 2 - 1) // k


def polygon_X(k: int, l: int) -> LatticePolygon:
    if k < 1 or l < 0 or l > max_l(k):
        raise OutOfRange(f"X(k={k}, l={l}) needs k >= 1 and 0 <= l < (k+2)^2/k")
    if l < k + 2:
        return convex_hull([(1, 0), (0, -1), (-1, k - l), (-1, k)])
    if l > k + 4:
        if (k, l) == (3, 8):
            # Fan of the binomial degeneration x^10 = yzw of X_10 in P(1,2,3,5).
            return convex_hull([(8, 5), (-2, 5), (-2, -5)])
        raise OutOfRange(f"no polygon is known for X(k={k}, l={l})")
    if k % 2 == 0:
        m = k // 2
        pts = {
            k + 2: [(-1, -1), (1, -1), (-1, m), (1, m)],
            k + 3: [(-1, -1), (-1, m + 1), (m + 1, -1)],
            k + 4: [(-1, -m), (2 * m + 1, -m), (-1, m + 2)],
        }[l]
    else:
        m = (k + 1) // 2
        pts = {
            k + 2: [(0, -1), (m, -1), (m, m - 1), (m - 1, m), (-1, m), (-1, 0)],
            k + 3: [(-1, -1), (-1, m), (m - 1, m), (m, m - 1), (m, -1)],
            k + 4: [(-1, -m), (2 * m - 1, -m), (2 * m - 1, m), (-1, m)],
        }[l]
    return convex_hull(pts)


def polygon_B(k: int) -> LatticePolygon:
    if k < 1:
        raise OutOfRange("B(k) needs k >= 1")
    return convex_hull([(1, 0), (-1, -1), (-1, k)])


def polygon_pair(k1: int, k2: int) -> LatticePolygon:
    if k1 < 1 or k2 < 1:
        raise OutOfRange("pair polygons need positive k1, k2")
    return convex_hull([(0, 1), (-k1, -1), (k2, -1)])


@dataclass(frozen=True)
class Model:
    """Ambient weight data plus equation degrees (one tuple per equation)."""

    weights: tuple[tuple[int, ...], ...]
    degrees: tuple[tuple[int, ...], ...]
    binomials: tuple[str, ...] = ()
    note: str = ""

    @property
    def is_weighted_projective(self) -> bool:
        return len(self.weights) == 1

    @property
    def flat_degrees(self) -> tuple[int, ...]:
        return tuple(d[0] for d in self.degrees)

    def describe(self) -> str:
        if not self.weights:
            return self.note or "no model"
        if self.is_weighted_projective:
            w = ",".join(map(str, self.weights[0]))
            if not self.degrees:
                return f"P({w})"
            d = ",".join(map(str, self.flat_degrees))
            return f"X_{d} in P({w})"
        rows = ";".join(",".join(map(str, r)) for r in self.weights)
        d = " + ".join("O(" + ",".join(map(str, e)) + ")" for e in self.degrees)
        return f"toric [{rows}] cut by {d}"

    def fano_index(self) -> int | None:
        if not self.is_weighted_projective:
            return None
        return sum(self.weights[0]) - sum(self.flat_degrees)


def _wps(weights: Sequence[int], degrees: Sequence[int] = (), binomials: Sequence[str] = (), note: str = "") -> Model:
    return Model((tuple(weights),), tuple((d,) for d in degrees), tuple(binomials), note)


@dataclass(frozen=True)
class FamilyRecord:
    id: str
    k: int
    l: int | None
    polygon: LatticePolygon
    degree: Fraction
    fano_index: int
    is_toric: bool
    basket: SingularityContent
    model: Model
    alternative_models: tuple[Model, ...] = ()
    scaffolding: Scaffolding | None = None
    paper_matrix: GitData | None = None
    quasismooth_claim: bool | None = None
    hilbert_identity: bool = False
    notes: tuple[str, ...] = field(default_factory=tuple)


_ID_RE = re.compile(r"^\s*(X|B|pair)\s*[:(]\s*(\d+)\s*(?:[:,]\s*(\d+)\s*)?\)?\s*$", re.IGNORECASE)


def parse_id(family_id: str) -> tuple[str, int, int | None]:
    m = _ID_RE.match(family_id)
    if not m:
        raise UnknownId(f"cannot parse family id {family_id!r}; use X:k:l, B:k or pair:k1:k2")
    kind = {"x": "X", "b": "B", "pair": "pair"}[m.group(1).lower()]
    a = int(m.group(2))
    b = int(m.group(3)) if m.group(3) is not None else None
    if (kind == "B") != (b is None):
        raise UnknownId(f"family id {family_id!r} has the wrong number of parameters")
    return kind, a, b


def catalog_ids() -> list[str]:
    out = []
    for k in K_RANGE:
        out += [f"X:{k}:{l}" for l in range(max_l(k) + 1)]
        out.append(f"B:{k}")
    out += [f"pair:{a}:{b}" for a, b in PAIRS]
    return out


def _first_model_scaffolding(k: int, l: int) -> Scaffolding:
    # N_U is the x-axis (the lone point (1,0)); Nbar is the y-axis.
    return Scaffolding.build([1], 1, [((0, 0), (1,), True), ((1, 0), (0,)), ((l - k, k), (-1,))], ((0, 1), (1, 0)))


def _first_model_matrix(k: int, l: int) -> GitData:
    return git_from_matrix([(1, 0, 0, 1, 0), (0, 1, 1, l - k, k)], (1, 2), [(1, l)])


def _odd_k2_scaffolding(m: int) -> Scaffolding:
    # Two m x m squares: [0,m]x[-1,m-1] and [-1,m-1]x[0,m].
    return Scaffolding.build([1, 1], 0, [((0, m, 1, m - 1), ()), ((1, m - 1, 0, m), ())])


def _odd_k2_matrix(m: int) -> GitData:
    return git_from_matrix([(1, 1, 0, 0, m - 1, m), (0, 0, 1, 1, m, m - 1)], (1, 1), [(m, m), (m, m)])


def _odd_k3_scaffolding(m: int) -> Scaffolding:
    # [-1,m]x[-1,m-1] and [-1,m-1]x[0,m].
    return Scaffolding.build([1, 1], 0, [((1, m, 1, m - 1), ()), ((1, m - 1, 0, m), ())])


def _odd_k3_matrix(m: int) -> GitData:
    return git_from_matrix([(1, 1, 0, 1, m - 1, m), (0, 0, 1, 1, m, m - 1)], (1, 1), [(m, m), (m + 1, m)])


def _line_scaffolding(k1: int, k2: int) -> Scaffolding:
    """The apex (0,1) plus the bottom segment [(-k1,-1),(k2,-1)]."""
    return Scaffolding.build([1], 1, [((0, 0), (1,), True), ((k1, k2), (-1,))], ((1, 0), (0, 1)))


def _wps_matrix(weights: Sequence[int], degrees: Sequence[int]) -> GitData:
    return git_from_matrix([tuple(weights)], (sum(weights) - sum(degrees),), [(d,) for d in degrees])


def _record_X(k: int, l: int) -> FamilyRecord:
    P = polygon_X(k, l)
    fid = f"X:{k}:{l}"
    notes: list[str] = []
    alt: list[Model] = []
    scaff = None
    paper = None
    qs_claim = None
    identity = False
    if l == 0:
        model = _wps((1, 1, k))
        index = k + 2
    elif l <= k + 1:
        model = Model(((1, 0, 0, 1, 0), (0, 1, 1, l - k, k)), ((1, l),), ("y1*y2^%d - x2*x3" % l,),
                      "scroll P(O + O(k-l)) over P(1,1,k)")
        scaff = _first_model_scaffolding(k, l)
        paper = _first_model_matrix(k, l)
        index = 1
    elif l == k + 2 and k % 2 == 0:
        m = k // 2
        model = _wps((1, 1, 1, 1, m), (2, m + 1))
        scaff = anti_canonical_scaffolding(P, (1, 1))
        paper = _wps_matrix((1, 1, 1, 1, m), (2, m + 1))
        identity = True
        index = 1
    elif l == k + 2:
        m = (k + 1) // 2
        model = Model(((1, 1, 0, 0, m - 1, m), (0, 0, 1, 1, m, m - 1)), ((m, m), (m, m)),
                      (f"x1^{m}*y1^{m} - x2*z1", f"x1^{m}*y1^{m} - y2*z2"))
        alt.append(Model((), (), (), "Hilbert series suggests codimension 4"))
        scaff = _odd_k2_scaffolding(m)
        paper = _odd_k2_matrix(m)
        index = 1
        if k == 3:
            notes.append("degree 10/3, natural embedding in codimension 4")
    elif l == k + 3 and k % 2 == 0:
        m = k // 2
        model = _wps((1, 1, 1, m), (m + 2,), (f"x1^{m + 2} - x2*x3*y",))
        scaff = anti_canonical_scaffolding(P, (2,))
        paper = _wps_matrix((1, 1, 1, m), (m + 2,))
        identity = True
        index = 1
    elif l == k + 3:
        m = (k + 1) // 2
        model = Model(((1, 1, 0, 1, m - 1, m), (0, 0, 1, 1, m, m - 1)), ((m, m), (m + 1, m)),
                      (f"x1^{m}*y1^{m} - x2*z1", f"x1^{m + 1}*y1^{m} - y2*z2"), "not Q-factorial")
        alt.append(Model(((1, 1, 1, m, m, k),), (), (),
                         f"Pfaffians of a 5x5 skew matrix, degree rows (1,1,{m},{m}),(1,{m},{m}),({m},{m}),({k})"))
        scaff = _odd_k3_scaffolding(m)
        paper = _odd_k3_matrix(m)
        index = 1
        if k == 3:
            notes.append("codimension 3 Pfaffian embedding")
    elif l == k + 4 and k % 2 == 0:
        m = k // 2
        model = _wps((1, 1, m, m + 1), (k + 2,))
        scaff = anti_canonical_scaffolding(P, (2,))
        paper = _wps_matrix((1, 1, m, m + 1), (k + 2,))
        qs_claim = False
        identity = True
        index = 1
    elif l == k + 4:
        m = (k + 1) // 2
        model = _wps((1, 1, m, m, k), (k + 1, k + 1))
        scaff = anti_canonical_scaffolding(P, (1, 1))
        paper = _wps_matrix((1, 1, k, m, m), (k + 1, k + 1))
        qs_claim = True
        identity = True
        index = 1
    else:
        model = _wps((1, 2, 3, 5), (10,))
        identity = True
        index = 1
        notes.append("polygon derived from the binomial degeneration x^10 = yzw")
    return FamilyRecord(
        fid, k, l, P, degree(P), index, l <= 2, singularity_content(P), model, tuple(alt), scaff, paper,
        qs_claim, identity, tuple(notes),
    )


def _record_B(k: int) -> FamilyRecord:
    P = polygon_B(k)
    model = _wps((1, 1, 1, k), (k + 1,), (f"x1^{k + 1} - x3*y",))
    return FamilyRecord(
        f"B:{k}", k, None, P, degree(P), 2, False, singularity_content(P), model, (),
        Scaffolding.build([1], 1, [((0, 0), (1,), True), ((1, k), (-1,))], ((0, 1), (1, 0))),
        _wps_matrix((1, 1, 1, k), (k + 1,)),
    )


def _record_pair(k1: int, k2: int) -> FamilyRecord:
    P = polygon_pair(k1, k2)
    model = _wps((1, 1, k1, k2), (k1 + k2,), (f"y1*y2 - x1^{k1}*x2^{k2}",))
    index = model.fano_index()
    return FamilyRecord(
        f"pair:{k1}:{k2}", min(k1, k2), None, P, degree(P), index, False, singularity_content(P), model, (),
        _line_scaffolding(k1, k2), _wps_matrix((1, 1, k1, k2), (k1 + k2,)), True,
    )


def family_record(family_id: str) -> FamilyRecord:
    kind, a, b = parse_id(family_id)
    if kind == "X":
        if a not in K_RANGE or b > max_l(a):
            raise UnknownId(f"X:{a}:{b} is not in the catalog (3 <= k <= 10, l < (k+2)^2/k)")
        return _record_X(a, b)
    if kind == "B":
        if a not in K_RANGE:
            raise UnknownId(f"B:{a} is not in the catalog (3 <= k <= 10)")
        return _record_B(a)
    if (a, b) not in PAIRS:
        raise UnknownId(f"pair:{a}:{b} is not one of {PAIRS}")
    return _record_pair(a, b)


def residual_basket(s: QuotientSingularity) -> list[QuotientSingularity]:
    """The R-part left when a single cone of type ``s`` is cut into T-cones."""
    if s.R == 1:
        return []
    u, v = (0, 1), (s.R, -s.c)
    length = gcd(s.R, s.c + 1)
    height = s.R // length
    n, rho = divmod(length, height)
    if rho == 0:
        return []
    d = (s.R // length, -(s.c + 1) // length)
    start = (u[0] + n * height * d[0], u[1] + n * height * d[1])
    return [cone_singularity(start, v)]


def cascade_ids(k: int) -> list[str]:
    return [f"X:{k}:{l}" for l in range(min(k + 4, max_l(k)) + 1)] + [f"B:{k}"]


def cascade_size(k: int) -> int:
    """Cascade families whose basket is that of one 1/k(1,1) point.

    For k = 4 that basket is empty: 1/4(1,1) is itself a T-singularity.
    """
    if k <= 3:
        raise OutOfRange(f"the cascade count is stated for k > 3, got k={k}")
    target = residual_basket(QuotientSingularity(k, 1))
    count = 0
    polys = [polygon_X(k, l) for l in range(min(k + 4, max_l(k)) + 1)] + [polygon_B(k)]
    for P in polys:
        if is_fano(P) and _sorted(singularity_content(P).basket) == _sorted(target):
            count += 1
    return count


def _sorted(b) -> list[QuotientSingularity]:
    return sorted(b, key=lambda s: (s.R, s.c))


def expected_basket(rec: FamilyRecord) -> list[QuotientSingularity]:
    kind, a, b = parse_id(rec.id)
    if kind == "pair":
        return _sorted([QuotientSingularity(a, 1), QuotientSingularity(b, 1)])
    return [QuotientSingularity(rec.k, 1)]


def expected_degree(rec: FamilyRecord) -> Fraction:
    kind, a, b = parse_id(rec.id)
    if kind == "X":
        return a - b + 4 + Fraction(4, a)
    w, d = rec.model.weights[0], rec.model.flat_degrees
    prod = 1
    for x in w:
        prod *= x
    out = Fraction((sum(w) - sum(d)) ** 2, prod)
    for x in d:
        out *= x
    return out


@dataclass(frozen=True)
class RecordCheck:
    id: str
    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.problems


def validate_record(rec: FamilyRecord) -> RecordCheck:
    """Fano, basket, degree, scaffolding and model consistency for one family."""
    p: list[str] = []
    if not is_fano(rec.polygon):
        p.append("polygon is not Fano")
    if _sorted(rec.basket.basket) != expected_basket(rec):
        p.append(f"basket {rec.basket} differs from {[str(s) for s in expected_basket(rec)]}")
    if rec.degree != expected_degree(rec):
        p.append(f"degree {rec.degree} differs from {expected_degree(rec)}")
    if rec.model.fano_index() is not None and rec.model.fano_index() != rec.fano_index:
        p.append(f"model index {rec.model.fano_index()} differs from recorded {rec.fano_index}")
    if rec.scaffolding is not None:
        rep = validate_scaffolding(rec.polygon, rec.scaffolding)
        if not rep:
            p.append("scaffolding invalid: " + "; ".join(rep.problems))
        else:
            g = laurent_invert(rec.polygon, rec.scaffolding)
            if g.invariant_problems():
                p.append("GitData: " + "; ".join(g.invariant_problems()))
            if rec.paper_matrix is not None and not git_equivalent(g, rec.paper_matrix):
                p.append("Laurent inversion output is not equivalent to the printed matrix")
    return RecordCheck(rec.id, tuple(p))


def quasismooth_disagreements() -> list[tuple[str, bool, bool]]:
    out = []
    for fid in catalog_ids():
        rec = family_record(fid)
        if rec.quasismooth_claim is None:
            continue
        got = bool(quasismooth.quasismooth(rec.model.weights[0], rec.model.flat_degrees))
        if got != rec.quasismooth_claim:
            out.append((fid, rec.quasismooth_claim, got))
    return out


# Tables ---------------------------------------------------------------------

@dataclass(frozen=True)
class Table:
    name: str
    header: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    def text(self) -> str:
        lines = [" | ".join(self.header)] + [" | ".join(r) for r in self.rows]
        return "\n".join(lines) + "\n"

    def failing_rows(self) -> list[tuple[str, ...]]:
        if "verdict" not in self.header:
            return []
        i = self.header.index("verdict")
        return [r for r in self.rows if r[i] not in ("PASS", "DOCUMENTED")]


def _fmt_poly(p: hilbert.IntPolynomial) -> str:
    return " ".join(map(str, p.dense()))


def _basket_str(c: SingularityContent) -> str:
    return "{" + ", ".join(str(s) for s in c.basket) + "}" if c.basket else "{}"


def cascade_table(k: int) -> Table:
    rows = []
    for fid in cascade_ids(k):
        rec = family_record(fid)
        name = f"P(1,1,{k})" if rec.l == 0 else (f"X_{k}^({rec.l})" if rec.l is not None else f"B_{k}^({k})")
        chk = validate_record(rec)
        rows.append((name, str(rec.fano_index), "Yes" if rec.is_toric else "No", str(rec.degree),
                     _basket_str(rec.basket), rec.model.describe(), "PASS" if chk.ok else "FAIL"))
    return Table(f"cascade_k{k}", ("surface", "fano index", "toric", "degree", "basket", "model", "verdict"), tuple(rows))


def hilbert_table() -> Table:
    rows = []
    for k in range(1, 13):
        ok = hilbert.anticanonical_hilbert_P11k(k).numerator == hilbert.closed_form_numerator(k)
        rows.append(("closed form", f"k={k}", _fmt_poly(hilbert.closed_form_numerator(k)), "PASS" if ok else "FAIL"))
    for m in range(1, 7):
        for mi in hilbert.table_models(m):
            model = _wps(mi.weights, mi.degrees).describe()
            ok = hilbert.check_model(mi)
            rows.append((mi.label, f"m={m}", model, "PASS" if ok else "FAIL"))
        k = 2 * m - 1
        got3 = hilbert.cascade_hilbert(k, k + 3).numerator_over(hilbert.odd_denominator_k3(m))
        rows.append(("odd k+3 printed", f"m={m}", _fmt_poly(got3),
                     "PASS" if got3 == hilbert.printed_odd_k3_numerator(m) else "FAIL"))
        got2 = hilbert.cascade_hilbert(k, k + 2).numerator_over(hilbert.odd_denominator_k2(m))
        rows.append(("odd k+2 printed", f"m={m}", _fmt_poly(got2),
                     "PASS" if got2 == hilbert.printed_odd_k2_numerator(m) else "DOCUMENTED"))
    return Table("hilbert", ("series", "parameter", "numerator or model", "verdict"), tuple(rows))


def _matrix_str(g: GitData) -> str:
    return ";".join(",".join(map(str, r)) for r in g.weight_matrix)


def _same_git(a: GitData, b: GitData) -> bool:
    return (a.weight_matrix, a.stability, a.equation_degrees) == (b.weight_matrix, b.stability, b.equation_degrees)


def weight_matrix_table() -> Table:
    rows = []
    for k in range(3, 9):
        for fid in cascade_ids(k):
            rec = family_record(fid)
            if rec.scaffolding is None:
                continue
            g = laurent_invert(rec.polygon, rec.scaffolding)
            if rec.l is not None and 1 <= rec.l <= k + 1:
                ok = _same_git(g, rec.paper_matrix)
            else:
                ok = git_equivalent(g, rec.paper_matrix)
            eq = ";".join(",".join(map(str, d)) for d in g.equation_degrees)
            rows.append((fid, str(rec.scaffolding.shape), _matrix_str(g), ",".join(map(str, g.stability)), eq,
                         _matrix_str(rec.paper_matrix), "PASS" if ok and not g.invariant_problems() else "FAIL"))
    for a, b in PAIRS:
        rec = family_record(f"pair:{a}:{b}")
        g = laurent_invert(rec.polygon, rec.scaffolding)
        eq = ";".join(",".join(map(str, d)) for d in g.equation_degrees)
        rows.append((rec.id, str(rec.scaffolding.shape), _matrix_str(g), ",".join(map(str, g.stability)), eq,
                     _matrix_str(rec.paper_matrix), "PASS" if git_equivalent(g, rec.paper_matrix) else "FAIL"))
    return Table("weight_matrices", ("family", "shape", "matrix", "omega", "equation degrees", "printed", "verdict"),
                 tuple(rows))


def _root_cases() -> list[tuple[int, int]]:
    return [(k, l) for k in K_RANGE for l in range(2, k + 5)] + [(3, 8)]


def root_table() -> Table:
    rows = []
    for k, l in _root_cases():
        s = rootsys.summarize(k, l)
        ok = s.count == rootsys.expected_count(k, l) and str(s.cartan_type) == rootsys.expected_type(k, l)
        rows.append((str(k), str(l), str(s.count), str(s.cartan_type), str(rootsys.expected_count(k, l)),
                     rootsys.expected_type(k, l), "PASS" if ok else "FAIL"))
    return Table("roots", ("k", "l", "count", "type", "printed count", "printed type", "verdict"), tuple(rows))


def index_table() -> Table:
    rows = []
    for k, l in _root_cases():
        printed = rootsys.paper_index(k, l)
        if printed is None:
            continue
        s = rootsys.summarize(k, l)
        consistent = s.index.via_cartan == s.index.via_smith
        if not consistent:
            verdict = "FAIL"
        elif s.index.index == printed:
            verdict = "PASS"
        else:
            verdict = "DOCUMENTED" if l == k + 2 else "FAIL"
        rows.append((str(k), str(l), str(s.index.via_cartan), str(s.index.via_smith), str(printed), verdict))
    return Table("index", ("k", "l", "det cartan", "smith", "printed", "verdict"), tuple(rows))


def quiver_target(k: int, l: int) -> tuple[int, bool]:
    """Node count of the tabulated reduced quiver, and whether it has no arrows."""
    if 2 <= l <= k + 1:
        return l - 2, True
    return {k + 2: k + 1, k + 3: k + 3, k + 4: k + 5}[l], False


def quiver_predicate(k: int, l: int) -> Callable[[mutation.Quiver], bool]:
    n, discrete = quiver_target(k, l)
    if discrete:
        return lambda q: len(q) == n and q.is_discrete()
    return lambda q: len(q) == n


def quiver_table(ks: Sequence[int] = (3, 5)) -> Table:
    rows = []
    for k in ks:
        for l in range(2, k + 5):
            n, discrete = quiver_target(k, l)
            found = mutation.find_representative_with_quiver(polygon_X(k, l), quiver_predicate(k, l))
            if found:
                q = mutation.reduced_quiver(found)
                rows.append((str(k), str(l), str(n), "A1^%d" % n if discrete else "-", str(len(q)),
                             str(q.arrow_count()), str(found.as_lists()), "PASS"))
            else:
                rows.append((str(k), str(l), str(n), "-", "-", "-", "NotFound", "FAIL"))
    return Table("quivers", ("k", "l", "target nodes", "shape", "nodes", "arrows", "representative", "verdict"),
                 tuple(rows))


def pair_table() -> Table:
    rows = []
    for a, b in PAIRS:
        rec = family_record(f"pair:{a}:{b}")
        qs = bool(quasismooth.quasismooth(rec.model.weights[0], rec.model.flat_degrees))
        ok = validate_record(rec).ok and qs
        rows.append((rec.id, rec.model.describe(), str(rec.degree), _basket_str(rec.basket), str(rec.fano_index),
                     "yes" if qs else "no", "PASS" if ok else "FAIL"))
    return Table("pairs", ("family", "model", "degree", "basket", "fano index", "quasismooth", "verdict"), tuple(rows))


TABLES: dict[str, Callable[[], Table]] = {
    "cascade_k5": lambda: cascade_table(5),
    "hilbert": hilbert_table,
    "weight_matrices": weight_matrix_table,
    "roots": root_table,
    "index": index_table,
    "quivers": quiver_table,
    "pairs": pair_table,
}


@dataclass(frozen=True)
class TableResult:
    table: Table
    golden_match: bool | None

    @property
    def ok(self) -> bool:
        return self.golden_match is not False and not self.table.failing_rows()


@dataclass(frozen=True)
class TablesReport:
    results: tuple[TableResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def summary(self) -> str:
        lines = []
        for r in self.results:
            g = {True: "matches golden", False: "DIFFERS from golden", None: "no golden file"}[r.golden_match]
            bad = r.table.failing_rows()
            doc = sum(1 for row in r.table.rows if "DOCUMENTED" in row)
            lines.append(f"{r.table.name}: {len(r.table.rows)} rows, {len(bad)} failing, {doc} documented, {g}")
        return "\n".join(lines)


def regenerate_tables(names: Sequence[str] | None = None, update: bool = False,
                      golden_dir: Path = GOLDEN_DIR) -> TablesReport:
    results = []
    for name in names or sorted(TABLES):
        if name not in TABLES:
            raise UnknownId(f"no table named {name!r}; choose from {sorted(TABLES)}")
        t = TABLES[name]()
        path = golden_dir / f"{name}.txt"
        if update:
            path.write_text(t.text())
        match = path.read_text() == t.text() if path.exists() else None
        results.append(TableResult(t, match))
    return TablesReport(tuple(results))


def family_row(family_id: str) -> Table:
    """A one-family table row with its annotations."""
    rec = family_record(family_id)
    chk = validate_record(rec)
    row = (rec.id, str(rec.degree), str(rec.fano_index), _basket_str(rec.basket), rec.model.describe(),
           "; ".join(rec.notes + tuple(m.note or m.describe() for m in rec.alternative_models)) or "-",
           "PASS" if chk.ok else "FAIL")
    return Table(f"family {rec.id}", ("family", "degree", "fano index", "basket", "model", "annotations", "verdict"),
                 (row,))
