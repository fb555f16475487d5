"""Executable acceptance criteria; each returns a pass/fail verdict with detail lines."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Callable

from . import catalog, hilbert, mutation, quasismooth, rootsys
from .catalog import K_RANGE, max_l, polygon_B, polygon_X
from .errors import DpCascadeError
from .polygon import (
    convex_hull,
    degree,
    dual_of_rational,
    dual_polygon,
    is_fano,
    normal_form,
    singularity_content,
)
from .scaffolding import anti_canonical_scaffolding, git_equivalent, git_from_matrix, laurent_invert, random_valid_scaffolding


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    details: tuple[str, ...] = ()

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number}. {self.title}"


def _grid():
    for k in K_RANGE:
        for l in range(2, k + 5):
            yield k, l
    yield 3, 8


E8_CARTAN = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, 0],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, -1],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, 0, 0, -1, 0, 0, 2],
]


def same_up_to_permutation(A, B) -> bool:
    """Brute force over simultaneous row/column permutations (n <= 8)."""
    n = len(A)
    if n != len(B):
        return False
    return any(
        all(A[p[i]][p[j]] == B[i][j] for i in range(n) for j in range(n)) for p in permutations(range(n))
    )


def criterion_root_counts() -> CriterionResult:
    bad = []
    for k, l in _grid():
        got = len(rootsys.enumerate_roots(rootsys.PolarizedLattice(k, l)))
        if got != rootsys.expected_count(k, l):
            bad.append(f"(k,l)=({k},{l}): {got} roots, expected {rootsys.expected_count(k, l)}")
    return CriterionResult(1, "root counts", not bad, tuple(bad))


def criterion_root_types() -> CriterionResult:
    bad = []
    for k, l in _grid():
        s = rootsys.summarize(k, l)
        if str(s.cartan_type) != rootsys.expected_type(k, l):
            bad.append(f"(k,l)=({k},{l}): type {s.cartan_type}, expected {rootsys.expected_type(k, l)}")
    L = rootsys.PolarizedLattice(3, 8)
    C = rootsys.cartan_matrix(rootsys.simple_roots(rootsys.enumerate_roots(L), L), L)
    if not same_up_to_permutation(C, E8_CARTAN):
        bad.append("(3,8): Cartan matrix is not E8 up to permutation")
    return CriterionResult(2, "root system types", not bad, tuple(bad))


def criterion_index() -> CriterionResult:
    bad, logged = [], []
    for k, l in _grid():
        if l < k + 2 and (k, l) != (3, 8):
            continue
        try:
            s = rootsys.summarize(k, l)
        except DpCascadeError as e:
            bad.append(f"(k,l)=({k},{l}): {e}")
            continue
        printed = rootsys.paper_index(k, l)
        if l == k + 2 and (k, l) != (3, 8):
            logged.append(f"(k,l)=({k},{l}): computed {s.index.index}, printed 2(k+1) = {printed}")
        elif s.index.index != printed:
            bad.append(f"(k,l)=({k},{l}): computed {s.index.index}, printed {printed}")
    return CriterionResult(3, "index of connectedness", not bad, tuple(bad + logged))


def criterion_hilbert() -> CriterionResult:
    bad = []
    for k in range(1, 13):
        if hilbert.anticanonical_hilbert_P11k(k).numerator != hilbert.closed_form_numerator(k):
            bad.append(f"k={k}: procedural numerator differs from the closed form")
    for m in range(1, 7):
        for mi in hilbert.table_models(m):
            if not hilbert.check_model(mi):
                bad.append(f"m={m} {mi.label}: rational functions differ")
    for k in range(1, 13):
        for l in range(max_l(k) + 1):
            p = hilbert.cascade_numerator(k, l)
            if not p.is_palindromic():
                bad.append(f"(k,l)=({k},{l}): numerator {p} is not palindromic")
            if any(v < 0 for v in p.terms.values()):
                bad.append(f"(k,l)=({k},{l}): numerator {p} has a negative coefficient")
    return CriterionResult(4, "Hilbert numerators", not bad, tuple(bad))


def criterion_laurent() -> CriterionResult:
    bad = []
    for k in range(3, 9):
        for l in range(1, k + 2):
            rec = catalog.family_record(f"X:{k}:{l}")
            g = laurent_invert(rec.polygon, rec.scaffolding)
            want = [[1, 0, 0, 1, 0], [0, 1, 1, l - k, k]]
            if [list(r) for r in g.weight_matrix] != want or list(g.stability) != [1, 2]:
                bad.append(f"(k,l)=({k},{l}): got {g.weight_matrix} / {g.stability}")
    for m in range(2, 6):
        k = 2 * m - 1
        for l in (k + 2, k + 3):
            rec = catalog.family_record(f"X:{k}:{l}")
            g = laurent_invert(rec.polygon, rec.scaffolding)
            if not git_equivalent(g, rec.paper_matrix):
                bad.append(f"(k,l)=({k},{l}): not equivalent to the printed 2x6 matrix")
    tri = catalog.polygon_pair(6, 6)
    if not git_equivalent(laurent_invert(tri, catalog._line_scaffolding(6, 6)), git_from_matrix([[1, 6, 6, 1]], [2], [(12,)])):
        bad.append("two-strut scaffolding of conv{(-6,-1),(0,1),(6,-1)} is not (1,6,6,1)")
    rect = convex_hull([(-3, -1), (3, -1), (3, 1), (-3, 1)])
    g = laurent_invert(rect, anti_canonical_scaffolding(rect, (1, 1)))
    if not git_equivalent(g, git_from_matrix([[1, 1, 1, 3, 3]], [1], [(2,), (6,)])):
        bad.append(f"rectangle strut gives {g.weight_matrix}, not (1,1,1,3,3)")
    for m in range(1, 6):
        cases = [
            (polygon_X(2 * m, 2 * m + 3), (2,), (1, 1, 1, m), (m + 2,)),
            (polygon_X(2 * m, 2 * m + 4), (2,), (1, 1, m, m + 1), (2 * m + 2,)),
        ]
        if m >= 2:
            k = 2 * m - 1
            cases.append((polygon_X(k, k + 4), (1, 1), (1, 1, m, m, k), (k + 1, k + 1)))
        for P, shape, w, d in cases:
            g = laurent_invert(P, anti_canonical_scaffolding(P, shape))
            if not git_equivalent(g, catalog._wps_matrix(w, d)):
                bad.append(f"anti-canonical strut of {P.as_lists()} gives {g.weight_matrix}, expected P{w}")
    return CriterionResult(5, "Laurent inversion", not bad, tuple(bad))


def criterion_quasismooth() -> CriterionResult:
    cases: list[tuple[tuple[int, ...], tuple[int, ...], bool]] = []
    for m in range(2, 7):
        k = 2 * m - 1
        cases.append(((1, 1, m, m, k), (k + 1, k + 1), True))
        cases.append(((1, 1, m, m + 1), (2 * m + 2,), False))
    cases.append(((1, 1, 6, 6), (12,), True))
    cases.append(((1, 1, 1, 3, 3), (2, 6), True))
    for a, b in catalog.PAIRS:
        cases.append(((1, 1, a, b), (a + b,), True))
    bad = []
    for w, d, want in cases:
        rep = quasismooth.quasismooth(w, d)
        if bool(rep) != want:
            why = f" ({rep.detail})" if rep.detail else ""
            bad.append(f"P{w} degrees {d}: computed {bool(rep)}, stated {want}{why}")
    return CriterionResult(6, "quasismoothness", not bad, tuple(bad))


def criterion_polygons() -> CriterionResult:
    bad = []
    for fid in catalog.catalog_ids():
        rec = catalog.family_record(fid)
        if not is_fano(rec.polygon):
            bad.append(f"{fid}: not Fano")
        if catalog._sorted(rec.basket.basket) != catalog.expected_basket(rec):
            bad.append(f"{fid}: basket {[str(s) for s in rec.basket.basket]}, "
                       f"expected {[str(s) for s in catalog.expected_basket(rec)]}")
        if rec.degree != catalog.expected_degree(rec):
            bad.append(f"{fid}: degree {rec.degree}, expected {catalog.expected_degree(rec)}")
    for k in range(4, 11):
        n = catalog.cascade_size(k)
        if n != k + 6:
            bad.append(f"cascade_size({k}) = {n}, expected {k + 6}")
    return CriterionResult(7, "polygon invariants", not bad, tuple(bad))


def _is_triple_three_cycle(q: mutation.Quiver) -> bool:
    if len(q) != 3:
        return False
    a = q.arrows
    for i in range(3):
        if a[i][i] or sorted((a[i][j], a[j][i]) for j in range(3) if j != i) != [(0, 3), (3, 0)]:
            return False
    return True


def criterion_mutation() -> CriterionResult:
    bad, info = [], []
    P = convex_hull([(-1, 1), (1, 1), (5, -1), (-5, -1)])
    tri = normal_form(convex_hull([(-6, -1), (0, 1), (6, -1)]))
    rect = normal_form(convex_hull([(-3, 1), (3, 1), (3, -1), (-3, -1)]))
    if normal_form(mutation.mutate(P, mutation.MutationMove((0, -1), (2, 0)))) != tri:
        bad.append("polygon 1.13 does not mutate to the triangle")
    if normal_form(mutation.mutate(P, mutation.MutationMove((0, 1), (4, 0)))) != rect:
        bad.append("polygon 1.13 does not mutate to the rectangle")
    for k in (3, 5, 6, 7):
        for name, Q, want in ((f"X^({k})_{k}", polygon_X(k, k), ()), (f"B^({k})_{k}", polygon_B(k), (2,))):
            r = mutation.fundamental_group_invariant(Q)
            info.append(f"{name}: {r.group} (stabilized={r.stabilized}, explored={r.explored})")
            if r.group.invariant_factors != want or r.group.free_rank:
                bad.append(f"{name}: got {r.group}")
    p2 = convex_hull([(1, 0), (0, 1), (-1, -1)])
    if not _is_triple_three_cycle(mutation.quiver(p2)):
        bad.append(f"quiver of P2 has arrows {mutation.quiver(p2).arrows}")
    if len(mutation.reduced_quiver(p2)):
        bad.append("reduced quiver of P2 is not empty")
    for k in (3, 5):
        for l in range(2, k + 5):
            found = mutation.find_representative_with_quiver(polygon_X(k, l), catalog.quiver_predicate(k, l))
            if not found:
                bad.append(f"(k,l)=({k},{l}): no representative with {catalog.quiver_target(k, l)[0]} nodes")
    return CriterionResult(8, "mutations and quivers", not bad, tuple(bad + info))


def criterion_properties(n_random: int = 200, seed: int = 20240) -> CriterionResult:
    bad = []
    for fid in catalog.catalog_ids():
        P = catalog.family_record(fid).polygon
        d, c = degree(P), singularity_content(P)
        for m in mutation.mutation_moves(P):
            Q = mutation.mutate(P, m)
            if degree(Q) != d or singularity_content(Q) != c:
                bad.append(f"{fid}: move {m} changes degree or content")
        DD = dual_of_rational(dual_polygon(P))
        if not DD.is_integral() or DD.to_lattice() != P:
            bad.append(f"{fid}: dual(dual(P)) != P")
    for k, l in _grid():
        L = rootsys.PolarizedLattice(k, l)
        R = rootsys.enumerate_roots(L)
        for x in R:
            if tuple(-a for a in x) not in R:
                bad.append(f"(k,l)=({k},{l}): {x} has no negative")
                break
        base = rootsys.simple_roots(R, L)
        if any(rootsys.reflect(L, x, m) not in R for m in base for x in R):
            bad.append(f"(k,l)=({k},{l}): not closed under simple reflections")
    rng = random.Random(seed)
    for i in range(n_random):
        P, S = random_valid_scaffolding(rng)
        probs = laurent_invert(P, S).invariant_problems()
        if probs:
            bad.append(f"random scaffolding {i}: {'; '.join(probs)}")
    return CriterionResult(9, "property suites", not bad, tuple(bad))


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: criterion_root_counts,
    2: criterion_root_types,
    3: criterion_index,
    4: criterion_hilbert,
    5: criterion_laurent,
    6: criterion_quasismooth,
    7: criterion_polygons,
    8: criterion_mutation,
    9: criterion_properties,
}


def run_all(numbers=None) -> list[CriterionResult]:
    return [CRITERIA[n]() for n in sorted(numbers or CRITERIA)]
