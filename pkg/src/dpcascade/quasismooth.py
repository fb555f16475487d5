"""Combinatorial quasismoothness criteria for general hypersurfaces and
codimension-two complete intersections in weighted projective space.

"General" is read purely through monomial existence: nothing here ever builds
a polynomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import LinearCone

# Whether the extra variable x_e may be one of the x_i with i in I. Both
# readings give the same verdicts (a tail inside I already yields a pure
# monomial); the test suite checks this.
TAILS_MAY_MEET_I = True


@dataclass(frozen=True)
class WeightedSpace:
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        w = tuple(int(a) for a in self.weights)
        if len(w) < 2 or any(a < 1 for a in w):
            raise ValueError("need at least two positive weights")
        object.__setattr__(self, "weights", w)


@dataclass(frozen=True)
class HypersurfaceSpec:
    space: WeightedSpace
    d: int


@dataclass(frozen=True)
class CiSpec:
    space: WeightedSpace
    d1: int
    d2: int


@dataclass(frozen=True)
class QuasismoothReport:
    quasismooth: bool
    violating_subset: tuple[int, ...] | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.quasismooth


def has_monomial(weights_subset: Sequence[int], d: int) -> bool:
    return _has_monomial(tuple(sorted(weights_subset)), d)


@lru_cache(maxsize=None)
def _has_monomial(ws: tuple[int, ...], d: int) -> bool:
    if d < 0:
        return False
    if d == 0:
        return True
    reach = [False] * (d + 1)
    reach[0] = True
    for a in set(ws):
        for s in range(a, d + 1):
            if reach[s - a]:
                reach[s] = True
    return reach[d]


def is_linear_cone(h: HypersurfaceSpec) -> bool:
    return h.d in h.space.weights


def _tails(weights: Sequence[int], I: Sequence[int], d: int) -> set[int]:
    """Indices e with a monomial (in the x_i, i in I) times x_e of degree d."""
    wI = [weights[i] for i in I]
    pool = range(len(weights)) if TAILS_MAY_MEET_I else (e for e in range(len(weights)) if e not in I)
    return {e for e in pool if has_monomial(wI, d - weights[e])}


def _subsets(n: int):
    for size in range(1, n + 1):
        yield from itertools.combinations(range(n), size)


def is_quasismooth_hypersurface(h: HypersurfaceSpec) -> QuasismoothReport:
    w = h.space.weights
    if is_linear_cone(h):
        return QuasismoothReport(True, None, f"a coordinate has weight {h.d}")
    for I in _subsets(len(w)):
        if has_monomial([w[i] for i in I], h.d):
            continue
        tails = _tails(w, I, h.d)
        if len(tails) >= len(I):
            continue
        return QuasismoothReport(
            False, I, f"no pure monomial of degree {h.d} in x_{list(I)} and only {len(tails)} distinct tails"
        )
    return QuasismoothReport(True)


def _distinct_choice_with_spread(E1: set[int], E2: set[int], k: int) -> bool:
    """Exhaustive search for k distinct tails from each set covering >= k+1 indices."""
    for A in itertools.combinations(sorted(E1), k):
        for B in itertools.combinations(sorted(E2), k):
            if len(set(A) | set(B)) >= k + 1:
                return True
    return False


def is_quasismooth_ci2(c: CiSpec) -> QuasismoothReport:
    w = c.space.weights
    if len(w) < 3:
        raise ValueError("a codimension-two intersection needs at least three coordinates")
    for d in (c.d1, c.d2):
        if d in w:
            raise LinearCone(f"degree {d} equals a weight of {w}: the intersection involves a linear cone")
    for I in _subsets(len(w)):
        k = len(I)
        wI = [w[i] for i in I]
        pure1 = has_monomial(wI, c.d1)
        pure2 = has_monomial(wI, c.d2)
        if pure1 and pure2:
            continue
        E1 = _tails(w, I, c.d1)
        E2 = _tails(w, I, c.d2)
        if pure1 and len(E2) >= k - 1:
            continue
        if pure2 and len(E1) >= k - 1:
            continue
        if _distinct_choice_with_spread(E1, E2, k):
            continue
        return QuasismoothReport(
            False, I, f"x_{list(I)}: pure ({pure1},{pure2}), tails {sorted(E1)} / {sorted(E2)}"
        )
    return QuasismoothReport(True)


def quasismooth(weights: Sequence[int], degrees: Sequence[int]) -> QuasismoothReport:
    """Dispatch on the number of equations (one or two)."""
    space = WeightedSpace(tuple(weights))
    if len(degrees) == 1:
        return is_quasismooth_hypersurface(HypersurfaceSpec(space, degrees[0]))
    if len(degrees) == 2:
        return is_quasismooth_ci2(CiSpec(space, degrees[0], degrees[1]))
    raise ValueError("only hypersurfaces and codimension-two intersections are supported")
