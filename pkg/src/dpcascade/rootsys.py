"""(-2)-classes orthogonal to the canonical class on the blow-up of ℙ(1,1,k) in l points.

The lattice has basis l_0, ..., l_l with Gram matrix diag(k, -1, ..., -1). A
vector is stored as its coordinates (a, b_1, ..., b_l), meaning
a l_0 + b_1 l_1 + ... + b_l l_l. Root-system algorithms use the negated
pairing, which is positive definite on the span of the roots.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Iterator, Sequence

from .errors import DegenerateLattice, InternalMismatch, UnrecognizedDiagram
from .lattice import det, hermite_rows, rank, smith_invariants

Vector = tuple[int, ...]


@dataclass(frozen=True)
class PolarizedLattice:
    k: int
    l: int

    def __post_init__(self) -> None:
        if self.k < 1 or self.l < 0:
            raise ValueError("need k >= 1 and l >= 0")

    @property
    def gram(self) -> list[list[int]]:
        n = self.l + 1
        return [[(self.k if i == 0 else -1) if i == j else 0 for j in range(n)] for i in range(n)]

    @property
    def omega(self) -> tuple[Fraction, ...]:
        return (Fraction(-(self.k + 2), self.k),) + (Fraction(1),) * self.l

    def pairing(self, x: Sequence, y: Sequence):
        return self.k * x[0] * y[0] - sum(a * b for a, b in zip(x[1:], y[1:]))

    def degree(self) -> Fraction:
        return self.pairing(self.omega, self.omega)


def _check(L: PolarizedLattice) -> None:
    if (L.k + 2) ** 2 - L.l * L.k <= 0:
        raise DegenerateLattice(f"(k+2)^2 - lk = {(L.k + 2) ** 2 - L.l * L.k} <= 0 for (k,l)=({L.k},{L.l})")


def _vectors_with(n: int, s: int, q: int) -> Iterator[list[int]]:
    """Integer n-vectors with coordinate sum s and square sum q."""
    if n == 0:
        if s == 0 and q == 0:
            yield []
        return
    if s * s > n * q or (s - q) % 2:
        return
    if n == 1:
        if s * s == q:
            yield [s]
        return
    bound = isqrt(q)
    for b in range(-bound, bound + 1):
        for rest in _vectors_with(n - 1, s - b, q - b * b):
            yield [b] + rest


def enumerate_roots(L: PolarizedLattice) -> set[Vector]:
    _check(L)
    k, l = L.k, L.l
    slack = (k + 2) ** 2 - l * k
    roots: set[Vector] = set()
    a = 0
    while a * a * slack <= 2 * l:
        for sa in {a, -a}:
            for b in _vectors_with(l, -(k + 2) * sa, k * sa * sa + 2):
                roots.add((sa,) + tuple(b))
        a += 1
    return roots


def is_root(L: PolarizedLattice, x: Sequence[int]) -> bool:
    return L.pairing(x, x) == -2 and L.pairing(x, L.omega) == 0


def reflect(L: PolarizedLattice, x: Sequence[int], m: Sequence[int]) -> Vector:
    """x + (x, m) m: the reflection in a (-2)-class m."""
    c = L.pairing(x, m)
    return tuple(a + c * b for a, b in zip(x, m))


def _positive(x: Sequence[int]) -> bool:
    for c in x:
        if c:
            return c > 0
    return False


def simple_roots(roots: Iterable[Vector], L: PolarizedLattice | None = None) -> list[Vector]:
    pos = sorted(r for r in roots if _positive(r))
    pos_set = set(pos)
    decomposable = set()
    for i, x in enumerate(pos):
        for y in pos[i:]:
            s = tuple(a + b for a, b in zip(x, y))
            if s in pos_set:
                decomposable.add(s)
    return [r for r in pos if r not in decomposable]


def cartan_matrix(base: Sequence[Vector], L: PolarizedLattice) -> list[list[int]]:
    out = []
    for x in base:
        row = []
        for y in base:
            num = -2 * L.pairing(x, y)
            den = -L.pairing(y, y)
            row.append(num // den)
        out.append(row)
    return out


@dataclass(frozen=True)
class CartanType:
    factors: tuple[tuple[str, int], ...]

    def __str__(self) -> str:
        if not self.factors:
            return "empty"
        return "x".join(f"{t}{n}" for t, n in self.factors)

    @property
    def rank(self) -> int:
        return sum(n for _, n in self.factors)


def _components(adj: list[set[int]]) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for s in range(len(adj)):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _arm_length(adj: list[set[int]], start: int, came_from: int) -> int:
    length, prev, cur = 1, came_from, start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt:
            return length
        if len(nxt) > 1:
            return -1
        prev, cur = cur, nxt[0]
        length += 1


def classify(cartan: Sequence[Sequence[int]]) -> CartanType:
    n = len(cartan)
    for i in range(n):
        if cartan[i][i] != 2:
            raise UnrecognizedDiagram(f"diagonal entry {cartan[i][i]} at {i}")
        for j in range(n):
            if i != j and (cartan[i][j] not in (0, -1) or cartan[i][j] != cartan[j][i]):
                raise UnrecognizedDiagram(f"entry ({i},{j}) = {cartan[i][j]} is not simply laced")
    adj = [{j for j in range(n) if j != i and cartan[i][j]} for i in range(n)]
    factors = []
    for comp in _components(adj):
        size = len(comp)
        edges = sum(len(adj[v]) for v in comp) // 2
        if edges != size - 1:
            raise UnrecognizedDiagram(f"component {comp} contains a cycle")
        degs = [len(adj[v]) for v in comp]
        if max(degs, default=0) <= 2:
            factors.append(("A", size))
            continue
        branch = [v for v in comp if len(adj[v]) == 3]
        if len(branch) != 1 or max(degs) > 3:
            raise UnrecognizedDiagram(f"component {comp} has an unsupported branching")
        c = branch[0]
        arms = sorted(_arm_length(adj, w, c) for w in adj[c])
        if -1 in arms:
            raise UnrecognizedDiagram(f"component {comp} has more than one branch point")
        if arms[0] == 1 and arms[1] == 1:
            factors.append(("D", size))
        elif arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
            factors.append(("E", size))
        else:
            raise UnrecognizedDiagram(f"branch arms {arms} match no Dynkin diagram")
    factors.sort(key=lambda f: (-f[1], f[0]))
    return CartanType(tuple(factors))


@dataclass(frozen=True)
class IndexReport:
    index: int
    via_cartan: int
    via_smith: int
    smith_invariants: tuple[int, ...]


def root_lattice_basis(roots: Iterable[Vector]) -> list[list[int]]:
    return hermite_rows([list(r) for r in sorted(roots)])


def index_of_connectedness(roots: Iterable[Vector], L: PolarizedLattice) -> IndexReport:
    roots = list(roots)
    if not roots:
        raise ValueError("the empty root system has no index")
    base = simple_roots(roots, L)
    via_cartan = abs(det(cartan_matrix(base, L)))
    basis = root_lattice_basis(roots)
    gram = [[-L.pairing(x, y) for y in basis] for x in basis]
    inv = tuple(smith_invariants(gram))
    via_smith = 1
    for d in inv:
        via_smith *= d
    if len(inv) < len(basis):
        via_smith = 0
    if via_cartan != via_smith:
        raise InternalMismatch(f"det(Cartan) = {via_cartan} but the discriminant group has order {via_smith}")
    return IndexReport(via_cartan, via_cartan, via_smith, tuple(d for d in inv if d > 1))


def paper_index(k: int, l: int) -> int | None:
    """The printed index of connectedness, where one is printed."""
    if l == k + 2:
        return 2 * (k + 1)
    if l == k + 3:
        return k + 4
    if l == k + 4:
        return 4
    if (k, l) == (3, 8):
        return 1
    return None


def expected_type(k: int, l: int) -> str:
    if (k, l) == (3, 8):
        return "E8"
    if 2 <= l <= k + 1:
        return f"A{l - 1}"
    if l == k + 2:
        return f"A{k + 1}xA1"
    if l == k + 3:
        return f"A{k + 3}"
    if l == k + 4:
        return f"D{k + 4}"
    raise ValueError(f"no tabulated type for (k,l)=({k},{l})")


def expected_count(k: int, l: int) -> int:
    if (k, l) == (3, 8):
        return 240
    if 2 <= l <= k + 1:
        return l * (l - 1)
    if l == k + 2:
        return (k + 2) * (k + 1) + 2
    if l == k + 3:
        return (k + 4) * (k + 3)
    if l == k + 4:
        return 2 * (k + 4) * (k + 3)
    raise ValueError(f"no tabulated count for (k,l)=({k},{l})")


def table_rows(k: int, l: int) -> list[tuple[int, tuple[int, ...]]]:
    """Representative rows (a; b_1..b_l) as printed, i.e. for a l_0 - sum b_i l_i."""
    if (k, l) == (3, 8):
        return [
            (0, (1, 0, 0, 0, 0, 0, 0, -1)),
            (1, (1, 1, 1, 1, 1, 0, 0, 0)),
            (2, (2, 2, 1, 1, 1, 1, 1, 1)),
            (3, (2, 2, 2, 2, 2, 2, 2, 1)),
        ]
    if l not in (k + 2, k + 3, k + 4):
        raise ValueError(f"no table for (k,l)=({k},{l})")
    return [
        (0, (1, -1) + (0,) * (l - 2)),
        (1, (1,) * (k + 2) + (0,) * (l - k - 2)),
    ]


def _multiset_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    counts = Counter(items)
    n = len(items)
    keys = sorted(counts)
    out: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(out) == n:
            yield tuple(out)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                out.append(key)
                yield from rec()
                out.pop()
                counts[key] += 1

    return rec()


def table_orbit(k: int, l: int) -> set[Vector]:
    orbit: set[Vector] = set()
    for a, b in table_rows(k, l):
        for perm in _multiset_permutations([-x for x in b]):
            v = (a,) + perm
            orbit.add(v)
            orbit.add(tuple(-x for x in v))
    return orbit


def verify_orbit_table(k: int, l: int) -> bool:
    return table_orbit(k, l) == enumerate_roots(PolarizedLattice(k, l))


@dataclass(frozen=True)
class RootSummary:
    k: int
    l: int
    count: int
    cartan_type: CartanType
    index: IndexReport
    span_rank: int


def summarize(k: int, l: int) -> RootSummary:
    L = PolarizedLattice(k, l)
    roots = enumerate_roots(L)
    if not roots:
        return RootSummary(k, l, 0, CartanType(()), IndexReport(1, 1, 1, ()), 0)
    base = simple_roots(roots, L)
    ct = classify(cartan_matrix(base, L))
    idx = index_of_connectedness(roots, L)
    return RootSummary(k, l, len(roots), ct, idx, rank([list(r) for r in roots]))
