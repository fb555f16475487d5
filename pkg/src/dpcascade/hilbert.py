"""Exact univariate Hilbert series: sparse integer polynomials over products of (1 - t^a)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import DegreeNonPositive


class IntPolynomial:
    """Sparse polynomial with integer coefficients; zero terms are never stored."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Sequence[int] | None = None) -> None:
        if coeffs is None:
            c = {}
        elif isinstance(coeffs, Mapping):
            c = {int(e): int(v) for e, v in coeffs.items() if v}
        else:
            c = {e: int(v) for e, v in enumerate(coeffs) if v}
        if any(e < 0 for e in c):
            raise ValueError("negative exponents are not polynomials")
        self._c = c

    @classmethod
    def one_minus(cls, a: int) -> "IntPolynomial":
        if a == 0:
            return cls()
        return cls({0: 1, a: -1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._c)

    def degree(self) -> int:
        return max(self._c) if self._c else -1

    def coefficient(self, e: int) -> int:
        return self._c.get(e, 0)

    def dense(self) -> list[int]:
        return [self._c.get(e, 0) for e in range(self.degree() + 1)]

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._c.items())))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        c = Counter(self._c)
        for e, v in other._c.items():
            c[e] += v
        return IntPolynomial(c)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial({e: v * other for e, v in self._c.items()})
        c: Counter = Counter()
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] += v1 * v2
        return IntPolynomial(c)

    __rmul__ = __mul__

    def div_one_minus(self, a: int) -> "IntPolynomial | None":
        """Exact quotient by (1 - t^a), or ``None`` when it does not divide."""
        # q (1 - t^a) = p  gives  q_e = p_e + q_{e-a}, read off from the bottom.
        if self.is_zero():
            return IntPolynomial()
        q: dict[int, int] = {}
        top = self.degree()
        for e in range(0, top - a + 1):
            v = self._c.get(e, 0) + q.get(e - a, 0)
            if v:
                q[e] = v
        quotient = IntPolynomial(q)
        if quotient * IntPolynomial.one_minus(a) != self:
            return None
        return quotient

    def is_palindromic(self) -> bool:
        d = self.degree()
        return all(self._c.get(e, 0) == self._c.get(d - e, 0) for e in range(d + 1))

    def __repr__(self) -> str:
        return f"IntPolynomial({self.dense()})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            v = self._c[e]
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if mono and abs(v) == 1:
                coef = "-" if v < 0 else "+"
            else:
                coef = f"{v:+d}"
            parts.append(f"{coef}{mono}")
        s = " ".join(parts)
        return s[1:] if s.startswith("+") else s


def product_one_minus(factors: Iterable[int]) -> IntPolynomial:
    out = IntPolynomial({0: 1})
    for a in factors:
        out = out * IntPolynomial.one_minus(a)
    return out


@dataclass(frozen=True)
class HilbertFraction:
    numerator: IntPolynomial
    denominator_factors: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a < 1 for a in self.denominator_factors):
            raise ValueError("denominator factors must be positive")
        object.__setattr__(self, "denominator_factors", tuple(sorted(self.denominator_factors)))

    def canonical(self) -> "HilbertFraction":
        """Cancel every (1 - t^a) of the denominator that divides the numerator."""
        num = self.numerator
        kept = []
        for a in sorted(self.denominator_factors, reverse=True):
            q = num.div_one_minus(a)
            if q is None:
                kept.append(a)
            else:
                num = q
        return HilbertFraction(num, tuple(kept))

    def numerator_over(self, factors: Sequence[int]) -> IntPolynomial:
        """Numerator when the denominator is rewritten as prod (1 - t^a) over ``factors``."""
        mine = Counter(self.denominator_factors)
        theirs = Counter(factors)
        num = self.numerator * product_one_minus((theirs - mine).elements())
        for a in (mine - theirs).elements():
            q = num.div_one_minus(a)
            if q is None:
                raise ValueError(f"cannot express over the given denominator: (1 - t^{a}) does not divide")
            num = q
        return num

    def __add__(self, other: "HilbertFraction") -> "HilbertFraction":
        common = Counter(self.denominator_factors) | Counter(other.denominator_factors)
        f = tuple(common.elements())
        return HilbertFraction(self.numerator_over(f) + other.numerator_over(f), f)

    def scale(self, c: int) -> "HilbertFraction":
        return HilbertFraction(self.numerator * c, self.denominator_factors)

    def __str__(self) -> str:
        den = "".join(f"(1-t^{a})" if a > 1 else "(1-t)" for a in self.denominator_factors) or "1"
        return f"({self.numerator}) / {den}"


def fractions_equal(f: HilbertFraction, g: HilbertFraction) -> bool:
    return f.numerator * product_one_minus(g.denominator_factors) == g.numerator * product_one_minus(
        f.denominator_factors
    )


def series_expand(f: HilbertFraction, order: int) -> list[int]:
    if order < 1:
        raise ValueError("order must be positive")
    coeffs = [f.numerator.coefficient(e) for e in range(order)]
    # Multiplying by 1/(1 - t^a) is a running sum with stride a.
    for a in f.denominator_factors:
        for e in range(a, order):
            coeffs[e] += coeffs[e - a]
    return coeffs


def anticanonical_hilbert_P11k(k: int) -> HilbertFraction:
    """Anti-canonical Hilbert series of ℙ(1,1,k) by the Veronese procedure."""
    if k < 1:
        raise ValueError("k must be positive")
    g = k + 2
    # 1/((1-s)^2 (1-s^k)) times (1-s^g)^2 (1-s^{kg}) is a polynomial.
    poly = product_one_minus([g, g, k * g])
    for a in (1, 1, k):
        poly = poly.div_one_minus(a)
    kept = {e // g: v for e, v in poly.terms.items() if e % g == 0}
    return HilbertFraction(IntPolynomial(kept), (1, 1, k))


def closed_form_numerator(k: int) -> IntPolynomial:
    """The printed even/odd closed form of the ℙ(1,1,k) numerator."""
    c = {0: 1, k + 1: 1}
    if k % 2 == 0:
        m = k // 2
        for i in range(1, k + 1):
            c[i] = k + 5 if i in (m, m + 1) else k + 4
    else:
        m = (k + 1) // 2
        for i in range(1, k + 1):
            c[i] = k + 6 if i == m else k + 4
    return IntPolynomial(c)


def blowup_contribution() -> HilbertFraction:
    return HilbertFraction(IntPolynomial({1: -1}), (1, 1, 1))


def cascade_bound_ok(k: int, l: int) -> bool:
    return l * k < (k + 2) ** 2


def cascade_numerator(k: int, l: int) -> IntPolynomial:
    """Numerator of the cascade series over (1-t)^2 (1-t^k)."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    if not cascade_bound_ok(k, l):
        raise DegreeNonPositive(f"l={l} >= (k+2)^2/k = {(k + 2) ** 2}/{k}: degree would be nonpositive")
    P = anticanonical_hilbert_P11k(k).numerator
    return P - IntPolynomial({i: l for i in range(1, k + 1)})


def cascade_hilbert(k: int, l: int) -> HilbertFraction:
    if not cascade_bound_ok(k, l):
        raise DegreeNonPositive(f"l={l} >= (k+2)^2/k = {(k + 2) ** 2}/{k}: degree would be nonpositive")
    H = anticanonical_hilbert_P11k(k)
    return (H + blowup_contribution().scale(l)).canonical()


def ci_hilbert(weights: Sequence[int], degrees: Sequence[int]) -> HilbertFraction:
    return HilbertFraction(product_one_minus(degrees), tuple(weights)).canonical()


# Printed numerators of the odd-k tables, kept verbatim for comparison.
def printed_odd_k3_numerator(m: int) -> IntPolynomial:
    k = 2 * m - 1
    return _sum_terms([(0, 1), (m + 1, -2), (k + 1, -3), (k + 2, 3), (3 * m, 2), (2 * k + 3, -1)])


def printed_odd_k2_numerator(m: int) -> IntPolynomial:
    k = 2 * m - 1
    return _sum_terms(
        [
            (0, 1), (2, -1), (m + 1, -4), (m + 2, 4), (k + 1, -4), (k + 2, 8), (k + 3, -4),
            (3 * m, 4), (m + 2, -4), (2 * k + 2, -1), (2 * k + 4, 1),
        ]
    )


def _sum_terms(terms: Iterable[tuple[int, int]]) -> IntPolynomial:
    c: Counter = Counter()
    for e, v in terms:
        c[e] += v
    return IntPolynomial(c)


def odd_denominator_k3(m: int) -> tuple[int, ...]:
    return (1, 1, 1, m, m, 2 * m - 1)


def odd_denominator_k2(m: int) -> tuple[int, ...]:
    return (1, 1, 1, 1, m, m, 2 * m - 1)


@dataclass(frozen=True)
class ModelIdentity:
    label: str
    k: int
    l: int
    weights: tuple[int, ...]
    degrees: tuple[int, ...]


def table_models(m: int) -> list[ModelIdentity]:
    """The four codimension <= 2 suggested models at a given m."""
    ke, ko = 2 * m, 2 * m - 1
    return [
        ModelIdentity("even k+4", ke, ke + 4, (1, 1, m, m + 1), (ke + 2,)),
        ModelIdentity("even k+3", ke, ke + 3, (1, 1, 1, m), (m + 2,)),
        ModelIdentity("even k+2", ke, ke + 2, (1, 1, 1, 1, m), (2, m + 1)),
        ModelIdentity("odd k+4", ko, ko + 4, (1, 1, m, m, ko), (ko + 1, ko + 1)),
    ]


def check_model(mi: ModelIdentity) -> bool:
    return fractions_equal(cascade_hilbert(mi.k, mi.l), ci_hilbert(mi.weights, mi.degrees))
