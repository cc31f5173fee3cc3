"""Exhaustive enumeration of curve classes in blow-ups of the plane.

A candidate class is ``a*h - b_1*e_1 - ... - b_N*e_N`` with the exceptional
coefficients kept as a sorted non-increasing tuple, so each multiset of
coefficients appears exactly once.  For a rational cuspidal curve in this
class whose two cusps are of types T(p,p+1) and T(2,3), the adjunction
formula rearranges to

    a^2 - sum(b_i^2) = p^2 - p + (3a - sum(b_i)),

and a genus-g curve adds ``2g`` to the right-hand side.  Searches keep all
adjunction solutions in range and annotate each with the positivity
constraints coming from lines and conics through blown-up points (with the
sentinel coefficients b_{N+1} = p and b_{N+2} = 2) and with the
self-intersection cap ``a^2 - sum(b_i^2) <= p^2 + 9`` for curves with a
simple cusp.

All arithmetic is exact; enumeration bounds are explicit so completeness is
auditable: positivity forces 0 <= b_i <= a for any solution with a > 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class SearchError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CurveClass:
    a: int
    b: tuple[int, ...] = ()

    def __post_init__(self):
        if self.a < 0 or any(x < 0 for x in self.b):
            raise SearchError("coefficients must be non-negative")
        if list(self.b) != sorted(self.b, reverse=True):
            object.__setattr__(self, "b", tuple(sorted(self.b, reverse=True)))

    @property
    def self_intersection(self) -> int:
        return self.a * self.a - sum(x * x for x in self.b)

    def __str__(self) -> str:
        return f"({self.a}; {', '.join(map(str, self.b)) or '-'})"


def adjunction_rational(p: int, c: CurveClass) -> bool:
    """Adjunction for a rational curve with T(p,p+1) and T(2,3) cusps."""
    if p < 2:
        raise SearchError("need p >= 2")
    lhs = c.a * c.a - sum(x * x for x in c.b)
    rhs = p * p - p + (3 * c.a - sum(c.b))
    return lhs == rhs


def adjunction_at_genus(p: int, c: CurveClass, genus: int) -> bool:
    """Same constraint for a genus-g curve with the same two cusps."""
    if p < 2:
        raise SearchError("need p >= 2")
    if genus < 0:
        raise SearchError("genus must be >= 0")
    lhs = c.a * c.a - sum(x * x for x in c.b)
    rhs = p * p - p + (3 * c.a - sum(c.b)) + 2 * genus
    return lhs == rhs


def class_genus(c: CurveClass, sing_genus_sum: int) -> int:
    """Smooth genus of a curve in class c whose cusps contribute the given genus."""
    return (
        (c.a - 1) * (c.a - 2) // 2
        - sum(x * (x - 1) // 2 for x in c.b)
        - sing_genus_sum
    )


@dataclass(frozen=True)
class GromovDetail:
    line_with_cusp: bool     # a >= b_1 + p
    line_two_points: bool    # a >= b_1 + b_2
    conic_with_cusp: bool    # 2a >= b_1 + b_2 + b_3 + b_4 + p
    conic_five_points: bool  # 2a >= b_1 + ... + b_5
    all_permuted: bool       # with sentinels appended and re-sorted

    @property
    def passes(self) -> bool:
        return (self.line_with_cusp and self.line_two_points
                and self.conic_with_cusp and self.conic_five_points
                and self.all_permuted)


def gromov_constraints(p: int, c: CurveClass) -> GromovDetail:
    """Positivity against rational curves of degree 1 and 2.

    Sentinel coefficients b_{N+1} = p and b_{N+2} = 2 stand for the two
    cusps; appending them before sorting covers every index-permuted variant
    of the named inequalities.
    """
    if p < 2:
        raise SearchError("need p >= 2")
    a = c.a
    b = list(c.b) + [0] * max(0, 5 - len(c.b))
    ext = sorted(list(c.b) + [p, 2], reverse=True) + [0] * 5
    return GromovDetail(
        line_with_cusp=a >= b[0] + p,
        line_two_points=a >= b[0] + b[1],
        conic_with_cusp=2 * a >= b[0] + b[1] + b[2] + b[3] + p,
        conic_five_points=2 * a >= sum(b[:5]),
        all_permuted=(a >= ext[0] + ext[1]) and (2 * a >= sum(ext[:5])),
    )


def ohta_ono_filter(p: int, c: CurveClass) -> bool:
    """True iff the self-intersection cap p^2 + 9 is respected.

    Rational cuspidal curves with a simple cusp cannot have self-intersection
    above 9 after the T(p,p+1) point is blown down, so violators are
    impossible classes.
    """
    if p < 2:
        raise SearchError("need p >= 2")
    return c.self_intersection <= p * p + 9


@dataclass(frozen=True)
class Annotated:
    cls: CurveClass
    gromov: GromovDetail
    ohta_ono: bool

    @property
    def survives(self) -> bool:
        return self.gromov.passes and self.ohta_ono


@dataclass(frozen=True)
class SearchReport:
    p: int
    blowups: int
    genus: int
    a_min: int
    a_max: int
    solutions: tuple[Annotated, ...]

    @property
    def classes(self) -> list[CurveClass]:
        return [s.cls for s in self.solutions]

    @property
    def surviving(self) -> list[CurveClass]:
        return [s.cls for s in self.solutions if s.survives]


def _descending_tuples(n: int, hi: int, budget: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing n-tuples with entries in [0, hi] and
    sum of b*(b-1) equal to the budget."""
    if n == 0:
        if budget == 0:
            yield ()
        return
    # entries below are at most `first`, so the most this level can still
    # consume is n * first*(first-1)
    for first in range(min(hi, budget + 1), -1, -1):
        w = first * (first - 1)
        rest = budget - w
        if rest < 0:
            continue
        if rest > (n - 1) * w:
            break  # smaller entries cannot make up the remainder
        for tail in _descending_tuples(n - 1, first, rest):
            yield (first,) + tail


def search(p: int, blowups: int, a_min: int, a_max: int, genus: int = 0,
           cap: int = 10_000_000) -> SearchReport:
    """Enumerate all adjunction solutions in range and annotate them.

    The budget form of the constraint is ``sum b_i(b_i - 1) = a^2 - 3a -
    (p^2 - p) - 2*genus``, so the inner enumeration walks non-increasing
    tuples with exact pruning.  Output order is lexicographic on (a, b);
    results are independent of enumeration order and chunking.
    """
    if p < 2:
        raise SearchError("need p >= 2")
    if blowups < 0 or genus < 0 or a_min < 0 or a_max < a_min:
        raise SearchError("bad search parameters")
    est = (a_max - a_min + 1) * (a_max + 1) ** min(blowups, 3)
    if est > cap:
        raise SearchError(f"enumeration estimate {est} exceeds cap {cap}")
    found: list[Annotated] = []
    for a in range(a_min, a_max + 1):
        budget = a * a - 3 * a - (p * p - p) - 2 * genus
        if budget < 0:
            continue
        for b in _descending_tuples(blowups, a, budget):
            cls = CurveClass(a, b)
            assert adjunction_at_genus(p, cls, genus)
            found.append(
                Annotated(cls, gromov_constraints(p, cls), ohta_ono_filter(p, cls))
            )
    found.sort(key=lambda s: (s.cls.a, tuple(-x for x in s.cls.b)))
    return SearchReport(p, blowups, genus, a_min, a_max, tuple(found))


def brute_force_solutions(p: int, blowups: int, a_min: int, a_max: int,
                          genus: int = 0) -> list[CurveClass]:
    """Naive nested-loop oracle over all unsorted tuples; for cross-checks."""
    out = set()

    def rec(a, prefix, n):
        if n == 0:
            cls = CurveClass(a, tuple(prefix))
            if adjunction_at_genus(p, cls, genus):
                out.add(cls)
            return
        for v in range(0, a + 1):
            rec(a, prefix + [v], n - 1)

    for a in range(a_min, a_max + 1):
        rec(a, [], blowups)
    return sorted(out, key=lambda c: (c.a, tuple(-x for x in c.b)))


@dataclass(frozen=True)
class TriangularDifferences:
    g: int
    pairs: tuple[tuple[int, int], ...]
    self_pairs: bool = False  # g = 0: every (m, m) works; list is truncated


def triangular_difference(g: int) -> TriangularDifferences:
    """All ways to write g as a difference of triangular numbers.

    Consecutive triangular numbers t(t+1)/2 differ by t+1, so any solution
    with larger index t has t <= g; the enumeration below is complete.
    """
    if g < 0:
        raise SearchError("need g >= 0")
    tri = lambda t: t * (t + 1) // 2
    if g == 0:
        return TriangularDifferences(
            0, tuple((tri(t), tri(t)) for t in range(5)), self_pairs=True
        )
    pairs = []
    for t in range(1, g + 1):
        for s in range(t):
            if tri(t) - tri(s) == g:
                pairs.append((tri(t), tri(s)))
    return TriangularDifferences(g, tuple(sorted(pairs)))
