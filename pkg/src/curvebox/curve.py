"""Plane curves f(x, y) = 0 over F_p and their fibers under (x, y) -> x."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .errors import DomainError, UsageError
from .intervals import CyclicInterval
from .poly import (BivariatePoly, _value, distinct_roots, parse_poly,
                   root_multiplicity, substitute_x, univariate_roots)
from .prime_field import PrimeModulus

# a full per-x root table is kept in memory only up to this modulus
ROOT_TABLE_LIMIT = 200_000


def shard_ranges(n: int, shards: int):
    """Split range(n) into ``shards`` contiguous pieces, in order."""
    shards = max(1, min(shards, n)) if n else 1
    step, extra = divmod(n, shards)
    out, lo = [], 0
    for i in range(shards):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def map_shards(fn, n: int, threads: int = 1):
    """Apply fn(lo, hi) to contiguous shards of range(n); results in shard order."""
    ranges = shard_ranges(n, threads)
    if threads <= 1 or len(ranges) == 1:
        return [fn(lo, hi) for lo, hi in ranges]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda r: fn(*r), ranges))


class PlaneCurve:
    """The affine curve f(x, y) = 0.

    The caller asserts absolute irreducibility; nothing here certifies it.
    """

    def __init__(self, f: BivariatePoly, name: Optional[str] = None):
        if f.y_degree < 1:
            raise DomainError("curve equation must involve y (y-degree >= 1)")
        self.f = f
        self.name = name or f.to_text()
        self._roots = None

    @classmethod
    def parse(cls, text: str, p, name=None) -> "PlaneCurve":
        return cls(parse_poly(text, p), name=name)

    @property
    def modulus(self) -> PrimeModulus:
        return self.f.modulus

    @property
    def p(self) -> int:
        return self.f.modulus.p

    @property
    def d(self) -> int:
        return self.f.total_degree

    degree = d

    @property
    def y_degree(self) -> int:
        return self.f.y_degree

    def __repr__(self):
        return f"PlaneCurve({self.name!r}, p={self.p})"

    def fiber_roots(self, x0: int):
        """Sorted distinct y with f(x0, y) = 0."""
        if self._roots is not None:
            return self._roots[x0 % self.p]
        return self._compute_roots(x0 % self.p)

    def _compute_roots(self, x0: int):
        try:
            return tuple(distinct_roots(self.f.y_coefficients_at(x0), self.p))
        except DomainError:
            raise DomainError(
                f"vertical line component: f({x0}, y) vanishes identically") from None

    def root_table(self, threads: int = 1):
        """Roots of every fiber, indexed by x; cached on the curve."""
        if self._roots is None:
            def work(lo, hi):
                return [self._compute_roots(x) for x in range(lo, hi)]
            table = []
            for part in map_shards(work, self.p, threads):
                table.extend(part)
            self._roots = table
        return self._roots

    def column_counts(self, J: CyclicInterval, threads: int = 1):
        """List c with c[x] = #{y in J : f(x, y) = 0} for every x in F_p."""
        p = self.p
        if J.p != p:
            raise UsageError("interval modulus differs from the curve's")
        if J.length == 0:
            return [0] * p
        if self._roots is None and p <= ROOT_TABLE_LIMIT:
            self.root_table(threads)
        s, n = J.start, J.length
        if self._roots is not None:
            roots = self._roots

            def work(lo, hi):
                return [sum(1 for y in roots[x] if (y - s) % p < n)
                        for x in range(lo, hi)]
        else:
            def work(lo, hi):
                return [sum(1 for y in self._compute_roots(x) if (y - s) % p < n)
                        for x in range(lo, hi)]
        out = []
        for part in map_shards(work, p, threads):
            out.extend(part)
        return out


def fiber_count(C: PlaneCurve, x0, J: CyclicInterval) -> int:
    """Number of y in J with f(x0, y) = 0."""
    x0 = _value(x0, C.modulus)
    return sum(1 for y in C.fiber_roots(x0) if y in J)


@dataclass
class RamificationReport:
    ramified_x: list
    searched: str = "F_p only"

    def __bool__(self):
        return bool(self.ramified_x)


def find_completely_ramified(C: PlaneCurve) -> RamificationReport:
    """All x0 in F_p whose fiber is a single point of full multiplicity.

    Points in extensions of F_p are not searched, so an empty report does
    not rule out the hypothesis.
    """
    n = C.y_degree
    p = C.p
    found = []
    for x0 in range(p):
        g = C.f.y_coefficients_at(x0)
        if len(g) - 1 != n:
            continue
        if n == 1:
            found.append(C.modulus.element(x0))
            continue
        roots = C.fiber_roots(x0)
        if len(roots) == 1 and root_multiplicity(g, roots[0], p) == n:
            found.append(C.modulus.element(x0))
    return RamificationReport(found)


@dataclass
class ConditionOneResult:
    """Outcome of the at-most-one-y-per-x check; falsy on violation."""

    holds: bool
    x: Optional[int] = None
    ys: tuple = field(default_factory=tuple)

    def __bool__(self):
        return self.holds


def check_condition_one(C: PlaneCurve, J: CyclicInterval) -> ConditionOneResult:
    for x in range(C.p):
        ys = [y for y in C.fiber_roots(x) if y in J]
        if len(ys) > 1:
            return ConditionOneResult(False, x, tuple(ys[:2]))
    return ConditionOneResult(True)


def enumerate_points(C: PlaneCurve, threads: int = 1) -> int:
    """N(C), the number of affine F_p-points, via fiber root finding."""
    return sum(C.column_counts(CyclicInterval.full(C.p), threads))


def iter_points(C: PlaneCurve):
    """Yield every point (x, y) of C, ordered by x then y."""
    for x in range(C.p):
        for y in C.fiber_roots(x):
            yield x, y


def enumerate_points_scan(C: PlaneCurve) -> int:
    """N(C) by testing all p^2 cells; a cross-check for small p only."""
    if C.p > 1000:
        raise UsageError("full-plane scan is only meant for p <= 1000")
    p = C.p
    total = 0
    for x in range(p):
        g = C.f.y_coefficients_at(x)
        if not g:
            raise DomainError(f"vertical line component: f({x}, y) vanishes identically")
        total += sum(1 for y in range(p) if _horner_int(g, y, p) == 0)
    return total


def _horner_int(c, y, p):
    acc = 0
    for a in reversed(c):
        acc = (acc * y + a) % p
    return acc


def fiber_multiset(C: PlaneCurve, x0):
    """Roots of f(x0, y) with multiplicities, as FieldElements."""
    return univariate_roots(substitute_x(C.f, x0))
