"""Moments of windowed box counts and the binomial model they are compared to.

Everything that enters a comparison is an exact :class:`~fractions.Fraction`;
floats appear only in the error-scale bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .counting import count_in_rectangle
from .curve import PlaneCurve, check_condition_one, map_shards
from .errors import DomainError, UsageError
from .intervals import CyclicInterval, Rectangle
from .poly import _horner


@lru_cache(maxsize=None)
def _stirling_row(r: int):
    if r == 0:
        return (1,)
    prev = _stirling_row(r - 1) + (0,)
    return tuple((t * prev[t] if t else 0) + (prev[t - 1] if t else 0)
                 for t in range(r + 1))


def stirling2(r: int, t: int) -> int:
    """Stirling number of the second kind S(r, t)."""
    if r < 0 or t < 0:
        raise UsageError("stirling2 needs r, t >= 0")
    if t > r:
        return 0
    return _stirling_row(r)[t]


def _prob(P) -> Fraction:
    P = Fraction(P)
    if not 0 <= P <= 1:
        raise DomainError(f"probability {P} outside [0, 1]")
    return P


def binomial_moment_def(H: int, P, k: int) -> Fraction:
    """E[(X - HP)^k] for X ~ Binomial(H, P), summed over h = 0..H."""
    P = _prob(P)
    mean = H * P
    return sum((comb(H, h) * P**h * (1 - P)**(H - h) * (h - mean)**k
                for h in range(H + 1)), Fraction(0))


def binomial_moment_stirling(H: int, P, k: int) -> Fraction:
    """The same central moment through factorial moments and S(r, t) t!."""
    P = _prob(P)
    total = Fraction(0)
    for r in range(k + 1):
        inner = sum((comb(H, t) * stirling2(r, t) * math.factorial(t) * P**t
                     for t in range(r + 1)), Fraction(0))
        total += comb(k, r) * (-H * P) ** (k - r) * inner
    return total


def gaussian_nu(k: int) -> int:
    """(k-1)!! for even k, 0 for odd k; nu_0 = 1."""
    if k < 0:
        raise UsageError("gaussian_nu needs k >= 0")
    if k % 2:
        return 0
    out = 1
    for j in range(1, k, 2):
        out *= j
    return out


@dataclass(frozen=True)
class MomentSpec:
    k: int
    H: int
    J: CyclicInterval

    def __post_init__(self):
        if self.k < 1:
            raise UsageError(f"moment order k must be >= 1, got {self.k}")
        if self.H < 1:
            raise UsageError(f"window length H must be >= 1, got {self.H}")
        if self.H >= self.J.p:
            raise UsageError(f"window length H={self.H} must be < p={self.J.p}")

    @property
    def N(self) -> int:
        return self.J.length


def window_counts(columns, H: int, lo: int, hi: int):
    """Counts in the windows (x, x+H] for lo <= x < hi, updated incrementally."""
    p = len(columns)
    n = sum(columns[(lo + j) % p] for j in range(1, H + 1))
    for x in range(lo, hi):
        yield n
        n += columns[(x + H + 1) % p] - columns[(x + 1) % p]


def _check_H(H, p):
    if not 1 <= H < p:
        raise UsageError(f"window length H must satisfy 1 <= H < p, got H={H}, p={p}")


def empirical_moment(C: PlaneCurve, spec: MomentSpec, threads: int = 1,
                     columns=None) -> Fraction:
    """M_k(H) = sum over x in F_p of (N_{B_x} - HN/p)^k, B_x = (x, x+H] x J."""
    p = C.p
    _check_H(spec.H, p)
    c = columns if columns is not None else C.column_counts(spec.J, threads)
    k, HN = spec.k, spec.H * spec.N

    # (n - HN/p)^k = (p n - HN)^k / p^k keeps the sum in integers
    def work(lo, hi):
        return sum((p * n - HN) ** k for n in window_counts(c, spec.H, lo, hi))
    return Fraction(sum(map_shards(work, p, threads)), p ** k)


def naive_moment(C: PlaneCurve, spec: MomentSpec) -> Fraction:
    """M_k(H) recounting every window from scratch (reference path)."""
    p = C.p
    _check_H(spec.H, p)
    mean = Fraction(spec.H * spec.N, p)
    return sum(((count_in_rectangle(C, Rectangle(CyclicInterval.window_after(x, spec.H, p),
                                                 spec.J)) - mean) ** spec.k
                for x in range(p)), Fraction(0))


def moment_via_power_sums(C: PlaneCurve, spec: MomentSpec) -> Fraction:
    """M_k(H) through the power sums S_r(H) = sum_x N_{B_x}^r.

    S_0 = p; for r >= 1 the r-tuples of window columns are grouped by their
    set A of distinct offsets, each set contributing S(r, |A|) |A|! times the
    number of x with a point over every x + a, a in A. Column indicators come
    from evaluating f on the grid, so this path shares nothing with the
    sweep. Exact only when each column has at most one point in J; meant for
    small p.
    """
    p, H, k = C.p, spec.H, spec.k
    _check_H(H, p)
    J = spec.J
    hit = []
    for x in range(p):
        g = C.f.y_coefficients_at(x)
        ys = [y for y in J if _horner(g, y, p) == 0]
        if len(ys) > 1:
            raise DomainError(f"column x={x} has {len(ys)} points in J; "
                              "the power-sum expansion needs at most one")
        hit.append(len(ys))
    # bit x of shifted[a] is set when column x + a holds a point
    shifted = [0] * (H + 1)
    for a in range(1, H + 1):
        shifted[a] = sum(1 << x for x in range(p) if hit[(x + a) % p])
    # joint[t] = sum over |A| = t, A in [1, H], of #{x : hit[x + a] for all a in A}
    joint = [0] * (k + 1)
    everything = (1 << p) - 1
    for t in range(1, min(k, H) + 1):
        for A in combinations(range(1, H + 1), t):
            m = everything
            for a in A:
                m &= shifted[a]
            joint[t] += bin(m).count("1")
    S = [p]
    for r in range(1, k + 1):
        S.append(sum(stirling2(r, t) * math.factorial(t) * joint[t]
                     for t in range(1, min(r, H) + 1)))
    mean = Fraction(H * spec.N, p)
    return sum((comb(k, r) * (-mean) ** (k - r) * S[r] for r in range(k + 1)),
               Fraction(0))


def theorem3_bound(d: int, H: int, k: int, p: int) -> float:
    return d ** (2 * k) * H ** k * math.sqrt(p) * math.log(p) ** k


def cor3_bound(d: int, H: int, N: int, k: int, p: int) -> float:
    mean = H * N / p
    return p * mean ** (k / 2) + mean + theorem3_bound(d, H, k, p)


@dataclass(frozen=True)
class MomentReport:
    """M_k(H) against p * mu_k(H, N/p), the binomial model term."""

    p: int
    k: int
    H: int
    J: CyclicInterval
    M_k: Fraction
    model: Fraction
    defect: Fraction
    bound: float
    cor3_bound: float
    condition_one: bool

    @property
    def ratio(self) -> float:
        return float(self.defect) / self.bound


def moment_report(C: PlaneCurve, spec: MomentSpec, threads: int = 1,
                  require_condition_one: bool = False, columns=None) -> MomentReport:
    """Assemble M_k, the binomial model term and both error scales.

    With ``require_condition_one`` a column holding two points in J raises
    :class:`DomainError`; otherwise the verdict is recorded in the report.
    """
    p = C.p
    _check_H(spec.H, p)
    cond = check_condition_one(C, spec.J)
    if require_condition_one and not cond:
        raise DomainError(f"at most one y per x in J violated at x={cond.x}, "
                          f"y in {set(cond.ys)}")
    Mk = empirical_moment(C, spec, threads, columns)
    model = p * binomial_moment_def(spec.H, Fraction(spec.N, p), spec.k)
    return MomentReport(p, spec.k, spec.H, spec.J, Mk, model, abs(Mk - model),
                        theorem3_bound(C.d, spec.H, spec.k, p),
                        cor3_bound(C.d, spec.H, spec.N, spec.k, p), bool(cond))
