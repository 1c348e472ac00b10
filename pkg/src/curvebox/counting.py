"""Box counts N_B(C), (a,b)-pattern counts and the x-shifted space curve."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .curve import ROOT_TABLE_LIMIT, PlaneCurve, map_shards
from .errors import DomainError, UsageError
from .intervals import CyclicInterval, Rectangle
from .poly import distinct_roots, shift_substitute
from .prime_field import inverse_mod


@dataclass(frozen=True)
class PatternSpec:
    """Vectors a, b defining (a,b)-patterns: points at x-coordinates a_i x + b_i.

    Every a_i must be a unit and the ratios a_i^{-1} b_i pairwise distinct.
    """

    a: tuple
    b: tuple
    p: int

    def __post_init__(self):
        a = tuple(int(v) % self.p for v in self.a)
        b = tuple(int(v) % self.p for v in self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if len(a) != len(b) or not a:
            raise UsageError("a and b must be nonempty and of equal length")
        if any(v == 0 for v in a):
            raise DomainError("every a_i must be coprime to p (nonzero mod p)")
        ratios = self.ratios()
        if len(set(ratios)) != len(ratios):
            raise DomainError("distinctness of a_i^{-1} b_i violated")

    @property
    def s(self) -> int:
        return len(self.a)

    def ratios(self):
        p = self.p
        return [inverse_mod(ai, p) * bi % p for ai, bi in zip(self.a, self.b)]

    @classmethod
    def parse(cls, a_text: str, b_text: str, p: int) -> "PatternSpec":
        try:
            a = [int(v) for v in a_text.split(";")]
            b = [int(v) for v in b_text.split(";")]
        except ValueError as exc:
            raise UsageError(f"bad pattern vectors {a_text!r}, {b_text!r}") from exc
        return cls(tuple(a), tuple(b), p)

    def a_text(self):
        return ";".join(map(str, self.a))

    def b_text(self):
        return ";".join(map(str, self.b))


@dataclass(frozen=True)
class ShiftedCurve:
    """The space curve f(a_i x + b_i, y_i) = 0, i = 1..s, in s + 1 variables."""

    base: PlaneCurve
    spec: PatternSpec
    equations: tuple

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def degree_bound(self) -> int:
        return self.base.d ** self.spec.s


def count_in_rectangle(C: PlaneCurve, B: Rectangle, threads: int = 1) -> int:
    if B.I.p != C.p:
        raise UsageError("rectangle modulus differs from the curve's")
    if B.I.length == 0 or B.J.length == 0:
        return 0
    p = C.p
    if p <= ROOT_TABLE_LIMIT:
        C.root_table(threads)
    xs = list(B.I)
    s, n = B.J.start, B.J.length

    def work(lo, hi):
        return sum(1 for i in range(lo, hi) for y in C.fiber_roots(xs[i])
                   if (y - s) % p < n)
    return sum(map_shards(work, len(xs), threads))


def build_shifted_curve(C: PlaneCurve, spec: PatternSpec) -> ShiftedCurve:
    if spec.p != C.p:
        raise UsageError("pattern spec modulus differs from the curve's")
    eqs = tuple(shift_substitute(C.f, a, b, i + 1)
                for i, (a, b) in enumerate(zip(spec.a, spec.b)))
    return ShiftedCurve(C, spec, eqs)


def count_patterns(C: PlaneCurve, spec: PatternSpec, I: CyclicInterval,
                   J: CyclicInterval, threads: int = 1, columns=None) -> int:
    """P(I, J): tuples of points at x-coordinates a_i x + b_i, x in I, every y in J.

    Fiber counts are multiplied, so the count is exact whether or not each
    column has at most one point in J. ``columns`` may carry a precomputed
    ``C.column_counts(J)``.
    """
    if spec.p != C.p or I.p != C.p or J.p != C.p:
        raise UsageError("pattern spec or interval modulus differs from the curve's")
    if I.length == 0:
        return 0
    p = C.p
    c = columns if columns is not None else C.column_counts(J, threads)
    pairs = list(zip(spec.a, spec.b))
    xs = list(I)

    def work(lo, hi):
        total = 0
        for idx in range(lo, hi):
            x = xs[idx]
            prod = 1
            for a, b in pairs:
                prod *= c[(a * x + b) % p]
                if not prod:
                    break
            total += prod
        return total
    return sum(map_shards(work, len(xs), threads))


def count_shifted_points(S: ShiftedCurve, I: CyclicInterval, J, threads: int = 1) -> int:
    """N_B(C_{a,b}) for B = I x J_1 x ... x J_s.

    ``J`` is one interval used for every y_i, or a sequence of s intervals.
    Each equation is specialised at x and solved on its own; nothing is
    shared with :func:`count_patterns`.
    """
    Js = _expand_J(J, S.spec.s)
    if I.length == 0:
        return 0
    p = S.p
    xs = list(I)

    def work(lo, hi):
        total = 0
        for idx in range(lo, hi):
            x = xs[idx]
            prod = 1
            for eq, Ji in zip(S.equations, Js):
                g = eq.y_coefficients_at(x)
                if not g:
                    raise DomainError(
                        f"vertical line component: {eq} vanishes at x = {x}")
                prod *= sum(1 for y in distinct_roots(g, p) if y in Ji)
                if not prod:
                    break
            total += prod
        return total
    return sum(map_shards(work, len(xs), threads))


def _expand_J(J, s):
    if isinstance(J, CyclicInterval):
        return [J] * s
    Js = list(J)
    if len(Js) != s:
        raise UsageError(f"expected {s} y-intervals, got {len(Js)}")
    return Js


@dataclass(frozen=True)
class PatternDefect:
    count: int
    main_term: Fraction
    defect: Fraction
    bound: float

    @property
    def ratio(self) -> float:
        return float(self.defect) / self.bound if self.bound else math.inf


def pattern_bound(d: int, s: int, p: int, full_I: bool) -> float:
    e = s if full_I else s + 1
    return d ** (2 * s) * math.sqrt(p) * math.log(p) ** e


def main_term_defect(C: PlaneCurve, spec: PatternSpec, I: CyclicInterval,
                     J: CyclicInterval, threads: int = 1, columns=None) -> PatternDefect:
    """Compare P(I, J) with |I| (|J|/p)^s and the error scale d^{2s} sqrt(p) log^{s+1} p.

    For I = F_p the log exponent drops to s.
    """
    count = count_patterns(C, spec, I, J, threads, columns)
    main = I.length * Fraction(J.length, C.p) ** spec.s
    return PatternDefect(count, main, abs(count - main),
                         pattern_bound(C.d, spec.s, C.p, I.is_full))
