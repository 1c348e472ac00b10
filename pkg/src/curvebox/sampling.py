"""Seeded generators for curves, pattern specs and boxes."""

from __future__ import annotations

import random

from .counting import PatternSpec
from .curve import PlaneCurve
from .errors import DomainError, UsageError
from .intervals import CyclicInterval, Rectangle
from .poly import BivariatePoly


def make_rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_interval(rng, p: int, min_length: int = 0, max_length=None) -> CyclicInterval:
    hi = p if max_length is None else max_length
    if not 0 <= min_length <= hi <= p:
        raise UsageError(f"no interval length in [{min_length}, {hi}] for p={p}")
    return CyclicInterval(rng.randrange(p), rng.randint(min_length, hi), p)


def random_rectangle(rng, p: int, min_length: int = 0) -> Rectangle:
    return Rectangle(random_interval(rng, p, min_length),
                     random_interval(rng, p, min_length))


def random_pattern_spec(rng, p: int, s: int) -> PatternSpec:
    """A PatternSpec of length s with distinct ratios, by rejection sampling."""
    if not 1 <= s <= p:
        raise UsageError(f"need 1 <= s <= p for distinct ratios, got s={s}, p={p}")
    while True:
        a = [rng.randrange(1, p) for _ in range(s)]
        b = [rng.randrange(p) for _ in range(s)]
        try:
            return PatternSpec(tuple(a), tuple(b), p)
        except DomainError:
            continue


def random_curve(rng, p: int, d: int, max_tries: int = 1000) -> PlaneCurve:
    """A curve of total degree d whose fibers never vanish identically.

    Nothing checks irreducibility; random curves suit exact identities,
    not the asymptotic estimates.
    """
    if d < 1:
        raise UsageError("degree must be >= 1")
    monomials = [(i, j) for i in range(d + 1) for j in range(d + 1 - i)]
    for _ in range(max_tries):
        coeffs = {m: rng.randrange(p) for m in monomials if rng.random() < 0.6}
        # pin a pure y^d-ish term so y really occurs at full degree
        j = rng.randint(1, d)
        coeffs[(d - j, j)] = rng.randrange(1, p)
        f = BivariatePoly(p, coeffs)
        if f.total_degree != d:
            continue
        C = PlaneCurve(f)
        if all(f.y_coefficients_at(x) for x in range(p)):
            return C
    raise UsageError(f"could not sample a degree-{d} curve over F_{p}")
