"""Histograms of windowed box counts and their distance to binomial/normal laws."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .curve import PlaneCurve, map_shards
from .errors import DomainError, UsageError
from .intervals import CyclicInterval
from .moments import window_counts


@dataclass(frozen=True)
class BoxCountHistogram:
    """counts[h] = #{x in F_p : the window (x, x+H] x J holds h points}."""

    p: int
    H: int
    N: int
    counts: tuple

    def __post_init__(self):
        if sum(self.counts) != self.p:
            raise UsageError("histogram mass must equal p")

    @property
    def mean_model(self) -> Fraction:
        return Fraction(self.H * self.N, self.p)

    @property
    def var_model(self) -> Fraction:
        P = Fraction(self.N, self.p)
        return self.H * P * (1 - P)


def box_count_histogram(C: PlaneCurve, H: int, J: CyclicInterval,
                        threads: int = 1, columns=None) -> BoxCountHistogram:
    p = C.p
    if not 1 <= H < p:
        raise UsageError(f"window length H must satisfy 1 <= H < p, got H={H}, p={p}")
    c = columns if columns is not None else C.column_counts(J, threads)
    top = H * max(c) if c else 0

    def work(lo, hi):
        part = [0] * (top + 1)
        for n in window_counts(c, H, lo, hi):
            part[n] += 1
        return part
    counts = [0] * (top + 1)
    for part in map_shards(work, p, threads):
        for h, v in enumerate(part):
            counts[h] += v
    # at least indices 0..H, trailing zeros beyond H dropped
    while len(counts) > H + 1 and counts[-1] == 0:
        counts.pop()
    counts += [0] * (H + 1 - len(counts))
    return BoxCountHistogram(p, H, J.length, tuple(counts))


def normal_cdf(z: float) -> float:
    """Standard normal CDF, written with erfc so both tails keep full accuracy."""
    return 0.5 * math.erfc(-z / math.sqrt(2.0))


def binomial_cdf(H: int, P: Fraction, h: int) -> Fraction:
    return sum((comb(H, j) * P**j * (1 - P)**(H - j) for j in range(min(h, H) + 1)),
               Fraction(0))


def ks_statistic(hist: BoxCountHistogram, model: str = "binomial") -> float:
    """max over h = 0..H of |empirical CDF(h) - model CDF(h)|.

    ``model`` is ``"binomial"`` (Binomial(H, N/p), exact) or ``"normal"``
    (mean HN/p, variance HN/p (1 - N/p), evaluated at h + 1/2).
    """
    p, H = hist.p, hist.H
    P = Fraction(hist.N, p)
    if model == "binomial":
        pmf = [comb(H, j) * P**j * (1 - P)**(H - j) for j in range(H + 1)]
        model_cdf = []
        acc = Fraction(0)
        for v in pmf:
            acc += v
            model_cdf.append(acc)
    elif model == "normal":
        var = hist.var_model
        if var <= 0:
            raise DomainError("normal model needs positive variance")
        mu, sd = float(hist.mean_model), math.sqrt(var)
        model_cdf = [normal_cdf((h + 0.5 - mu) / sd) for h in range(H + 1)]
    else:
        raise UsageError(f"unknown model {model!r}")
    worst = 0.0
    emp = 0
    for h in range(H + 1):
        emp += hist.counts[h]
        if model == "binomial":
            diff = float(Fraction(emp, p) - model_cdf[h])
        else:
            diff = emp / p - model_cdf[h]
        worst = max(worst, abs(diff))
    return worst


def moments_from_histogram(hist: BoxCountHistogram, kmax: int = 4):
    """{k: M_k(H)/p} for k = 1..kmax, central about HN/p."""
    mean = hist.mean_model
    p = hist.p
    return {k: sum((v * (h - mean) ** k for h, v in enumerate(hist.counts)),
                   Fraction(0)) / p
            for k in range(1, kmax + 1)}


@dataclass(frozen=True)
class DistributionReport:
    histogram: BoxCountHistogram
    mean_model: Fraction
    var_model: Fraction
    ks_vs_binomial: float
    ks_vs_normal: float
    sample_moments: dict


def distribution_report(C: PlaneCurve, H: int, J: CyclicInterval,
                        threads: int = 1) -> DistributionReport:
    hist = box_count_histogram(C, H, J, threads)
    ks_n = ks_statistic(hist, "normal") if hist.var_model > 0 else math.nan
    return DistributionReport(hist, hist.mean_model, hist.var_model,
                              ks_statistic(hist, "binomial"), ks_n,
                              moments_from_histogram(hist))
