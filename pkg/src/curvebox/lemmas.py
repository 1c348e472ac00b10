"""Numerical checks of the supporting lemmas: box-count defects and translates."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .counting import ShiftedCurve, count_in_rectangle, count_shifted_points
from .curve import PlaneCurve, map_shards
from .errors import UsageError
from .intervals import Rectangle
from .prime_field import is_prime

# trials per random stream; fixed so results do not depend on thread count
TRIAL_CHUNK = 1000


@dataclass(frozen=True)
class DefectRecord:
    count: int
    main_term: Fraction
    defect: Fraction
    bound: float
    ratio: float
    t: int


def weil_defect(obj, box, threads: int = 1) -> DefectRecord:
    """Count on a plane or shifted curve in a box against p * vol(B) / p^r.

    The bound is deg^2 sqrt(p) log^t p with t the number of non-full sides;
    for a shifted curve deg is the bound d^s on its degree.
    """
    box = tuple(box)
    if isinstance(obj, PlaneCurve):
        r, deg = 2, obj.d
        if len(box) != 2:
            raise UsageError(f"a plane curve needs a 2-dimensional box, got {len(box)}")
        count = count_in_rectangle(obj, Rectangle(*box), threads)
    elif isinstance(obj, ShiftedCurve):
        r, deg = obj.spec.s + 1, obj.degree_bound
        if len(box) != r:
            raise UsageError(f"a shifted curve with s={obj.spec.s} needs a "
                             f"{r}-dimensional box, got {len(box)}")
        count = count_shifted_points(obj, box[0], box[1:], threads)
    else:
        raise UsageError(f"cannot count points on {type(obj).__name__}")
    p = obj.p
    vol = math.prod(iv.length for iv in box)
    main = Fraction(p * vol, p ** r)
    t = sum(1 for iv in box if not iv.is_full)
    bound = deg ** 2 * math.sqrt(p) * math.log(p) ** t
    defect = abs(count - main)
    return DefectRecord(count, main, defect, bound, float(defect) / bound, t)


def translate_escapes(M, xs, p: int) -> bool:
    """True if some translate M + x_j is not covered by the other translates."""
    shifted = [{(m + x) % p for m in M} for x in xs]
    for j, Sj in enumerate(shifted):
        others = set().union(*(S for i, S in enumerate(shifted) if i != j))
        if not Sj <= others:
            return True
    return False


@dataclass(frozen=True)
class TranslateCounterexample:
    trial: int
    xs: tuple
    M: tuple


def _chunk_rng(seed, chunk: int) -> random.Random:
    return random.Random(f"translate:{seed}:{chunk}")


def translate_lemma_search(p: int, r: int, m_max: int, trials: int, seed=0,
                           threads: int = 1):
    """Random search for r distinct shifts and a set M in F_p, |M| <= m_max,
    where every translate M + x_j is covered by the others.

    Requires 4 m_max < p^(1/r); a nonempty result means a bug.
    """
    if not (isinstance(p, int) and p >= 3 and is_prime(p)):
        raise UsageError(f"p must be an odd prime, got {p}")
    if r < 2:
        raise UsageError("r must be >= 2")
    if m_max < 1 or trials < 0:
        raise UsageError("need m_max >= 1 and trials >= 0")
    if (4 * m_max) ** r >= p:
        raise UsageError(f"hypothesis 4*m_max < p^(1/r) fails: "
                         f"4*{m_max} >= {p}^(1/{r})")
    if r > p:
        raise UsageError("cannot pick r distinct shifts when r > p")
    n_chunks = -(-trials // TRIAL_CHUNK)

    def run_chunks(lo, hi):
        found = []
        for chunk in range(lo, hi):
            rng = _chunk_rng(seed, chunk)
            first = chunk * TRIAL_CHUNK
            for trial in range(first, min(first + TRIAL_CHUNK, trials)):
                xs = rng.sample(range(p), r)
                M = rng.sample(range(p), rng.randint(1, m_max))
                if not translate_escapes(M, xs, p):
                    found.append(TranslateCounterexample(trial, tuple(xs),
                                                         tuple(sorted(M))))
        return found
    out = []
    for part in map_shards(run_chunks, n_chunks, threads):
        out.extend(part)
    return out
