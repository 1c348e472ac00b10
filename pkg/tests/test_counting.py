import itertools
import random
from fractions import Fraction

import pytest

from curvebox import (CyclicInterval, DomainError, PatternSpec, PlaneCurve, Rectangle,
                      UsageError, build_shifted_curve, check_condition_one,
                      count_in_rectangle, count_patterns, count_shifted_points,
                      enumerate_points, main_term_defect)
from curvebox.sampling import random_curve, random_interval, random_pattern_spec

CI = CyclicInterval


def brute_patterns(text, p, spec, I, J):
    C = PlaneCurve.parse(text, p)
    pts = {(x, y) for x in range(p) for y in range(p)
           if sum(c * x**i * y**j for (i, j), c in C.f.coeffs.items()) % p == 0}
    count = 0
    for x in I:
        for ys in itertools.product(J, repeat=spec.s):
            if all(((a * x + b) % p, y) in pts for a, b, y in zip(spec.a, spec.b, ys)):
                count += 1
    return count


def test_rectangle_examples(hyperbola7):
    assert count_in_rectangle(hyperbola7, Rectangle(CI.full(7), CI.full(7))) == 6
    assert count_in_rectangle(hyperbola7, Rectangle(CI(1, 3, 7), CI(1, 3, 7))) == 1
    assert count_in_rectangle(hyperbola7, Rectangle(CI(3, 0, 7), CI.full(7))) == 0


def test_shifted_curve_examples(hyperbola7):
    S = build_shifted_curve(hyperbola7, PatternSpec((1,), (0,), 7))
    assert [e.to_text() for e in S.equations] == ["x*y1 + 6"]
    S = build_shifted_curve(hyperbola7, PatternSpec((1, 1), (0, 1), 7))
    assert [e.to_text() for e in S.equations] == ["x*y1 + 6", "x*y2 + y2 + 6"]
    with pytest.raises(DomainError, match="distinctness"):
        PatternSpec((1, 2), (0, 0), 7)
    with pytest.raises(DomainError):
        PatternSpec((0, 1), (1, 2), 7)


def test_pattern_examples(hyperbola7):
    full = CI.full(7)
    one = PatternSpec((1,), (0,), 7)
    two = PatternSpec((1, 1), (0, 1), 7)
    assert count_patterns(hyperbola7, one, full, full) == enumerate_points(hyperbola7) == 6
    assert count_patterns(hyperbola7, two, full, full) == 5
    assert brute_patterns("x*y - 1", 7, two, full, full) == 5
    assert count_patterns(hyperbola7, one, full, CI(1, 3, 7)) == 3
    for spec, J in ((one, full), (two, full), (one, CI(1, 3, 7))):
        S = build_shifted_curve(hyperbola7, spec)
        assert count_shifted_points(S, full, J) == count_patterns(hyperbola7, spec, full, J)
    assert count_shifted_points(build_shifted_curve(hyperbola7, one), CI(2, 0, 7), full) == 0


def test_shifted_s1_is_rectangle_count(elliptic7):
    S = build_shifted_curve(elliptic7, PatternSpec((1,), (0,), 7))
    for I in (CI(0, 7, 7), CI(5, 4, 7), CI(2, 1, 7)):
        for J in (CI(0, 4, 7), CI(6, 3, 7)):
            assert count_shifted_points(S, I, J) == count_in_rectangle(elliptic7, Rectangle(I, J))


def test_defect_examples(hyperbola7):
    full = CI.full(7)
    r = main_term_defect(hyperbola7, PatternSpec((1,), (0,), 7), full, full)
    assert (r.count, r.main_term, r.defect) == (6, 7, 1)
    r = main_term_defect(hyperbola7, PatternSpec((1, 1), (0, 1), 7), full, full)
    assert r.defect == 2
    r = main_term_defect(hyperbola7, PatternSpec((2, 3, 1), (1, 1, 6), 7), full, full)
    assert r.main_term == 7 and r.defect == abs(r.count - 7)


def test_defect_bound_exponents():
    import math
    C = PlaneCurve.parse("x*y - 1", 101)
    spec = PatternSpec((1, 1), (0, 1), 101)
    full = main_term_defect(C, spec, CI.full(101), CI(0, 50, 101))
    part = main_term_defect(C, spec, CI(0, 50, 101), CI(0, 50, 101))
    assert full.bound == pytest.approx(2**4 * math.sqrt(101) * math.log(101) ** 2)
    assert part.bound == pytest.approx(2**4 * math.sqrt(101) * math.log(101) ** 3)
    assert part.main_term == 50 * Fraction(50, 101) ** 2


@pytest.mark.parametrize("p", [7, 11])
def test_patterns_match_tuple_enumeration(p):
    rng = random.Random(p)
    for text in ("x*y - 1", "y^2 - x^3 - x", "y - x^2"):
        C = PlaneCurve.parse(text, p)
        for _ in range(15):
            s = rng.randint(1, 3)
            spec = random_pattern_spec(rng, p, s)
            I, J = random_interval(rng, p), random_interval(rng, p)
            assert count_patterns(C, spec, I, J) == brute_patterns(text, p, spec, I, J)


def test_monotone_in_intervals():
    p = 31
    rng = random.Random(3)
    C = PlaneCurve.parse("y^2 - x^3 - x", p)
    for _ in range(40):
        spec = random_pattern_spec(rng, p, rng.randint(1, 3))
        I, J = random_interval(rng, p, 0, p - 1), random_interval(rng, p, 0, p - 1)
        base = count_patterns(C, spec, I, J)
        bigger_I = CI(I.start, I.length + 1, p)
        bigger_J = CI((J.start - 1) % p, J.length + 1, p)
        assert count_patterns(C, spec, bigger_I, J) >= base
        assert count_patterns(C, spec, I, bigger_J) >= base


def test_additive_over_partitions():
    p = 101
    rng = random.Random(4)
    C = PlaneCurve.parse("y^2 - x^3 - x", p)
    for _ in range(30):
        I, J = random_interval(rng, p), random_interval(rng, p)
        left, right = I.split(rng.randint(0, I.length))
        whole = count_in_rectangle(C, Rectangle(I, J))
        assert whole == (count_in_rectangle(C, Rectangle(left, J))
                         + count_in_rectangle(C, Rectangle(right, J)))


def test_condition_one_caps_patterns():
    p = 101
    rng = random.Random(8)
    C = PlaneCurve.parse("y^2 - x^3 - x", p)
    J = CI(1, 50, p)
    assert check_condition_one(C, J)
    for _ in range(20):
        I = random_interval(rng, p)
        assert count_patterns(C, random_pattern_spec(rng, p, 3), I, J) <= I.length


@pytest.mark.parametrize("p", [7, 31, 101])
def test_full_plane_consistency(p):
    rng = random.Random(p)
    for C in [PlaneCurve.parse("y^2 - x^3 - x", p), random_curve(rng, p, 3)]:
        assert count_in_rectangle(C, Rectangle(CI.full(p), CI.full(p))) == enumerate_points(C)


def test_multi_interval_shifted_box():
    p = 31
    C = PlaneCurve.parse("y^2 - x^3 - x", p)
    spec = PatternSpec((1, 3), (0, 2), p)
    S = build_shifted_curve(C, spec)
    I, J1, J2 = CI(3, 20, p), CI(0, 16, p), CI(10, 9, p)
    expect = 0
    for x in I:
        n1 = sum(1 for y in J1 if (y * y - x**3 - x) % p == 0)
        x2 = (3 * x + 2) % p
        n2 = sum(1 for y in J2 if (y * y - x2**3 - x2) % p == 0)
        expect += n1 * n2
    assert count_shifted_points(S, I, [J1, J2]) == expect
    with pytest.raises(UsageError):
        count_shifted_points(S, I, [J1])


def test_threads_agree():
    p = 1009
    C = PlaneCurve.parse("y^2 - x^3 - x", p)
    spec = PatternSpec((1, 2), (0, 5), p)
    I, J = CI(17, 800, p), CI(3, 400, p)
    assert count_patterns(C, spec, I, J, threads=1) == count_patterns(C, spec, I, J, threads=8)
    S = build_shifted_curve(C, spec)
    assert count_shifted_points(S, I, J, threads=3) == count_patterns(C, spec, I, J)
