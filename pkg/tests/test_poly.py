import random

import pytest
from hypothesis import given, settings, strategies as st

from curvebox import (BivariatePoly, DomainError, ParseError, UnivariatePoly, parse_poly,
                      poly_eval, shift_substitute, substitute_x, univariate_roots)
from curvebox.poly import distinct_roots, root_multiplicity


def brute_roots(coeffs, p):
    out = []
    for y in range(p):
        if sum(c * pow(y, i, p) for i, c in enumerate(coeffs)) % p == 0:
            m, c = 0, list(coeffs)
            # multiplicity by repeated division, independent of the library
            while len(c) > 1:
                q = [0] * (len(c) - 1)
                acc = 0
                for i in range(len(c) - 1, 0, -1):
                    acc = (acc * y + c[i]) % p
                    q[i - 1] = acc
                if (acc * y + c[0]) % p:
                    break
                m, c = m + 1, q
            out.append((y, m))
    return out


def test_eval_examples():
    f = parse_poly("x*y - 1", 7)
    assert poly_eval(f, 3, 5).value == 0
    assert poly_eval(f, 0, 0).value == 6
    g = parse_poly("y^2 - x^3 - x", 7)
    assert poly_eval(g, 3, 3).value == 0


def test_substitute_examples():
    g = parse_poly("y^2 - x^3 - x", 7)
    assert substitute_x(g, 0) == UnivariatePoly(7, [0, 0, 1])
    assert substitute_x(parse_poly("x*y - 1", 7), 2) == UnivariatePoly(7, [-1, 2])
    s = substitute_x(g, 1)
    assert s == UnivariatePoly(7, [5, 0, 1])
    assert all(s(y) == poly_eval(g, 1, y) for y in range(7))


def _agree_everywhere(shifted, f, a, b, p):
    return all(poly_eval(shifted, x, y) == poly_eval(f, (a * x + b) % p, y)
               for x in range(p) for y in range(p))


def test_shift_examples():
    f = parse_poly("x*y - 1", 7)
    s = shift_substitute(f, 1, 0, 1)
    assert s.coeffs == f.coeffs and s.y_name == "y1"
    assert s.to_text() == "x*y1 + 6"
    s = shift_substitute(f, 2, 3, 1)
    assert s.coeffs == {(1, 1): 2, (0, 1): 3, (0, 0): 6}
    assert _agree_everywhere(s, f, 2, 3, 7)
    g = parse_poly("y - x^2", 5)
    s = shift_substitute(g, 1, 1, 2)
    assert s.coeffs == {(0, 1): 1, (2, 0): 4, (1, 0): 3, (0, 0): 4}
    assert _agree_everywhere(s, g, 1, 1, 5)


def test_shift_rejects_zero_a():
    with pytest.raises(DomainError):
        shift_substitute(parse_poly("x*y - 1", 7), 0, 1, 1)


def test_root_examples():
    F = 7
    assert [(r.value, m) for r, m in univariate_roots(UnivariatePoly(F, [0, 0, 1]))] == [(0, 2)]
    assert [(r.value, m) for r, m in univariate_roots(UnivariatePoly(F, [-1, 2]))] == [(4, 1)]
    assert [(r.value, m) for r, m in univariate_roots(UnivariatePoly(F, [5, 0, 1]))] == [(3, 1), (4, 1)]
    with pytest.raises(DomainError, match="identically zero fiber"):
        univariate_roots(UnivariatePoly(F, [0, 0]))


@st.composite
def small_bivariate(draw):
    p = draw(st.sampled_from([3, 5, 7, 11, 13]))
    terms = draw(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                                 st.integers(1, p - 1), min_size=1, max_size=6))
    if max(i + j for i, j in terms) == 0:
        terms[(0, 1)] = 1
    return BivariatePoly(p, terms)


@settings(max_examples=60, deadline=None)
@given(small_bivariate())
def test_substitute_agrees_with_eval(f):
    p = f.p
    for x0 in range(p):
        g = substitute_x(f, x0)
        assert all(g(y) == poly_eval(f, x0, y) for y in range(p))


@pytest.mark.parametrize("p", [3, 7, 13, 31])
def test_shift_agreement_exhaustive(p):
    rng = random.Random(p)
    for _ in range(5):
        terms = {(rng.randrange(4), rng.randrange(1, 3)): rng.randrange(1, p) for _ in range(4)}
        f = BivariatePoly(p, terms)
        a, b = rng.randrange(1, p), rng.randrange(p)
        assert _agree_everywhere(shift_substitute(f, a, b, 1), f, a, b, p)
        assert shift_substitute(f, a, b, 1).total_degree <= f.total_degree


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([3, 5, 7, 11, 31, 53, 101]),
       st.lists(st.integers(0, 1000), min_size=1, max_size=7))
def test_roots_match_scan_oracle(p, coeffs):
    coeffs = [c % p for c in coeffs]
    if not any(coeffs):
        coeffs[0] = 1
    expect = brute_roots(coeffs, p)
    for method in ("scan", "fast"):
        got = [(r.value, m) for r, m in univariate_roots(UnivariatePoly(p, coeffs), method)]
        assert got == expect
    assert sum(m for _, m in expect) <= UnivariatePoly(p, coeffs).degree


def test_fast_roots_at_larger_p():
    rng = random.Random(5)
    for p in (1009, 10007):
        for _ in range(30):
            roots = [rng.randrange(p) for _ in range(rng.randint(1, 4))]
            # product of (y - r) times an irreducible-ish quadratic
            c = [1]
            for r in roots:
                c = [((c[i - 1] if i else 0) - r * (c[i] if i < len(c) else 0)) % p
                     for i in range(len(c) + 1)]
            extra = [rng.randrange(p), rng.randrange(p), 1]
            prod = [0] * (len(c) + 2)
            for i, u in enumerate(c):
                for j, v in enumerate(extra):
                    prod[i + j] = (prod[i + j] + u * v) % p
            assert distinct_roots(prod, p, "fast") == distinct_roots(prod, p, "scan")
            for r in set(roots):
                assert root_multiplicity(prod, r, p) >= roots.count(r)


def test_parse_formats():
    f = parse_poly("x*y + 6", 7)
    assert f.coeffs == {(1, 1): 1, (0, 0): 6}
    assert parse_poly("x", 7).coeffs == {(1, 0): 1}
    assert parse_poly("y^2", 7).coeffs == {(0, 2): 1}
    assert parse_poly("3 + y", 7).coeffs == {(0, 0): 3, (0, 1): 1}
    assert parse_poly("y^2 - x^3 - x", 7) == parse_poly("y^2 + 6*x^3 + 6*x", 7)
    assert parse_poly("x*y + 10", 7).coeffs[(0, 0)] == 3
    assert parse_poly("2*x*3*y", 7).coeffs == {(1, 1): 6}


@settings(max_examples=80, deadline=None)
@given(small_bivariate())
def test_text_round_trip(f):
    assert parse_poly(f.to_text(), f.p) == f


@pytest.mark.parametrize("text, column", [("x*y + z", 7), ("x*^2", 3), ("x y", 3), ("x^", 3)])
def test_parse_errors_report_column(text, column):
    with pytest.raises(ParseError) as info:
        parse_poly(text, 7)
    assert info.value.column == column
    assert f"column {column}" in str(info.value)


def test_constant_rejected():
    with pytest.raises(ParseError):
        parse_poly("3", 7)
    with pytest.raises(ParseError):
        parse_poly("7*x", 7)  # vanishes mod p
