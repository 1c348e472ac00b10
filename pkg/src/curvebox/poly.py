"""Bivariate and univariate polynomials over F_p.

Coefficients are stored as plain ints reduced into [0, p); the public
functions accept either ints or :class:`FieldElement` values.
"""

from __future__ import annotations

import re
from math import comb

from .errors import DomainError, ParseError, UsageError
from .prime_field import FieldElement, PrimeModulus, inverse_mod, sqrt_mod

# fibers are scanned directly below this size; above it the gcd path is used
SCAN_LIMIT = 1024


def _value(v, modulus: PrimeModulus) -> int:
    if isinstance(v, FieldElement):
        if v.modulus != modulus:
            raise UsageError(f"modulus mismatch: {v.modulus.p} vs {modulus.p}")
        return v.value
    if isinstance(v, int):
        return v % modulus.p
    raise UsageError(f"expected a field element or int, got {type(v).__name__}")


def _as_modulus(m) -> PrimeModulus:
    return m if isinstance(m, PrimeModulus) else PrimeModulus(int(m))


class UnivariatePoly:
    """Dense polynomial c_0 + c_1 y + ... + c_m y^m over F_p."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus, coeffs):
        self.modulus = _as_modulus(modulus)
        p = self.modulus.p
        cs = [_value(c, self.modulus) if isinstance(c, FieldElement) else c % p
              for c in coeffs]
        self.coeffs = tuple(_trim(cs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, y) -> FieldElement:
        y = _value(y, self.modulus)
        return self.modulus.element(_horner(self.coeffs, y, self.modulus.p))

    def __eq__(self, other):
        if not isinstance(other, UnivariatePoly):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.modulus.p, self.coeffs))

    def __repr__(self):
        return f"UnivariatePoly({list(self.coeffs)}, p={self.modulus.p})"


# -- dense helpers on int lists, lowest degree first ------------------------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _horner(c, y, p):
    acc = 0
    for a in reversed(c):
        acc = (acc * y + a) % p
    return acc


def _divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = inverse_mod(b[-1], p)
    q = [0] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _trim(q), _trim(a[:db])


def _mulmod(a, b, m, p):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    prod = [v % p for v in prod]
    if len(prod) >= len(m):
        prod = _divmod(prod, m, p)[1]
    return _trim(prod)


def _powmod(base, e, m, p):
    result = [1]
    base = _divmod(base, m, p)[1] if len(base) >= len(m) else _trim(base)
    while e:
        if e & 1:
            result = _mulmod(result, base, m, p)
        e >>= 1
        if e:
            base = _mulmod(base, base, m, p)
    return result


def _gcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _divmod(a, b, p)[1]
    if a:
        inv = inverse_mod(a[-1], p)
        a = [v * inv % p for v in a]
    return a


def _sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _synthetic_div(c, r, p):
    """Divide by (y - r); returns (quotient, remainder)."""
    out = [0] * (len(c) - 1)
    acc = 0
    for i in range(len(c) - 1, 0, -1):
        acc = (acc * r + c[i]) % p
        out[i - 1] = acc
    rem = (acc * r + c[0]) % p
    return out, rem


def root_multiplicity(c, r, p) -> int:
    """How many times (y - r) divides the dense polynomial c."""
    m = 0
    c = list(c)
    while len(c) > 1:
        q, rem = _synthetic_div(c, r, p)
        if rem:
            break
        m += 1
        c = q
    return m


def _split_roots(h, p, out):
    # h is monic, squarefree and a product of distinct linear factors
    if len(h) <= 1:
        return
    if len(h) == 2:
        out.append(-h[0] % p)
        return
    half = (p - 1) // 2
    for delta in range(p):
        if _horner(h, -delta % p, p) == 0:
            out.append(-delta % p)
            h = _divmod(h, [delta, 1], p)[0]
            if len(h) <= 2:
                _split_roots(h, p, out)
                return
            continue
        w = _powmod([delta, 1], half, h, p)
        g = _gcd(_sub(w, [1], p), h, p)
        if 1 < len(g) < len(h):
            _split_roots(g, p, out)
            _split_roots(_divmod(h, g, p)[0], p, out)
            return
    raise AssertionError("root splitting did not terminate")  # pragma: no cover


def distinct_roots(c, p, method="auto"):
    """Sorted distinct roots in F_p of the nonzero dense polynomial c."""
    c = _trim(c)
    if not c:
        raise DomainError("identically zero fiber")
    if method == "auto":
        method = "scan" if p <= SCAN_LIMIT else "fast"
    if method == "scan":
        return [y for y in range(p) if _horner(c, y, p) == 0]
    if method != "fast":
        raise UsageError(f"unknown root-finding method {method!r}")
    deg = len(c) - 1
    if deg == 0:
        return []
    if deg == 1:
        return [-c[0] * inverse_mod(c[1], p) % p]
    if deg == 2:
        c0, c1, c2 = c
        disc = (c1 * c1 - 4 * c2 * c0) % p
        s = sqrt_mod(disc, p)
        if s is None:
            return []
        inv2a = inverse_mod(2 * c2, p)
        r1 = (-c1 + s) * inv2a % p
        r2 = (-c1 - s) * inv2a % p
        return sorted({r1, r2})
    inv = inverse_mod(c[-1], p)
    monic = [v * inv % p for v in c]
    yp = _powmod([0, 1], p, monic, p)
    h = _gcd(_sub(yp, [0, 1], p), monic, p)
    out = []
    _split_roots(h, p, out)
    return sorted(out)


def univariate_roots(g: UnivariatePoly, method: str = "auto"):
    """Roots of g in F_p with multiplicities, sorted by root.

    ``method`` is ``"scan"`` (test every residue), ``"fast"`` (gcd with
    y^p - y, then equal-degree splitting) or ``"auto"`` (scan for small p).
    """
    p = g.modulus.p
    roots = distinct_roots(g.coeffs, p, method)
    return [(g.modulus.element(r), root_multiplicity(g.coeffs, r, p)) for r in roots]


# -- bivariate ---------------------------------------------------------------

class BivariatePoly:
    """Sparse f(x, y) = sum c_ij x^i y^j over F_p, nonconstant.

    ``y_name`` only affects printing; shifted equations use ``y1``, ``y2``...
    """

    __slots__ = ("modulus", "coeffs", "total_degree", "y_degree", "x_degree",
                 "y_name", "_columns")

    def __init__(self, modulus, coeffs, y_name="y"):
        self.modulus = _as_modulus(modulus)
        clean = {}
        for (i, j), c in dict(coeffs).items():
            if i < 0 or j < 0:
                raise UsageError(f"negative exponent in term ({i}, {j})")
            c = _value(c, self.modulus)
            if c:
                clean[(int(i), int(j))] = c
        if not clean or max(i + j for i, j in clean) < 1:
            raise DomainError("polynomial must have total degree >= 1")
        self.coeffs = clean
        self.total_degree = max(i + j for i, j in clean)
        self.y_degree = max(j for _, j in clean)
        self.x_degree = max(i for i, _ in clean)
        self.y_name = y_name
        cols = [[0] * (self.x_degree + 1) for _ in range(self.y_degree + 1)]
        for (i, j), c in clean.items():
            cols[j][i] = c
        # coefficient of y^j as a dense polynomial in x
        self._columns = tuple(tuple(_trim(col)) for col in cols)

    @property
    def p(self) -> int:
        return self.modulus.p

    def y_coefficients_at(self, x0: int):
        """Dense coefficients of f(x0, y), lowest power of y first (ints)."""
        p = self.modulus.p
        return _trim([_horner(col, x0, p) for col in self._columns])

    def __eq__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.modulus.p, frozenset(self.coeffs.items())))

    def to_text(self) -> str:
        return format_poly(self)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"BivariatePoly({self.to_text()!r}, p={self.modulus.p})"


def poly_eval(f: BivariatePoly, x, y) -> FieldElement:
    """f(x, y) by Horner in x for each y-coefficient, then Horner in y."""
    xv = _value(x, f.modulus)
    yv = _value(y, f.modulus)
    p = f.modulus.p
    return f.modulus.element(_horner(f.y_coefficients_at(xv), yv, p))


def substitute_x(f: BivariatePoly, x0) -> UnivariatePoly:
    """The fiber polynomial g(y) = f(x0, y)."""
    return UnivariatePoly(f.modulus, f.y_coefficients_at(_value(x0, f.modulus)))


def shift_substitute(f: BivariatePoly, a, b, target_y_index: int) -> BivariatePoly:
    """f(a*x + b, y), with y renamed to ``y<target_y_index>``."""
    p = f.modulus.p
    av, bv = _value(a, f.modulus), _value(b, f.modulus)
    if av == 0:
        raise DomainError("shift coefficient a must be nonzero mod p")
    out = {}
    for (i, j), c in f.coeffs.items():
        for m in range(i + 1):
            term = c * comb(i, m) * pow(av, m, p) * pow(bv, i - m, p) % p
            if term:
                out[(m, j)] = (out.get((m, j), 0) + term) % p
    return BivariatePoly(f.modulus, out, y_name=f"y{target_y_index}")


# -- text format ---------------------------------------------------------------

def format_poly(f: BivariatePoly) -> str:
    parts = []
    for (i, j) in sorted(f.coeffs, key=lambda t: (-(t[0] + t[1]), -t[0], -t[1])):
        c = f.coeffs[(i, j)]
        factors = []
        if c != 1 or (i == 0 and j == 0):
            factors.append(str(c))
        if i:
            factors.append("x" if i == 1 else f"x^{i}")
        if j:
            factors.append(f.y_name if j == 1 else f"{f.y_name}^{j}")
        parts.append("*".join(factors))
    return " + ".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|(\*\*|[xy*^+\-]))")


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", text, col)
        col = m.start(1) if m.group(1) else m.start(2)
        tok = m.group(1) or m.group(2)
        if tok == "**":
            tok = "^"
        tokens.append((tok, col + 1))
        pos = m.end()
    tokens.append(("$", len(text) + 1))
    return tokens


def parse_poly(text: str, modulus) -> BivariatePoly:
    """Parse ``c*x^i*y^j`` terms joined by ``+`` (``-`` also accepted).

    >>> parse_poly("x*y + 6", 7).to_text()
    'x*y + 6'
    """
    modulus = _as_modulus(modulus)
    p = modulus.p
    tokens = _tokenize(text)
    pos = 0
    coeffs = {}

    def peek():
        return tokens[pos]

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def number(expected):
        tok, col = take()
        if not tok.isdigit():
            what = "end of input" if tok == "$" else repr(tok)
            raise ParseError(f"expected {expected}, found {what}", text, col)
        return int(tok)

    def factor(state):
        tok, col = peek()
        if tok.isdigit():
            take()
            state[0] *= int(tok)
        elif tok in ("x", "y"):
            take()
            e = 1
            if peek()[0] == "^":
                take()
                e = number("an exponent")
            state[1 if tok == "x" else 2] += e
        else:
            what = "end of input" if tok == "$" else repr(tok)
            raise ParseError(f"expected a number, x or y, found {what}", text, col)

    sign = 1
    if peek()[0] in "+-" and peek()[0] != "$":
        sign = -1 if take()[0] == "-" else 1
    while True:
        state = [sign, 0, 0]
        factor(state)
        while peek()[0] == "*":
            take()
            factor(state)
        key = (state[1], state[2])
        coeffs[key] = (coeffs.get(key, 0) + state[0]) % p
        tok, col = take()
        if tok == "$":
            break
        if tok not in ("+", "-"):
            raise ParseError(f"expected '+' or '-', found {tok!r}", text, col)
        sign = -1 if tok == "-" else 1
    try:
        return BivariatePoly(modulus, coeffs)
    except DomainError as exc:
        raise ParseError(f"{exc}: {text!r}") from exc
