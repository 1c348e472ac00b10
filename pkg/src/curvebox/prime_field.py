"""Arithmetic in F_p for odd primes below 2**62."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError, UsageError

MAX_MODULUS = 1 << 62

# Deterministic Miller-Rabin: these twelve bases are exact for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for every n < 2**64."""
    if n < 2:
        raise UsageError(f"is_prime needs n >= 2, got {n}")
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def inverse_mod(a: int, p: int) -> int:
    """Inverse of a modulo p by the extended Euclidean algorithm."""
    a %= p
    if a == 0:
        raise DomainError("zero has no inverse")
    r0, r1 = p, a
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    return t0 % p


@dataclass(frozen=True)
class PrimeModulus:
    """An odd prime p with 3 <= p < 2**62.

    ``reduction`` picks how products are reduced: ``"plain"`` uses ``%``,
    ``"barrett"`` uses a precomputed reciprocal. Both give identical results.
    """

    p: int
    reduction: str = "plain"
    _barrett_m: int = field(init=False, repr=False, compare=False)
    _barrett_k: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p = self.p
        if not isinstance(p, int) or isinstance(p, bool):
            raise UsageError(f"modulus must be an integer, got {p!r}")
        if not 3 <= p < MAX_MODULUS:
            raise UsageError(f"modulus must satisfy 3 <= p < 2**62, got {p}")
        if not is_prime(p):
            raise UsageError(f"modulus {p} is not prime")
        if self.reduction not in ("plain", "barrett"):
            raise UsageError(f"unknown reduction {self.reduction!r}")
        k = 2 * p.bit_length()
        object.__setattr__(self, "_barrett_k", k)
        object.__setattr__(self, "_barrett_m", (1 << k) // p)

    def __int__(self):
        return self.p

    def __eq__(self, other):
        if isinstance(other, PrimeModulus):
            return self.p == other.p
        return NotImplemented

    def __hash__(self):
        return hash(self.p)

    def mul(self, a: int, b: int) -> int:
        """Product of two reduced residues, reduced mod p."""
        if self.reduction == "barrett":
            return self.barrett_reduce(a * b)
        return a * b % self.p

    def barrett_reduce(self, x: int) -> int:
        # valid for 0 <= x < p**2
        p = self.p
        q = (x * self._barrett_m) >> self._barrett_k
        r = x - q * p
        while r >= p:
            r -= p
        return r

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value % self.p, self)

    def __call__(self, value: int) -> "FieldElement":
        return self.element(value)


@dataclass(frozen=True)
class FieldElement:
    value: int
    modulus: PrimeModulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.p:
            raise UsageError(f"{self.value} is not reduced mod {self.modulus.p}")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise UsageError(
                    f"modulus mismatch: {self.modulus.p} vs {other.modulus.p}")
            return other.value
        if isinstance(other, int):
            return other % self.modulus.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement((self.value + v) % self.modulus.p, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement((self.value - v) % self.modulus.p, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement((v - self.value) % self.modulus.p, self.modulus)

    def __neg__(self):
        return FieldElement(-self.value % self.modulus.p, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.modulus.mul(self.value, v), self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self * inverse_mod(v, self.modulus.p)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(pow(self.value, e, self.modulus.p), self.modulus)

    def inverse(self) -> "FieldElement":
        return FieldElement(inverse_mod(self.value, self.modulus.p), self.modulus)

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.modulus.p})"


def _check_same(a: FieldElement, b: FieldElement):
    if a.modulus != b.modulus:
        raise UsageError(f"modulus mismatch: {a.modulus.p} vs {b.modulus.p}")


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return a + b


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return a * b


def fe_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def sqrt_mod(a: int, p: int):
    """A square root of a mod an odd prime p (Tonelli-Shanks), or None."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r
