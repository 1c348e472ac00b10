"""Cyclic intervals and rectangles on the torus (Z/pZ)^2."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError, UsageError


@dataclass(frozen=True)
class CyclicInterval:
    """{start, start+1, ..., start+length-1} mod p. ``length == p`` is all of F_p."""

    start: int
    length: int
    p: int

    def __post_init__(self):
        if not 0 <= self.length <= self.p:
            raise UsageError(f"interval length {self.length} outside [0, {self.p}]")
        if not 0 <= self.start < self.p:
            raise UsageError(f"interval start {self.start} outside [0, {self.p})")

    @classmethod
    def full(cls, p: int) -> "CyclicInterval":
        return cls(0, p, p)

    @classmethod
    def window_after(cls, x: int, H: int, p: int) -> "CyclicInterval":
        """The half-open window (x, x+H]."""
        return cls((x + 1) % p, H, p)

    @classmethod
    def parse(cls, text: str, p: int) -> "CyclicInterval":
        """Parse ``start:length``; the start is reduced mod p."""
        try:
            start, length = text.split(":")
            return cls(int(start) % p, int(length), p)
        except ValueError as exc:
            raise ParseError(f"bad interval {text!r}, expected start:length") from exc

    def __len__(self):
        return self.length

    def __contains__(self, v: int) -> bool:
        return (v - self.start) % self.p < self.length

    def __iter__(self):
        p, s = self.p, self.start
        return ((s + i) % p for i in range(self.length))

    @property
    def is_full(self) -> bool:
        return self.length == self.p

    def mirror(self) -> "CyclicInterval":
        """The interval {-v : v in self}."""
        if self.length == 0:
            return self
        return CyclicInterval((-(self.start + self.length - 1)) % self.p,
                              self.length, self.p)

    def to_text(self) -> str:
        return f"{self.start}:{self.length}"

    def split(self, at: int):
        """Split into the first ``at`` elements and the rest."""
        at = max(0, min(at, self.length))
        return (CyclicInterval(self.start, at, self.p),
                CyclicInterval((self.start + at) % self.p, self.length - at, self.p))


@dataclass(frozen=True)
class Rectangle:
    I: CyclicInterval
    J: CyclicInterval

    def __post_init__(self):
        if self.I.p != self.J.p:
            raise UsageError("rectangle sides use different moduli")

    @property
    def volume(self) -> int:
        return self.I.length * self.J.length
