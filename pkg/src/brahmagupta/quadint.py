"""Exact arithmetic in the ring Z(sqrt D).

Elements are stored as integer pairs ``(x, y)`` standing for ``x + y*sqrt(D)``
together with the radicand ``D``.  Python integers are arbitrary precision, so
nothing here ever rounds.
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass

from .errors import RadicandError, RadicandMismatch

__all__ = [
    "QuadInt",
    "check_radicand",
    "conj",
    "isqrt",
    "is_square",
    "mul",
    "norm",
    "parse_quadint",
    "pow",
]


def isqrt(n: int) -> int:
    """Return floor(sqrt(n)) for a nonnegative integer ``n``."""
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


@functools.lru_cache(maxsize=1024)
def check_radicand(d: int) -> int:
    """Validate ``d`` as a radicand: an integer >= 2 that is not a perfect square."""
    if isinstance(d, bool) or not isinstance(d, int):
        raise RadicandError(f"radicand must be an integer, got {d!r}")
    if d < 2:
        raise RadicandError(f"radicand must be >= 2, got {d}")
    if is_square(d):
        raise RadicandError(f"radicand {d} is a perfect square")
    return d


@dataclass(frozen=True)
class QuadInt:
    """The element ``x + y*sqrt(d)`` of Z(sqrt d)."""

    d: int
    x: int
    y: int = 0

    def __post_init__(self) -> None:
        check_radicand(self.d)
        if not isinstance(self.x, int) or not isinstance(self.y, int):
            raise TypeError("QuadInt components must be integers")

    @classmethod
    def one(cls, d: int) -> QuadInt:
        return cls(d, 1, 0)

    def norm(self) -> int:
        return self.x * self.x - self.d * self.y * self.y

    def conj(self) -> QuadInt:
        return QuadInt(self.d, self.x, -self.y)

    def _check(self, other: QuadInt) -> None:
        if other.d != self.d:
            raise RadicandMismatch(f"radicand mismatch: {self.d} vs {other.d}")

    def __mul__(self, other: QuadInt | int) -> QuadInt:
        if isinstance(other, int):
            return QuadInt(self.d, self.x * other, self.y * other)
        if not isinstance(other, QuadInt):
            return NotImplemented
        self._check(other)
        return QuadInt(
            self.d,
            self.x * other.x + self.d * self.y * other.y,
            self.x * other.y + self.y * other.x,
        )

    def __rmul__(self, other: int) -> QuadInt:
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __neg__(self) -> QuadInt:
        return QuadInt(self.d, -self.x, -self.y)

    def __pow__(self, n: int) -> QuadInt:
        if n < 0:
            raise ValueError("negative exponents are not supported")
        result = QuadInt.one(self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __str__(self) -> str:
        sign = "-" if self.y < 0 else "+"
        return f"{self.x}{sign}{abs(self.y)}*sqrt({self.d})"

    def __float__(self) -> float:
        return self.x + self.y * math.sqrt(self.d)


def mul(a: QuadInt, b: QuadInt) -> QuadInt:
    return a * b


def conj(a: QuadInt) -> QuadInt:
    return a.conj()


def norm(a: QuadInt) -> int:
    return a.norm()


def pow(a: QuadInt, n: int) -> QuadInt:  # noqa: A001
    """Square-and-multiply power; ``pow(a, 0)`` is ``1 + 0*sqrt(d)``."""
    return a**n


_TEXT_RE = re.compile(
    r"^\s*([+-]?\d+)\s*([+-])\s*(\d+)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*$"
)


def parse_quadint(text: str) -> QuadInt:
    """Parse the text form ``x+y*sqrt(D)``, e.g. ``-8+1*sqrt(77)`` or ``8-1*sqrt(77)``."""
    m = _TEXT_RE.match(text)
    if m is None:
        raise ValueError(f"cannot parse {text!r} as x+y*sqrt(D)")
    x, sign, y, d = m.groups()
    y_val = int(y) if sign == "+" else -int(y)
    return QuadInt(int(d), int(x), y_val)
