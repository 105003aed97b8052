"""Continued fraction of sqrt(D) and the fundamental unit of Z(sqrt D)."""

from __future__ import annotations

from dataclasses import dataclass

from .quadint import QuadInt, check_radicand, isqrt

__all__ = ["CFExpansion", "FundamentalUnit", "cf_sqrt", "convergent", "fundamental_unit"]


@dataclass(frozen=True)
class CFExpansion:
    """``sqrt(d) = [a0; period, period, ...]``."""

    d: int
    a0: int
    period: tuple[int, ...]

    def quotient(self, j: int) -> int:
        """The j-th partial quotient (``j = 0`` is ``a0``), extending the period."""
        if j == 0:
            return self.a0
        return self.period[(j - 1) % len(self.period)]


@dataclass(frozen=True)
class FundamentalUnit:
    """The norm-1 unit x1 + y1*sqrt(d) with minimal positive (x1, y1).

    ``negative_unit`` holds the minimal norm -1 unit when one exists (odd
    period), ``None`` otherwise.
    """

    value: QuadInt
    negative_unit: QuadInt | None = None

    @property
    def x(self) -> int:
        return self.value.x

    @property
    def y(self) -> int:
        return self.value.y

    @property
    def d(self) -> int:
        return self.value.d


def cf_sqrt(d: int) -> CFExpansion:
    """Expand sqrt(d) by the PQa iteration, stopping when the (m, q) state repeats."""
    check_radicand(d)
    a0 = isqrt(d)
    m, q, a = 0, 1, a0
    period: list[int] = []
    first_state = None
    while True:
        m = q * a - m
        q = (d - m * m) // q
        if first_state is None:
            first_state = (m, q)
        elif (m, q) == first_state:
            break
        a = (a0 + m) // q
        period.append(a)
    return CFExpansion(d, a0, tuple(period))


def convergent(cf: CFExpansion, n: int) -> tuple[int, int]:
    """Numerator and denominator of the n-th convergent of ``cf``."""
    if n < 0:
        raise ValueError("convergent index must be nonnegative")
    p_prev, p = 1, cf.a0
    q_prev, q = 0, 1
    for j in range(1, n + 1):
        a = cf.quotient(j)
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return p, q


def fundamental_unit(d: int) -> FundamentalUnit:
    cf = cf_sqrt(d)
    p, q = convergent(cf, len(cf.period) - 1)
    eps = QuadInt(d, p, q)
    if eps.norm() == 1:
        return FundamentalUnit(eps)
    # odd period: the first convergent has norm -1 and its square is the unit
    assert eps.norm() == -1
    return FundamentalUnit(eps * eps, negative_unit=eps)
