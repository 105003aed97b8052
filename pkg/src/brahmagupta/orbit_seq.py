"""Canonical orbit sequences and their interleavement.

For a seed alpha of norm k and a unit beta = u + v*sqrt(D) of norm 1, the
four canonical sequences are

    t1: alpha * beta^n        t2: alpha * conj(beta)^n
    t3: -alpha * beta^n       t4: -alpha * conj(beta)^n

for n = 1, 2, ...  Both coordinate sequences obey
``s[n+2] = 2*u*s[n+1] - s[n]``, which is how terms past the second are
produced.
"""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass
from typing import TypeVar

from .errors import BrahmaguptaError, EmptyNormClass, RadicandMismatch
from .norm_class import orbit_partition
from .pell_unit import FundamentalUnit, fundamental_unit
from .quadint import QuadInt, is_square, isqrt

__all__ = [
    "SequenceSpec",
    "SequenceWindow",
    "Variant",
    "check_characteristic_roots",
    "enumerate_norm_class",
    "generate",
    "interleave",
]

T = TypeVar("T")


class Variant(str, enum.Enum):
    T1 = "t1"
    T2 = "t2"
    T3 = "t3"
    T4 = "t4"

    @property
    def sign(self) -> int:
        return 1 if self in (Variant.T1, Variant.T2) else -1

    @property
    def conjugated(self) -> bool:
        return self in (Variant.T2, Variant.T4)


def _check_unit(unit: QuadInt) -> None:
    if unit.norm() != 1:
        raise BrahmaguptaError(f"{unit} has norm {unit.norm()}, expected 1")
    if unit.y == 0:
        # norm 1 with y = 0 means unit = +-1
        raise BrahmaguptaError("unit must differ from 1 and -1")


@dataclass(frozen=True)
class SequenceSpec:
    alpha: QuadInt
    unit: QuadInt
    variant: Variant = Variant.T1

    def __post_init__(self) -> None:
        if self.alpha.d != self.unit.d:
            raise RadicandMismatch(f"radicand mismatch: {self.alpha.d} vs {self.unit.d}")
        if self.alpha.norm() == 0:
            raise BrahmaguptaError("seed must have nonzero norm")
        _check_unit(self.unit)
        object.__setattr__(self, "variant", Variant(self.variant))

    @property
    def d(self) -> int:
        return self.alpha.d

    @property
    def k(self) -> int:
        return self.alpha.norm()

    @property
    def multiplier(self) -> QuadInt:
        return self.unit.conj() if self.variant.conjugated else self.unit

    @property
    def seed(self) -> QuadInt:
        """The n = 0 term, sign applied."""
        return self.alpha * self.variant.sign


@dataclass(frozen=True)
class SequenceWindow:
    """Terms n = 1..N of a canonical orbit sequence."""

    spec: SequenceSpec
    terms: tuple[QuadInt, ...]

    def __len__(self) -> int:
        return len(self.terms)

    def xs(self) -> list[int]:
        return [t.x for t in self.terms]

    def ys(self) -> list[int]:
        return [t.y for t in self.terms]


def generate(spec: SequenceSpec, n_terms: int) -> SequenceWindow:
    if n_terms < 1:
        raise ValueError("window length must be positive")
    beta = spec.multiplier
    first = spec.seed * beta
    if n_terms == 1:
        return SequenceWindow(spec, (first,))
    second = first * beta
    d, two_u = spec.d, 2 * spec.unit.x
    xs = [first.x, second.x]
    ys = [first.y, second.y]
    for _ in range(n_terms - 2):
        xs.append(two_u * xs[-1] - xs[-2])
        ys.append(two_u * ys[-1] - ys[-2])
    return SequenceWindow(spec, tuple(QuadInt(d, x, y) for x, y in zip(xs, ys)))


def interleave(seqs: Sequence[Sequence[T]]) -> list[T]:
    """Round-robin merge: output position K(n-1)+i (1-based) holds term n of sequence i."""
    if not seqs:
        return []
    n = len(seqs[0])
    if any(len(s) != n for s in seqs):
        raise ValueError("interleave needs sequences of equal length")
    return [s[j] for j in range(n) for s in seqs]


def enumerate_norm_class(
    d: int,
    k: int,
    n_terms: int,
    unit: FundamentalUnit | QuadInt | None = None,
    include_seeds: bool = False,
) -> list[QuadInt]:
    """First ``4*m*n_terms`` elements of Z_k(sqrt d) in interleaved order.

    Windows are taken orbit by orbit (partition order), variants t1..t4
    within an orbit.  With ``include_seeds`` the pairs ``alpha, -alpha`` of
    every orbit are listed first.
    """
    fu = fundamental_unit(d)
    if unit is None:
        unit = fu
    beta = unit.value if isinstance(unit, FundamentalUnit) else unit
    partition = orbit_partition(d, k, fu)
    if not partition.fundamentals:
        raise EmptyNormClass(f"norm class empty: no solutions of x^2 - {d}y^2 = {k}")
    windows = [
        generate(SequenceSpec(alpha, beta, var), n_terms).terms
        for alpha in partition.values()
        for var in Variant
    ]
    out = interleave(windows)
    if include_seeds:
        seeds = [s for alpha in partition.values() for s in (alpha, -alpha)]
        out = seeds + out
    return out


def _is_power_of_ten(n: int) -> bool:
    if n < 1:
        return False
    while n % 10 == 0:
        n //= 10
    return n == 1


def check_characteristic_roots(unit: QuadInt) -> bool:
    """True iff neither root of x^2 - 2u*x + 1 is of the form +-10^m.

    The roots are u +- sqrt(u^2 - 1); they are rational only when u^2 - 1
    is a perfect square.
    """
    _check_unit(unit)
    u = unit.x
    disc = u * u - 1
    if not is_square(disc):
        return True
    r = isqrt(disc)
    return not any(_is_power_of_ten(abs(root)) for root in (u + r, u - r))
