"""Solving x^2 - D*y^2 = k and splitting the solutions into unit orbits.

The unit group Z_1(sqrt D) acts on each norm class Z_k(sqrt D) by
multiplication.  There are finitely many orbits; each has a unique
fundamental solution, and every fundamental solution lies in an explicit
search box determined by the fundamental unit.  Everything here is exact
integer arithmetic; the real-valued box bounds are turned into integer
inequalities before flooring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BrahmaguptaError, NormMismatch, PartitionError, RadicandMismatch
from .pell_unit import FundamentalUnit, fundamental_unit
from .quadint import QuadInt, check_radicand, isqrt

__all__ = [
    "OrbitFundamental",
    "OrbitPartition",
    "SearchBox",
    "associated",
    "classify",
    "orbit_partition",
    "search_bounds",
    "solutions_in_box",
]


@dataclass(frozen=True)
class SearchBox:
    """Inclusive bounds ``|u| <= u_max`` and ``0 <= v <= v_max``."""

    u_max: int
    v_max: int


@dataclass(frozen=True)
class OrbitFundamental:
    value: QuadInt
    ambiguous: bool
    conjugate_index: int | None = None


@dataclass(frozen=True)
class OrbitPartition:
    d: int
    k: int
    fundamentals: tuple[OrbitFundamental, ...]
    unit: FundamentalUnit | None = None

    def __len__(self) -> int:
        return len(self.fundamentals)

    def values(self) -> list[QuadInt]:
        return [f.value for f in self.fundamentals]


def _check_k(k: int) -> None:
    if k == 0:
        raise BrahmaguptaError("k must be nonzero")


def search_bounds(d: int, k: int, unit: FundamentalUnit | None = None) -> SearchBox:
    """Box containing every orbit fundamental solution of norm ``k``.

    ``v_max`` is the largest v with ``v^2 (2 x1 +- 2) <= y1^2 |k|`` and
    ``u_max`` the largest u with ``2 u^2 <= |k| (x1 +- 1)``, with ``+`` for
    k > 0 and ``-`` for k < 0.
    """
    check_radicand(d)
    _check_k(k)
    if unit is None:
        unit = fundamental_unit(d)
    if unit.d != d:
        raise RadicandMismatch(f"radicand mismatch: {d} vs {unit.d}")
    x1, y1 = unit.x, unit.y
    a = abs(k)
    shift = 1 if k > 0 else -1
    # floor(sqrt(floor(r))) == floor(sqrt(r)) for real r >= 0
    v_max = isqrt((y1 * y1 * a) // (2 * x1 + 2 * shift))
    u_max = isqrt((a * (x1 + shift)) // 2)
    return SearchBox(u_max, v_max)


def solutions_in_box(d: int, k: int, box: SearchBox) -> list[QuadInt]:
    """All u + v*sqrt(d) of norm k inside ``box``, ordered by (v, u)."""
    check_radicand(d)
    _check_k(k)
    found: list[QuadInt] = []
    for v in range(box.v_max + 1):
        t = k + d * v * v
        if t < 0:
            continue
        u = isqrt(t)
        if u * u != t or u > box.u_max:
            continue
        if u == 0:
            found.append(QuadInt(d, 0, v))
        else:
            found.append(QuadInt(d, -u, v))
            found.append(QuadInt(d, u, v))
    return found


def associated(a: QuadInt, b: QuadInt) -> bool:
    """True iff ``a`` and ``b`` lie in the same orbit of the unit group.

    With common norm m, this holds exactly when m divides both
    ``a.x*b.x - d*a.y*b.y`` and ``a.x*b.y - a.y*b.x``.
    """
    if a.d != b.d:
        raise RadicandMismatch(f"radicand mismatch: {a.d} vs {b.d}")
    m = a.norm()
    if m == 0:
        raise NormMismatch("associated() needs elements of nonzero norm")
    if b.norm() != m:
        raise NormMismatch(f"norm mismatch: {m} vs {b.norm()}")
    return (a.x * b.x - a.d * a.y * b.y) % m == 0 and (a.x * b.y - a.y * b.x) % m == 0


def _canonical(members: list[QuadInt]) -> QuadInt:
    # members arrive sorted by (v, u); among the minimal v prefer u >= 0
    v_min = members[0].y
    lowest = [m for m in members if m.y == v_min]
    nonneg = [m for m in lowest if m.x >= 0]
    return nonneg[0] if nonneg else lowest[0]


def orbit_partition(d: int, k: int, unit: FundamentalUnit | None = None) -> OrbitPartition:
    """Orbits of Z_k(sqrt d), one fundamental solution per orbit.

    Fundamentals are listed in increasing (v, u) order.  An empty partition
    means the norm class is empty.
    """
    check_radicand(d)
    _check_k(k)
    if unit is None:
        unit = fundamental_unit(d)
    box = search_bounds(d, k, unit)
    classes: list[list[QuadInt]] = []
    for cand in solutions_in_box(d, k, box):
        for cls in classes:
            if associated(cls[0], cand):
                cls.append(cand)
                break
        else:
            classes.append([cand])

    reps = sorted((_canonical(c) for c in classes), key=lambda q: (q.y, q.x))
    fundamentals = []
    for rep in reps:
        partner = _index_of(rep.conj(), reps)
        fundamentals.append(OrbitFundamental(rep, ambiguous=associated(rep, rep.conj()), conjugate_index=partner))
    return OrbitPartition(d, k, tuple(fundamentals), unit)


def _index_of(a: QuadInt, reps: list[QuadInt]) -> int:
    hits = [i for i, r in enumerate(reps) if associated(r, a)]
    if len(hits) != 1:
        raise PartitionError(f"{a} matches {len(hits)} orbits, expected exactly one")
    return hits[0]


def classify(a: QuadInt, partition: OrbitPartition) -> int:
    """Index of the orbit of ``partition`` containing ``a``."""
    if a.d != partition.d:
        raise RadicandMismatch(f"radicand mismatch: {a.d} vs {partition.d}")
    if a.norm() != partition.k:
        raise NormMismatch(f"norm of {a} is {a.norm()}, partition is for k={partition.k}")
    return _index_of(a, partition.values())
