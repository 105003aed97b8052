"""Benford expectations and empirical digit statistics for big-integer sequences.

Terms of orbit sequences run to thousands of digits, so leading digits and
log10 mantissas are extracted with integer arithmetic on the leading block
of digits; a term is never converted to a string or a float wholesale.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

__all__ = [
    "BenfordReport",
    "DigitStats",
    "all_patterns",
    "benford_report",
    "digit_count",
    "digit_frequencies",
    "empirical_density",
    "expected_prob",
    "leading_digits",
    "log10_mantissa",
    "second_digit_marginal",
    "star_discrepancy",
]

Pattern = tuple[int, ...]

_LOG10_2 = math.log10(2)
_MANTISSA_DIGITS = 19
_BELOW_ONE = math.nextafter(1.0, 0.0)


def _check_pattern(pattern: Sequence[int]) -> Pattern:
    pattern = tuple(pattern)
    if not pattern:
        raise ValueError("digit pattern must be nonempty")
    if not 1 <= pattern[0] <= 9 or any(not 0 <= d <= 9 for d in pattern[1:]):
        raise ValueError(f"invalid digit pattern {pattern}")
    return pattern


def _pattern_value(pattern: Pattern) -> int:
    return functools.reduce(lambda acc, d: 10 * acc + d, pattern, 0)


def expected_prob(pattern: Sequence[int]) -> float:
    """Benford probability that the leading digits are exactly ``pattern``."""
    p = _pattern_value(_check_pattern(pattern))
    return math.log10(1 + 1 / p)


def second_digit_marginal(digit: int) -> float:
    """Benford probability that the second significant digit equals ``digit``."""
    if not 0 <= digit <= 9:
        raise ValueError(f"digit must be in 0..9, got {digit}")
    return sum(expected_prob((first, digit)) for first in range(1, 10))


def all_patterns(m: int) -> list[Pattern]:
    """Every leading-digit pattern of length ``m`` in increasing order."""
    if m < 1:
        raise ValueError("pattern length must be positive")
    return [(first, *rest) for first in range(1, 10) for rest in itertools.product(range(10), repeat=m - 1)]


@functools.lru_cache(maxsize=None)
def _pow10(e: int) -> int:
    return 10**e


def digit_count(n: int) -> int:
    """Number of decimal digits of ``|n|`` (``n`` nonzero)."""
    n = abs(n)
    if n == 0:
        raise ValueError("zero term has no significant digits")
    guess = int((n.bit_length() - 1) * _LOG10_2) + 1
    # guess is off by at most one in either direction (float rounding)
    if n >= _pow10(guess):
        guess += 1
    elif n < _pow10(guess - 1):
        guess -= 1
    return guess


def leading_digits(n: int, m: int) -> Pattern:
    """The first ``m`` significant decimal digits of ``|n|``."""
    if n == 0:
        raise ValueError("zero term has no significant digits")
    if m < 1:
        raise ValueError("pattern length must be positive")
    n = abs(n)
    length = digit_count(n)
    if length < m:
        raise ValueError(f"{n} has fewer than {m} digits")
    head = n // _pow10(length - m)
    return tuple(int(c) for c in str(head))


def log10_mantissa(n: int) -> float:
    """Fractional part of log10|n|, accurate to well below 1e-12."""
    if n == 0:
        raise ValueError("log10 of zero")
    n = abs(n)
    length = digit_count(n)
    if length > _MANTISSA_DIGITS:
        head = n // _pow10(length - _MANTISSA_DIGITS)
        length = _MANTISSA_DIGITS
    else:
        head = n
    frac = math.log10(head) - (length - 1)
    # rounding can push a head just below 10^length onto 1.0
    return min(max(frac, 0.0), _BELOW_ONE)


@dataclass(frozen=True)
class DigitStats:
    m: int
    counts: dict[Pattern, int]
    n: int

    def frequency(self, pattern: Sequence[int]) -> float:
        return self.counts.get(tuple(pattern), 0) / self.n


def digit_frequencies(terms: Iterable[int], m: int = 1) -> DigitStats:
    counts = Counter(leading_digits(t, m) for t in terms)
    return DigitStats(m, dict(sorted(counts.items())), sum(counts.values()))


def empirical_density(points: Sequence[float], t: float) -> float:
    """Fraction of ``points`` that are ``<= t``."""
    if len(points) == 0:
        raise ValueError("empirical density of an empty sample")
    arr = np.asarray(points, dtype=float)
    return float(np.count_nonzero(arr <= t)) / arr.size


def star_discrepancy(points: Sequence[float]) -> float:
    """Exact star discrepancy of a finite sample in [0, 1)."""
    if len(points) == 0:
        raise ValueError("star discrepancy of an empty sample")
    x = np.sort(np.asarray(points, dtype=float))
    n = x.size
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - x), np.max(x - (i - 1) / n)))


@dataclass(frozen=True)
class BenfordReport:
    stats: DigitStats
    expected: dict[Pattern, float]
    max_abs_deviation: float
    chi_square: float
    star_discrepancy: float

    @property
    def n(self) -> int:
        return self.stats.n

    def rows(self) -> list[tuple[Pattern, int, float, float, float]]:
        """``(pattern, count, frequency, expected, deviation)`` for every pattern."""
        out = []
        for pattern, p in self.expected.items():
            count = self.stats.counts.get(pattern, 0)
            freq = count / self.stats.n
            out.append((pattern, count, freq, p, freq - p))
        return out


def benford_report(terms: Sequence[int], m: int = 1) -> BenfordReport:
    if len(terms) == 0:
        raise ValueError("cannot report on an empty sequence")
    stats = digit_frequencies(terms, m)
    expected = {p: expected_prob(p) for p in all_patterns(m)}
    n = stats.n
    max_dev = 0.0
    chi2 = 0.0
    for pattern, p in expected.items():
        count = stats.counts.get(pattern, 0)
        max_dev = max(max_dev, abs(count / n - p))
        chi2 += (count - n * p) ** 2 / (n * p)
    disc = star_discrepancy([log10_mantissa(t) for t in terms])
    return BenfordReport(stats, expected, max_dev, chi2, disc)
