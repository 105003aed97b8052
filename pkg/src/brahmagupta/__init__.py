"""Norm classes of Z(sqrt D), their unit orbits, and Benford statistics of orbit sequences."""

from .benford import (
    BenfordReport,
    DigitStats,
    benford_report,
    digit_frequencies,
    empirical_density,
    expected_prob,
    leading_digits,
    log10_mantissa,
    second_digit_marginal,
    star_discrepancy,
)
from .errors import BrahmaguptaError, EmptyNormClass, NormMismatch, PartitionError, RadicandError, RadicandMismatch
from .norm_class import (
    OrbitFundamental,
    OrbitPartition,
    SearchBox,
    associated,
    classify,
    orbit_partition,
    search_bounds,
    solutions_in_box,
)
from .orbit_seq import (
    SequenceSpec,
    SequenceWindow,
    Variant,
    check_characteristic_roots,
    enumerate_norm_class,
    generate,
    interleave,
)
from .pell_unit import CFExpansion, FundamentalUnit, cf_sqrt, convergent, fundamental_unit
from .quadint import QuadInt, conj, isqrt, mul, norm, parse_quadint

__version__ = "0.1.0"
