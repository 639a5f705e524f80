"""Element-order spectra and cyclic-subgroup counts of finite abelian groups."""

from .arith import (
    Factorization,
    divisors,
    euler_phi,
    factorize,
    gcd,
    is_prime,
    jordan_phi,
    lcm,
    moebius,
)
from .errors import (
    AbcensusError,
    CapExceededError,
    DomainError,
    NonIntegralError,
    NotADivisorError,
    SpecParseError,
    WidthOverflowError,
)
from .spectra import (
    GroupSpec,
    OrderSpectrum,
    PGroupType,
    average_order,
    cyclic_count_pgroup_type,
    cyclic_count_prime_power,
    cyclic_total,
    cyclic_total_rank2,
    full_spectrum,
    lcm_convolution_spectrum,
    order_count_lcm_convolution,
    order_count_moebius,
    parse_spec,
    primary_decomposition,
    split_divisor,
    subgroup_total_rank2,
    von_sterneck,
)

__version__ = "0.1.0"
