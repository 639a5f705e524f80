"""Size caps, with environment-variable defaults.

Caps are plain values passed down explicitly; nothing here is mutated at
runtime.  ``Caps.from_env()`` reads the environment once per call.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

SPECTRUM_CAP = 10**4  # divisor count of the exponent
CONVOLUTION_CAP = 10**7  # product of divisor counts in a divisor-grid sum
DIVISOR_CAP = 10**6
ORACLE_CAP = 10**5  # elements swept by the brute-force oracle
PAIR_CAP = 2000  # n1*n2 for the all-subgroups oracle
TABLE_CAP = 10**6

_ENV = {
    "spectrum": "ABCENSUS_SPECTRUM_CAP",
    "convolution": "ABCENSUS_CONVOLUTION_CAP",
    "oracle": "ABCENSUS_ORACLE_CAP",
    "pair": "ABCENSUS_PAIR_CAP",
    "table": "ABCENSUS_TABLE_CAP",
}


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    value = int(raw)
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got {raw!r}")
    return value


@dataclass(frozen=True)
class Caps:
    spectrum: int = SPECTRUM_CAP
    convolution: int = CONVOLUTION_CAP
    oracle: int = ORACLE_CAP
    pair: int = PAIR_CAP
    table: int = TABLE_CAP

    @classmethod
    def from_env(cls) -> "Caps":
        base = cls()
        return cls(**{k: _env_int(v, getattr(base, k)) for k, v in _ENV.items()})

    def override(self, **kwargs: int | None) -> "Caps":
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


def spectrum_cap() -> int:
    return _env_int(_ENV["spectrum"], SPECTRUM_CAP)


def convolution_cap() -> int:
    return _env_int(_ENV["convolution"], CONVOLUTION_CAP)


def oracle_cap() -> int:
    return _env_int(_ENV["oracle"], ORACLE_CAP)


def pair_cap() -> int:
    return _env_int(_ENV["pair"], PAIR_CAP)


def table_cap() -> int:
    return _env_int(_ENV["table"], TABLE_CAP)
