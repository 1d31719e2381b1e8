from __future__ import annotations

import math
from dataclasses import dataclass

from ..words import fib_number

MIN_N = 5


class InvalidParameters(ValueError):
    pass


def _is_bispecial_length(m: int) -> bool:
    p = 2
    while fib_number(p) - 2 < m:
        p += 1
    return fib_number(p) - 2 == m


@dataclass(frozen=True)
class PotentialParams:
    """Excursion threshold N and free-zone penalty A."""

    N: int
    A: float

    def __post_init__(self):
        if not isinstance(self.N, int) or isinstance(self.N, bool):
            raise InvalidParameters(f"N must be an integer, got {self.N!r}")
        if self.N < MIN_N:
            raise InvalidParameters(f"N must be at least {MIN_N}, got {self.N}")
        if _is_bispecial_length(self.N - 1):
            raise InvalidParameters(
                f"N-1 = {self.N - 1} equals F_n - 2 for some n >= 2; N-1 must not be a bispecial length"
            )
        if not (self.A > 0) or math.isinf(self.A):
            raise InvalidParameters(f"A must be a positive finite real, got {self.A!r}")


def validate_params(N: int, A: float) -> PotentialParams:
    return PotentialParams(N, float(A))


def potential_value(delta_value: int, params: PotentialParams) -> float:
    """-log(1 + 1/delta) in the excursion zone (delta >= N), -A otherwise."""
    if delta_value < 0:
        raise ValueError("delta must be non-negative")
    if delta_value >= params.N:
        return -math.log1p(1.0 / delta_value)
    return -params.A
