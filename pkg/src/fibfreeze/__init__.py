"""Combinatorics of the Fibonacci word and lower bounds for the freezing
phase transition of a Hofbauer-type potential around the Fibonacci subshift."""

from .words import (
    Delta,
    FactorOracle,
    count_factors,
    delta,
    fib_number,
    fib_prefix,
    fib_word,
    is_factor,
    mirror,
    occurrences,
)

__version__ = "0.1.0"
