"""Fibonacci words, Fibonacci numbers and the factor language of the infinite
Fibonacci word.

Words are plain Python strings over the characters ``'0'`` and ``'1'``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

ALPHABET = "01"


class WindowTooSmall(ValueError):
    """A query is longer than the factor oracle can certify."""


class OracleValidationError(RuntimeError):
    """The oracle window failed the n+1 complexity self-check."""


def check_word(u: str) -> str:
    if not isinstance(u, str) or any(c not in ALPHABET for c in u):
        raise ValueError(f"not a binary word: {u!r}")
    return u


def fib_number(n: int) -> int:
    """F_n with F_0 = 1, F_1 = 2, F_{n+1} = F_n + F_{n-1}.

    Python integers never overflow, so no bound check is needed beyond n >= 0.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    a, b = 1, 2
    for _ in range(n):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def fib_word(n: int) -> str:
    """omega_0 = '0', omega_1 = '01', omega_{n+1} = omega_n omega_{n-1}."""
    if n < 0:
        raise ValueError("n must be non-negative")
    prev, cur = "0", "01"
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, cur + prev
    return cur


def fib_prefix(length: int) -> str:
    """First `length` symbols of the infinite Fibonacci word."""
    if length < 1:
        raise ValueError("length must be positive")
    n = 0
    while fib_number(n) < length:
        n += 1
    return fib_word(n)[:length]


def mirror(u: str) -> str:
    return u[::-1]


def is_palindrome(u: str) -> bool:
    return u == u[::-1]


def occurrences(pattern: str, text: str) -> list[int]:
    """Start positions of `pattern` in `text`, overlaps included."""
    if not pattern:
        raise ValueError("pattern must be non-empty")
    out = []
    i = text.find(pattern)
    while i != -1:
        out.append(i)
        i = text.find(pattern, i + 1)
    return out


def _suffix_array(s: str) -> list[int]:
    return sorted(range(len(s)), key=lambda i: s[i:])


def _lcp_array(s: str, sa: list[int]) -> list[int]:
    # Kasai et al.; lcp[r] is the common prefix length of suffixes sa[r-1], sa[r].
    n = len(s)
    rank = [0] * n
    for r, i in enumerate(sa):
        rank[i] = r
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank[i]
        if r > 0:
            j = sa[r - 1]
            while i + h < n and j + h < n and s[i + h] == s[j + h]:
                h += 1
            lcp[r] = h
            if h:
                h -= 1
        else:
            h = 0
    return lcp


def distinct_factor_counts(s: str, max_len: int) -> list[int]:
    """Number of distinct factors of `s` of each length 0..max_len."""
    n = len(s)
    lcp = _lcp_array(s, _suffix_array(s))
    # hist[m] = number of adjacent suffix pairs sharing a prefix of length >= m
    hist = [0] * (max_len + 2)
    for h in lcp[1:]:
        hist[min(h, max_len + 1)] += 1
    for m in range(max_len, -1, -1):
        hist[m] += hist[m + 1]
    return [1] + [max(n - m + 1, 0) - hist[m] for m in range(1, max_len + 1)]


# factors up to this length are kept in a hash set for fast membership
_SET_LIMIT = 64


@dataclass(frozen=True)
class FactorOracle:
    """A certified prefix window of the Fibonacci word.

    Membership of words up to ``max_query_length`` symbols is decided by
    searching the window. On construction the window is checked to contain
    exactly m+1 distinct factors of every length m <= max_query_length, so a
    missed factor would be detected.
    """

    window: str
    max_query_length: int
    _short: frozenset = field(default=frozenset(), repr=False, compare=False)

    @classmethod
    def build(cls, max_query_length: int) -> FactorOracle:
        return _cached_oracle(max_query_length)

    def __post_init__(self):
        if self.max_query_length < 1:
            raise ValueError("max_query_length must be positive")
        if not fib_word(_level_for(len(self.window))).startswith(self.window):
            raise OracleValidationError("window is not a prefix of the Fibonacci word")
        counts = distinct_factor_counts(self.window, self.max_query_length)
        for m in range(1, self.max_query_length + 1):
            if counts[m] != m + 1:
                raise OracleValidationError(
                    f"window of length {len(self.window)} has {counts[m]} factors of length {m}, expected {m + 1}"
                )
        lim = min(self.max_query_length, _SET_LIMIT)
        w = self.window
        short = {w[i:i + m] for m in range(lim + 1) for i in range(len(w) - m + 1)}
        object.__setattr__(self, "_short", frozenset(short))

    def contains(self, u: str) -> bool:
        if len(u) > self.max_query_length:
            raise WindowTooSmall(
                f"query of length {len(u)} exceeds certified length {self.max_query_length}"
            )
        if len(u) <= _SET_LIMIT:
            return u in self._short
        return u in self.window

    def factors(self, n: int) -> list[str]:
        """L_n(omega), sorted."""
        if n > self.max_query_length:
            raise WindowTooSmall(f"length {n} exceeds certified length {self.max_query_length}")
        w = self.window
        return sorted({w[i:i + n] for i in range(len(w) - n + 1)})


def window_length(max_query_length: int) -> int:
    return max(6 * max_query_length + 32, fib_number(8))


def _level_for(length: int) -> int:
    n = 0
    while fib_number(n) < length:
        n += 1
    return n


@lru_cache(maxsize=32)
def _cached_oracle(max_query_length: int) -> FactorOracle:
    return FactorOracle(fib_prefix(window_length(max_query_length)), max_query_length)


@dataclass(frozen=True)
class Delta:
    """Longest prefix of a finite word lying in L(omega).

    ``saturated`` means the whole word is a factor, so the delta of any
    infinite extension may be larger than ``value``.
    """

    value: int
    saturated: bool

    @property
    def distance(self) -> float:
        """Distance to the subshift, 2**(-delta-1)."""
        return 2.0 ** (-self.value - 1)


def is_factor(u: str, oracle: FactorOracle) -> bool:
    return oracle.contains(check_word(u))


def delta(u: str, oracle: FactorOracle) -> Delta:
    check_word(u)
    if len(u) > oracle.max_query_length:
        raise WindowTooSmall(
            f"query of length {len(u)} exceeds certified length {oracle.max_query_length}"
        )
    # L(omega) is closed under prefixes, so the admissible prefix lengths form an interval
    lo, hi = 0, len(u)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if oracle.contains(u[:mid]):
            lo = mid
        else:
            hi = mid - 1
    return Delta(lo, lo == len(u))


def count_factors(n: int, oracle: FactorOracle) -> int:
    """|L_n(omega)|, read off the oracle window."""
    if n < 1:
        raise ValueError("n must be positive")
    return len(oracle.factors(n))
