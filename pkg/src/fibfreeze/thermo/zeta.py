"""Riemann zeta on the real half-line beta > 1.

Direct summation of k^-beta for k < M, with the tail sum over k >= M given by
Euler-Maclaurin: the integral M^(1-beta)/(beta-1), the half term, and
Bernoulli corrections.  Derivatives of x^-beta alternate in sign and are
monotone, so the error is bounded by the first omitted correction; M is
increased until that bound is below `tol`.
"""

from __future__ import annotations

import math

# B_2, B_4, ..., B_20
_BERNOULLI = (
    1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6, -3617 / 510,
    43867 / 798, -174611 / 330,
)
_CORRECTIONS = 6

DEFAULT_TOL = 1e-12


def _rising(beta: float, n: int) -> float:
    # beta (beta+1) ... (beta+n-1)
    out = 1.0
    for i in range(n):
        out *= beta + i
    return out


def _correction(beta: float, M: int, j: int) -> float:
    # j-th Euler-Maclaurin term B_2j/(2j)! * (beta)_{2j-1} * M^(-beta-2j+1)
    return (
        _BERNOULLI[j - 1] / math.factorial(2 * j)
        * _rising(beta, 2 * j - 1)
        * M ** (-beta - 2 * j + 1)
    )


def zeta_tail(beta: float, M: int, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """Sum over k >= M of k^-beta and a bound on its error."""
    parts = [M ** (1 - beta) / (beta - 1), 0.5 * M ** (-beta)]
    for j in range(1, _CORRECTIONS + 1):
        parts.append(_correction(beta, M, j))
    err = abs(_correction(beta, M, _CORRECTIONS + 1))
    return math.fsum(parts), err


def zeta(beta: float, tol: float = DEFAULT_TOL) -> float:
    """Riemann zeta(beta) for real beta; math.inf where the series diverges (beta <= 1)."""
    if math.isnan(beta):
        raise ValueError("beta is NaN")
    if beta <= 1:
        return math.inf
    if not tol > 0:
        raise ValueError("tol must be positive")
    M = 8
    while True:
        tail, err = zeta_tail(beta, M, tol)
        if err <= tol / 2:
            break
        M *= 2
    head = math.fsum(k ** -beta for k in range(1, M))
    return head + tail


def hofbauer_beta_c(A: float, xtol: float = 1e-9) -> float:
    """The beta > 1 with zeta(beta) = e^A, by bracketing and bisection."""
    if not A > 0:
        raise ValueError("A must be positive")
    target = math.exp(A)
    # zeta decreases from +inf to 1 on (1, inf); bracket [lo, hi]
    lo = 1.0 + min(0.5, 0.5 / target)
    while zeta(lo) < target:
        lo = 1.0 + (lo - 1.0) / 2
    hi = 2.0
    while zeta(hi) > target:
        hi *= 2
    while hi - lo > xtol / 4:
        mid = 0.5 * (lo + hi)
        if zeta(mid) > target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
