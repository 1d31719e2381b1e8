"""Closed-form lower bound on the return-word partition sum and the
exclusion of critical parameters in (0, 2]."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..words import fib_number
from .potential import PotentialParams
from .returns import lambda_truncated
from .zeta import DEFAULT_TOL, zeta

GAMMA = (1 + math.sqrt(5)) / 2


@dataclass(frozen=True)
class Levels:
    """P: least p with gamma^p >= N.  Q: greatest q with gamma^q < N.

    The alternative readings are kept for comparison: ``q_le`` is the
    greatest q with gamma^q <= N-1, and ``P_fib``/``Q_fib`` use bispecial
    lengths F_p - 2 in place of gamma^p.
    """

    P: int
    Q: int
    q_le: int
    P_fib: int
    Q_fib: int

    @property
    def consistent(self) -> bool:
        return self.P == self.Q + 1 and (self.P, self.Q) == (self.P_fib, self.Q_fib)

    def discrepancies(self) -> list[str]:
        out = []
        if self.P != self.Q + 1:
            out.append(f"P={self.P} != Q+1={self.Q + 1}")
        if self.q_le != self.Q:
            out.append(f"greatest q with gamma^q <= N-1 is {self.q_le}, not Q={self.Q}")
        if (self.P, self.Q) != (self.P_fib, self.Q_fib):
            out.append(f"bispecial-length reading gives P={self.P_fib}, Q={self.Q_fib}")
        return out


def levels_PQ(params: PotentialParams) -> Levels:
    N = params.N
    P = 1
    while GAMMA ** P < N:
        P += 1
    Q = P - 1
    q_le = 1
    while GAMMA ** (q_le + 1) <= N - 1:
        q_le += 1
    P_fib = 2
    while fib_number(P_fib) - 2 < N:
        P_fib += 1
    Q_fib = 2
    while fib_number(Q_fib + 1) - 2 <= N - 1:
        Q_fib += 1
    return Levels(P, Q, q_le, P_fib, Q_fib)


@dataclass(frozen=True)
class BoundReport:
    beta: float
    params: PotentialParams
    zeta_beta: float
    zeta_beta_minus_1: float
    t0_lower: float
    tw_lower: float
    tv_scale: float
    P: int
    Q: int
    gamma: float
    bound: float
    vacuous: bool

    @property
    def divergent(self) -> bool:
        return math.isinf(self.bound)


def lower_bound(beta: float, params: PotentialParams, tol: float = DEFAULT_TOL) -> BoundReport:
    """e^{-NA} (zeta(b)-1)^2 (zeta(b-1) - 2 zeta(b)) / (gamma^b - 1).

    For 1 < beta <= 2 the series zeta(beta-1) diverges and the bound is
    +inf.  When zeta(beta-1) - 2 zeta(beta) <= 0 the bound holds but says
    nothing; ``vacuous`` is set and the negative value is kept.
    """
    if not beta > 1:
        raise ValueError("beta must exceed 1")
    lv = levels_PQ(params)
    zb = zeta(beta, tol)
    zb1 = zeta(beta - 1, tol)
    t0 = zb - 1
    tw = math.inf if math.isinf(zb1) else zb1 - 2 * zb
    # sum_{p >= P} gamma^{(Q-p) beta} with P = Q + 1
    geom = GAMMA ** ((lv.Q - lv.P) * beta) / (1 - GAMMA ** -beta)
    if math.isinf(tw):
        bound = math.inf
    else:
        bound = math.exp(-params.N * params.A) * t0 * t0 * tw * geom
    return BoundReport(
        beta, params, zb, zb1, t0, tw, zb, lv.P, lv.Q, GAMMA, bound, tw <= 0
    )


@dataclass(frozen=True)
class ExclusionReport:
    params: PotentialParams
    reports: tuple[BoundReport, ...]
    monotone_betas: tuple[float, ...]
    monotone_sums: tuple[float, ...]
    max_len: int

    @property
    def all_divergent(self) -> bool:
        return all(r.divergent for r in self.reports)

    @property
    def monotone(self) -> bool:
        s = self.monotone_sums
        return all(a > b for a, b in zip(s, s[1:]))

    @property
    def excluded(self) -> bool:
        """The critical parameter cannot lie in (0, 2]."""
        return self.all_divergent and self.monotone


DEFAULT_EXCLUSION_BETAS = (1.05, 1.25, 1.5, 1.75, 2.0)
DEFAULT_MONOTONE_BETAS = (0.25, 0.5, 0.75, 1.0, 1.5, 2.0)


def beta_c_exclusion(
    params: PotentialParams,
    betas=DEFAULT_EXCLUSION_BETAS,
    monotone_betas=DEFAULT_MONOTONE_BETAS,
    max_len: int = 14,
) -> ExclusionReport:
    """Infinite lower bound on (1, 2] plus decrease of the truncated sums in beta.

    A divergent lower bound means lambda_beta != 1 for every beta in (1, 2];
    as lambda_beta decreases in beta, it cannot reach 1 on (0, 1] either.
    """
    for b in betas:
        if not 1 < b <= 2:
            raise ValueError(f"beta = {b} is outside (1, 2]")
    reports = tuple(lower_bound(b, params) for b in betas)
    sums = tuple(lambda_truncated(b, params, max_len).partial_sum for b in monotone_betas)
    return ExclusionReport(params, reports, tuple(monotone_betas), sums, max_len)
