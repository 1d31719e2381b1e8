"""Entry/exit words and the family D_W of single-bispecial excursions."""

from __future__ import annotations

from dataclasses import dataclass

from ..rauzy import (
    BISPECIAL,
    RIGHT_SPECIAL,
    BispecialLevel,
    bicephalic_set,
    bispecial_lengths,
    classify_word,
    purely_left_special,
)
from ..words import FactorOracle, fib_prefix
from .potential import PotentialParams
from .returns import TAIL, TrajectoryAnnotation, annotate_trajectory, is_return_word


def entry_exit_words(params: PotentialParams, oracle: FactorOracle) -> dict[str, list[str]]:
    """Entry words: bispecials of length <= N-2.  Exit words: factors of
    length N-1 that are not right special."""
    N = params.N
    entry = [fib_prefix(m) for m in bispecial_lengths(N - 2)]
    exits = [
        v for v in oracle.factors(N - 1)
        if classify_word(v, oracle).kind not in (RIGHT_SPECIAL, BISPECIAL)
    ]
    return {"entry": sorted(entry), "exit": exits}


def _excursion_accidents(ann: TrajectoryAnnotation, N: int) -> list[int]:
    # accidents at excursion times, leaving out the entry at time 1
    return [k for k, _ in ann.accidents if k >= 2 and ann.deltas[k] >= N]


def classify_DW(
    u: str, level: BispecialLevel, params: PotentialParams, oracle: FactorOracle
) -> bool:
    """Membership of the trajectory of u.000 in D_W.

    Requires: entry into the excursion zone at time 1; exactly two accidents
    at later excursion times, each revealing W; a single exit, through the
    purely left special word of length N-1.
    """
    N = params.N
    if not is_return_word(u):
        raise ValueError(f"{u!r} is not a return word to [000]")
    if len(level.W) < N:
        raise ValueError(f"|W| = {len(level.W)} must be at least N = {N}")
    ann = annotate_trajectory(u, params, oracle)
    return _is_dw(ann, level, params, oracle)


def _is_dw(ann: TrajectoryAnnotation, level: BispecialLevel, params: PotentialParams, oracle) -> bool:
    N = params.N
    d = ann.deltas
    if len(d) < 2 or d[1] < N or 1 not in ann.fe_transitions:
        return False
    if ann.fe_transitions != (1,):
        return False
    exc = _excursion_accidents(ann, N)
    if len(exc) != 2:
        return False
    s = ann.word + TAIL
    for k in exc:
        if s[k:k + d[k - 1] - 1] != level.W:
            return False
    if len(ann.ef_transitions) != 1:
        return False
    (e,) = ann.ef_transitions
    if e <= exc[-1]:
        return False
    return ann.exit_words[0] == purely_left_special(N - 1, oracle)


@dataclass(frozen=True)
class DepthWords:
    """The three maximal admissible words read at times 1, l and l'."""

    U0: str
    U1: str
    U2: str
    l: int
    l_prime: int


def depth_words(ann: TrajectoryAnnotation, params: PotentialParams) -> DepthWords:
    s = ann.word + TAIL
    d = ann.deltas
    l, lp = _excursion_accidents(ann, params.N)
    return DepthWords(s[1:1 + d[1]], s[l:l + d[l]], s[lp:lp + d[lp]], l, lp)


def dw_candidates(
    level: BispecialLevel, params: PotentialParams, oracle: FactorOracle, max_len: int
) -> list[str]:
    """Return words shaped 0 . U0 . X1 . X2 . a, where U0 = 0 X0 W is a
    factor (X0 possibly empty), W X1 is identical bicephalic, W X2 ends with the exit word v and
    va is not a factor.  These are the only shapes D_W can take; membership
    is still decided by `classify_DW`.
    """
    N = params.N
    W = level.W
    v = purely_left_special(N - 1, oracle)
    limit = max_len
    heads = []
    for m in range(len(W) + 1, limit):
        heads.extend(f for f in oracle.factors(m) if f.startswith("00") and f.endswith(W))
    middles = []
    k = 2
    while len(W) + (k - 1) * len(level.R2) <= limit:
        middles.extend(w[len(W):] for w in bicephalic_set(level, k, oracle).words)
        k += 1
    tails = []
    for m in range(len(W) + 1, limit):
        tails.extend(f[len(W):] for f in oracle.factors(m) if f.startswith(W) and f.endswith(v))
    out = set()
    for h in heads:
        for mid in middles:
            # the closing 000 block may swallow up to three trailing symbols
            if 1 + len(h) + len(mid) - len(TAIL) >= limit:
                continue
            for t in tails:
                for a in "01":
                    if oracle.contains(v + a):
                        continue
                    # when a = 0 the symbol va may already belong to the closing 000 block
                    glued = "0" + h + mid + t + a + TAIL
                    u = glued[:glued.find(TAIL, 1)]
                    if len(u) < limit and is_return_word(u):
                        out.add(u)
    return sorted(out, key=lambda w: (len(w), w))


def find_DW_members(
    level: BispecialLevel, params: PotentialParams, oracle: FactorOracle, max_len: int
) -> list[str]:
    return [u for u in dw_candidates(level, params, oracle, max_len)
            if classify_DW(u, level, params, oracle)]
