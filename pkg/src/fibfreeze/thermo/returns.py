"""Return words to the cylinder [000], trajectory annotation and truncated
partition sums."""

from __future__ import annotations

import math
import os
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..rauzy import BISPECIAL, RIGHT_SPECIAL, classify_word
from ..words import FactorOracle, check_word
from .potential import PotentialParams, potential_value

BLOCK = "000"
TAIL = BLOCK
WORKERS_ENV = "FIBFREEZE_WORKERS"

FREE = "free"
EXCURSION = "excursion"


class NotAReturnWord(ValueError):
    pass


def is_return_word(u: str) -> bool:
    """True iff u.000 has 000 at 0 and nowhere in [1, |u|-1]."""
    check_word(u)
    if not u:
        return False
    s = u + BLOCK
    return s.startswith(BLOCK) and s.find(BLOCK, 1) == len(u)


def _dfs_exact(prefix: str, length: int) -> Iterator[str]:
    # words below `prefix` of exactly `length` symbols with no interior 000,
    # lexicographic order
    if len(prefix) > length:
        return
    stack = [prefix]
    while stack:
        w = stack.pop()
        if len(w) == length:
            if w[-1] == "1":
                yield w
            continue
        for c in "10":
            x = w + c
            if x[-3:] != BLOCK:
                stack.append(x)


def _dfs_upto(prefix: str, max_len: int) -> Iterator[str]:
    # every return word below `prefix` of length <= max_len, DFS order
    stack = [prefix]
    while stack:
        w = stack.pop()
        if w[-1] == "1":
            yield w
        if len(w) == max_len:
            continue
        for c in "10":
            x = w + c
            if x[-3:] != BLOCK:
                stack.append(x)


def enumerate_return_words(max_len: int) -> Iterator[str]:
    """Return words to [000] of length <= max_len, by length then lexicographically.

    Apart from '0', every return word starts with 0001 and ends with 1.
    """
    if max_len < 1:
        raise ValueError("max_len must be positive")
    yield "0"
    for length in range(4, max_len + 1):
        yield from _dfs_exact("0001", length)


@dataclass(frozen=True)
class TrajectoryAnnotation:
    word: str
    deltas: tuple[int, ...]
    zones: tuple[str, ...]
    accidents: tuple[tuple[int, int], ...]
    fe_transitions: tuple[int, ...]
    ef_transitions: tuple[int, ...]
    entry_bispecials: tuple[str, ...]
    exit_words: tuple[str, ...] = field(default=())

    @property
    def exit_word(self) -> str | None:
        return self.exit_words[-1] if self.exit_words else None

    @property
    def accident_times(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.accidents)


def trajectory_deltas(u: str, oracle: FactorOracle) -> list[int]:
    """delta of u_k ... u_{|u|-1} 000 for k = 0..|u|-1.

    Uses delta(k) >= delta(k-1) - 1, so each step only tries to extend.
    """
    s = u + TAIL
    contains = oracle.contains
    out = []
    d = 0
    for k in range(len(u)):
        d = max(d - 1, 0)
        while k + d < len(s) and contains(s[k:k + d + 1]):
            d += 1
        out.append(d)
    return out


def _oracle_for(u: str, oracle: FactorOracle | None) -> FactorOracle:
    if oracle is None:
        return FactorOracle.build(max(len(u) + len(TAIL), 8))
    return oracle


def annotate_trajectory(
    u: str, params: PotentialParams, oracle: FactorOracle | None = None, check: bool = True
) -> TrajectoryAnnotation:
    """Delta profile, zones, accidents and zone transitions of the orbit of u.000.

    With ``check`` the transition propositions are asserted and a violation
    raises AssertionError.
    """
    if not is_return_word(u):
        raise NotAReturnWord(f"{u!r} is not a return word to [000]")
    oracle = _oracle_for(u, oracle)
    if len(u) + len(TAIL) > oracle.max_query_length:
        raise ValueError(f"oracle window too small for a word of length {len(u)}")
    s = u + TAIL
    N = params.N
    d = trajectory_deltas(u, oracle)
    zones = tuple(EXCURSION if x >= N else FREE for x in d)
    accidents, fe, ef, entries, exits = [], [], [], [], []
    for k in range(1, len(u)):
        if d[k] > d[k - 1] - 1:
            accidents.append((k, d[k]))
        if d[k] >= N and d[k - 1] <= N - 1:
            fe.append(k)
            entries.append(s[k:k + d[k - 1] - 1])
        if d[k - 1] >= N and d[k] <= N - 1:
            ef.append(k)
            exits.append(s[k:k + N - 1])
    ann = TrajectoryAnnotation(
        u, tuple(d), zones, tuple(accidents), tuple(fe), tuple(ef), tuple(entries), tuple(exits)
    )
    if check:
        problems = annotation_violations(ann, params, oracle)
        if problems:
            raise AssertionError(f"{u}: " + "; ".join(problems))
    return ann


def annotation_violations(
    ann: TrajectoryAnnotation, params: PotentialParams, oracle: FactorOracle
) -> list[str]:
    """Every broken zone/accident/transition property, as readable strings."""
    N = params.N
    d = ann.deltas
    s = ann.word + TAIL
    acc = set(ann.accident_times)
    bad = []
    for k, x in enumerate(d):
        if (ann.zones[k] == EXCURSION) != (x >= N):
            bad.append(f"zone mismatch at {k}")
    for k in range(1, len(d)):
        if d[k] < d[k - 1] - 1:
            bad.append(f"delta dropped by more than one at {k}")
        if k not in acc and d[k] != d[k - 1] - 1:
            bad.append(f"non-accident {k} does not decrement")
        if k in acc:
            w = s[k:k + d[k - 1] - 1]
            if classify_word(w, oracle).kind != BISPECIAL:
                bad.append(f"accident {k}: {w!r} is not bispecial")
    for k, w in zip(ann.fe_transitions, ann.entry_bispecials):
        if not (d[k] >= N and d[k - 1] <= N - 1):
            bad.append(f"FE {k} does not cross the threshold")
        if len(w) > N - 2 or classify_word(w, oracle).kind != BISPECIAL:
            bad.append(f"FE {k}: entry word {w!r} is not a bispecial of length <= N-2")
        free_word = s[k - 1:k - 1 + d[k - 1]]
        if classify_word(free_word, oracle).kind in (RIGHT_SPECIAL, BISPECIAL):
            bad.append(f"FE {k}: {free_word!r} is right special")
    for k, w in zip(ann.ef_transitions, ann.exit_words):
        if d[k - 1] != N or d[k] != N - 1:
            bad.append(f"EF {k}: deltas {d[k - 1]}, {d[k]} are not N, N-1")
        if len(w) != N - 1 or classify_word(w, oracle).kind in (RIGHT_SPECIAL, BISPECIAL):
            bad.append(f"EF {k}: exit word {w!r} is right special")
    return bad


def birkhoff_sum(u: str, params: PotentialParams, oracle: FactorOracle | None = None) -> float:
    """Sum of the potential along the first |u| shifts of u.000."""
    if not is_return_word(u):
        raise NotAReturnWord(f"{u!r} is not a return word to [000]")
    oracle = _oracle_for(u, oracle)
    return math.fsum(potential_value(x, params) for x in trajectory_deltas(u, oracle))


@dataclass(frozen=True)
class PartitionEstimate:
    beta: float
    params: PotentialParams
    max_len: int
    partial_sum: float
    num_return_words: int
    per_length_counts: tuple[int, ...]
    cumulative_sums: tuple[float, ...]

    def partial_sum_upto(self, length: int) -> float:
        if length < 1:
            return 0.0
        return self.cumulative_sums[min(length, self.max_len) - 1]


def _prefixes(depth: int) -> list[str]:
    return list(_dfs_exact_all("0001", depth))


def _dfs_exact_all(prefix: str, length: int) -> Iterator[str]:
    # live prefixes (no interior 000) of exactly `length` symbols, any last symbol
    stack = [prefix]
    while stack:
        w = stack.pop()
        if len(w) == length:
            yield w
            continue
        for c in "10":
            x = w + c
            if x[-3:] != BLOCK:
                stack.append(x)


def _terms_below(prefix: str, max_len: int, beta: float, N: int, A: float) -> list[tuple[int, float]]:
    params = PotentialParams(N, A)
    oracle = FactorOracle.build(max(max_len + len(TAIL), 8))
    pot = {}
    out = []
    for u in _dfs_upto(prefix, max_len):
        parts = []
        for x in trajectory_deltas(u, oracle):
            v = pot.get(x)
            if v is None:
                v = pot[x] = potential_value(x, params)
            parts.append(v)
        out.append((len(u), math.exp(beta * math.fsum(parts))))
    return out


def _terms_short(max_len: int, beta: float, params: PotentialParams, depth: int) -> list[tuple[int, float]]:
    oracle = FactorOracle.build(max(max_len + len(TAIL), 8))
    out = []
    for u in enumerate_return_words(min(max_len, depth - 1)):
        out.append((len(u), math.exp(beta * birkhoff_sum(u, params, oracle))))
    return out


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        n = int(env)
        if n < 1:
            raise ValueError(f"{WORKERS_ENV} must be a positive integer")
        return n
    return os.cpu_count() or 1


# below this cutoff a process pool costs more than it saves
_PARALLEL_MIN_LEN = 18
_SPLIT_DEPTH = 10


def lambda_truncated(
    beta: float, params: PotentialParams, max_len: int, workers: int | None = None
) -> PartitionEstimate:
    """Sum of exp(beta * S_|u| phi) over return words u with |u| <= max_len.

    Terms are added with math.fsum, which is correctly rounded, so the value
    does not depend on how the enumeration is split across workers.
    """
    if not beta > 0:
        raise ValueError("beta must be positive")
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    if max_len == 0:
        return PartitionEstimate(beta, params, 0, 0.0, 0, (), ())
    workers = default_workers() if workers is None else workers
    depth = _SPLIT_DEPTH
    if max_len < depth:
        terms = _terms_short(max_len, beta, params, max_len + 1)
    else:
        terms = _terms_short(max_len, beta, params, depth)
        prefixes = _prefixes(depth)
        args = [(p, max_len, beta, params.N, params.A) for p in prefixes]
        if workers > 1 and max_len >= _PARALLEL_MIN_LEN:
            with ProcessPoolExecutor(max_workers=workers) as ex:
                for part in ex.map(_terms_below_star, args):
                    terms.extend(part)
        else:
            for a in args:
                terms.extend(_terms_below(*a))
    by_len: list[list[float]] = [[] for _ in range(max_len + 1)]
    for length, t in terms:
        by_len[length].append(t)
    counts = tuple(len(b) for b in by_len[1:])
    running: list[float] = []
    cumulative = []
    for b in by_len[1:]:
        running.extend(b)
        cumulative.append(math.fsum(running))
    return PartitionEstimate(
        beta, params, max_len, cumulative[-1], sum(counts), counts, tuple(cumulative)
    )


def _terms_below_star(args):
    return _terms_below(*args)
