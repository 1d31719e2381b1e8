"""Exhaustive small-instance batteries for every structural claim the
package relies on.  Each suite returns a VerifyReport; a report passes when
it records no failures."""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import asdict, dataclass, field

from . import rauzy as rz
from .thermo import (
    annotate_trajectory,
    annotation_violations,
    depth_words,
    entry_exit_words,
    enumerate_return_words,
    find_DW_members,
    hofbauer_beta_c,
    is_return_word,
    lambda_truncated,
    levels_PQ,
    lower_bound,
    validate_params,
    zeta,
)
from .words import (
    FactorOracle,
    count_factors,
    delta,
    fib_number,
    fib_prefix,
    fib_word,
    is_factor,
    is_palindrome,
    mirror,
    occurrences,
)

SUITES = ("fibwords", "rauzy", "bicephalic", "transitions", "bounds")


@dataclass
class VerifyReport:
    suite: str
    cases_run: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, case: str, expected, got) -> bool:
        self.cases_run += 1
        if expected != got:
            self.failures.append({"case": case, "expected": repr(expected), "got": repr(got)})
            return False
        return True

    def merge(self, other: VerifyReport) -> None:
        self.cases_run += other.cases_run
        self.failures.extend(other.failures)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["elapsed"] = round(self.elapsed, 3)
        d["ok"] = self.ok
        return d


def big_oracle() -> FactorOracle:
    # covers bispecial levels up to p = 12
    return FactorOracle.build(fib_number(12) + fib_number(11))


def brute_is_factor(u: str) -> bool:
    """Membership by searching a Fibonacci word at least four times longer."""
    m = 0
    while fib_number(m) < 4 * len(u):
        m += 1
    return u in fib_word(m)


def brute_return_words(length: int) -> list[str]:
    return [
        u for u in ("".join(t) for t in itertools.product("01", repeat=length))
        if is_return_word(u)
    ]


def suite_fibwords(r: VerifyReport) -> None:
    o = big_oracle()
    for n in range(1, 61):
        r.check(f"complexity n={n}", n + 1, count_factors(n, o))
    for n in range(26):
        r.check(f"omega_{n} prefix of omega_{n + 1}", True, fib_word(n + 1).startswith(fib_word(n)))
        r.check(f"|omega_{n}|", fib_number(n), len(fib_word(n)))
    for m in range(1, 21):
        bad = [u for u in o.factors(m) if not is_factor(mirror(u), o)]
        r.check(f"mirror closure length {m}", [], bad)
    for m in range(1, 11):
        bad = []
        for t in itertools.product("01", repeat=m):
            u = "".join(t)
            d = delta(u, o).value
            for j in range(m + 1):
                if delta(u[:j], o).value < min(d, j):
                    bad.append(u[:j])
        r.check(f"delta monotone under truncation, length {m}", [], bad)
    for m in range(1, 19):
        bad = [
            u for u in ("".join(t) for t in itertools.product("01", repeat=m))
            if is_factor(u, o) != brute_is_factor(u)
        ]
        r.check(f"is_factor vs brute force, length {m}", [], bad)


def suite_rauzy(r: VerifyReport) -> None:
    o = big_oracle()
    for n in range(1, 41):
        g = rz.build_rauzy(n, o)
        r.check(f"Gamma_{n} vertices", n + 1, len(g.vertices))
        r.check(f"Gamma_{n} edges", n + 2, len(g.edges))
        outs = sorted(len(g.out_edges(v)) for v in g.vertices)
        ins = sorted(len(g.in_edges(v)) for v in g.vertices)
        r.check(f"Gamma_{n} single branching vertex", [1] * n + [2], outs)
        r.check(f"Gamma_{n} single merging vertex", [1] * n + [2], ins)
        sp = rz.special_words(n, o)
        r.check(f"length {n} bispecial iff F_p-2", n in rz.bispecial_lengths(n), sp["left"] == sp["right"])
    base = rz.bispecial_level(2, o)
    for p in range(2, 13):
        lv = rz.bispecial_level(p, o)
        r.check(f"p={p} |W|", fib_number(p) - 2, len(lv.W))
        r.check(f"p={p} W palindrome prefix", (True, True), (is_palindrome(lv.W), fib_prefix(max(len(lv.W), 1)).startswith(lv.W)))
        r.check(f"p={p} loop lengths", (fib_number(p - 1), fib_number(p - 2)), (len(lv.R1), len(lv.R2)))
        r.check(f"p={p} loops admissible", (True, True), (o.contains(lv.W + lv.R1), o.contains(lv.W + lv.R2)))
        r.check(f"hierarchy p=2 n={p - 2}", lv, rz.hierarchy_level(base, p - 2))
    for n in range(15):
        i1, _ = rz.loop_index_expansion(n)
        r.check(f"phi(R1^({n})) = mirror(omega_{n})", mirror(fib_word(n)), rz.phi_encode(i1))
        r.check(f"phi^-1(mirror(omega_{n})) = R1^({n})", rz.hierarchy_level(base, n).R1, rz.phi_decode(mirror(fib_word(n)), base))
    for n in range(2, 15):
        xi = rz.xi_palindrome_prefix(n)
        r.check(f"xi_{n} = omega_{n} minus last two", fib_word(n)[:-2], xi)
        r.check(f"xi_{n} palindrome", True, is_palindrome(xi))
    for p in (2, 3, 4):
        lv = rz.bispecial_level(p, o)
        for n in range(1, 26):
            lang = rz.loop_language(lv, n, o)
            r.check(f"L_{n}(omega) = phi(L_{n}(W)) p={p}", o.factors(n), sorted(lang.images()))
            r.check(f"|L_{n}(W)| p={p}", n + 1, len(lang.sequences))
    ws = [rz.hierarchy_level(base, k).W for k in range(11)]
    for n in range(11):
        for k in range(n + 1):
            r.check(
                f"W^({k}) palindrome prefix and suffix of W^({n})",
                (True, True, True),
                (ws[n].startswith(ws[k]), ws[n].endswith(ws[k]), is_palindrome(ws[k])),
            )
    chain = [rz.hierarchy_level(base, k).W for k in range(12)]
    for m in range(len(base.W), fib_number(10) + 1):
        sp = rz.special_words(m, o)
        if sp["left"] == sp["right"]:
            continue
        V = sp["left"]
        ok = any(chain[k].startswith(V) and V.startswith(chain[k - 1]) for k in range(1, len(chain)))
        r.check(f"purely left special of length {m} sandwiched", True, ok)
    r.check("omega = prod mirror(omega_n)", True, fib_prefix(len(rz.mirror_product(10))) == rz.mirror_product(10))
    r.check("DOT Gamma_3 marks 010 bispecial", True,
            '"010" [shape=doublecircle, special="bispecial"]' in rz.export_dot(rz.build_rauzy(3, o)))


def suite_bicephalic(r: VerifyReport) -> None:
    o = big_oracle()
    for p in (2, 3):
        lv = rz.bispecial_level(p, o)
        for n in range(1, 41):
            b = rz.bicephalic_set(lv, n, o)
            r.check(f"card B_W({n}) p={p}", n, len(b.words))
            r.check(f"special count B_W({n}) p={p}", rz.expected_special_count(n), b.special_count)
            r.check(f"occurrences of W in B_W({n}) p={p}", [n] * n, [len(occurrences(lv.W, w)) for w in b.words])
    for p in (2, 3, 4):
        lv = rz.bispecial_level(p, o)
        for n in range(1, 13):
            b = rz.bicephalic_set(lv, n, o)
            bad = [w for w in b.words
                   if not (is_factor(mirror(w), o) and mirror(w).startswith(mirror(lv.W)) and mirror(w).endswith(mirror(lv.W)))]
            r.check(f"mirror of B_W({n}) bicephalic p={p}", [], bad)
    for p in (2, 3):
        lv = rz.bispecial_level(p, o)
        for k in range(1, 21):
            b = rz.bicephalic_set(lv, k, o)
            cap = fib_number(p) - 1 + (k - 1) * fib_number(p - 1)
            for w in b.words:
                seq = b.sequences[w]
                all_r1 = all(i == 1 for i in seq)
                r.check(f"length bound p={p} k={k} {rz.phi_encode(seq)}",
                        (True, all_r1), (len(w) + 1 <= cap, len(w) + 1 == cap))
    params = validate_params(10, 1.0)
    lv_p = levels_PQ(params)
    top = rz.bispecial_level(lv_p.P, o)
    v = rz.purely_left_special(params.N - 1, o)
    for h in range(1, 11):
        lang = rz.loop_language(top, h - 1, o)
        got = sorted({len(occurrences(v, w)) for w in lang.words()})
        r.check(f"occurrences of v in W^P loops, h={h}", [h], got)


def suite_transitions(r: VerifyReport) -> None:
    for m in range(1, 19):
        r.check(f"return words of length {m}", brute_return_words(m),
                [u for u in enumerate_return_words(m) if len(u) == m])
    params = validate_params(10, 1.0)
    o = FactorOracle.build(25)
    bad = []
    fe = ef = 0
    for u in enumerate_return_words(22):
        ann = annotate_trajectory(u, params, o, check=False)
        fe += len(ann.fe_transitions)
        ef += len(ann.ef_transitions)
        problems = annotation_violations(ann, params, o)
        if problems:
            bad.append((u, problems))
    r.check("transition propositions on return words <= 22 at N=10", [], bad[:20])
    r.cases_run += fe + ef
    ee = entry_exit_words(params, o)
    r.check("exit words at N=10", 9, len(ee["exit"]))
    r.check("entry words at N=10", ["0", "010", "010010"], ee["entry"])
    small = validate_params(5, 1.0)
    ob = big_oracle()
    lv = rz.bispecial_level(4, ob)
    members = find_DW_members(lv, small, ob, 60)
    r.check("D_W at N=5 has members below length 60", True, len(members) > 0)
    v = rz.purely_left_special(small.N - 1, ob)
    for u in members:
        dw = depth_words(annotate_trajectory(u, small, ob), small)
        r.check(
            f"depth words of {u}",
            (True, True, True),
            (
                dw.U0.startswith("0") and dw.U0.endswith(lv.W),
                dw.U1.startswith(lv.W) and dw.U1.endswith(lv.W),
                dw.U2.startswith(lv.W) and dw.U2.endswith(v),
            ),
        )


def suite_bounds(r: VerifyReport) -> None:
    r.check("|zeta(2) - pi^2/6| < 1e-10", True, abs(zeta(2.0, 1e-12) - math.pi ** 2 / 6) < 1e-10)
    r.check("|zeta(4) - pi^4/90| < 1e-10", True, abs(zeta(4.0, 1e-12) - math.pi ** 4 / 90) < 1e-10)
    r.check("zeta(1) diverges", math.inf, zeta(1.0))
    r.check("hofbauer beta_c(log zeta(2)) = 2", True, abs(hofbauer_beta_c(math.log(math.pi ** 2 / 6)) - 2) < 1e-8)
    params = validate_params(10, 1.0)
    for b in (1.1, 1.5, 2.0):
        r.check(f"bound({b}) infinite", math.inf, lower_bound(b, params).bound)
    vals = [lower_bound(2 + e, params).bound for e in (0.1, 0.01, 0.001)]
    r.check("bound(2+eps) increases as eps decreases", True, vals[0] < vals[1] < vals[2])
    lv = levels_PQ(params)
    r.check("levels N=10", (5, 4), (lv.P, lv.Q))
    est = lambda_truncated(1.0, params, 5)
    r.check("lambda(1, max_len 5)", True,
            abs(est.partial_sum - (math.exp(-1) + math.exp(-4) + math.exp(-5))) < 1e-15)
    full = lambda_truncated(1.0, params, 22)
    cum = full.cumulative_sums
    r.check("lambda non-decreasing in max_len", True, all(a <= b for a, b in zip(cum, cum[1:])))
    sums = [lambda_truncated(b, params, 16).partial_sum for b in (1.0, 2.0, 3.0)]
    r.check("lambda strictly decreasing in beta", True, sums[0] > sums[1] > sums[2])


_RUNNERS = {
    "fibwords": suite_fibwords,
    "rauzy": suite_rauzy,
    "bicephalic": suite_bicephalic,
    "transitions": suite_transitions,
    "bounds": suite_bounds,
}


def verify(suite: str) -> VerifyReport:
    if suite == "all":
        total = VerifyReport("all")
        t0 = time.perf_counter()
        for name in SUITES:
            total.merge(verify(name))
        total.elapsed = time.perf_counter() - t0
        return total
    if suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    r = VerifyReport(suite)
    t0 = time.perf_counter()
    _RUNNERS[suite](r)
    r.elapsed = time.perf_counter() - t0
    return r
