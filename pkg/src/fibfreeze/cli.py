"""Command-line front end: ``fibfreeze <subcommand> [options]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import rauzy as rz
from .thermo import (
    InvalidParameters,
    annotate_trajectory,
    beta_c_exclusion,
    enumerate_return_words,
    is_return_word,
    lambda_truncated,
    lower_bound,
    validate_params,
)
from .verify import SUITES, verify
from .words import FactorOracle, fib_number, fib_prefix, fib_word

LAMBDA_FIELDS = ["beta", "N", "A", "max_len", "num_return_words", "partial_sum"]
BOUND_FIELDS = ["beta", "zeta_beta", "zeta_beta_minus_1", "t0", "tw", "tv_scale", "P", "Q", "bound", "vacuous"]


class UsageError(Exception):
    pass


def fmt(x) -> str:
    """17 significant digits; divergent values as the token ``inf``."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".17g")


def fmt_input(x: float) -> str:
    """Shortest repr for values the user typed in."""
    if float(x).is_integer():
        return str(int(x))
    return repr(float(x))


def _int_at_least(lo: int):
    def parse(s: str) -> int:
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {s!r}")
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {v}")
        return v
    return parse


def _real(s: str) -> float:
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a real number, got {s!r}")
    if math.isnan(v):
        raise argparse.ArgumentTypeError("NaN is not allowed")
    return v


def _binary(s: str) -> str:
    if not s or any(c not in "01" for c in s):
        raise argparse.ArgumentTypeError(f"expected a non-empty word over 0/1, got {s!r}")
    return s


def parse_sweep(spec: str) -> list[float]:
    """``b0:b1:step``, both ends included."""
    try:
        b0, b1, step = (float(x) for x in spec.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"sweep must look like b0:b1:step, got {spec!r}")
    if not step > 0 or b1 < b0:
        raise argparse.ArgumentTypeError("sweep needs step > 0 and b0 <= b1")
    n = int(math.floor((b1 - b0) / step + 1e-9))
    return [round(b0 + i * step, 12) for i in range(n + 1)]


def _sweep_type(s: str) -> list[float]:
    return parse_sweep(s)


def _oracle_for_length(m: int) -> FactorOracle:
    return FactorOracle.build(max(m, 8))


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, indent=None, sort_keys=False) + "\n")


def _csv_rows(fields, rows, out) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    for row in rows:
        w.writerow(row)
    out.write(buf.getvalue())


def cmd_word(a, out) -> int:
    out.write((fib_word(a.level) if a.level is not None else fib_prefix(a.length)) + "\n")
    return 0


def cmd_factors(a, out) -> int:
    o = _oracle_for_length(a.length + 1)
    facs = o.factors(a.length)
    if a.classify:
        kinds = [rz.classify_word(f, o).kind for f in facs]
        if a.json:
            _emit_json([{"word": f, "kind": k} for f, k in zip(facs, kinds)], out)
        else:
            width = max(len(f) for f in facs)
            for f, k in zip(facs, kinds):
                out.write(f"{f:<{width}}  {k}\n")
    elif a.json:
        _emit_json(facs, out)
    else:
        out.write("\n".join(facs) + "\n")
    return 0


def cmd_rauzy(a, out) -> int:
    g = rz.build_rauzy(a.order, _oracle_for_length(a.order + 1))
    if a.dot:
        out.write(rz.export_dot(g))
    elif a.json:
        _emit_json({
            "order": g.order,
            "vertices": list(g.vertices),
            "edges": [[e.source, e.target, e.appended, e.prepended] for e in g.edges],
            "branching": g.branching_vertex,
            "merging": g.merging_vertex,
        }, out)
    else:
        out.write(f"order {g.order}: {len(g.vertices)} vertices, {len(g.edges)} edges\n")
        out.write(f"A (outdegree 2): {g.branching_vertex}\nB (indegree 2): {g.merging_vertex}\n")
        for e in g.edges:
            out.write(f"{e.source} -{e.appended}-> {e.target}\n")
    return 0


def _level(p: int) -> rz.BispecialLevel:
    return rz.bispecial_level(p, _oracle_for_length(fib_number(p) + fib_number(p - 1)))


def cmd_bispecial(a, out) -> int:
    lv = _level(a.p)
    if a.json:
        _emit_json({"p": lv.p, "W": lv.W, "R1": lv.R1, "R2": lv.R2}, out)
    else:
        out.write(f"p  {lv.p}\nW  {lv.W}\nR1 {lv.R1}\nR2 {lv.R2}\n")
    return 0


def cmd_loops(a, out) -> int:
    lv = _level(a.p)
    o = _oracle_for_length(len(lv.W) + a.n * len(lv.R1))
    lang = rz.loop_language(lv, a.n, o)
    if a.json:
        _emit_json(lang.images(), out)
    else:
        for s, w in zip(lang.sequences, lang.words()):
            out.write(f"{rz.phi_encode(s)}  {w}\n")
    return 0


def cmd_returns(a, out) -> int:
    words = list(enumerate_return_words(a.max_len))
    if a.csv:
        _csv_rows(["length", "word"], [(len(u), u) for u in words], out)
    elif a.json:
        _emit_json(words, out)
    else:
        out.write("\n".join(words) + "\n")
    return 0


def _params(a):
    return validate_params(a.N, a.A)


def cmd_annotate(a, out) -> int:
    params = _params(a)
    if not is_return_word(a.word):
        raise UsageError(f"{a.word} is not a return word to [000]")
    ann = annotate_trajectory(a.word, params)
    if a.json:
        _emit_json({
            "word": ann.word,
            "deltas": list(ann.deltas),
            "zones": list(ann.zones),
            "accidents": [{"time": k, "depth": d} for k, d in ann.accidents],
            "fe_transitions": list(ann.fe_transitions),
            "ef_transitions": list(ann.ef_transitions),
            "entry_bispecials": list(ann.entry_bispecials),
            "exit_word": ann.exit_word,
        }, out)
        return 0
    s = ann.word + "000"
    acc = dict(ann.accidents)
    out.write("k  symbol  delta  zone       event\n")
    for k, d in enumerate(ann.deltas):
        ev = []
        if k in acc:
            ev.append("accident")
        if k in ann.fe_transitions:
            ev.append("FE")
        if k in ann.ef_transitions:
            ev.append("EF")
        out.write(f"{k:<2} {s[k]:<7} {d:<6} {ann.zones[k]:<10} {','.join(ev)}\n".rstrip() + "\n")
    out.write(f"entry bispecials: {', '.join(repr(w) for w in ann.entry_bispecials) or '-'}\n")
    out.write(f"exit word: {ann.exit_word or '-'}\n")
    return 0


def _betas(a) -> list[float]:
    if a.sweep is not None:
        return a.sweep
    if a.beta is None:
        raise UsageError("either --beta or --sweep is required")
    return [a.beta]


def cmd_lambda(a, out) -> int:
    params = _params(a)
    betas = _betas(a)
    for b in betas:
        if not b > 0:
            raise UsageError(f"beta must be positive, got {b}")
    rows = []
    for b in betas:
        est = lambda_truncated(b, params, a.max_len)
        rows.append([fmt_input(b), params.N, fmt_input(params.A), a.max_len, est.num_return_words, fmt(est.partial_sum)])
    if a.csv:
        _csv_rows(LAMBDA_FIELDS, rows, out)
    else:
        _table(LAMBDA_FIELDS, rows, out)
    return 0


def cmd_bound(a, out) -> int:
    params = _params(a)
    betas = _betas(a)
    for b in betas:
        if not b > 1:
            raise UsageError(f"beta must exceed 1, got {b}")
    rows = []
    for b in betas:
        r = lower_bound(b, params)
        rows.append([fmt_input(b), fmt(r.zeta_beta), fmt(r.zeta_beta_minus_1), fmt(r.t0_lower), fmt(r.tw_lower),
                     fmt(r.tv_scale), r.P, r.Q, fmt(r.bound), fmt(r.vacuous)])
    if a.csv:
        _csv_rows(BOUND_FIELDS, rows, out)
    else:
        _table(BOUND_FIELDS, rows, out)
    return 0


def cmd_exclusion(a, out) -> int:
    params = _params(a)
    rep = beta_c_exclusion(params, max_len=a.max_len)
    out.write(f"N={params.N} A={fmt_input(params.A)}\n")
    for r in rep.reports:
        out.write(f"beta={fmt_input(r.beta)} lower_bound={fmt(r.bound)}\n")
    for b, s in zip(rep.monotone_betas, rep.monotone_sums):
        out.write(f"beta={fmt_input(b)} lambda_truncated(max_len={rep.max_len})={fmt(s)}\n")
    out.write(f"decreasing in beta: {fmt(rep.monotone)}\n")
    verdict = "beta_c not in (0, 2]" if rep.excluded else "exclusion not established"
    out.write(f"verdict: {verdict}\n")
    return 0 if rep.excluded else 1


def cmd_verify(a, out) -> int:
    rep = verify(a.suite)
    _emit_json(rep.to_dict(), out)
    return 0 if rep.ok else 1


def _table(fields, rows, out) -> None:
    cols = [fields] + [[str(x) for x in row] for row in rows]
    widths = [max(len(c[i]) for c in cols) for i in range(len(fields))]
    for c in cols:
        out.write("  ".join(v.rjust(w) for v, w in zip(c, widths)) + "\n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fibfreeze", description=__doc__, allow_abbrev=False)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help, allow_abbrev=False)
        p.set_defaults(fn=fn)
        return p

    p = add("word", cmd_word, "finite Fibonacci word or prefix of the infinite word")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--level", type=_int_at_least(0))
    g.add_argument("--length", type=_int_at_least(1))

    p = add("factors", cmd_factors, "factors of a given length")
    p.add_argument("--length", type=_int_at_least(1), required=True)
    p.add_argument("--classify", action="store_true")
    p.add_argument("--json", action="store_true")

    p = add("rauzy", cmd_rauzy, "Rauzy graph of a given order")
    p.add_argument("--order", type=_int_at_least(1), required=True)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--json", action="store_true")

    p = add("bispecial", cmd_bispecial, "bispecial word of length F_p - 2 and its factor loops")
    p.add_argument("--p", type=_int_at_least(2), required=True)
    p.add_argument("--json", action="store_true")

    p = add("loops", cmd_loops, "admissible loop sequences of length n, phi-coded")
    p.add_argument("--p", type=_int_at_least(2), required=True)
    p.add_argument("--n", type=_int_at_least(1), required=True)
    p.add_argument("--json", action="store_true")

    p = add("returns", cmd_returns, "return words to [000]")
    p.add_argument("--max-len", type=_int_at_least(1), required=True)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--json", action="store_true")

    p = add("annotate", cmd_annotate, "delta profile and transitions of one return word")
    p.add_argument("--word", type=_binary, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--A", type=_real, required=True)
    p.add_argument("--json", action="store_true")

    for name, fn, help in (("lambda", cmd_lambda, "truncated return-word partition sum"),
                           ("bound", cmd_bound, "zeta lower bound on the partition sum")):
        p = add(name, fn, help)
        p.add_argument("--beta", type=_real)
        p.add_argument("--N", type=int, required=True)
        p.add_argument("--A", type=_real, required=True)
        p.add_argument("--sweep", type=_sweep_type)
        p.add_argument("--csv", action="store_true")
        if name == "lambda":
            p.add_argument("--max-len", type=_int_at_least(0), required=True)

    p = add("exclusion", cmd_exclusion, "report that the critical beta lies outside (0, 2]")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--A", type=_real, required=True)
    p.add_argument("--max-len", type=_int_at_least(1), default=14)

    p = add("verify", cmd_verify, "run an invariant battery and print a JSON report")
    p.add_argument("--suite", choices=SUITES + ("all",), required=True)
    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return a.fn(a, out)
    except (InvalidParameters, UsageError) as e:
        sys.stderr.write(f"fibfreeze {a.command}: error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
