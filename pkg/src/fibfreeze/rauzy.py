"""Rauzy graphs of the Fibonacci word, special factors, the bispecial
hierarchy with its factor loops, the loop coding and bicephalic words."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .words import (
    FactorOracle,
    WindowTooSmall,
    check_word,
    fib_number,
    fib_word,
    is_palindrome,
    mirror,
    occurrences,
)

ORDINARY = "ordinary"
LEFT_SPECIAL = "left_special"
RIGHT_SPECIAL = "right_special"
BISPECIAL = "bispecial"


class NotAFactor(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    source: str
    target: str
    appended: str
    prepended: str


@dataclass(frozen=True)
class RauzyGraph:
    order: int
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    @cached_property
    def _out(self) -> dict[str, list[Edge]]:
        out = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.source].append(e)
        return out

    @cached_property
    def _in(self) -> dict[str, list[Edge]]:
        inc = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.target].append(e)
        return inc

    def out_edges(self, u: str) -> list[Edge]:
        return self._out[u]

    def in_edges(self, u: str) -> list[Edge]:
        return self._in[u]

    @property
    def branching_vertex(self) -> str:
        """A_n, the unique vertex of outdegree 2."""
        (a,) = [v for v, es in self._out.items() if len(es) == 2]
        return a

    @property
    def merging_vertex(self) -> str:
        """B_n, the unique vertex of indegree 2."""
        (b,) = [v for v, es in self._in.items() if len(es) == 2]
        return b

    def follow(self, edge: Edge, stop: str) -> str:
        """Edge labels read from `edge` until the path first reaches `stop`.

        Every vertex other than A_n has a single out-edge, so the walk is
        forced once it leaves the branching vertex.
        """
        labels = [edge.appended]
        v = edge.target
        while v != stop:
            (e,) = self._out[v]
            labels.append(e.appended)
            v = e.target
        return "".join(labels)


@dataclass(frozen=True)
class SpecialClassification:
    kind: str
    left_extensions: frozenset
    right_extensions: frozenset


@dataclass(frozen=True)
class BispecialLevel:
    p: int
    W: str
    R1: str
    R2: str

    def loop(self, i: int) -> str:
        return self.R1 if i == 1 else self.R2


@dataclass(frozen=True)
class LoopLanguage:
    level: BispecialLevel
    n: int
    sequences: tuple[tuple[int, ...], ...]

    def images(self) -> list[str]:
        return [phi_encode(s) for s in self.sequences]

    def words(self) -> list[str]:
        return [self.level.W + expand(s, self.level) for s in self.sequences]


@dataclass(frozen=True)
class BicephalicSet:
    level: BispecialLevel
    n: int
    words: tuple[str, ...]
    sequences: dict
    specials: tuple[str, ...]

    @property
    def special_count(self) -> int:
        return len(self.specials)


def build_rauzy(n: int, oracle: FactorOracle) -> RauzyGraph:
    if n < 1:
        raise ValueError("order must be positive")
    if n + 1 > oracle.max_query_length:
        raise WindowTooSmall(f"Rauzy graph of order {n} needs factors of length {n + 1}")
    edges = tuple(
        Edge(w[:-1], w[1:], w[-1], w[0]) for w in oracle.factors(n + 1)
    )
    return RauzyGraph(n, tuple(oracle.factors(n)), edges)


def classify_word(u: str, oracle: FactorOracle) -> SpecialClassification:
    check_word(u)
    if not oracle.contains(u):
        raise NotAFactor(f"{u!r} is not a factor of the Fibonacci word")
    left = frozenset(c for c in "01" if oracle.contains(c + u))
    right = frozenset(c for c in "01" if oracle.contains(u + c))
    if len(left) == 2 and len(right) == 2:
        kind = BISPECIAL
    elif len(left) == 2:
        kind = LEFT_SPECIAL
    elif len(right) == 2:
        kind = RIGHT_SPECIAL
    else:
        kind = ORDINARY
    return SpecialClassification(kind, left, right)


def is_special(u: str, oracle: FactorOracle) -> bool:
    return classify_word(u, oracle).kind != ORDINARY


def special_words(n: int, oracle: FactorOracle) -> dict[str, str]:
    """The unique left-special and right-special factors of length n."""
    g = build_rauzy(n, oracle)
    return {"left": g.merging_vertex, "right": g.branching_vertex}


def bispecial_lengths(limit: int) -> list[int]:
    """Lengths F_p - 2 (p >= 2) not exceeding `limit`."""
    out, p = [], 2
    while fib_number(p) - 2 <= limit:
        out.append(fib_number(p) - 2)
        p += 1
    return out


def bispecial_level(p: int, oracle: FactorOracle) -> BispecialLevel:
    """Bispecial word of length F_p - 2 and its two factor loops, read from
    the Rauzy graph of order F_p - 2.  R1 is the longer loop."""
    if p < 2:
        raise ValueError("p must be at least 2")
    n = fib_number(p) - 2
    if fib_number(p) + fib_number(p - 1) > oracle.max_query_length:
        raise WindowTooSmall(f"level p={p} needs queries of length {fib_number(p) + fib_number(p - 1)}")
    g = build_rauzy(n, oracle)
    w = g.branching_vertex
    if w != g.merging_vertex:
        raise AssertionError(f"no bispecial vertex in the Rauzy graph of order {n}")
    loops = sorted((g.follow(e, w) for e in g.out_edges(w)), key=len, reverse=True)
    return BispecialLevel(p, w, loops[0], loops[1])


def hierarchy_level(base: BispecialLevel, n: int) -> BispecialLevel:
    """Level p+n obtained from `base` by W' = W R1, R1' = R2 R1, R2' = R1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    w, r1, r2 = base.W, base.R1, base.R2
    for _ in range(n):
        w, r1, r2 = w + r1, r2 + r1, r1
    return BispecialLevel(base.p + n, w, r1, r2)


def loop_index_expansion(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Index sequences of R1^(n), R2^(n) over the base loops R1, R2."""
    i1, i2 = (1,), (2,)
    for _ in range(n):
        i1, i2 = i2 + i1, i1
    return i1, i2


def phi_encode(seq) -> str:
    """Loop index 1 -> '0', index 2 -> '1'."""
    out = []
    for i in seq:
        if i not in (1, 2):
            raise ValueError(f"loop index must be 1 or 2, got {i!r}")
        out.append("0" if i == 1 else "1")
    return "".join(out)


def phi_indices(w: str) -> tuple[int, ...]:
    return tuple(1 if c == "0" else 2 for c in check_word(w))


def expand(seq, level: BispecialLevel) -> str:
    return "".join(level.loop(i) for i in seq)


def phi_decode(w: str, level: BispecialLevel) -> str:
    """Concrete word obtained by replacing 0 with R1 and 1 with R2."""
    return expand(phi_indices(w), level)


def loop_language(level: BispecialLevel, n: int, oracle: FactorOracle) -> LoopLanguage:
    """All index sequences of length n whose loop word extends W inside L(omega)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    need = len(level.W) + n * len(level.R1)
    if need > oracle.max_query_length:
        raise WindowTooSmall(f"loop language needs queries of length {need}")
    # admissibility is prefix-closed, so grow level by level
    frontier = [((), level.W)]
    for _ in range(n):
        nxt = []
        for seq, word in frontier:
            for i in (1, 2):
                cand = word + level.loop(i)
                if oracle.contains(cand):
                    nxt.append((seq + (i,), cand))
        frontier = nxt
    return LoopLanguage(level, n, tuple(sorted(s for s, _ in frontier)))


def bicephalic_set(level: BispecialLevel, n: int, oracle: FactorOracle) -> BicephalicSet:
    """B_W(n) = {W V : V in L_{n-1}(Omega_W)} with its special members."""
    if n < 1:
        raise ValueError("n must be positive")
    lang = loop_language(level, n - 1, oracle)
    seqs = {level.W + expand(s, level): s for s in lang.sequences}
    words = tuple(sorted(seqs))
    specials = tuple(w for w in words if is_special(w, oracle))
    return BicephalicSet(level, n, words, seqs, specials)


def expected_special_count(n: int) -> int:
    """1 when n-1 is a bispecial length F_m - 2 (including the empty word), else 2."""
    return 1 if n - 1 == 0 or n - 1 in bispecial_lengths(n - 1) else 2


def xi_palindrome_prefix(n: int) -> str:
    """xi_n = mirror(omega_0) mirror(omega_1) ... mirror(omega_{n-2})."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return "".join(mirror(fib_word(k)) for k in range(n - 1))


def mirror_product(n: int) -> str:
    """mirror(omega_0) ... mirror(omega_{n-1}), a prefix of omega."""
    return "".join(mirror(fib_word(k)) for k in range(n))


def purely_left_special(n: int, oracle: FactorOracle) -> str:
    """The left-special factor of length n, which must not be bispecial."""
    sp = special_words(n, oracle)
    if sp["left"] == sp["right"]:
        raise ValueError(f"length {n} = F_p - 2 carries a bispecial word")
    return sp["left"]


_SHAPES = {
    BISPECIAL: "doublecircle",
    LEFT_SPECIAL: "invtriangle",
    RIGHT_SPECIAL: "triangle",
    ORDINARY: "ellipse",
}


def export_dot(graph: RauzyGraph) -> str:
    """DOT digraph; node shape marks the special kind, edges carry the
    appended symbol."""
    outdeg = {v: 0 for v in graph.vertices}
    indeg = {v: 0 for v in graph.vertices}
    for e in graph.edges:
        outdeg[e.source] += 1
        indeg[e.target] += 1
    lines = [f'digraph rauzy_{graph.order} {{']
    for v in graph.vertices:
        if outdeg[v] == 2 and indeg[v] == 2:
            kind = BISPECIAL
        elif indeg[v] == 2:
            kind = LEFT_SPECIAL
        elif outdeg[v] == 2:
            kind = RIGHT_SPECIAL
        else:
            kind = ORDINARY
        lines.append(f'  "{v}" [shape={_SHAPES[kind]}, special="{kind}"];')
    for e in sorted(graph.edges, key=lambda e: (e.source, e.appended)):
        lines.append(f'  "{e.source}" -> "{e.target}" [label="{e.appended}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "Edge", "RauzyGraph", "SpecialClassification", "BispecialLevel", "LoopLanguage",
    "BicephalicSet", "NotAFactor", "build_rauzy", "classify_word", "is_special",
    "special_words", "bispecial_lengths", "bispecial_level", "hierarchy_level",
    "loop_index_expansion", "phi_encode", "phi_indices", "phi_decode", "expand",
    "loop_language", "bicephalic_set", "expected_special_count", "xi_palindrome_prefix",
    "mirror_product", "purely_left_special", "export_dot", "is_palindrome", "occurrences",
]
