"""Brute-force reference implementations, kept apart from the package code."""

import itertools
import re

from fibfreeze.words import fib_word

OMEGA = fib_word(22)


def all_words(length):
    return ["".join(t) for t in itertools.product("01", repeat=length)]


def brute_factor(u):
    return u in OMEGA


def brute_factors(n):
    return sorted({OMEGA[i:i + n] for i in range(len(OMEGA) - n + 1)})


def brute_delta(u):
    j = 0
    while j < len(u) and u[:j + 1] in OMEGA:
        j += 1
    return j


def brute_occurrences(pattern, text):
    return [m.start() for m in re.finditer(f"(?={re.escape(pattern)})", text)]


def brute_right_special(u):
    return (u + "0") in OMEGA and (u + "1") in OMEGA


def brute_left_special(u):
    return ("0" + u) in OMEGA and ("1" + u) in OMEGA


def literal_return_word(u, w="000"):
    """The three defining conditions, with x = w + '1' as the continuation."""
    uw = u + w
    if not uw.startswith(w):
        return False
    inner = [i for i in range(1, len(uw) - len(w)) if uw[i:i + len(w)] == w]
    if inner:
        return False
    y = u + w + "1"
    first = next(k for k in range(1, len(y)) if y[k:k + len(w)] == w)
    return first == len(u)
