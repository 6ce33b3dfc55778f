"""Independent oracles the tests compare the library against.

Everything here is deliberately written *without* looking at the library's
internals: the generator is transcribed separately from its public reference
description, enumeration is eager recursion instead of lazy streams, and the
pattern matcher interprets the AST directly rather than going through
strategy compilation.  When a test says "matches the oracle", this module is
the other side of that comparison.
"""

from __future__ import annotations

import itertools

from tricheck import strategies as st
from tricheck import patterns as pat


# --------------------------------------------------------------------------
# reference generator (transcribed independently from the public algorithm:
# one additive constant, two xor-multiply mixing rounds, final xor-shift)

def splitmix64_reference(seed):
    """Yields the output stream for ``seed``, forever."""
    mask = 0xFFFFFFFFFFFFFFFF
    x = seed & mask
    while True:
        x = (x + 0x9E3779B97F4A7C15) & mask
        z = x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
        yield z ^ (z >> 31)


def splitmix64_take(seed, n):
    gen = splitmix64_reference(seed)
    return [next(gen) for _ in range(n)]


# --------------------------------------------------------------------------
# eager recursive enumeration (independent of the library's lazy streams)

def enumerate_oracle(strategy):
    """Every value of a finite strategy domain, as an eager list.

    Orders broadly follow the documented canonical orders but the point of
    this function is the *set* of values; exact-order expectations live in
    dedicated snapshot tests.
    """
    if isinstance(strategy, st.Just):
        return [strategy.value]
    if isinstance(strategy, st.IntRange):
        return list(range(strategy.lo, strategy.hi + 1))
    if isinstance(strategy, st.Map):
        return [strategy.transform(v) for v in enumerate_oracle(strategy.inner)]
    if isinstance(strategy, st.Filter):
        return [v for v in enumerate_oracle(strategy.inner) if _accepts(strategy, v)]
    if isinstance(strategy, st.OneOf):
        out = []
        for alt in strategy.alternatives:
            out.extend(enumerate_oracle(alt))
        return out
    if isinstance(strategy, st.TupleOf):
        pools = [enumerate_oracle(c) for c in strategy.components]
        return [tuple(combo) for combo in itertools.product(*pools)]
    if isinstance(strategy, st.OptionalOf):
        return [None] + enumerate_oracle(strategy.inner)
    if isinstance(strategy, st.ListOf):
        pool = enumerate_oracle(strategy.element)
        out = []
        for n in range(strategy.min_len, strategy.max_len + 1):
            out.extend(list(combo) for combo in itertools.product(pool, repeat=n))
        return out
    if isinstance(strategy, st.OrderedMapOf):
        keys = []
        for k in enumerate_oracle(strategy.keys):
            if k not in keys:
                keys.append(k)
        vals = enumerate_oracle(strategy.values)
        out = []
        hi = min(strategy.max_size, len(keys))
        for size in range(strategy.min_size, hi + 1):
            for key_combo in itertools.combinations(keys, size):
                for val_combo in itertools.product(vals, repeat=size):
                    out.append(dict(sorted(zip(key_combo, val_combo))))
        return out
    if isinstance(strategy, pat.Pattern):
        return language_of(strategy.ast)
    raise TypeError(f"oracle cannot enumerate {strategy!r}")


def _accepts(f, value):
    try:
        return bool(f.predicate(value))
    except Exception:
        return False


# --------------------------------------------------------------------------
# pattern language and matcher, interpreting the AST directly

def language_of(ast):
    """Eager list of every string the pattern AST denotes (small inputs only)."""
    if isinstance(ast, pat.Literal):
        return [ast.char]
    if isinstance(ast, pat.AnyChar):
        return [chr(c) for c in range(pat.PRINTABLE_LO, pat.PRINTABLE_HI + 1)]
    if isinstance(ast, pat.CharClass):
        return list(ast.chars())
    if isinstance(ast, pat.Concat):
        pools = [language_of(p) for p in ast.parts]
        return ["".join(combo) for combo in itertools.product(*pools)]
    if isinstance(ast, pat.Alternation):
        out = []
        for b in ast.branches:
            out.extend(language_of(b))
        return out
    if isinstance(ast, pat.Repeat):
        pool = language_of(ast.inner)
        out = []
        for n in range(ast.min, ast.max + 1):
            out.extend("".join(combo) for combo in itertools.product(pool, repeat=n))
        return out
    raise TypeError(f"not a pattern node: {ast!r}")


def match_ast(ast, text):
    """Backtracking membership test: is ``text`` in the AST's language?"""
    return len(text) in _ends(ast, text, 0)


def _ends(node, text, start):
    """Set of positions where ``node`` can stop matching, starting at ``start``."""
    if isinstance(node, pat.Literal):
        if text.startswith(node.char, start):
            return {start + 1}
        return set()
    if isinstance(node, pat.AnyChar):
        if start < len(text) and pat.PRINTABLE_LO <= ord(text[start]) <= pat.PRINTABLE_HI:
            return {start + 1}
        return set()
    if isinstance(node, pat.CharClass):
        if start < len(text) and node.contains(text[start]):
            return {start + 1}
        return set()
    if isinstance(node, pat.Concat):
        positions = {start}
        for part in node.parts:
            positions = set().union(*(_ends(part, text, p) for p in positions)) \
                if positions else set()
        return positions
    if isinstance(node, pat.Alternation):
        return set().union(*(_ends(b, text, start) for b in node.branches))
    if isinstance(node, pat.Repeat):
        # breadth-wise: positions reachable after exactly k repetitions
        result = set()
        frontier = {start}
        if node.min == 0:
            result.add(start)
        for k in range(1, node.max + 1):
            frontier = set().union(*(_ends(node.inner, text, p) for p in frontier)) \
                if frontier else set()
            if not frontier:
                break
            if k >= node.min:
                result |= frontier
        return result
    raise TypeError(f"not a pattern node: {node!r}")


# --------------------------------------------------------------------------
# truncating division, from floor division plus a correction

def tdiv_oracle(a, b):
    q = a // b
    if q < 0 and q * b != a:
        q += 1
    return q


def trem_oracle(a, b):
    return a - b * tdiv_oracle(a, b)


# --------------------------------------------------------------------------
# shrinking order

def min_failing_int(lo, hi, fails):
    """The failing value of [lo, hi] that the declared shrink order ranks
    simplest: integers shrink toward lo, so it is the first failing value
    scanning upward from lo.  None when the predicate never fails."""
    for x in range(lo, hi + 1):
        if fails(x):
            return x
    return None
