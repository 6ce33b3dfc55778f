"""
One harness, three checkers
===========================

A property harness is a named value domain plus a predicate.  Writing it
once buys three different checks: randomized sampling, complete
enumeration, and interval-based proof.  This script runs the same harness
through all three and prints the verdicts side by side.
"""

from tricheck.exhaustive import run_exhaustive
from tricheck.fuzz import run_fuzz
from tricheck.harness import Property, RunConfig
from tricheck.strategies import int_range, tuple_of
from tricheck.symbolic import run_symbolic

# The product of two factors from 1..1000 stays within [1, 10^6].  The
# conjunction is spelled with & rather than a chained comparison so the
# symbolic backend can evaluate it over intervals (Python lowers chained
# comparisons through a native branch the backend cannot observe).
domain = tuple_of(int_range(1, 1000), int_range(1, 1000))


def in_range(a, b):
    r = a * b
    return (1 <= r) & (r <= 10**6)


def in_range_strictly(a, b):
    r = a * b
    return (1 <= r) & (r < 10**6)


inside = Property("multiply", domain, in_range)

# Fuzzing samples 256 of the million pairs.  A pass here is evidence,
# not proof, and the verdict kind says so.
print("fuzz:      ", run_fuzz(inside, RunConfig(seed=42, cases=256)).describe())

# Bounded-exhaustive checking walks all 10^6 pairs.  Same harness, and
# now the verdict is a proof (by complete inspection).
print("exhaustive:", run_exhaustive(inside, RunConfig()).describe())

# The symbolic backend evaluates the predicate once over the whole box
# [1,1000] x [1,1000] using interval arithmetic.  No enumeration at all:
# it proves the claim with zero case evaluations per concrete pair.
print("symbolic:  ", run_symbolic(inside, RunConfig()).describe())

# Tighten the bound to a strict one and the claim becomes false at exactly
# one point, (1000, 1000).  Sampling usually misses it; the other two
# backends find it.
strict = Property("multiply.strict", domain, in_range_strictly)
print()
print("strict, fuzz:      ", run_fuzz(strict, RunConfig(seed=42, cases=256)).describe())
print("strict, exhaustive:", run_exhaustive(strict, RunConfig()).describe())
print("strict, symbolic:  ", run_symbolic(strict, RunConfig()).describe())
