"""
Strategies: one description, many readings
==========================================

A strategy describes a value domain declaratively.  The same description
answers three different questions: how big is the domain, what are all its
values in canonical order, and what does a seeded random draw look like.
"""

from tricheck.patterns import pattern
from tricheck.prng import SplitMix64
from tricheck.strategies import (
    cardinality,
    enumerate_values,
    int_range,
    just,
    list_of,
    one_of,
    optional_of,
    ordered_map_of,
    random_tree,
    tuple_of,
)

# ---------------------------------------------------------------------------
# Sizes compose algebraically: tuples multiply, unions add, lists sum powers.

point = tuple_of(int_range(0, 9), int_range(0, 9))
print("tuple of two digits:     ", cardinality(point))

verdictish = one_of(just("yes"), just("no"), just("maybe"))
print("union of three literals: ", cardinality(verdictish))

short_lists = list_of(int_range(0, 3), min_len=0, max_len=3)
print("lists len 0..3 over 0..3:", cardinality(short_lists))  # 1+4+16+64

# Maps keep the upper bound (a transform may merge values); filters make the
# size unknowable, since the predicate is opaque until run.
evens = int_range(0, 9).map(lambda x: 2 * x)
print("mapped domain:           ", cardinality(evens))
positives = int_range(-5, 5).filter("positive", lambda x: x > 0)
print("filtered domain:         ", cardinality(positives))

# ---------------------------------------------------------------------------
# Enumeration is canonical and deterministic: ranges ascend, unions go in
# declaration order, tuples tick the last component fastest, optional values
# put the absent case first.

print()
print("enumerate union:   ", list(enumerate_values(verdictish)))
print("enumerate optional:", list(enumerate_values(optional_of(int_range(1, 3)))))
print("enumerate tuples:  ", list(enumerate_values(tuple_of(int_range(0, 1), int_range(0, 2)))))

# Ordered maps enumerate by size, then by key combination; keys are distinct
# and stored sorted, so every value is a well-formed small dictionary.
tiny_maps = ordered_map_of(int_range(0, 1), just("x"), min_size=0, max_size=2)
print("enumerate maps:    ", list(enumerate_values(tiny_maps)))

# Pattern strategies enumerate the denoted string language.
greeting = pattern("(hi|hey)!?")
print("enumerate pattern: ", list(enumerate_values(greeting)))

# ---------------------------------------------------------------------------
# Random draws are a pure function of the seed.  Replaying a seed replays
# the values, which is what makes failures reproducible.

rng = SplitMix64(11)
draws = [random_tree(short_lists, rng).current for _ in range(4)]
print()
print("seed 11 draws:     ", draws)
rng = SplitMix64(11)
again = [random_tree(short_lists, rng).current for _ in range(4)]
print("same seed again:   ", again)
assert draws == again
