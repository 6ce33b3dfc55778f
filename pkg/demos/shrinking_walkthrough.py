"""
Shrinking: from the failure you found to the failure you can read
=================================================================

Random sampling finds failures at arbitrary points.  Every generated value
carries an ordered list of simpler alternatives, and shrinking greedily
re-walks those alternatives while the predicate keeps failing.  The report
keeps both ends: the original hit and the minimized one.
"""

from tricheck.fuzz import run_fuzz
from tricheck.harness import Property, RunConfig
from tricheck.prng import SplitMix64
from tricheck.strategies import int_range, list_of, random_tree

# A predicate that fails for roughly half the domain: the fuzzer trips over
# some large random value, then shrinking walks it down to the boundary.
threshold = Property("demo.threshold", int_range(0, 2**32 - 1),
                     lambda x: x < 50_000)
verdict = run_fuzz(threshold, RunConfig(seed=3, cases=256))
cex = verdict.counterexample
print("original failure:", cex.original)
print("shrunk failure:  ", cex.shrunk)   # exactly the smallest failing value
print("found at case:   ", cex.case_index, "with seed", cex.seed)

# The alternatives behind an integer draw form a bisection ladder toward the
# range's low end: for a value v the candidates are lo, then v minus half the
# distance, a quarter, ... down to v-1.  Greedy descent over that ladder is
# why the shrunk value above is the exact boundary, not just "smaller".
tree = random_tree(int_range(0, 100), SplitMix64(9))
print()
print("a draw:       ", tree.current)
print("its ladder:   ", [t.current for t in tree.candidates()])

# Containers shrink structurally first, then element-wise: a failing list
# tries truncations (shortest first), then dropping single positions, then
# shrinking elements in place.
def no_big_sum(xs):
    return sum(xs) < 150

lists = Property("demo.lists", list_of(int_range(0, 100), 0, 6), no_big_sum)
verdict = run_fuzz(lists, RunConfig(seed=8, cases=500))
cex = verdict.counterexample
print()
print("original list:", cex.original, "sum", sum(cex.original))
print("shrunk list:  ", cex.shrunk, "sum", sum(cex.shrunk))
