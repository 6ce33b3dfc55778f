"""
Interval arithmetic and branch-and-prune
========================================

The symbolic backend never runs the predicate on single values.  It
evaluates the whole expression over boxes (one interval per variable) in
three-valued logic: definitely true, definitely false, or maybe.  Boxes
that come back "maybe" get split and retried; boxes that come back
"false" yield a concrete, confirmed witness.
"""

from tricheck.symbolic import (
    Cmp,
    Interval,
    Truth3,
    Var,
    branch_and_prune,
    interval_eval,
    truth_eval,
)

# interval_eval computes a sound hull: every concrete evaluation of the
# expression at a point inside the box lands inside the result.
x, y = Var(0), Var(1)
box = {0: Interval(-3, 4), 1: Interval(10, 12)}
print("x + y   over the box:", interval_eval(x + y, box))
print("x * y   over the box:", interval_eval(x * y, box))
print("x * x   over the box:", interval_eval(x * x, box))  # hull, not exact image

# Comparisons evaluate to Kleene truth values.  Only interval separations
# decide anything; overlap means "maybe".
print()
print("x < y ?", truth_eval(Cmp("lt", x, y), box))            # -3..4 is below 10..12
print("x < 0 ?", truth_eval(Cmp("lt", x, Var(1) * 0), box))   # overlaps: undecided

# branch_and_prune splits undecided boxes along their widest dimension until
# every sub-box is decided (a proof), or some box is definitely false (a
# witness, confirmed concretely before it is reported).
claim = Cmp("ge", x * x, Var(1) * 0)          # x^2 >= 0: true everywhere
outcome = branch_and_prune(claim, {0: Interval(-1000, 1000), 1: Interval(0, 0)},
                           budget=10_000)
print()
print("x^2 >= 0:", outcome.status, "after", outcome.boxes, "boxes,",
      outcome.splits, "splits")

wrong = Cmp("gt", x * x, Var(1) * 0)          # x^2 > 0: fails at x = 0
outcome = branch_and_prune(wrong, {0: Interval(-1000, 1000), 1: Interval(0, 0)},
                           budget=10_000)
print("x^2 >  0:", outcome.status, "at", outcome.witness,
      "after", outcome.splits, "splits")
