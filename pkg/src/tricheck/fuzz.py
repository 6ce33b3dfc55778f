"""Randomized checking: seeded sampling plus greedy shrinking.

Given the same property, seed and case count, a run is bit-reproducible:
the verdict, every intermediate draw and the shrink chain are pure functions
of the inputs.  There is no coverage feedback and no process isolation —
this backend is the cheap, always-available end of the spectrum.
"""

from __future__ import annotations

import threading
import time
from typing import Any

from .harness import (DeadlineReached, Property, RunConfig, StopRequested,
                      Ticker, eval_predicate)
from .prng import SplitMix64
from .results import Counterexample, UnknownReason, Verdict
from .strategies import RejectionExhausted, ValueTree, _GenContext


def shrink_failure(prop: Property, failing: ValueTree,
                   ticker: Ticker | None = None) -> tuple[ValueTree, bool]:
    """Greedy descent: repeatedly move to the first (simplest) candidate that
    still fails, until none does.  Returns (local minimum, incomplete flag);
    the flag is set when the deadline cut the descent short, in which case
    the best tree found so far is returned.

    Every candidate evaluation counts against the deadline.
    """
    node = failing
    while True:
        moved = False
        for cand in node.candidates():
            try:
                ok, _ = eval_predicate(prop, cand.current)
                if ticker is not None:
                    ticker.tick()
            except (DeadlineReached, StopRequested):
                return node, True
            if not ok:
                node = cand
                moved = True
                break
        if not moved:
            return node, False


def run_fuzz(prop: Property, config: RunConfig, *,
             deadline: float | None = None,
             stop: threading.Event | None = None) -> Verdict:
    """Evaluate the predicate on ``config.cases`` seeded draws.

    First failure is shrunk and reported with the seed and case index; a
    drained filter budget yields Unknown{FilterExhausted}; running out of
    time yields Unknown{Timeout} with the number of completed cases.
    """
    t0 = time.monotonic()
    rng = SplitMix64(config.seed)
    ticker = Ticker(deadline, stop)
    # one context for the whole run: the 10x budget is spent across cases,
    # not granted afresh to each draw
    ctx = _GenContext(rng, 10 * config.cases)
    verdict: Verdict
    completed = 0
    try:
        for case_index in range(config.cases):
            tree = prop.strategy._random_tree(ctx)
            ok, message = eval_predicate(prop, tree.current)
            ticker.tick()
            if not ok:
                shrunk, incomplete = shrink_failure(prop, tree, ticker)
                verdict = Verdict.falsified(Counterexample(
                    original=tree.current,
                    shrunk=shrunk.current,
                    seed=config.seed,
                    case_index=case_index,
                    message=message,
                    shrink_incomplete=incomplete,
                ))
                break
            completed += 1
        else:
            verdict = Verdict.pass_sampled(config.cases)
    except RejectionExhausted as exc:
        verdict = Verdict.unknown(UnknownReason.FILTER_EXHAUSTED, detail=str(exc),
                                  cases=completed)
    except (DeadlineReached, StopRequested):
        verdict = Verdict.unknown(UnknownReason.TIMEOUT, cases=completed)
    verdict.backend = "fuzz"
    verdict.duration_ms = int((time.monotonic() - t0) * 1000)
    return verdict
