"""Symbolic checking over integer intervals.

The predicate is run once over *carrier* values — expression nodes instead of
ints — which records it as a tree over {Const, Var, Add, Sub, Mul, Div, Rem,
Neg} and comparisons/connectives over those.  Carriers refuse to be coerced
into native control flow: branching on a symbolic boolean, ``int()``,
``len()`` and friends raise, and the driver reports the harness as
unsupported rather than silently checking the wrong thing.

Truth over a box of intervals is three-valued (true / false / unknown), with
comparisons decided by interval separation.  ``branch_and_prune`` splits
undecided boxes along their widest dimension until every box is decided, a
concrete witness refutes the property, or the box budget runs out.  Interval
division truncates toward zero and a divisor interval that straddles zero is
not narrowed — it aborts the analysis (soundly) instead.

Every claim this module makes is anchored concretely: a refutation is only
returned after the claimed witness fails the predicate under ordinary integer
evaluation.
"""

from __future__ import annotations

import sys
import threading
import time
from dataclasses import dataclass
from enum import Enum
from typing import Any

from . import strategies as st
from .harness import DeadlineReached, Property, RunConfig, StopRequested, Ticker
from .prng import SplitMix64
from .results import Counterexample, UnknownReason, Verdict

#: Default box budget for a single branch_and_prune call.
DEFAULT_BOX_BUDGET = 100_000

#: Concrete valuations sampled from the remaining boxes when the budget or
#: deadline runs out before the search decides.
FALLBACK_SAMPLES = 1000


# --------------------------------------------------------------------------
# errors

class SymbolicCoercion(TypeError):
    """A symbolic value leaked into native control flow (if/int/len/...)."""


class DivMaybeZero(ArithmeticError):
    """Interval division where the divisor interval contains zero."""

    def __init__(self, location: str | None) -> None:
        where = f" at {location}" if location else ""
        super().__init__(f"divisor interval contains zero{where}")
        self.location = location


class EvalError(ArithmeticError):
    """Concrete evaluation failed; ``kind`` is currently always div_by_zero."""

    def __init__(self, kind: str, location: str | None) -> None:
        where = f" at {location}" if location else ""
        super().__init__(f"{kind}{where}")
        self.kind = kind
        self.location = location


def _caller_location() -> str | None:
    try:
        frame = sys._getframe(2)
        return f"{frame.f_code.co_filename.rsplit('/', 1)[-1]}:{frame.f_lineno}"
    except Exception:  # pragma: no cover - platforms without frame access
        return None


# --------------------------------------------------------------------------
# intervals

@dataclass(frozen=True)
class Interval:
    """Closed integer interval [lo, hi]; endpoints are unbounded ints."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"interval [{self.lo}, {self.hi}] is empty")

    @property
    def width(self) -> int:
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def __repr__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


Box = dict  # var id -> Interval


def tdiv(a, b):
    """Division truncating toward zero; on carriers, builds a Div node.

    Host ``//`` floors, which is not what the symbolic Div means on negative
    operands, so shared predicate sources must use this helper (and ``trem``)
    for division under every backend.
    """
    if isinstance(a, SymExpr) or isinstance(b, SymExpr):
        return Div(_as_expr(a), _as_expr(b), _caller_location())
    q = abs(a) // abs(b)
    return -q if (a < 0) != (b < 0) else q


def trem(a, b):
    """Remainder with the sign of the dividend (pairs with ``tdiv``)."""
    if isinstance(a, SymExpr) or isinstance(b, SymExpr):
        return Rem(_as_expr(a), _as_expr(b), _caller_location())
    return a - b * tdiv(a, b)


# --------------------------------------------------------------------------
# carrier expressions

class SymExpr:
    """Base of the expression carriers.  Arithmetic builds nodes; anything
    that would need a concrete answer right now raises SymbolicCoercion."""

    __slots__ = ()

    def __add__(self, other):
        return Add(self, _as_expr(other))

    def __radd__(self, other):
        return Add(_as_expr(other), self)

    def __sub__(self, other):
        return Sub(self, _as_expr(other))

    def __rsub__(self, other):
        return Sub(_as_expr(other), self)

    def __mul__(self, other):
        return Mul(self, _as_expr(other))

    def __rmul__(self, other):
        return Mul(_as_expr(other), self)

    def __neg__(self):
        return Neg(self)

    def __lt__(self, other):
        return Cmp("lt", self, _as_expr(other))

    def __le__(self, other):
        return Cmp("le", self, _as_expr(other))

    def __gt__(self, other):
        return Cmp("gt", self, _as_expr(other))

    def __ge__(self, other):
        return Cmp("ge", self, _as_expr(other))

    def __eq__(self, other):  # type: ignore[override]
        return Cmp("eq", self, _as_expr(other))

    def __ne__(self, other):  # type: ignore[override]
        return Cmp("ne", self, _as_expr(other))

    __hash__ = None  # equality builds formulas, so these are not hashable

    def __bool__(self):
        raise SymbolicCoercion("symbolic value used as a native boolean")

    def __int__(self):
        raise SymbolicCoercion("symbolic value coerced with int()")

    __index__ = __int__

    def __float__(self):
        raise SymbolicCoercion("symbolic value coerced with float()")

    def __len__(self):
        raise SymbolicCoercion("symbolic value has no length")

    def __iter__(self):
        raise SymbolicCoercion("symbolic value is not iterable")


class Const(SymExpr):
    __slots__ = ("value",)

    def __init__(self, value: int) -> None:
        self.value = value

    def __repr__(self) -> str:
        return repr(self.value)


class Var(SymExpr):
    __slots__ = ("vid",)

    def __init__(self, vid: int) -> None:
        self.vid = vid

    def __repr__(self) -> str:
        return f"v{self.vid}"


class _Bin(SymExpr):
    __slots__ = ("lhs", "rhs")
    op = "?"

    def __init__(self, lhs: SymExpr, rhs: SymExpr) -> None:
        self.lhs = lhs
        self.rhs = rhs

    def __repr__(self) -> str:
        return f"({self.lhs!r} {self.op} {self.rhs!r})"


class Add(_Bin):
    __slots__ = ()
    op = "+"


class Sub(_Bin):
    __slots__ = ()
    op = "-"


class Mul(_Bin):
    __slots__ = ()
    op = "*"


class Div(SymExpr):
    __slots__ = ("lhs", "rhs", "location")

    def __init__(self, lhs: SymExpr, rhs: SymExpr, location: str | None = None) -> None:
        self.lhs = lhs
        self.rhs = rhs
        self.location = location

    def __repr__(self) -> str:
        return f"tdiv({self.lhs!r}, {self.rhs!r})"


class Rem(SymExpr):
    __slots__ = ("lhs", "rhs", "location")

    def __init__(self, lhs: SymExpr, rhs: SymExpr, location: str | None = None) -> None:
        self.lhs = lhs
        self.rhs = rhs
        self.location = location

    def __repr__(self) -> str:
        return f"trem({self.lhs!r}, {self.rhs!r})"


class Neg(SymExpr):
    __slots__ = ("inner",)

    def __init__(self, inner: SymExpr) -> None:
        self.inner = inner

    def __repr__(self) -> str:
        return f"(-{self.inner!r})"


def _as_expr(value) -> SymExpr:
    if isinstance(value, SymExpr):
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"cannot use {value!r} in a symbolic expression")
    return Const(value)


class SymBool:
    """Symbolic truth value.  Combine with ``&``, ``|``, ``~`` — the native
    ``and``/``or``/``not`` need a concrete bool and are trapped."""

    __slots__ = ()

    def __and__(self, other):
        return And(self, _as_bool(other))

    __rand__ = __and__

    def __or__(self, other):
        return Or(self, _as_bool(other))

    __ror__ = __or__

    def __invert__(self):
        return Not(self)

    def __bool__(self):
        raise SymbolicCoercion(
            "symbolic boolean used in a native branch; use &, |, ~")


class BoolConst(SymBool):
    __slots__ = ("value",)

    def __init__(self, value: bool) -> None:
        self.value = value

    def __repr__(self) -> str:
        return repr(self.value)


class Cmp(SymBool):
    __slots__ = ("op", "lhs", "rhs")

    def __init__(self, op: str, lhs: SymExpr, rhs: SymExpr) -> None:
        self.op = op
        self.lhs = lhs
        self.rhs = rhs

    def __repr__(self) -> str:
        sym = {"lt": "<", "le": "<=", "gt": ">", "ge": ">=", "eq": "==", "ne": "!="}[self.op]
        return f"({self.lhs!r} {sym} {self.rhs!r})"


class And(SymBool):
    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs: SymBool, rhs: SymBool) -> None:
        self.lhs = lhs
        self.rhs = rhs

    def __repr__(self) -> str:
        return f"({self.lhs!r} & {self.rhs!r})"


class Or(SymBool):
    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs: SymBool, rhs: SymBool) -> None:
        self.lhs = lhs
        self.rhs = rhs

    def __repr__(self) -> str:
        return f"({self.lhs!r} | {self.rhs!r})"


class Not(SymBool):
    __slots__ = ("inner",)

    def __init__(self, inner: SymBool) -> None:
        self.inner = inner

    def __repr__(self) -> str:
        return f"~{self.inner!r}"


def _as_bool(value) -> SymBool:
    if isinstance(value, SymBool):
        return value
    if isinstance(value, bool):
        return BoolConst(value)
    raise TypeError(f"cannot use {value!r} as a symbolic boolean")


# --------------------------------------------------------------------------
# evaluation: intervals, three-valued truth, concrete

class Truth3(Enum):
    TRUE = "true"
    FALSE = "false"
    MAYBE = "maybe"


def _t3_not(t: Truth3) -> Truth3:
    if t is Truth3.TRUE:
        return Truth3.FALSE
    if t is Truth3.FALSE:
        return Truth3.TRUE
    return Truth3.MAYBE


def _t3_and(a: Truth3, b: Truth3) -> Truth3:
    if a is Truth3.FALSE or b is Truth3.FALSE:
        return Truth3.FALSE
    if a is Truth3.TRUE and b is Truth3.TRUE:
        return Truth3.TRUE
    return Truth3.MAYBE


def _t3_or(a: Truth3, b: Truth3) -> Truth3:
    if a is Truth3.TRUE or b is Truth3.TRUE:
        return Truth3.TRUE
    if a is Truth3.FALSE and b is Truth3.FALSE:
        return Truth3.FALSE
    return Truth3.MAYBE


def interval_eval(expr: SymExpr, box: Box) -> Interval:
    """Sound range of ``expr`` over ``box``: the concrete value at any point
    of the box lies inside the returned interval."""
    if isinstance(expr, Const):
        return Interval(expr.value, expr.value)
    if isinstance(expr, Var):
        return box[expr.vid]
    if isinstance(expr, Neg):
        i = interval_eval(expr.inner, box)
        return Interval(-i.hi, -i.lo)
    if isinstance(expr, Add):
        a, b = interval_eval(expr.lhs, box), interval_eval(expr.rhs, box)
        return Interval(a.lo + b.lo, a.hi + b.hi)
    if isinstance(expr, Sub):
        a, b = interval_eval(expr.lhs, box), interval_eval(expr.rhs, box)
        return Interval(a.lo - b.hi, a.hi - b.lo)
    if isinstance(expr, Mul):
        a, b = interval_eval(expr.lhs, box), interval_eval(expr.rhs, box)
        products = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
        return Interval(min(products), max(products))
    if isinstance(expr, Div):
        a, b = interval_eval(expr.lhs, box), interval_eval(expr.rhs, box)
        if b.lo <= 0 <= b.hi:
            raise DivMaybeZero(expr.location)
        # truncating division is monotone in each argument once the divisor
        # has a fixed sign, so endpoint combinations bound the image
        quots = (tdiv(a.lo, b.lo), tdiv(a.lo, b.hi), tdiv(a.hi, b.lo), tdiv(a.hi, b.hi))
        return Interval(min(quots), max(quots))
    if isinstance(expr, Rem):
        a, b = interval_eval(expr.lhs, box), interval_eval(expr.rhs, box)
        if b.lo <= 0 <= b.hi:
            raise DivMaybeZero(expr.location)
        if a.is_point and b.is_point:
            r = trem(a.lo, b.lo)
            return Interval(r, r)
        m = max(abs(b.lo), abs(b.hi)) - 1  # |remainder| < |divisor|
        if a.lo >= 0:
            return Interval(0, min(a.hi, m))
        if a.hi <= 0:
            return Interval(max(a.lo, -m), 0)
        return Interval(max(a.lo, -m), min(a.hi, m))
    raise TypeError(f"not an expression node: {expr!r}")


def truth_eval(formula: SymBool, box: Box) -> Truth3:
    """Three-valued truth of ``formula`` over ``box``.

    TRUE / FALSE are sound for every point of the box; MAYBE means the
    intervals were too coarse to separate the comparison.
    """
    if isinstance(formula, BoolConst):
        return Truth3.TRUE if formula.value else Truth3.FALSE
    if isinstance(formula, Not):
        return _t3_not(truth_eval(formula.inner, box))
    if isinstance(formula, And):
        return _t3_and(truth_eval(formula.lhs, box), truth_eval(formula.rhs, box))
    if isinstance(formula, Or):
        return _t3_or(truth_eval(formula.lhs, box), truth_eval(formula.rhs, box))
    if isinstance(formula, Cmp):
        a = interval_eval(formula.lhs, box)
        b = interval_eval(formula.rhs, box)
        op = formula.op
        if op == "lt":
            if a.hi < b.lo:
                return Truth3.TRUE
            if a.lo >= b.hi:
                return Truth3.FALSE
        elif op == "le":
            if a.hi <= b.lo:
                return Truth3.TRUE
            if a.lo > b.hi:
                return Truth3.FALSE
        elif op == "gt":
            if a.lo > b.hi:
                return Truth3.TRUE
            if a.hi <= b.lo:
                return Truth3.FALSE
        elif op == "ge":
            if a.lo >= b.hi:
                return Truth3.TRUE
            if a.hi < b.lo:
                return Truth3.FALSE
        elif op == "eq":
            if a.is_point and b.is_point and a.lo == b.lo:
                return Truth3.TRUE
            if a.hi < b.lo or b.hi < a.lo:
                return Truth3.FALSE
        elif op == "ne":
            if a.hi < b.lo or b.hi < a.lo:
                return Truth3.TRUE
            if a.is_point and b.is_point and a.lo == b.lo:
                return Truth3.FALSE
        else:
            raise ValueError(f"unknown comparison {op!r}")
        return Truth3.MAYBE
    raise TypeError(f"not a formula node: {formula!r}")


def concrete_eval(expr: SymExpr, valuation: dict) -> int:
    """Ordinary integer evaluation; Div/Rem truncate toward zero and raise
    EvalError on a zero divisor."""
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, Var):
        return valuation[expr.vid]
    if isinstance(expr, Neg):
        return -concrete_eval(expr.inner, valuation)
    if isinstance(expr, Add):
        return concrete_eval(expr.lhs, valuation) + concrete_eval(expr.rhs, valuation)
    if isinstance(expr, Sub):
        return concrete_eval(expr.lhs, valuation) - concrete_eval(expr.rhs, valuation)
    if isinstance(expr, Mul):
        return concrete_eval(expr.lhs, valuation) * concrete_eval(expr.rhs, valuation)
    if isinstance(expr, (Div, Rem)):
        a = concrete_eval(expr.lhs, valuation)
        b = concrete_eval(expr.rhs, valuation)
        if b == 0:
            raise EvalError("div_by_zero", expr.location)
        return tdiv(a, b) if isinstance(expr, Div) else trem(a, b)
    raise TypeError(f"not an expression node: {expr!r}")


def concrete_truth(formula: SymBool, valuation: dict) -> bool:
    if isinstance(formula, BoolConst):
        return formula.value
    if isinstance(formula, Not):
        return not concrete_truth(formula.inner, valuation)
    if isinstance(formula, And):
        return concrete_truth(formula.lhs, valuation) and concrete_truth(formula.rhs, valuation)
    if isinstance(formula, Or):
        return concrete_truth(formula.lhs, valuation) or concrete_truth(formula.rhs, valuation)
    if isinstance(formula, Cmp):
        a = concrete_eval(formula.lhs, valuation)
        b = concrete_eval(formula.rhs, valuation)
        return {
            "lt": a < b, "le": a <= b, "gt": a > b,
            "ge": a >= b, "eq": a == b, "ne": a != b,
        }[formula.op]
    raise TypeError(f"not a formula node: {formula!r}")


# --------------------------------------------------------------------------
# symbolizing strategies

@dataclass
class SymAlternative:
    """One disjunct of a symbolized strategy: the carrier shape, the box of
    variable ranges, and any filter hypothesis to assume."""

    carrier: Any  # SymExpr or tuple of them
    box: Box
    hypothesis: SymBool | None


def _coerce_carrier(value) -> Any | None:
    if isinstance(value, SymExpr):
        return value
    if isinstance(value, bool):
        return None
    if isinstance(value, int):
        return Const(value)
    if isinstance(value, tuple):
        parts = [_coerce_carrier(v) for v in value]
        if any(p is None for p in parts):
            return None
        return tuple(parts)
    return None


def symbolize(strategy: st.Strategy) -> list[SymAlternative] | None:
    """Carrier values and boxes for ``strategy``, or None when the domain is
    not expressible (containers, strings, opaque transforms/filters).

    ``one_of`` produces one alternative per branch; a tuple crosses its
    components' alternatives.  Filters become hypotheses: their predicate is
    run over the carrier and must yield a symbolic boolean.
    """
    counter = iter(range(1 << 30))

    def conj(a: SymBool | None, b: SymBool | None) -> SymBool | None:
        if a is None:
            return b
        if b is None:
            return a
        return And(a, b)

    def go(s: st.Strategy) -> list[tuple] | None:
        if isinstance(s, st.Just):
            carrier = _coerce_carrier(s.value)
            if carrier is None or isinstance(carrier, tuple):
                return None
            return [(carrier, {}, None)]
        if isinstance(s, st.IntRange):
            vid = next(counter)
            return [(Var(vid), {vid: Interval(s.lo, s.hi)}, None)]
        if isinstance(s, st.Map):
            inner = go(s.inner)
            if inner is None:
                return None
            out = []
            for carrier, box, hyp in inner:
                try:
                    mapped = _coerce_carrier(s.transform(carrier))
                except Exception:
                    return None
                if mapped is None:
                    return None
                out.append((mapped, box, hyp))
            return out
        if isinstance(s, st.Filter):
            inner = go(s.inner)
            if inner is None:
                return None
            out = []
            for carrier, box, hyp in inner:
                try:
                    raw = s.predicate(carrier)
                except Exception:
                    return None
                if isinstance(raw, SymBool):
                    cond = raw
                elif isinstance(raw, bool):
                    cond = BoolConst(raw)
                else:
                    return None
                out.append((carrier, box, conj(hyp, cond)))
            return out
        if isinstance(s, st.OneOf):
            out = []
            for alt in s.alternatives:
                sub = go(alt)
                if sub is None:
                    return None
                out.extend(sub)
            return out
        if isinstance(s, st.TupleOf):
            combos: list[tuple] = [((), {}, None)]
            for comp in s.components:
                sub = go(comp)
                if sub is None:
                    return None
                combos = [
                    (cs + (carrier,), {**box, **b}, conj(hyp, h))
                    for cs, box, hyp in combos
                    for carrier, b, h in sub
                ]
            return combos
        return None  # OptionalOf, ListOf, OrderedMapOf, Pattern, unknown nodes

    alts = go(strategy)
    if alts is None:
        return None
    return [SymAlternative(c, b, h) for c, b, h in alts]


def _carrier_value(carrier, valuation: dict):
    if isinstance(carrier, tuple):
        return tuple(_carrier_value(c, valuation) for c in carrier)
    return concrete_eval(carrier, valuation)


# --------------------------------------------------------------------------
# branch and prune

@dataclass
class SolveOutcome:
    status: str  # proved | witness | undecided | unsupported | timeout | cancelled
    witness: dict | None = None
    boxes: int = 0
    splits: int = 0
    note: str | None = None


def _widest_dim(box: Box) -> int | None:
    best = None
    best_width = 0
    for vid in sorted(box):
        w = box[vid].width
        if w > best_width:
            best, best_width = vid, w
    return best


def _split_box(box: Box, dim: int) -> tuple[Box, Box]:
    iv = box[dim]
    mid = (iv.lo + iv.hi) // 2
    lo_half = dict(box)
    hi_half = dict(box)
    lo_half[dim] = Interval(iv.lo, mid)
    hi_half[dim] = Interval(mid + 1, iv.hi)
    return lo_half, hi_half


def _midpoint(box: Box) -> dict:
    return {vid: (iv.lo + iv.hi) // 2 for vid, iv in box.items()}


def _sample_remaining(formula: SymBool, work: list, seed: int) -> dict | None:
    """Last-ditch concrete probing of the undecided region."""
    if not work:
        return None
    rng = SplitMix64(seed)
    for i in range(FALLBACK_SAMPLES):
        box = work[i % len(work)]
        val = {vid: rng.uniform_in(iv.lo, iv.hi) for vid, iv in box.items()}
        try:
            if not concrete_truth(formula, val):
                return val
        except EvalError:
            # a div-by-zero here does not witness anything about the formula
            continue
    return None


def branch_and_prune(formula: SymBool, box: Box,
                     budget: int = DEFAULT_BOX_BUDGET, *,
                     ticker: Ticker | None = None,
                     sample_seed: int = 0) -> SolveOutcome:
    """Decide ``formula`` over ``box`` by recursive box splitting.

    Proved means every sub-box evaluated TRUE.  A FALSE box (or an undecided
    single point that concretely fails) yields a witness, always re-checked
    concretely before being returned.  Budget or deadline exhaustion first
    probes the remaining region with concrete samples.
    """
    work: list[Box] = [dict(box)]
    boxes = 0
    splits = 0
    while work:
        if boxes >= budget:
            val = _sample_remaining(formula, work, sample_seed)
            if val is not None:
                return SolveOutcome("witness", witness=val, boxes=boxes, splits=splits)
            return SolveOutcome("undecided", boxes=boxes, splits=splits,
                                note=f"box budget {budget} exhausted")
        if ticker is not None:
            try:
                ticker.tick()
            except DeadlineReached:
                val = _sample_remaining(formula, work, sample_seed)
                if val is not None:
                    return SolveOutcome("witness", witness=val, boxes=boxes, splits=splits)
                return SolveOutcome("timeout", boxes=boxes, splits=splits)
            except StopRequested:
                return SolveOutcome("cancelled", boxes=boxes, splits=splits)
        current = work.pop()
        boxes += 1
        try:
            truth = truth_eval(formula, current)
        except DivMaybeZero as exc:
            return SolveOutcome("unsupported", boxes=boxes, splits=splits, note=str(exc))
        if truth is Truth3.TRUE:
            continue
        if truth is Truth3.FALSE:
            val = _midpoint(current)
            if concrete_truth(formula, val):  # pragma: no cover - soundness guard
                raise AssertionError("interval refutation failed concrete confirmation")
            return SolveOutcome("witness", witness=val, boxes=boxes, splits=splits)
        dim = _widest_dim(current)
        if dim is None:
            # single point left undecided by intervals: decide it concretely
            val = {vid: iv.lo for vid, iv in current.items()}
            try:
                holds = concrete_truth(formula, val)
            except EvalError:
                return SolveOutcome("unsupported", boxes=boxes, splits=splits,
                                    note="division by zero at a concrete point")
            if not holds:
                return SolveOutcome("witness", witness=val, boxes=boxes, splits=splits)
            continue
        lo_half, hi_half = _split_box(current, dim)
        splits += 1
        work.append(hi_half)
        work.append(lo_half)
    return SolveOutcome("proved", boxes=boxes, splits=splits)


# --------------------------------------------------------------------------
# driver

_OUTCOME_REASON = {
    "undecided": UnknownReason.UNDECIDED,
    "unsupported": UnknownReason.UNSUPPORTED,
    "timeout": UnknownReason.TIMEOUT,
    "cancelled": UnknownReason.TIMEOUT,
}


def run_symbolic(prop: Property, config: RunConfig, *,
                 deadline: float | None = None,
                 stop: threading.Event | None = None) -> Verdict:
    """Try to prove the property over its whole domain, or refute it with a
    concrete witness.

    The strategy is symbolized into one or more (carrier, box) alternatives;
    all must prove, any witness refutes.  Filter hypotheses weaken the goal
    to "hypothesis implies assertion"; an alternative whose hypothesis is
    false over its whole box is vacuously proved and flags the verdict.
    Witnesses are reported unshrunk.
    """
    t0 = time.monotonic()

    def finish(v: Verdict, boxes: int | None = None, splits: int | None = None,
               vacuous: bool = False) -> Verdict:
        v.backend = "symbolic"
        v.duration_ms = int((time.monotonic() - t0) * 1000)
        if boxes is not None and v.cases is None:
            v.cases = boxes
        if splits is not None and v.splits is None:
            v.splits = splits
        if vacuous:
            v.vacuity_warning = True
        return v

    alts = symbolize(prop.strategy)
    if alts is None:
        return finish(Verdict.unknown(
            UnknownReason.UNSUPPORTED,
            detail="strategy is not expressible over the symbolic carrier"))

    ticker = Ticker(deadline, stop)
    budget = config.budget
    total_boxes = 0
    total_splits = 0
    vacuous = False

    for alt in alts:
        try:
            if prop.unpack and isinstance(alt.carrier, tuple):
                raw = prop.predicate(*alt.carrier)
            else:
                raw = prop.predicate(alt.carrier)
        except Exception as exc:
            return finish(Verdict.unknown(
                UnknownReason.UNSUPPORTED,
                detail=f"predicate not symbolically evaluable: {exc}"),
                total_boxes, total_splits)
        if isinstance(raw, SymBool):
            assertion = raw
        elif isinstance(raw, bool) or raw is None:
            assertion = BoolConst(raw is not False)
        else:
            return finish(Verdict.unknown(
                UnknownReason.UNSUPPORTED,
                detail="predicate did not yield a symbolic boolean"),
                total_boxes, total_splits)

        formula: SymBool = assertion
        if alt.hypothesis is not None:
            try:
                hyp_truth = truth_eval(alt.hypothesis, alt.box)
            except DivMaybeZero as exc:
                return finish(Verdict.unknown(UnknownReason.UNSUPPORTED, detail=str(exc)),
                              total_boxes, total_splits)
            if hyp_truth is Truth3.FALSE:
                vacuous = True  # the whole box violates the filter: nothing to check
                total_boxes += 1
                continue
            formula = Or(Not(alt.hypothesis), assertion)

        remaining = budget - total_boxes
        if remaining <= 0:
            return finish(Verdict.unknown(
                UnknownReason.UNDECIDED, detail=f"box budget {budget} exhausted"),
                total_boxes, total_splits)
        out = branch_and_prune(formula, alt.box, remaining,
                               ticker=ticker, sample_seed=config.seed)
        total_boxes += out.boxes
        total_splits += out.splits
        if out.status == "proved":
            continue
        if out.status == "witness":
            try:
                value = _carrier_value(alt.carrier, out.witness)
            except EvalError as exc:
                return finish(Verdict.unknown(
                    UnknownReason.UNSUPPORTED,
                    detail=f"witness value aborts during evaluation: {exc}"),
                    total_boxes, total_splits)
            return finish(Verdict.falsified(Counterexample(
                original=value, shrunk=value, seed=None, case_index=None)),
                total_boxes, total_splits)
        return finish(Verdict.unknown(_OUTCOME_REASON[out.status], detail=out.note),
                      total_boxes, total_splits)

    return finish(Verdict.proved("symbolic", total_boxes, splits=total_splits),
                  vacuous=vacuous)
