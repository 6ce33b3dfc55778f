"""First-class value strategies.

A strategy is a small immutable description of a value domain.  Nothing here
draws a value or proves anything by itself: strategies are *interpreted* by
the checking backends.  Three interpretations live in this module because
every backend shares them:

* ``random_tree``     -- one seeded draw, returned as a :class:`ValueTree`
                         (the value plus its ordered shrink candidates);
* ``iter_trees``      -- the canonical, deterministic enumeration of the
                         whole domain, also as trees;
* ``cardinality``     -- the exact or bounding size of the domain.

The symbolic interpretation lives in :mod:`tricheck.symbolic` so this module
stays free of solver machinery.

Shrink candidates are ordered simplest-first and are *strictly* simpler than
their parent under a per-constructor complexity measure (`ValueTree.complexity`),
which is what makes greedy shrinking terminate.  Integers shrink toward the
range's lower bound, choices toward earlier alternatives, options toward
absent, containers toward fewer elements and then element-wise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Iterator, Sequence

from .prng import SplitMix64

_WIDTHS = (8, 16, 32, 64)

#: Counting saturates once any intermediate exceeds this.
TOO_LARGE_LIMIT = 2 ** 63

#: Per-value retry budget when a filter (or a distinct-key draw) rejects.
MAX_REJECTIONS_PER_VALUE = 100

#: Safety cap when a key-ordered map has to materialize its key universe.
_KEY_UNIVERSE_CAP = 1_000_000


# --------------------------------------------------------------------------
# errors

class EmptyRange(ValueError):
    """int_range with lo > hi."""


class BoundOverflow(ValueError):
    """int_range bounds outside the declared width/signedness domain."""


class EmptyChoice(ValueError):
    """one_of with no alternatives."""


class EmptySize(ValueError):
    """Container size bounds that admit no size at all."""


class NotEnumerable(RuntimeError):
    """Enumeration requested without a budget on a too-large domain."""


class RejectionExhausted(RuntimeError):
    """A filter rejected too many draws; carries the filter's label."""

    def __init__(self, label: str, message: str | None = None) -> None:
        super().__init__(message or f"filter {label!r} exhausted its rejection budget")
        self.label = label


# --------------------------------------------------------------------------
# cardinality algebra

@dataclass(frozen=True)
class Cardinality:
    """Domain size: exact, saturated ("too large"), or unknowable (filters).

    Under ``map`` a Finite count is an upper bound (the transform may merge
    values); under ``filter`` the count is Unknown because the predicate is
    opaque.  Any intermediate above 2**63 saturates to TooLarge.
    """

    kind: str  # "finite" | "too_large" | "unknown"
    count: int | None = None

    @staticmethod
    def finite(n: int) -> "Cardinality":
        if n > TOO_LARGE_LIMIT:
            return TOO_LARGE
        return Cardinality("finite", n)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def __repr__(self) -> str:
        if self.is_finite:
            return f"Cardinality.finite({self.count})"
        return f"Cardinality({self.kind!r})"


TOO_LARGE = Cardinality("too_large")
UNKNOWN = Cardinality("unknown")


def _card_add(a: Cardinality, b: Cardinality) -> Cardinality:
    if a.kind == "unknown" or b.kind == "unknown":
        return UNKNOWN
    if a.kind == "too_large" or b.kind == "too_large":
        return TOO_LARGE
    return Cardinality.finite(a.count + b.count)


def _card_mul(a: Cardinality, b: Cardinality) -> Cardinality:
    if a.kind == "unknown" or b.kind == "unknown":
        return UNKNOWN
    if a.kind == "too_large" or b.kind == "too_large":
        return TOO_LARGE
    return Cardinality.finite(a.count * b.count)


def _card_sum_powers(inner: Cardinality, lo: int, hi: int) -> Cardinality:
    """sum_{k=lo..hi} inner**k with saturation, for list-shaped domains."""
    if inner.kind == "unknown":
        return UNKNOWN
    if inner.kind == "too_large":
        return TOO_LARGE if hi > 0 else Cardinality.finite(1)
    total = 0
    for k in range(lo, hi + 1):
        term = inner.count ** k
        total += term
        if total > TOO_LARGE_LIMIT:
            return TOO_LARGE
    return Cardinality.finite(total)


# --------------------------------------------------------------------------
# value trees

class ValueTree:
    """A concrete value plus its ordered, strictly-simpler shrink candidates.

    ``candidates()`` returns a fresh iterator each call; candidates are
    produced lazily because integer ladders over wide ranges would otherwise
    materialize enormous structures.  Every candidate's ``complexity()`` is
    lexicographically smaller than its parent's.
    """

    __slots__ = ()
    current: Any

    def candidates(self) -> Iterator["ValueTree"]:
        return iter(())

    def complexity(self) -> tuple:
        raise NotImplementedError


class _LeafTree(ValueTree):
    __slots__ = ("current",)

    def __init__(self, value: Any) -> None:
        self.current = value

    def complexity(self) -> tuple:
        return (0,)


class _IntTree(ValueTree):
    __slots__ = ("current", "lo")

    def __init__(self, value: int, lo: int) -> None:
        self.current = value
        self.lo = lo

    def candidates(self) -> Iterator[ValueTree]:
        v, lo = self.current, self.lo
        d = v - lo
        if d == 0:
            return
        yield _IntTree(lo, lo)
        step = d // 2
        while step > 0:
            c = v - step
            if c != lo:
                yield _IntTree(c, lo)
            step //= 2

    def complexity(self) -> tuple:
        return (self.current - self.lo,)


class _MapTree(ValueTree):
    __slots__ = ("current", "_fn", "_inner")

    def __init__(self, fn: Callable[[Any], Any], inner: ValueTree) -> None:
        self._fn = fn
        self._inner = inner
        self.current = fn(inner.current)

    def candidates(self) -> Iterator[ValueTree]:
        for c in self._inner.candidates():
            yield _MapTree(self._fn, c)

    def complexity(self) -> tuple:
        return self._inner.complexity()


class _FilterTree(ValueTree):
    __slots__ = ("current", "_pred", "_inner")

    def __init__(self, pred: Callable[[Any], Any], inner: ValueTree) -> None:
        self._pred = pred
        self._inner = inner
        self.current = inner.current

    def candidates(self) -> Iterator[ValueTree]:
        # Candidates that no longer satisfy the predicate are dropped along
        # with their whole subtree; domain closure beats shrink reach here.
        for c in self._inner.candidates():
            try:
                ok = bool(self._pred(c.current))
            except Exception:
                ok = False
            if ok:
                yield _FilterTree(self._pred, c)

    def complexity(self) -> tuple:
        return self._inner.complexity()


class _UnionTree(ValueTree):
    """A value drawn from ``one_of``; shrinks first to earlier alternatives.

    When built by the randomized path we carry a salt so that each earlier
    alternative can be generated lazily from its own replayable child stream.
    Enumeration-built trees instead offer each earlier alternative at its
    canonically simplest value.
    """

    __slots__ = ("current", "index", "_inner", "_alts", "_salt")

    def __init__(self, index: int, inner: ValueTree,
                 alts: Sequence["Strategy"], salt: int | None) -> None:
        self.index = index
        self._inner = inner
        self._alts = alts
        self._salt = salt
        self.current = inner.current

    def candidates(self) -> Iterator[ValueTree]:
        for j in range(self.index):
            alt = self._alts[j]
            if self._salt is None:
                t = alt._simplest_tree()
            else:
                ctx = _GenContext(SplitMix64((self._salt + j) & ((1 << 64) - 1)),
                                  rejection_budget=MAX_REJECTIONS_PER_VALUE * 10)
                try:
                    t = alt._random_tree(ctx)
                except RejectionExhausted:
                    t = None
            if t is not None:
                yield _UnionTree(j, t, self._alts, self._salt)
        for c in self._inner.candidates():
            yield _UnionTree(self.index, c, self._alts, self._salt)

    def complexity(self) -> tuple:
        return (self.index, self._inner.complexity())


class _TupleTree(ValueTree):
    __slots__ = ("current", "_comps")

    def __init__(self, comps: Sequence[ValueTree]) -> None:
        self._comps = comps
        self.current = tuple(c.current for c in comps)

    def candidates(self) -> Iterator[ValueTree]:
        comps = self._comps
        for k in range(len(comps)):
            for cand in comps[k].candidates():
                replaced = list(comps)
                replaced[k] = cand
                yield _TupleTree(replaced)

    def complexity(self) -> tuple:
        return tuple(c.complexity() for c in self._comps)


class _AbsentTree(ValueTree):
    __slots__ = ("current",)

    def __init__(self) -> None:
        self.current = None

    def complexity(self) -> tuple:
        return (0,)


class _PresentTree(ValueTree):
    __slots__ = ("current", "_inner")

    def __init__(self, inner: ValueTree) -> None:
        self._inner = inner
        self.current = inner.current

    def candidates(self) -> Iterator[ValueTree]:
        yield _AbsentTree()
        for c in self._inner.candidates():
            yield _PresentTree(c)

    def complexity(self) -> tuple:
        return (1, self._inner.complexity())


class _ListTree(ValueTree):
    __slots__ = ("current", "_elems", "_min_len")

    def __init__(self, elems: Sequence[ValueTree], min_len: int) -> None:
        self._elems = elems
        self._min_len = min_len
        self.current = [e.current for e in elems]

    def candidates(self) -> Iterator[ValueTree]:
        elems, lo = self._elems, self._min_len
        n = len(elems)
        # fewer elements first: truncations shortest-first, then single drops
        for target in range(lo, n):
            yield _ListTree(elems[:target], lo)
        if n - 1 >= lo:
            for i in range(n - 1):  # dropping the last duplicates a truncation
                yield _ListTree(list(elems[:i]) + list(elems[i + 1:]), lo)
        for i in range(n):
            for cand in elems[i].candidates():
                replaced = list(elems)
                replaced[i] = cand
                yield _ListTree(replaced, lo)

    def complexity(self) -> tuple:
        return (len(self._elems), tuple(e.complexity() for e in self._elems))


def _sorted_entries(entries: list[tuple[ValueTree, ValueTree]]) -> list[tuple[ValueTree, ValueTree]]:
    try:
        return sorted(entries, key=lambda kv: kv[0].current)
    except TypeError:  # keys not mutually orderable; keep construction order
        return entries


class _MapEntriesTree(ValueTree):
    """Key-ordered map with distinct keys; shrinks entries, then keys/values."""

    __slots__ = ("current", "_entries", "_min_size")

    def __init__(self, entries: list[tuple[ValueTree, ValueTree]], min_size: int) -> None:
        entries = _sorted_entries(entries)
        self._entries = entries
        self._min_size = min_size
        self.current = {k.current: v.current for k, v in entries}

    def candidates(self) -> Iterator[ValueTree]:
        entries, lo = self._entries, self._min_size
        n = len(entries)
        for target in range(lo, n):
            yield _MapEntriesTree(entries[:target], lo)
        if n - 1 >= lo:
            for i in range(n - 1):
                yield _MapEntriesTree(entries[:i] + entries[i + 1:], lo)
        for i, (ktree, vtree) in enumerate(entries):
            others = {e[0].current for j, e in enumerate(entries) if j != i}
            for kc in ktree.candidates():
                if kc.current in others:
                    continue  # keys must stay distinct
                replaced = entries[:i] + [(kc, vtree)] + entries[i + 1:]
                yield _MapEntriesTree(replaced, lo)
        for i, (ktree, vtree) in enumerate(entries):
            for vc in vtree.candidates():
                replaced = entries[:i] + [(ktree, vc)] + entries[i + 1:]
                yield _MapEntriesTree(replaced, lo)

    def complexity(self) -> tuple:
        pairs = sorted((k.complexity(), v.complexity()) for k, v in self._entries)
        return (len(self._entries), tuple(pairs))


# --------------------------------------------------------------------------
# generation / enumeration contexts

class _GenContext:
    """Carries the PRNG and the run-wide rejection budget through a draw."""

    __slots__ = ("rng", "rejection_budget")

    def __init__(self, rng: SplitMix64, rejection_budget: int | None = None) -> None:
        self.rng = rng
        self.rejection_budget = rejection_budget

    def charge_rejection(self, label: str) -> None:
        if self.rejection_budget is not None:
            self.rejection_budget -= 1
            if self.rejection_budget < 0:
                raise RejectionExhausted(
                    label, f"filter {label!r} exhausted the run-wide rejection budget")


class EnumStats:
    """Counters threaded through enumeration; lets callers bound the number
    of filter-rejected elements walked in the base domain."""

    __slots__ = ("accepted", "rejected", "max_rejected", "on_reject")

    def __init__(self, max_rejected: int | None = None,
                 on_reject: Callable[[], None] | None = None) -> None:
        self.accepted = 0
        self.rejected = 0
        self.max_rejected = max_rejected
        self.on_reject = on_reject

    def note_reject(self, label: str) -> None:
        self.rejected += 1
        if self.on_reject is not None:
            self.on_reject()
        if self.max_rejected is not None and self.rejected > self.max_rejected:
            raise RejectionExhausted(
                label, f"filter {label!r}: base-domain traversal bound exceeded")


def _lazy_product(stream_fns: Sequence[Callable[[], Iterator[Any]]]) -> Iterator[tuple]:
    """Row-major product of replayable streams (first component slowest).

    Unlike itertools.product this never materializes an input stream, so a
    budgeted caller can walk the front of an astronomically large product.
    """
    if not stream_fns:
        yield ()
        return
    head = stream_fns[0]
    rest = stream_fns[1:]
    if not rest:
        for h in head():
            yield (h,)
        return
    for h in head():
        for tail in _lazy_product(rest):
            yield (h,) + tail


# --------------------------------------------------------------------------
# strategy nodes

class Strategy:
    """Immutable description of a value domain.  See module docstring."""

    def map(self, transform: Callable[[Any], Any]) -> "Strategy":
        """Image of this domain under ``transform`` (cardinality becomes an
        upper bound; shrinking happens on the pre-image)."""
        return Map(self, transform)

    def filter(self, label: str, predicate: Callable[[Any], Any]) -> "Strategy":
        """Sub-domain accepted by ``predicate``; ``label`` names the filter
        in diagnostics when the rejection budget runs out."""
        return Filter(self, label, predicate)

    def cardinality(self) -> Cardinality:
        return self._cardinality()

    # interpretation hooks ------------------------------------------------
    def _cardinality(self) -> Cardinality:
        raise NotImplementedError

    def _random_tree(self, ctx: _GenContext) -> ValueTree:
        raise NotImplementedError

    def _iter_trees(self, stats: EnumStats | None) -> Iterator[ValueTree]:
        raise NotImplementedError

    def _simplest_tree(self) -> ValueTree | None:
        raise NotImplementedError


@dataclass(frozen=True)
class Just(Strategy):
    value: Any

    def _cardinality(self) -> Cardinality:
        return Cardinality.finite(1)

    def _random_tree(self, ctx: _GenContext) -> ValueTree:
        return _LeafTree(self.value)

    def _iter_trees(self, stats: EnumStats | None) -> Iterator[ValueTree]:
        yield _LeafTree(self.value)

    def _simplest_tree(self) -> ValueTree | None:
        return _LeafTree(self.value)

    def __repr__(self) -> str:
        return f"just({self.value!r})"


@dataclass(frozen=True)
class IntRange(Strategy):
    """Machine-width integer interval; all internal math is unbounded."""

    lo: int
    hi: int
    width: int = 64
    signed: bool = True

    def __post_init__(self) -> None:
        if self.width not in _WIDTHS:
            raise ValueError(f"width must be one of {_WIDTHS}, got {self.width}")
        if self.lo > self.hi:
            raise EmptyRange(f"int_range: lo {self.lo} > hi {self.hi}")
        if self.signed:
            dom_lo, dom_hi = -(1 << (self.width - 1)), (1 << (self.width - 1)) - 1
        else:
            dom_lo, dom_hi = 0, (1 << self.width) - 1
        if self.lo < dom_lo or self.hi > dom_hi:
            kind = "i" if self.signed else "u"
            raise BoundOverflow(
                f"int_range [{self.lo}, {self.hi}] does not fit {kind}{self.width}")

    def _cardinality(self) -> Cardinality:
        return Cardinality.finite(self.hi - self.lo + 1)

    def _random_tree(self, ctx: _GenContext) -> ValueTree:
        return _IntTree(ctx.rng.uniform_in(self.lo, self.hi), self.lo)

    def _iter_trees(self, stats: EnumStats | None) -> Iterator[ValueTree]:
        lo = self.lo
        for v in range(lo, self.hi + 1):
            yield _IntTree(v, lo)

    def _simplest_tree(self) -> ValueTree | None:
        return _IntTree(self.lo, self.lo)

    def __repr__(self) -> str:
        kind = "i" if self.signed else "u"
        return f"int_range({self.lo}, {self.hi}, {kind}{self.width})"


@dataclass(frozen=True)
class Map(Strategy):
    inner: Strategy
    transform: Callable[[Any], Any]

    def _cardinality(self) -> Cardinality:
        return self.inner._cardinality()  # upper bound: transform may merge

    def _random_tree(self, ctx: _GenContext) -> ValueTree:
        return _MapTree(self.transform, self.inner._random_tree(ctx))

    def _iter_trees(self, stats: EnumStats | None) -> Iterator[ValueTree]:
        for t in self.inner._iter_trees(stats):
            yield _MapTree(self.transform, t)

    def _simplest_tree(self) -> ValueTree | None:
        t = self.inner._simplest_tree()
        return None if t is None else _MapTree(self.transform, t)

    def __repr__(self) -> str:
        name = getattr(self.transform, "__name__", "<fn>")
        return f"{self.inner!r}.map({name})"


@dataclass(frozen=True)
class Filter(Strategy):
    inner: Strategy
    label: str
    predicate: Callable[[Any], Any]

    def _accepts(self, value: Any) -> bool:
        try:
            return bool(self.predicate(value))
        except Exception:
            return False  # a crashing filter rejects; the label shows up in diagnostics

    def _cardinality(self) -> Cardinality:
        self.inner._cardinality()  # still validates the substructure
        return UNKNOWN

    def _random_tree(self, ctx: _GenContext) -> ValueTree:
        for _ in range(MAX_REJECTIONS_PER_VALUE):
            t = self.inner._random_tree(ctx)
            if self._accepts(t.current):
                return _FilterTree(self.predicate, t)
            ctx.charge_rejection(self.label)
        raise RejectionExhausted(self.label)

    def _iter_trees(self, stats: EnumStats | None) -> Iterator[ValueTree]:
        for t in self.inner._iter_trees(stats):
            if self._accepts(t.current):
                yield _FilterTree(self.predicate, t)
            elif stats is not None:
                stats.note_reject(self.label)

    def _simplest_tree(self) -> ValueTree | None:
        for i, t in enumerate(self.inner._iter_trees(None)):
            if self._accepts(t.current):
                return _FilterTree(self.predicate, t)
            if i >= MAX_REJECTIONS_PER_VALUE:
                return None
        return None

    def __repr__(self) -> str:
        return f"{self.inner!r}.filter({self.label!r})"


@dataclass(frozen=True)
class OneOf(Strategy):
    alternatives: tuple[Strategy, ...]

    def __post_init__(self) -> None:
        if not self.alternatives:
            raise EmptyChoice("one_of needs at least one alternative")

    def _cardinality(self) -> Cardinality:
        total = Cardinality.finite(0)
        for alt in self.alternatives:
            total = _card_add(total, alt._cardinality())
        return total

    def _random_tree(self, ctx: _GenContext) -> ValueTree:
        i = ctx.rng.uniform_in(0, len(self.alternatives) - 1)
        salt = ctx.rng.next_u64()
        inner = self.alternatives[i]._random_tree(ctx)
        return _UnionTree(i, inner, self.alternatives, salt)

    def _iter_trees(self, stats: EnumStats | None) -> Iterator[ValueTree]:
        for i, alt in enumerate(self.alternatives):
            for t in alt._iter_trees(stats):
                yield _UnionTree(i, t, self.alternatives, None)

    def _simplest_tree(self) -> ValueTree | None:
        for i, alt in enumerate(self.alternatives):
            t = alt._simplest_tree()
            if t is not None:
                return _UnionTree(i, t, self.alternatives, None)
        return None

    def __repr__(self) -> str:
        return f"one_of({', '.join(map(repr, self.alternatives))})"


@dataclass(frozen=True)
class TupleOf(Strategy):
    components: tuple[Strategy, ...]

    def _cardinality(self) -> Cardinality:
        total = Cardinality.finite(1)
        for c in self.components:
            total = _card_mul(total, c._cardinality())
        return total

    def _random_tree(self, ctx: _GenContext) -> ValueTree:
        return _TupleTree([c._random_tree(ctx) for c in self.components])

    def _iter_trees(self, stats: EnumStats | None) -> Iterator[ValueTree]:
        fns = [(lambda c=c: c._iter_trees(stats)) for c in self.components]
        for combo in _lazy_product(fns):
            yield _TupleTree(combo)

    def _simplest_tree(self) -> ValueTree | None:
        comps = [c._simplest_tree() for c in self.components]
        if any(t is None for t in comps):
            return None
        return _TupleTree(comps)

    def __repr__(self) -> str:
        return f"tuple_of({', '.join(map(repr, self.components))})"


@dataclass(frozen=True)
class OptionalOf(Strategy):
    inner: Strategy

    def _cardinality(self) -> Cardinality:
        return _card_add(Cardinality.finite(1), self.inner._cardinality())

    def _random_tree(self, ctx: _GenContext) -> ValueTree:
        if ctx.rng.uniform_in(0, 1) == 0:
            return _AbsentTree()
        return _PresentTree(self.inner._random_tree(ctx))

    def _iter_trees(self, stats: EnumStats | None) -> Iterator[ValueTree]:
        yield _AbsentTree()
        for t in self.inner._iter_trees(stats):
            yield _PresentTree(t)

    def _simplest_tree(self) -> ValueTree | None:
        return _AbsentTree()

    def __repr__(self) -> str:
        return f"optional_of({self.inner!r})"


@dataclass(frozen=True)
class ListOf(Strategy):
    element: Strategy
    min_len: int
    max_len: int

    def __post_init__(self) -> None:
        if self.min_len < 0 or self.min_len > self.max_len:
            raise EmptySize(f"list_of: bad size bounds [{self.min_len}, {self.max_len}]")

    def _cardinality(self) -> Cardinality:
        return _card_sum_powers(self.element._cardinality(), self.min_len, self.max_len)

    def _random_tree(self, ctx: _GenContext) -> ValueTree:
        n = ctx.rng.uniform_in(self.min_len, self.max_len)
        return _ListTree([self.element._random_tree(ctx) for _ in range(n)], self.min_len)

    def _iter_trees(self, stats: EnumStats | None) -> Iterator[ValueTree]:
        elem = self.element
        for n in range(self.min_len, self.max_len + 1):
            fns = [(lambda: elem._iter_trees(stats))] * n
            for combo in _lazy_product(fns):
                yield _ListTree(combo, self.min_len)

    def _simplest_tree(self) -> ValueTree | None:
        if self.min_len == 0:
            return _ListTree([], 0)
        t = self.element._simplest_tree()
        if t is None:
            return None
        return _ListTree([t] * self.min_len, self.min_len)

    def __repr__(self) -> str:
        return f"list_of({self.element!r}, {self.min_len}, {self.max_len})"


@dataclass(frozen=True)
class OrderedMapOf(Strategy):
    """Key-ordered map with distinct keys drawn from ``keys``."""

    keys: Strategy
    values: Strategy
    min_size: int
    max_size: int

    def __post_init__(self) -> None:
        if self.min_size < 0 or self.min_size > self.max_size:
            raise EmptySize(
                f"ordered_map_of: bad size bounds [{self.min_size}, {self.max_size}]")
        kcard = self.keys._cardinality()
        if kcard.is_finite and kcard.count < self.min_size:
            raise EmptySize(
                f"ordered_map_of: min_size {self.min_size} exceeds the "
                f"{kcard.count} available keys")

    def _cardinality(self) -> Cardinality:
        kcard = self.keys._cardinality()
        vcard = self.values._cardinality()
        if kcard.kind == "unknown" or vcard.kind == "unknown":
            return UNKNOWN
        if kcard.kind == "too_large" or vcard.kind == "too_large":
            return TOO_LARGE
        total = 0
        hi = min(self.max_size, kcard.count)
        for k in range(self.min_size, hi + 1):
            total += _choose(kcard.count, k) * vcard.count ** k
            if total > TOO_LARGE_LIMIT:
                return TOO_LARGE
        return Cardinality.finite(total)

    def _random_tree(self, ctx: _GenContext) -> ValueTree:
        hi = self.max_size
        kcard = self.keys._cardinality()
        if kcard.is_finite:
            hi = min(hi, kcard.count)
        size = ctx.rng.uniform_in(self.min_size, max(hi, self.min_size))
        label = f"<distinct keys of {self!r}>"
        entries: list[tuple[ValueTree, ValueTree]] = []
        seen: list[Any] = []
        for _ in range(size):
            for _ in range(MAX_REJECTIONS_PER_VALUE):
                kt = self.keys._random_tree(ctx)
                if kt.current not in seen:
                    break
                ctx.charge_rejection(label)
            else:
                raise RejectionExhausted(label)
            seen.append(kt.current)
            entries.append((kt, self.values._random_tree(ctx)))
        return _MapEntriesTree(entries, self.min_size)

    def _iter_trees(self, stats: EnumStats | None) -> Iterator[ValueTree]:
        universe: list[ValueTree] = []
        seen: set[Any] = set()  # keys end up as dict keys, so hashable by contract
        for kt in self.keys._iter_trees(stats):
            if kt.current in seen:
                continue
            seen.add(kt.current)
            universe.append(kt)
            if len(universe) > _KEY_UNIVERSE_CAP:
                raise NotEnumerable("ordered_map_of: key universe too large to enumerate")
        values = self.values
        for size in range(self.min_size, min(self.max_size, len(universe)) + 1):
            for key_combo in itertools.combinations(universe, size):
                fns = [(lambda: values._iter_trees(stats))] * size
                for val_combo in _lazy_product(fns):
                    yield _MapEntriesTree(list(zip(key_combo, val_combo)), self.min_size)

    def _simplest_tree(self) -> ValueTree | None:
        if self.min_size == 0:
            return _MapEntriesTree([], 0)
        vt = self.values._simplest_tree()
        if vt is None:
            return None
        entries: list[tuple[ValueTree, ValueTree]] = []
        seen: list[Any] = []
        for i, kt in enumerate(self.keys._iter_trees(None)):
            if kt.current in seen:
                continue
            seen.append(kt.current)
            entries.append((kt, vt))
            if len(entries) == self.min_size:
                return _MapEntriesTree(entries, self.min_size)
            if i >= MAX_REJECTIONS_PER_VALUE * self.min_size:
                break
        return None

    def __repr__(self) -> str:
        return (f"ordered_map_of({self.keys!r}, {self.values!r}, "
                f"{self.min_size}, {self.max_size})")


def _choose(n: int, k: int) -> int:
    if k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


# --------------------------------------------------------------------------
# public constructors

def just(value: Any) -> Strategy:
    return Just(value)


def int_range(lo: int, hi: int, width: int = 64, signed: bool = True) -> Strategy:
    return IntRange(lo, hi, width, signed)


def one_of(*alternatives: Strategy) -> Strategy:
    return OneOf(tuple(alternatives))


def tuple_of(*components: Strategy) -> Strategy:
    return TupleOf(tuple(components))


def optional_of(inner: Strategy) -> Strategy:
    return OptionalOf(inner)


def list_of(element: Strategy, min_len: int, max_len: int) -> Strategy:
    return ListOf(element, min_len, max_len)


def ordered_map_of(keys: Strategy, values: Strategy,
                   min_size: int, max_size: int) -> Strategy:
    return OrderedMapOf(keys, values, min_size, max_size)


# --------------------------------------------------------------------------
# public interpretations

def cardinality(strategy: Strategy) -> Cardinality:
    return strategy._cardinality()


def random_tree(strategy: Strategy, rng: SplitMix64,
                rejection_budget: int | None = None) -> ValueTree:
    """One seeded draw.  ``rejection_budget`` bounds the *total* number of
    filter rejections this draw may burn (on top of the per-value 100)."""
    return strategy._random_tree(_GenContext(rng, rejection_budget))


def iter_trees(strategy: Strategy, stats: EnumStats | None = None) -> Iterator[ValueTree]:
    """Canonical enumeration as shrinkable trees.  No budget gating; callers
    that rely on finiteness should consult ``cardinality`` first."""
    return strategy._iter_trees(stats)


def enumerate_values(strategy: Strategy, budget: int | None = None) -> Iterator[Any]:
    """Canonical enumeration of values.

    Raises NotEnumerable for a domain already known to exceed 2**63 unless a
    ``budget`` is supplied, in which case at most ``budget`` (accepted)
    values are yielded.
    """
    card = strategy._cardinality()
    if card.kind == "too_large" and budget is None:
        raise NotEnumerable(f"{strategy!r} has more than 2**63 elements; pass a budget")
    it = (t.current for t in strategy._iter_trees(None))
    return it if budget is None else itertools.islice(it, budget)


def simplest_tree(strategy: Strategy) -> ValueTree | None:
    """The canonically simplest value of the domain, if cheaply reachable."""
    return strategy._simplest_tree()
