"""Properties, the registry, run configuration, and shared execution plumbing."""

from __future__ import annotations

import re
import threading
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from .strategies import Strategy, TupleOf

NAME_PATTERN = re.compile(r"[A-Za-z0-9_.:-]+\Z")

#: Backends poll deadline and stop-flag once per this many evaluations.
POLL_INTERVAL = 1024


class DuplicateName(ValueError):
    """A property name was registered twice."""


@dataclass(frozen=True)
class Property:
    """A named harness: a strategy plus a predicate over its values.

    When the strategy is a tuple the predicate receives the components as
    separate arguments, so a two-parameter harness reads like a function of
    two variables.  The predicate may return a boolean (or None, meaning
    pass) or signal failure by raising; under the symbolic backend it runs
    over carrier values and must build its result from carrier operations.
    """

    name: str
    strategy: Strategy
    predicate: Callable[..., Any]
    tags: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not NAME_PATTERN.fullmatch(self.name):
            raise ValueError(
                f"property name {self.name!r} must match [A-Za-z0-9_.:-]+")

    @property
    def unpack(self) -> bool:
        return isinstance(self.strategy, TupleOf)

    def __lt__(self, other: "Property") -> bool:
        return self.name < other.name


class PropertyRegistry:
    """Insertion-ordered collection of uniquely named properties."""

    def __init__(self) -> None:
        self._props: dict[str, Property] = {}

    def register(self, name: str, strategy: Strategy,
                 predicate: Callable[..., Any],
                 tags: tuple[str, ...] | list[str] = ()) -> Property:
        if name in self._props:
            raise DuplicateName(f"property {name!r} is already registered")
        prop = Property(name, strategy, predicate, tuple(tags))
        self._props[name] = prop
        return prop

    def define(self, name: str, strategy: Strategy,
               tags: tuple[str, ...] | list[str] = ()):
        """Decorator sugar: ``@registry.define("inc", int_range(0, 9))``."""
        def deco(fn: Callable[..., Any]) -> Callable[..., Any]:
            self.register(name, strategy, fn, tags)
            return fn
        return deco

    def get(self, name: str) -> Property:
        return self._props[name]

    def names(self) -> list[str]:
        return list(self._props)

    def select(self, glob: str | None = None) -> list[Property]:
        import fnmatch
        props = list(self._props.values())
        if glob is None:
            return props
        return [p for p in props if fnmatch.fnmatchcase(p.name, glob)]

    def __len__(self) -> int:
        return len(self._props)

    def __iter__(self) -> Iterator[Property]:
        return iter(self._props.values())

    def __contains__(self, name: str) -> bool:
        return name in self._props


@dataclass(frozen=True)
class RunConfig:
    """Everything that can vary between runs, in one committable value.

    Two runs with equal configs (and equal code) are comparable; the history
    file hashes this to decide which runs may be judged against each other.
    """

    backend: str = "fuzz"
    seed: int = 0
    cases: int = 256
    budget: int = 1 << 20
    timeout_ms: int = 10_000
    repetition_cap: int = 8
    filter: str | None = None
    code_fingerprint: str = "unknown"

    def __post_init__(self) -> None:
        if self.backend not in ("fuzz", "exhaustive", "symbolic", "ensemble"):
            raise ValueError(f"unknown backend {self.backend!r}")
        if not (0 <= self.seed < 1 << 64):
            raise ValueError("seed must fit in 64 bits")
        for name in ("cases", "budget", "timeout_ms", "repetition_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


class DeadlineReached(Exception):
    """Internal control flow: the per-property deadline passed."""


class StopRequested(Exception):
    """Internal control flow: another backend in the ensemble already won."""


class Ticker:
    """Counts evaluations; every POLL_INTERVAL it checks the deadline and the
    cooperative stop flag.  Cheap enough to call in the innermost loops."""

    __slots__ = ("deadline", "stop", "count")

    def __init__(self, deadline: float | None = None,
                 stop: threading.Event | None = None) -> None:
        self.deadline = deadline
        self.stop = stop
        self.count = 0

    def tick(self, n: int = 1) -> None:
        before = self.count
        self.count = before + n
        if before // POLL_INTERVAL != self.count // POLL_INTERVAL:
            self.poll()

    def poll(self) -> None:
        if self.stop is not None and self.stop.is_set():
            raise StopRequested
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise DeadlineReached


def eval_predicate(prop: Property, value: Any) -> tuple[bool, str | None]:
    """Run the predicate on a concrete value.

    Returns (ok, message).  None and truthy results pass; falsy results and
    any raise fail — a predicate abort is a counterexample, with the abort
    text attached.
    """
    try:
        if prop.unpack:
            result = prop.predicate(*value)
        else:
            result = prop.predicate(value)
    except Exception as exc:  # noqa: BLE001 - aborts are verdict data here
        return False, f"{type(exc).__name__}: {exc}"
    if result is None or result is True:
        return True, None
    if not result:
        return False, "predicate returned a falsy value"
    return True, None
