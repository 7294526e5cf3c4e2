"""Terminal-cycle detection for iterated maps on the naturals."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass

from .errors import DuplicateElements, StepCapExceeded

DEFAULT_STEP_CAP = 10**6

IntMap = Callable[[int], int]


@dataclass(frozen=True)
class Cycle:
    """Distinct values cyclically permuted by some map, minimum first.

    A fixed point is a cycle of length one.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("a cycle needs at least one element")
        if len(set(self.values)) != len(self.values):
            raise DuplicateElements(f"repeated element in {self.values}")
        if self.values[0] != min(self.values):
            raise ValueError(f"cycle not in canonical rotation: {self.values}")

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __contains__(self, x):
        return x in self.values

    @property
    def is_fixed_point(self) -> bool:
        return len(self.values) == 1

    def __str__(self):
        return "{" + ", ".join(map(str, self.values)) + "}"


@dataclass(frozen=True)
class TrajectoryResult:
    """Outcome of iterating a map from ``start``.

    ``transient`` holds the values visited before the cycle (``start``
    included unless it already lies on the cycle); ``entry`` is the first
    cycle element reached.
    """

    start: int
    transient: tuple[int, ...]
    cycle: Cycle
    entry: int

    @property
    def transient_length(self) -> int:
        return len(self.transient)

    def values(self) -> tuple[int, ...]:
        """Transient followed by one pass over the cycle, in map order."""
        c = self.cycle.values
        i = c.index(self.entry)
        return self.transient + c[i:] + c[:i]


def canonical(values: Sequence[int]) -> Cycle:
    vals = tuple(values)
    if not vals:
        raise ValueError("a cycle needs at least one element")
    if len(set(vals)) != len(vals):
        raise DuplicateElements(f"repeated element in {vals}")
    i = vals.index(min(vals))
    return Cycle(vals[i:] + vals[:i])


def verify_cycle(f: IntMap, c: Cycle | Iterable[int]) -> bool:
    vals = tuple(c)
    return all(f(vals[i]) == vals[(i + 1) % len(vals)] for i in range(len(vals)))


def find_terminal(f: IntMap, start: int, step_cap: int = DEFAULT_STEP_CAP) -> TrajectoryResult:
    """Iterate ``f`` from ``start`` until a value repeats.

    Raises StepCapExceeded if no repeat shows up within ``step_cap``
    applications of ``f``.
    """
    if step_cap < 1:
        raise ValueError("step_cap must be >= 1")
    seen: dict[int, int] = {}
    path: list[int] = []
    x = start
    while x not in seen:
        if len(path) > step_cap:
            raise StepCapExceeded(f"no repeat within {step_cap} steps from {start}")
        seen[x] = len(path)
        path.append(x)
        x = f(x)
    k = seen[x]
    return TrajectoryResult(start, tuple(path[:k]), canonical(path[k:]), x)


class TerminalMemo:
    """Shared value -> (terminal cycle, distance to cycle) table.

    Entries are written once; every writer for a key would compute the same
    pair, so resolution order never changes results.
    """

    def __init__(self, f: IntMap, step_cap: int = DEFAULT_STEP_CAP):
        self.f = f
        self.step_cap = step_cap
        self.table: dict[int, tuple[Cycle, int]] = {}

    def __len__(self):
        return len(self.table)

    def resolve(self, x: int) -> tuple[Cycle, int]:
        table = self.table
        hit = table.get(x)
        if hit is not None:
            return hit
        f = self.f
        pos: dict[int, int] = {}
        path: list[int] = []
        y = x
        while y not in table:
            if y in pos:
                k = pos[y]
                cyc = canonical(path[k:])
                for v in path[k:]:
                    table[v] = (cyc, 0)
                del path[k:]
                break
            if len(path) > self.step_cap:
                raise StepCapExceeded(f"no repeat within {self.step_cap} steps from {x}")
            pos[y] = len(path)
            path.append(y)
            y = f(y)
        cyc, d = table[y]
        for v in reversed(path):
            d += 1
            table[v] = (cyc, d)
        return table[x]

