"""The 3x+1 map, single trajectories, and exhaustive range checks."""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_MAX_STEPS = 10**5


@dataclass(frozen=True)
class CollatzTrajectory:
    start: int
    values: tuple[int, ...]
    reached_one: bool

    @property
    def steps(self) -> int:
        return len(self.values) - 1

    @property
    def peak(self) -> int:
        return max(self.values)


@dataclass(frozen=True)
class CollatzRangeReport:
    upper: int
    all_reach_one: bool
    max_steps: int
    max_steps_start: int
    max_excursion: int
    max_excursion_start: int


def collatz_step(x: int, max_value: int | None = None) -> int:
    """One application of the map: x/2 for even x, 3x+1 for odd x.

    Python integers never wrap, so by default every value is exact.  Passing
    ``max_value`` emulates a fixed-width store: an odd step whose result
    would exceed it raises OverflowError instead of producing a wrong value.
    """
    if x < 1:
        raise ValueError(f"collatz map is defined on naturals >= 1, got {x}")
    if x % 2 == 0:
        return x // 2
    y = 3 * x + 1
    if max_value is not None and y > max_value:
        raise OverflowError(f"3*{x}+1 exceeds {max_value}")
    return y


def collatz_trajectory(
    n: int, max_steps: int = DEFAULT_MAX_STEPS, max_value: int | None = None
) -> CollatzTrajectory:
    if n < 1:
        raise ValueError(f"start must be >= 1, got {n}")
    if max_steps < 0:
        raise ValueError("max_steps must be >= 0")
    values = [n]
    x = n
    while x != 1 and len(values) <= max_steps:
        x = collatz_step(x, max_value)
        values.append(x)
    return CollatzTrajectory(n, tuple(values), x == 1)


def collatz_verify_range(upper: int, max_value: int | None = None) -> CollatzRangeReport:
    """Check that every 1 <= n <= upper reaches 1.

    Starts are scanned in increasing order, so once a trajectory from ``n``
    drops below ``n`` its remaining length is already known.  The largest
    excursion over the range is likewise attained before that drop.
    """
    if upper < 1:
        raise ValueError(f"upper must be >= 1, got {upper}")
    total = [0] * (upper + 1)
    best_steps, best_steps_at = 0, 1
    best_peak, best_peak_at = 1, 1
    for n in range(2, upper + 1):
        x, k, peak = n, 0, n
        try:
            while x >= n:
                x = collatz_step(x, max_value)
                k += 1
                if x > peak:
                    peak = x
        except OverflowError as exc:
            raise OverflowError(f"start {n}: {exc}") from exc
        s = k + total[x]
        total[n] = s
        if s > best_steps:
            best_steps, best_steps_at = s, n
        if peak > best_peak:
            best_peak, best_peak_at = peak, n
    return CollatzRangeReport(upper, True, best_steps, best_steps_at, best_peak, best_peak_at)
