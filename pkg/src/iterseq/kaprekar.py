"""Generalized Kaprekar routine K(u, v) in any base at a fixed digit length.

One step sorts the digits of ``n`` (leading zeros kept, so every state has
exactly ``length`` digits) and subtracts the v-th smallest distinct
arrangement from the u-th largest.  With u = v = 1, base 10 and length 4
this is the classic routine converging to 6174.

Ranks count distinct values, not arrangements with multiplicity: the digits
{4, 9, 9, 5} have 12 arrangements and 9594 is the third largest.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from .cycledetect import Cycle, canonical
from .digits import Digits
from .errors import RankOutOfRange, StateSpaceTooLarge, ValueTooLarge

DEFAULT_STATE_CAP = 10**7

# Terminal sets claimed in the literature for specific configurations,
# keyed by (base, length, u, v).  Used only to flag divergences in reports.
PUBLISHED_TERMINALS: dict[tuple[int, int, int, int], frozenset[tuple[int, ...]]] = {
    (10, 4, 1, 1): frozenset({(6174,)}),
    (10, 3, 2, 2): frozenset({(450,)}),
    (10, 4, 3, 1): frozenset({(4995,)}),
    (10, 4, 1, 2): frozenset({(9045,), (4995,), (4997,)}),
    (10, 5, 3, 2): frozenset({(49995,)}),
    (10, 5, 4, 1): frozenset({(62748,)}),
    (2, 4, 2, 2): frozenset({(0b101,), (0b10,)}),
    (2, 5, 2, 2): frozenset({(0b110, 0b1111)}),
    (2, 6, 2, 2): frozenset({(0b101001,)}),
    (2, 7, 2, 2): frozenset({(0b1001011, 0b1011101)}),
    (2, 8, 2, 2): frozenset({(0b11010001,)}),
    (2, 9, 2, 2): frozenset({(0b110010101, 0b110111001)}),
}


@dataclass(frozen=True)
class KaprekarConfig:
    base: int
    length: int
    u: int = 1
    v: int = 1

    def __post_init__(self):
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        if self.length < 2:
            raise ValueError(f"length must be >= 2, got {self.length}")
        if self.u < 1 or self.v < 1:
            raise ValueError("ranks u and v must be >= 1")
        if self.base**self.length > 2**63:
            raise ValueError("base**length must not exceed 2**63")
        if max(self.u, self.v) > self.base**self.length:
            raise ValueError("rank exceeds the number of possible arrangements")

    @property
    def states(self) -> int:
        return self.base**self.length

    def as_dict(self) -> dict[str, int]:
        return {"base": self.base, "length": self.length, "u": self.u, "v": self.v}


@dataclass(frozen=True)
class KaprekarClassification:
    """Exhaustive outcome of iterating K(u, v) from every length-L state.

    Starts that hit an undefined step, or collapse to the all-zero state,
    are listed in ``degenerate_starts`` and belong to no terminal.
    ``canonical_basin_sizes`` restricts the count to starts without a
    leading zero.
    """

    config: KaprekarConfig
    fixed_points: tuple[int, ...]
    cycles: tuple[Cycle, ...]
    degenerate_starts: tuple[int, ...]
    basin_sizes: dict[Cycle, int] = field(default_factory=dict)
    canonical_basin_sizes: dict[Cycle, int] = field(default_factory=dict)

    @property
    def terminals(self) -> tuple[Cycle, ...]:
        return tuple(sorted(self.basin_sizes, key=lambda c: c.values))

    def terminal_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(c.values for c in self.basin_sizes)

    def canonical_degenerate_starts(self) -> tuple[int, ...]:
        lo = self.config.base ** (self.config.length - 1)
        return tuple(n for n in self.degenerate_starts if n >= lo)


def distinct_perm_count(d: Digits | tuple[int, ...]) -> int:
    digits = tuple(d)
    total = factorial(len(digits))
    for c in Counter(digits).values():
        total //= factorial(c)
    return total


def _next_permutation(a: list[int]) -> bool:
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = reversed(a[i + 1:])
    return True


def _prev_permutation(a: list[int]) -> bool:
    i = len(a) - 2
    while i >= 0 and a[i] <= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] >= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = reversed(a[i + 1:])
    return True


def _value(digits, base: int) -> int:
    x = 0
    for t in digits:
        x = x * base + t
    return x


def _ranked(key: tuple[int, ...], base: int, k: int, largest: bool) -> int:
    # walk k-1 lexicographic neighbours away from the extreme arrangement;
    # fixed length makes lexicographic order agree with numeric order
    a = sorted(key, reverse=largest)
    move = _prev_permutation if largest else _next_permutation
    for _ in range(k - 1):
        if not move(a):
            raise RankOutOfRange(f"rank {k} exceeds the distinct arrangements of {key}")
    return _value(a, base)


def alpha(d: Digits, u: int) -> int:
    """u-th largest distinct value among the arrangements of ``d``."""
    if u < 1 or u > distinct_perm_count(d):
        raise RankOutOfRange(f"no arrangement of rank {u} for {d.digits}")
    return _ranked(d.digits, d.base, u, largest=True)


def beta(d: Digits, v: int) -> int:
    """v-th smallest distinct value among the arrangements of ``d``."""
    if v < 1 or v > distinct_perm_count(d):
        raise RankOutOfRange(f"no arrangement of rank {v} for {d.digits}")
    return _ranked(d.digits, d.base, v, largest=False)


@lru_cache(maxsize=1 << 16)
def _step_for_key(key: tuple[int, ...], base: int, u: int, v: int) -> int | None:
    if distinct_perm_count(key) < max(u, v):
        return None
    diff = _ranked(key, base, u, largest=True) - _ranked(key, base, v, largest=False)
    return diff if diff >= 0 else None


def kaprekar_step(n: int, cfg: KaprekarConfig) -> int | None:
    """Apply K(u, v) once; ``None`` marks a degenerate state.

    A state is degenerate when its digits have fewer than max(u, v) distinct
    arrangements, or when the difference would be negative.
    """
    if n < 0 or n >= cfg.states:
        raise ValueTooLarge(f"{n} is not a {cfg.length}-digit base-{cfg.base} state")
    base = cfg.base
    ds = []
    for _ in range(cfg.length):
        n, r = divmod(n, base)
        ds.append(r)
    ds.sort()
    return _step_for_key(tuple(ds), base, cfg.u, cfg.v)


_UNSEEN = -1
_DEGENERATE = -2


def classify_all(cfg: KaprekarConfig, cap: int = DEFAULT_STATE_CAP) -> KaprekarClassification:
    """Follow K(u, v) from every state in [0, base**length).

    The all-zero state is treated as degenerate: it is what equal
    arrangements collapse to (repdigits under u = v = 1), and for any other
    rank pair its own step is undefined.
    """
    N = cfg.states
    if N > cap:
        raise StateSpaceTooLarge(f"{N} states exceed the cap of {cap}")
    label = [_UNSEEN] * N
    label[0] = _DEGENERATE
    cycles: list[Cycle] = []
    for n in range(N):
        if label[n] != _UNSEEN:
            continue
        pos: dict[int, int] = {}
        path: list[int] = []
        x: int | None = n
        while True:
            if x is None:
                code = _DEGENERATE
                break
            if label[x] != _UNSEEN:
                code = label[x]
                break
            if x in pos:
                k = pos[x]
                code = len(cycles)
                cycles.append(canonical(path[k:]))
                del path[k:]
                for y in cycles[code]:
                    label[y] = code
                break
            pos[x] = len(path)
            path.append(x)
            x = kaprekar_step(x, cfg)
        for y in path:
            label[y] = code

    lo = cfg.base ** (cfg.length - 1)
    counts = Counter(label)
    canon_counts = Counter(label[lo:])
    basin = {cycles[i]: counts[i] for i in range(len(cycles))}
    canon = {cycles[i]: canon_counts[i] for i in range(len(cycles)) if canon_counts[i]}
    ordered = sorted(cycles, key=lambda c: c.values)
    return KaprekarClassification(
        config=cfg,
        fixed_points=tuple(c.values[0] for c in ordered if c.is_fixed_point),
        cycles=tuple(c for c in ordered if not c.is_fixed_point),
        degenerate_starts=tuple(i for i, lab in enumerate(label) if lab == _DEGENERATE),
        basin_sizes={c: basin[c] for c in ordered},
        canonical_basin_sizes={c: canon[c] for c in ordered if c in canon},
    )


def published_comparison(result: KaprekarClassification) -> dict | None:
    """Compare discovered terminals against a published claim, if one exists."""
    c = result.config
    claimed = PUBLISHED_TERMINALS.get((c.base, c.length, c.u, c.v))
    if claimed is None:
        return None
    found = result.terminal_set()
    return {
        "claimed": sorted(map(list, claimed)),
        "missing": sorted(map(list, claimed - found)),
        "unexpected": sorted(map(list, found - claimed)),
        "agrees": claimed == found,
    }


def conjectured_fixed_point(m: int) -> int:
    """Predicted unique fixed point of binary K(2,2) at length 2m."""
    return 2 ** (2 * m) - 3 * 2**m + 1


def conjectured_loop(m: int) -> Cycle:
    """Predicted 2-cycle of binary K(2,2) at length 2m+1."""
    top = 2 ** (2 * m + 1) - 7 * 2**m + 1
    return canonical([top + 2 ** (m - 2), top + 10 * 2 ** (m - 2)])


def conjecture_check(m: int, cap: int = DEFAULT_STATE_CAP) -> tuple[bool, bool]:
    """Exhaustively test the binary K(2,2) predictions for lengths 2m and 2m+1."""
    if m < 3:
        raise ValueError(f"the prediction is stated for m >= 3, got {m}")
    even = classify_all(KaprekarConfig(2, 2 * m, 2, 2), cap)
    odd = classify_all(KaprekarConfig(2, 2 * m + 1, 2, 2), cap)
    return (
        even.terminal_set() == {(conjectured_fixed_point(m),)},
        odd.terminal_set() == {conjectured_loop(m).values},
    )


def table1_classifications(lengths=range(4, 10), cap: int = DEFAULT_STATE_CAP):
    return [classify_all(KaprekarConfig(2, L, 2, 2), cap) for L in lengths]
