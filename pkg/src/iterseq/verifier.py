"""Exhaustive check that every dfp / dpp trajectory ends in a known cycle.

Both maps only look at the digit multiset of their argument, with 0 and 1
interchangeable, and both trap every trajectory below a threshold (10**7 for
dfp, 10**10 for dpp).  So it is enough to take one representative per
multiset over {1..9} of size up to 7 (dfp) or 10 (dpp) and follow it: 11439
and 92377 cases.
"""

from __future__ import annotations

import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice

from .cycledetect import DEFAULT_STEP_CAP, Cycle, TerminalMemo, canonical, find_terminal, verify_cycle
from .digitproc import DFP, DPP, ProcessKind, apply_to_multiset, kind_of, trap_bound
from .digits import enumerate_multisets_upto, min_value_of_multiset, multiset_count
from .errors import CatalogInconsistent

# Listed in map order; the rotation is normalized when the catalog is built.
DFP_LISTING = (
    ("fixA", (1,)),
    ("fixB", (2,)),
    ("fixC", (145,)),
    ("fixD", (40585,)),
    ("loop2A", (871, 45361)),
    ("loop2B", (872, 45362)),
    ("loop3", (169, 363601, 1454)),
)

DPP_LISTING = (
    ("fixA", (1,)),
    ("fixB", (3435,)),
    ("loop2", (421845123, 16780890)),
    ("loop3", (16777500, 2520413, 3418)),
    ("loop8", (
        809265896, 808491852, 437755524, 1657004, 873583, 34381154, 16780909,
        792488396,
    )),
    ("loop11", (
        791621579, 776537851, 19300779, 776488094, 422669176, 388384265, 50381743,
        17604196, 388337603, 34424740, 824599
    )),
    ("loop40", (
        793312220, 388244100, 33554978, 405027808, 34381363, 16824237, 17647707,
        3341086, 16824184, 33601606, 140025, 3388, 33554486, 16830688, 50424989,
        791621836, 405114593, 387427281, 35201810, 16780376, 18517643, 17650825,
        17653671, 1743552, 830081, 33554462, 53476, 873607, 18470986, 421845378,
        34381644, 16824695, 404294403, 387421546, 17651084, 17650799, 776537847,
        20121452, 3396, 387467199
    )),
    ("loop97", (
        1583236420, 16827317, 18470991, 792441996, 1163132183, 16823961, 404291050,
        387424134, 17601586, 17697199, 1163955211, 387473430, 18424896, 421022094,
        387421016, 17647705, 2520668, 16873662, 17740759, 389894501, 808398820,
        454529386, 404251154, 7025, 826673, 17694102, 388290951, 808398568, 454579162,
        388297455, 421805001, 16780606, 17740730, 2470915, 388247419, 421799008,
        792442000, 388244555, 33564350, 53244, 3668, 16870555, 17656792, 389164017,
        405068190, 404247746, 1694771, 389114489, 808395951, 808401689, 437799052,
        776491477, 390761830, 405067961, 388340728, 51155506, 59159, 774847229,
        406668854, 33698038, 421021659, 387470537, 19251281, 404200841, 16777992,
        777358268, 36074873, 18471269, 405068166, 16920568, 404294148, 404198735,
        405024914, 387424389, 421799034, 775665066, 1839961, 791664879, 793358849,
        809222388, 437752177, 3297585, 405027529, 388250548, 50338186, 33604269,
        387514116, 17650826, 17697202, 389114241, 404198251, 404201349, 387421291,
        405021541, 6770, 1693743, 388290999
    )),
)


@dataclass(frozen=True)
class CycleCatalog:
    kind: ProcessKind
    entries: tuple[tuple[str, Cycle], ...]

    @classmethod
    def from_listing(cls, kind: ProcessKind, listing) -> CycleCatalog:
        return cls(kind, tuple((name, canonical(vals)) for name, vals in listing))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.entries)

    def lookup(self, cycle: Cycle) -> str | None:
        for name, c in self.entries:
            if c == cycle:
                return name
        return None

    def successor_checks(self) -> list[tuple[str, int, int, bool]]:
        """One (name, value, expected successor, holds) row per catalog value."""
        rows = []
        for name, c in self.entries:
            vals = c.values
            for i, x in enumerate(vals):
                nxt = vals[(i + 1) % len(vals)]
                rows.append((name, x, nxt, self.kind(x) == nxt))
        return rows

    def validate(self) -> None:
        seen: set[int] = set()
        for name, c in self.entries:
            if not verify_cycle(self.kind, c):
                raise CatalogInconsistent(f"{self.kind} {name} {c} is not closed under the map")
            if seen & set(c.values):
                raise CatalogInconsistent(f"{self.kind} {name} overlaps another entry")
            seen.update(c.values)


CATALOGS = {
    "dfp": CycleCatalog.from_listing(DFP, DFP_LISTING),
    "dpp": CycleCatalog.from_listing(DPP, DPP_LISTING),
}


def catalog_for(kind: ProcessKind | str) -> CycleCatalog:
    return CATALOGS[kind_of(kind).tag]


@dataclass(frozen=True)
class VerificationReport:
    kind: ProcessKind
    depth: int
    cases_total: int
    cases_per_terminal: dict[str, int]
    terminal_cycles: dict[str, Cycle]
    max_transient_length: int
    unknown_terminals: tuple[Cycle, ...] = ()
    unclassified_cases: int = 0
    elapsed: float = field(default=0.0, compare=False)

    @property
    def confirmed(self) -> bool:
        return not self.unknown_terminals

    def terminals(self) -> list[tuple[str, Cycle, int]]:
        return [(n, self.terminal_cycles[n], k) for n, k in self.cases_per_terminal.items()]


def _chunk_bounds(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    size, extra = divmod(total, parts)
    bounds, lo = [], 0
    for i in range(parts):
        hi = lo + size + (i < extra)
        bounds.append((lo, hi))
        lo = hi
    return bounds


def _run_chunk(tag: str, depth: int, lo: int, hi: int, memoize: bool, step_cap: int):
    """Classify cases [lo, hi) of the enumeration; returns (terminal counts, max transient)."""
    kind = kind_of(tag)
    memo = TerminalMemo(kind, step_cap) if memoize else None
    counts: Counter[tuple[int, ...]] = Counter()
    max_transient = 0
    for m in islice(enumerate_multisets_upto(depth), lo, hi):
        start = min_value_of_multiset(m)
        image = apply_to_multiset(kind, m)
        if memo is not None:
            cyc, dist = memo.resolve(image)
        else:
            res = find_terminal(kind, image, step_cap)
            cyc, dist = res.cycle, res.transient_length
        transient = 0 if start in cyc else dist + 1
        counts[cyc.values] += 1
        if transient > max_transient:
            max_transient = transient
    return counts, max_transient


def verify_theorem(
    kind: ProcessKind | str,
    workers: int = 1,
    depth: int | None = None,
    memoize: bool = True,
    step_cap: int = DEFAULT_STEP_CAP,
) -> VerificationReport:
    """Run every multiset case and match its terminal cycle against the catalog.

    ``depth`` limits the multiset size (defaults to the full reduction).
    Chunks are merged in enumeration order, so the report does not depend
    on ``workers``.
    """
    kind = kind_of(kind)
    catalog = catalog_for(kind)
    catalog.validate()
    depth = kind.multiset_depth if depth is None else depth
    total = multiset_count(depth)
    t0 = time.perf_counter()

    bounds = _chunk_bounds(total, workers)
    args = [(kind.tag, depth, lo, hi, memoize, step_cap) for lo, hi in bounds]
    if workers <= 1:
        parts = [_run_chunk(*a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_chunk, *zip(*args)))

    merged: Counter[tuple[int, ...]] = Counter()
    max_transient = 0
    for counts, mt in parts:
        merged.update(counts)
        max_transient = max(max_transient, mt)

    per_terminal: dict[str, int] = {}
    cycles: dict[str, Cycle] = {}
    for name, c in catalog.entries:
        if merged.get(c.values):
            per_terminal[name] = merged.pop(c.values)
            cycles[name] = c
    unknown = tuple(Cycle(v) for v in sorted(merged))
    return VerificationReport(
        kind=kind,
        depth=depth,
        cases_total=total,
        cases_per_terminal=per_terminal,
        terminal_cycles=cycles,
        max_transient_length=max_transient,
        unknown_terminals=unknown,
        unclassified_cases=sum(merged.values()),
        elapsed=time.perf_counter() - t0,
    )


def coverage_argument_check(kind: ProcessKind | str, threshold: int | None = None) -> bool:
    """Check the two numeric premises behind the multiset reduction.

    (a) nothing below the threshold maps to or above it, and (b) multisets
    of size up to ``multiset_depth`` cover every digit count below it.
    """
    kind = kind_of(kind)
    t = kind.descent_threshold if threshold is None else threshold
    worst, t = trap_bound(kind, t)
    return worst < t and kind.multiset_depth >= len(str(t)) - 1


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("ITERSEQ_WORKERS", "1")))
    except ValueError:
        return 1
