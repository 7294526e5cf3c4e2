"""Text, CSV and JSON rendering for every result type.

Output is a pure function of the value rendered: sets come out sorted,
cycles in min-first rotation, JSON with a fixed key order.
"""

from __future__ import annotations

import csv
import io
import json
import string
from dataclasses import dataclass
from functools import singledispatch

from .collatz import CollatzRangeReport, CollatzTrajectory
from .cycledetect import Cycle, TrajectoryResult
from .errors import UnsupportedFormat
from .kaprekar import KaprekarClassification, published_comparison
from .verifier import VerificationReport

FORMATS = ("table", "csv", "json")
_DIGITS = string.digits + string.ascii_lowercase


@dataclass(frozen=True)
class RenderSpec:
    format: str = "json"
    base_for_display: int = 10
    include_timing: bool = False

    def __post_init__(self):
        if self.format not in FORMATS:
            raise UnsupportedFormat(f"unknown format {self.format!r}; choose from {FORMATS}")
        if not 2 <= self.base_for_display <= 36:
            raise UnsupportedFormat("display base must lie in 2..36")


def format_value(v: int, base: int = 10) -> str:
    """Plain positional notation: no prefix, no leading zeros."""
    if base == 10:
        return str(v)
    if v == 0:
        return "0"
    out = []
    while v:
        v, r = divmod(v, base)
        out.append(_DIGITS[r])
    return "".join(reversed(out))


def parse_value(s: str, base: int = 10) -> int:
    return int(s, base)


def _cycle_text(c: Cycle, base: int) -> str:
    return "{" + ", ".join(format_value(x, base) for x in c.values) + "}"


def _aligned(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]

    def line(cells):
        return " | ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    sep = "-+-".join("-" * w for w in widths)
    return "\n".join([line(header), sep, *(line(r) for r in rows)]) + "\n"


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


@singledispatch
def to_jsonable(result, spec: RenderSpec):
    if isinstance(result, (dict, list, str, int, float, bool)) or result is None:
        return result
    raise UnsupportedFormat(f"no JSON form for {type(result).__name__}")


@to_jsonable.register
def _(result: CollatzTrajectory, spec: RenderSpec):
    return {
        "start": result.start,
        "steps": result.steps,
        "reached_one": result.reached_one,
        "peak": result.peak,
        "values": list(result.values),
    }


@to_jsonable.register
def _(result: CollatzRangeReport, spec: RenderSpec):
    return {
        "upper": result.upper,
        "all_reach_one": result.all_reach_one,
        "max_steps": result.max_steps,
        "max_steps_start": result.max_steps_start,
        "max_excursion": result.max_excursion,
        "max_excursion_start": result.max_excursion_start,
    }


@to_jsonable.register
def _(result: TrajectoryResult, spec: RenderSpec):
    return {
        "start": result.start,
        "transient_length": result.transient_length,
        "transient": list(result.transient),
        "cycle": list(result.cycle.values),
        "entry": result.entry,
    }


def _basin_key(c: Cycle) -> str:
    return ",".join(map(str, c.values))


@to_jsonable.register
def _(result: KaprekarClassification, spec: RenderSpec):
    out = {
        "config": result.config.as_dict(),
        "fixed_points": sorted(result.fixed_points),
        "cycles": [list(c.values) for c in sorted(result.cycles, key=lambda c: c.values)],
        "degenerate_starts_count": len(result.degenerate_starts),
        "basins": {_basin_key(c): n for c, n in sorted(result.basin_sizes.items(), key=lambda kv: kv[0].values)},
        "canonical_basins": {
            _basin_key(c): n
            for c, n in sorted(result.canonical_basin_sizes.items(), key=lambda kv: kv[0].values)
        },
    }
    published = published_comparison(result)
    if published is not None:
        out["published"] = published
    return out


@to_jsonable.register
def _(result: VerificationReport, spec: RenderSpec):
    out = {
        "process": result.kind.tag,
        "cases": result.cases_total,
        "terminals": [
            {"name": name, "cycle": list(c.values), "basin": n} for name, c, n in result.terminals()
        ],
        "unknown": [list(c.values) for c in result.unknown_terminals],
        "max_transient": result.max_transient_length,
    }
    if spec.include_timing:
        out["elapsed_ms"] = round(result.elapsed * 1000)
    return out


def _trajectory_values(result) -> tuple[int, ...] | None:
    if isinstance(result, CollatzTrajectory):
        return result.values
    if isinstance(result, TrajectoryResult):
        return result.values()
    return None


def _table(result, spec: RenderSpec) -> str:
    b = spec.base_for_display
    values = _trajectory_values(result)
    if values is not None:
        return _aligned(["step", "value"], [[str(i), format_value(v, b)] for i, v in enumerate(values)])
    if isinstance(result, KaprekarClassification):
        rows = [
            [_cycle_text(c, b), "fixed point" if c.is_fixed_point else "loop", str(n),
             str(result.canonical_basin_sizes.get(c, 0))]
            for c, n in sorted(result.basin_sizes.items(), key=lambda kv: kv[0].values)
        ]
        rows.append(["degenerate", "-", str(len(result.degenerate_starts)),
                     str(len(result.canonical_degenerate_starts()))])
        cfg = result.config
        head = f"K({cfg.u},{cfg.v}) base {cfg.base} length {cfg.length}\n"
        return head + _aligned(["terminal", "kind", "starts", "canonical starts"], rows)
    if isinstance(result, VerificationReport):
        rows = [[name, _cycle_text(c, b), str(n)] for name, c, n in result.terminals()]
        rows += [["unknown", _cycle_text(c, b), "-"] for c in result.unknown_terminals]
        head = (f"{result.kind.tag}: {result.cases_total} cases, "
                f"max transient {result.max_transient_length}\n")
        return head + _aligned(["terminal", "cycle", "cases"], rows)
    if isinstance(result, CollatzRangeReport):
        rows = [[k, str(v)] for k, v in to_jsonable(result, spec).items()]
        return _aligned(["field", "value"], rows)
    raise UnsupportedFormat(f"no table form for {type(result).__name__}")


def render(result, spec: RenderSpec | str = "json") -> str:
    if isinstance(spec, str):
        spec = RenderSpec(spec)
    if spec.format == "json":
        return _json(to_jsonable(result, spec))
    if spec.format == "csv":
        values = _trajectory_values(result)
        if values is None:
            raise UnsupportedFormat(f"CSV is only defined for trajectories, not {type(result).__name__}")
        return _csv(["step", "value"], enumerate(values))
    return _table(result, spec)


def table1_rows(results: list[KaprekarClassification]) -> list[tuple[str, str, str, str]]:
    """(base, digit length, fixed points, loops) per classification, values in binary."""
    rows = []
    for r in results:
        b = r.config.base
        fixed = ", ".join(format_value(p, b) for p in sorted(r.fixed_points)) or "none"
        loops = "; ".join(_cycle_text(c, b) for c in r.cycles) or "none"
        rows.append((str(b), str(r.config.length), fixed, loops))
    return rows


def render_table1(results: list[KaprekarClassification]) -> str:
    rows = [list(r) for r in table1_rows(results)]
    return _aligned(["Base", "Digit length", "fixed points", "loops"], rows)
