"""Command-line entry point.

Exit codes: 0 success, 1 a claim was falsified (unknown terminal, conjecture
or published-catalog mismatch), 2 usage or parse error, 3 a resource cap
was hit.
"""

from __future__ import annotations

import argparse
import sys

from . import collatz, kaprekar
from .cycledetect import DEFAULT_STEP_CAP, find_terminal
from .digitproc import apply, kind_of
from .errors import IterSeqError, ParseError, ResourceCapExceeded
from .report import RenderSpec, render, render_table1, table1_rows
from .verifier import catalog_for, default_workers, verify_theorem

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(IterSeqError):
    pass


def _int_at_least(lo):
    def parse(s):
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {v}")
        return v

    return parse


def _state_value(s: str) -> int:
    try:
        v = int(s, 0) if s[:2].lower() in ("0b", "0o", "0x") else int(s, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("value must be nonnegative")
    return v


def _decimal_text(s: str) -> str:
    if not s.isascii() or not s.isdigit():
        raise argparse.ArgumentTypeError(f"not a base-10 digit string: {s!r}")
    return s


def _add_cap(p, default, what):
    p.add_argument("--cap", type=_int_at_least(1), default=None,
                   help=f"override the {what} cap (default {default})")
    p.add_argument("--allow-large", action="store_true",
                   help="acknowledge a --cap above the default")


def _cap(args, default):
    if args.cap is None:
        return default
    if args.cap > default and not args.allow_large:
        raise UsageError(f"--cap {args.cap} exceeds the default {default}; add --allow-large")
    return args.cap


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="iterseq", description="Iterated digit maps and their exhaustive checks.")
    p.add_argument("-o", "--output", default=None, help="write results here instead of standard output")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("collatz", help="3x+1 trajectories and range checks")
    c.add_argument("action", nargs="?", choices=["verify"], help="check a whole range instead of one start")
    c.add_argument("--start", type=_int_at_least(1))
    c.add_argument("--max-steps", type=_int_at_least(0), default=collatz.DEFAULT_MAX_STEPS)
    c.add_argument("--csv", action="store_true", help="emit step,value rows")
    c.add_argument("--upto", type=_int_at_least(1))

    k = sub.add_parser("kaprekar", help="generalized Kaprekar routine")
    ksub = k.add_subparsers(dest="kaction", required=True)

    def config_args(q):
        q.add_argument("--base", type=_int_at_least(2), required=True)
        q.add_argument("--length", type=_int_at_least(2), required=True)
        q.add_argument("-u", type=_int_at_least(1), default=1)
        q.add_argument("-v", type=_int_at_least(1), default=1)

    ks = ksub.add_parser("step", help="apply one step")
    config_args(ks)
    ks.add_argument("--value", type=_state_value, required=True)

    kc = ksub.add_parser("classify", help="classify every state")
    config_args(kc)
    kc.add_argument("--format", choices=["json", "table"], default="json")
    _add_cap(kc, kaprekar.DEFAULT_STATE_CAP, "state-space")

    kt = ksub.add_parser("table1", help="binary K(2,2) catalog for lengths 4..9")
    kt.add_argument("--format", choices=["json", "table"], default="table")

    kj = ksub.add_parser("conjecture", help="check the binary K(2,2) closed forms")
    kj.add_argument("--m-min", type=_int_at_least(3), default=3)
    kj.add_argument("--m-max", type=_int_at_least(3), default=4)
    _add_cap(kj, kaprekar.DEFAULT_STATE_CAP, "state-space")

    for name in ("dfp", "dpp"):
        d = sub.add_parser(name, help=f"iterate {name} from one start")
        d.add_argument("--start", type=_decimal_text, required=True)
        d.add_argument("--trace", action="store_true", help="emit step,value rows")
        _add_cap(d, DEFAULT_STEP_CAP, "step")

    v = sub.add_parser("verify", help="exhaustive terminal-cycle check")
    v.add_argument("process", choices=["dfp", "dpp"])
    v.add_argument("--workers", type=_int_at_least(1), default=None,
                   help="worker processes (default $ITERSEQ_WORKERS or 1)")
    v.add_argument("--depth", type=_int_at_least(1), default=None,
                   help="largest multiset size to check (default: full reduction)")
    v.add_argument("--format", choices=["json", "table"], default="json")
    v.add_argument("--timing", action="store_true", help="include elapsed_ms in the report")
    _add_cap(v, DEFAULT_STEP_CAP, "step")
    return p


def _run_collatz(args, out):
    if args.action == "verify":
        if args.upto is None or args.start is not None:
            raise UsageError("collatz verify takes --upto N and no --start")
        rep = collatz.collatz_verify_range(args.upto)
        out(render(rep, "json"))
        print(f"collatz: all {rep.upper} starts reach 1; max steps {rep.max_steps} "
              f"(n={rep.max_steps_start})", file=sys.stderr)
        return EXIT_OK
    if args.start is None or args.upto is not None:
        raise UsageError("collatz takes --start N (or: collatz verify --upto N)")
    traj = collatz.collatz_trajectory(args.start, args.max_steps)
    out(render(traj, "csv" if args.csv else "json"))
    if not traj.reached_one:
        print(f"collatz: 1 not reached within {args.max_steps} steps", file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK


def _run_kaprekar(args, out):
    if args.kaction == "step":
        cfg = kaprekar.KaprekarConfig(args.base, args.length, args.u, args.v)
        nxt = kaprekar.kaprekar_step(args.value, cfg)
        out("degenerate\n" if nxt is None else f"{nxt}\n")
        return EXIT_OK
    if args.kaction == "classify":
        cfg = kaprekar.KaprekarConfig(args.base, args.length, args.u, args.v)
        res = kaprekar.classify_all(cfg, _cap(args, kaprekar.DEFAULT_STATE_CAP))
        out(render(res, RenderSpec(args.format, base_for_display=cfg.base if cfg.base <= 36 else 10)))
        published = kaprekar.published_comparison(res)
        if published is not None and not published["agrees"]:
            print(f"kaprekar: terminals differ from the published list "
                  f"(missing {published['missing']}, unexpected {published['unexpected']})",
                  file=sys.stderr)
            return EXIT_FALSIFIED
        return EXIT_OK
    if args.kaction == "table1":
        results = kaprekar.table1_classifications()
        if args.format == "table":
            out(render_table1(results))
        else:
            keys = ("base", "length", "fixed_points", "loops")
            out(render([dict(zip(keys, row)) for row in table1_rows(results)], "json"))
        agree = all(kaprekar.published_comparison(r)["agrees"] for r in results)
        return EXIT_OK if agree else EXIT_FALSIFIED
    if args.m_max < args.m_min:
        raise UsageError("--m-max must be >= --m-min")
    cap = _cap(args, kaprekar.DEFAULT_STATE_CAP)
    rows = []
    for m in range(args.m_min, args.m_max + 1):
        even, odd = kaprekar.conjecture_check(m, cap)
        rows.append({
            "m": m,
            "fixed_point": kaprekar.conjectured_fixed_point(m),
            "fixed_point_holds": even,
            "loop": list(kaprekar.conjectured_loop(m).values),
            "loop_holds": odd,
        })
    out(render(rows, "json"))
    ok = all(r["fixed_point_holds"] and r["loop_holds"] for r in rows)
    print(f"kaprekar conjecture m={args.m_min}..{args.m_max}: {'holds' if ok else 'FAILS'}",
          file=sys.stderr)
    return EXIT_OK if ok else EXIT_FALSIFIED


def _run_digitproc(args, out):
    kind = kind_of(args.command)
    first = apply(kind, args.start)
    res = find_terminal(kind, first, _cap(args, DEFAULT_STEP_CAP))
    name = catalog_for(kind).lookup(res.cycle)
    start = args.start.lstrip("0") or "0"
    # starts longer than any cycle member cannot lie on the cycle
    on_cycle = len(start) <= 12 and int(start) in res.cycle
    if args.trace:
        rows = res.values() if on_cycle else (start,) + res.values()
        if on_cycle:
            i = rows.index(int(start))
            rows = rows[i:] + rows[:i]
        out("step,value\n" + "".join(f"{i},{v}\n" for i, v in enumerate(rows)))
    else:
        out(render({
            "process": kind.tag,
            "start": start,
            "first_image": first,
            "transient_length": 0 if on_cycle else res.transient_length + 1,
            "cycle": list(res.cycle.values),
            "terminal": name,
        }, "json"))
    return EXIT_OK if name is not None else EXIT_FALSIFIED


def _run_verify(args, out):
    workers = args.workers if args.workers is not None else default_workers()
    rep = verify_theorem(args.process, workers=workers, depth=args.depth,
                         step_cap=_cap(args, DEFAULT_STEP_CAP))
    out(render(rep, RenderSpec(args.format, include_timing=args.timing)))
    status = "confirmed" if rep.confirmed else f"{len(rep.unknown_terminals)} unknown terminal(s)"
    print(f"verify {rep.kind.tag}: {rep.cases_total} cases, {len(rep.cases_per_terminal)} terminals, "
          f"{status}, {rep.elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if rep.confirmed else EXIT_FALSIFIED


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    chunks: list[str] = []
    handlers = {"collatz": _run_collatz, "kaprekar": _run_kaprekar, "dfp": _run_digitproc,
                "dpp": _run_digitproc, "verify": _run_verify}
    try:
        code = handlers[args.command](args, chunks.append)
    except ResourceCapExceeded as exc:
        print(f"iterseq: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OverflowError as exc:
        print(f"iterseq: overflow: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ParseError, ValueError) as exc:
        print(f"iterseq: {exc}", file=sys.stderr)
        return EXIT_USAGE

    text = "".join(chunks)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
