"""Command-line front end: verification sweeps, theorem counts, bijection
traces and generating-function dumps.

Exit codes, stable across subcommands: 0 when everything holds, 1 when a
counterexample was found (the first witness is printed), 2 on usage or
parse errors.  The QSCHUR_THREADS environment variable sets the worker
count for sweep cells; output order is deterministic regardless.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

from .bijection import BijectionTrace, InvalidInput, forward, inverse
from .identities import (
    IDENTITIES,
    Verdict,
    build_GL,
    build_PL,
    build_RL,
    sweep,
    trinomial_rhs,
)
from .partitions import ColoredPartition
from .qseries import Truncation
from .theorems import (
    CountReport,
    check_goellnitz,
    check_schur,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    reports_to_csv,
)

_RANGE_RE = re.compile(r"^(-?\d+)(?:\.\.(-?\d+))?$")

THEOREMS = ("S", "T1", "T2", "T3", "G")
GF_KINDS = ("GL", "RL", "PL", "trinomialRHS")


class UsageError(Exception):
    pass


def _parse_range(text: str) -> list[int]:
    m = _RANGE_RE.match(text.strip())
    if m is None:
        raise UsageError(f"bad range {text!r} (expected 'n' or 'a..b')")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _witness_line(v: Verdict) -> str:
    w = v.witness
    where = f"q^{w.q_exp}"
    if w.marker is not None:
        names = "ABC"
        marker = "*".join(f"{names[p]}^{e}" for p, e in enumerate(w.marker))
        where = f"{marker} {where}"
    params = " ".join(f"{k}={val}" for k, val in v.params.items())
    return (f"FAIL {v.identity} [{params}]: first differing coefficient at "
            f"{where}: lhs {w.lhs_coeff}, rhs {w.rhs_coeff}")


def _map_fn():
    threads = int(os.environ.get("QSCHUR_THREADS", "1") or "1")
    if threads > 1:
        pool = ThreadPoolExecutor(max_workers=threads)
        return lambda fn, items: list(pool.map(fn, items))
    return map


def _reject_csv(args):
    if args.format == "csv":
        raise UsageError("--format csv is only available for 'count'")


def cmd_verify(args) -> int:
    _reject_csv(args)
    if args.identity not in IDENTITIES:
        raise UsageError(f"unknown identity {args.identity!r}; "
                         f"choose from {', '.join(sorted(IDENTITIES))}")
    spec = IDENTITIES[args.identity]
    ranges = {}
    for name in spec.range_params:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"identity {args.identity} needs --{name}")
        ranges[name] = _parse_range(value)
    caps = {name: getattr(args, name) for name in spec.cap_params
            if getattr(args, name) is not None}
    result = sweep(args.identity, ranges, caps,
                   perturb=args.perturb, map_fn=_map_fn())

    if args.format == "json":
        payload = {"summary": result.summary(),
                   "failures": [v.to_json_dict() for v in result.failures]}
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        lines = [f"identity {args.identity}: {result.cells} cells evaluated, "
                 f"{result.skipped} skipped, "
                 f"{'all hold' if result.holds else f'{len(result.failures)} FAILED'}"]
        if result.failures:
            lines.append(_witness_line(result.failures[0]))
        _emit("\n".join(lines), args.out)
    return 0 if result.holds else 1


def _count_reports(args) -> list[CountReport]:
    theorem = args.theorem
    n_range = _parse_range(args.n) if args.n else None
    if theorem in ("S", "G"):
        if n_range is None:
            raise UsageError(f"count {theorem} needs --n")
        if min(n_range) < 0:
            raise UsageError("--n must be nonnegative")
        return check_schur(max(n_range)) if theorem == "S" \
            else check_goellnitz(max(n_range))
    if n_range is None or min(n_range) < 0:
        raise UsageError(f"count {theorem} needs a nonnegative --n range")

    def axis(name, default):
        value = getattr(args, name)
        return _parse_range(value) if value else default

    reports = []
    if theorem == "T1":
        top = max(n_range)
        bound = 0
        while (bound + 1) * (bound + 2) // 2 <= top:
            bound += 1
        for n in n_range:
            for i in axis("i", range(0, bound + 1)):
                for j in axis("j", range(0, bound + 1)):
                    if i * (i + 1) // 2 + j * (j + 1) // 2 <= n:
                        reports.append(check_theorem1(n, i, j))
        return reports

    L_range = axis("L", None)
    M_range = axis("M", None)
    if L_range is None or M_range is None:
        raise UsageError(f"count {theorem} needs --L and --M")
    for L in L_range:
        for M in M_range:
            for i in axis("i", range(0, max(L, M) + 1)):
                for j in axis("j", range(0, max(L, M) + 1)):
                    if theorem == "T2":
                        if i + j > min(L, M):
                            continue
                        for n in n_range:
                            reports.append(check_theorem2(n, i, j, L, M))
                    else:
                        if not (M >= L >= i + j):
                            continue
                        for n in n_range:
                            reports.append(check_theorem3(n, i, j, L, M))
    return reports


def cmd_count(args) -> int:
    if args.theorem not in THEOREMS:
        raise UsageError(f"unknown theorem {args.theorem!r}; "
                         f"choose from {', '.join(THEOREMS)}")
    reports = _count_reports(args)
    failures = [r for r in reports if not r.holds]
    if args.format == "json":
        _emit(json.dumps([r.to_json_dict() for r in reports], indent=2), args.out)
    elif args.format == "csv":
        _emit(reports_to_csv(reports), args.out)
    else:
        lines = []
        for r in reports:
            params = " ".join(f"{k}={v}" for k, v in r.params.items())
            status = "ok" if r.holds else "FAIL"
            lines.append(f"{r.theorem} {params}: {r.lhs_count} = {r.rhs_count} {status}")
        lines.append(f"{len(reports)} checks, {len(failures)} failed")
        _emit("\n".join(lines), args.out)
    return 0 if not failures else 1


def _trace_table(trace: BijectionTrace) -> str:
    rows = max(len(trace.c1), 1)
    col3 = [str(s) for s in list(trace.pi5.parts) + list(trace.pi6.parts)]
    col4 = [f"{s} | {d}" for s, d in zip(trace.c1, trace.c2)]
    col5 = [f"{s} | {d}" for s, d in zip(trace.c1r, trace.c2)]
    col6 = [str(s) for s in trace.pi3.parts]
    headers = ["step 3 (pi5/pi6)", "step 4 (C1 | C2)", "step 5 (C1R | C2)", "step 6 (pi3)"]
    cols = [col3, col4, col5, col6]
    widths = [max(len(h), *(len(x) for x in c)) if c else len(h)
              for h, c in zip(headers, cols)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    for r in range(rows):
        cells = [(c[r] if r < len(c) else "").ljust(w) for c, w in zip(cols, widths)]
        lines.append("  ".join(cells).rstrip())
    if not trace.c1:
        lines.append("(empty)")
    return "\n".join(lines)


def _trace_json(trace: BijectionTrace) -> dict:
    return {
        "pi1": trace.pi1.to_json(),
        "pi2": trace.pi2.to_json(),
        "pi4": trace.pi4.to_json(),
        "pi5": trace.pi5.to_json(),
        "pi4_star": [{"row": r, "circled": c} for r, c in trace.pi4_star],
        "pi6": trace.pi6.to_json(),
        "c1": [{"color": s.color, "weight": s.weight} for s in trace.c1],
        "c2": list(trace.c2),
        "c1r": [{"color": s.color, "weight": s.weight} for s in trace.c1r],
        "pi3": trace.pi3.to_json(),
    }


def cmd_bijection(args) -> int:
    _reject_csv(args)
    try:
        if args.direction == "forward":
            if "/" not in args.input:
                raise UsageError("forward input must be 'pi1 / pi2'")
            left, right = args.input.split("/", 1)
            pi1 = ColoredPartition.from_text(left)
            pi2 = ColoredPartition.from_text(right)
            trace = forward(pi1, pi2)
            if args.format == "json":
                _emit(json.dumps(_trace_json(trace), indent=2), args.out)
            else:
                _emit(_trace_table(trace) + f"\npi3 = {trace.pi3}", args.out)
            return 0
        pi3 = ColoredPartition.from_text(args.input)
        pi1, pi2 = inverse(pi3)
        if args.format == "json":
            _emit(json.dumps({"pi1": pi1.to_json(), "pi2": pi2.to_json()}, indent=2),
                  args.out)
        else:
            _emit(f"pi1 = {pi1}\npi2 = {pi2}", args.out)
        return 0
    except InvalidInput as exc:
        print(f"not in the correspondence's domain: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_gf(args) -> int:
    _reject_csv(args)
    if args.kind not in GF_KINDS:
        raise UsageError(f"unknown kind {args.kind!r}; choose from {', '.join(GF_KINDS)}")
    L = int(args.L) if args.L is not None else None
    if L is None or L < 0:
        raise UsageError("gf needs --L >= 0")
    if args.kind == "trinomialRHS" and L < 1:
        raise UsageError("trinomialRHS needs --L >= 1")
    builder = {"GL": build_GL, "RL": build_RL, "PL": build_PL,
               "trinomialRHS": trinomial_rhs}[args.kind]
    series = builder(L)
    if args.amax is not None or args.bmax is not None or args.qmax is not None:
        caps = (args.amax, args.bmax)
        marker_caps = None if any(c is None for c in caps) else tuple(caps)
        series = series.with_truncation(Truncation(marker_caps, args.qmax))
    if args.format == "json":
        _emit(series.to_json_text(), args.out)
    else:
        _emit(str(series), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qschur",
        description="exact checks for bounded Schur-type partition identities")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="sweep one identity over a parameter grid")
    p_verify.add_argument("identity")
    for name in ("L", "M", "i", "j", "k", "n"):
        p_verify.add_argument(f"--{name}", help="integer or inclusive range a..b")
    for name in ("qmax", "amax", "bmax", "cmax"):
        p_verify.add_argument(f"--{name}", type=int, help="truncation cap")
    p_verify.add_argument("--perturb", action="store_true",
                          help="self-test: perturb the right side by +1")
    p_verify.set_defaults(fn=cmd_verify)

    p_count = sub.add_parser("count", help="check a theorem's count equality")
    p_count.add_argument("theorem")
    for name in ("n", "i", "j", "L", "M"):
        p_count.add_argument(f"--{name}", help="integer or inclusive range a..b")
    p_count.set_defaults(fn=cmd_count)

    p_bij = sub.add_parser("bijection", help="trace the correspondence")
    p_bij.add_argument("direction", choices=("forward", "inverse"))
    p_bij.add_argument("input", help="forward: 'pi1 / pi2'; inverse: a partition")
    p_bij.set_defaults(fn=cmd_bijection)

    p_gf = sub.add_parser("gf", help="dump a generating function")
    p_gf.add_argument("kind")
    p_gf.add_argument("--L")
    for name in ("qmax", "amax", "bmax"):
        p_gf.add_argument(f"--{name}", type=int)
    p_gf.set_defaults(fn=cmd_gf)

    for p in (p_verify, p_count, p_bij, p_gf):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", help="write the report to this path")
    return parser


_RANGE_FLAGS = {"--L", "--M", "--i", "--j", "--k", "--n"}


def _join_negative_ranges(argv: Sequence[str]) -> list[str]:
    """Fold '--L -3..6' into '--L=-3..6' so argparse does not mistake a
    negative range for an option string."""
    out: list[str] = []
    skip = False
    for pos, token in enumerate(argv):
        if skip:
            skip = False
            continue
        nxt = argv[pos + 1] if pos + 1 < len(argv) else None
        if token in _RANGE_FLAGS and nxt is not None \
                and nxt.startswith("-") and _RANGE_RE.match(nxt):
            out.append(f"{token}={nxt}")
            skip = True
        else:
            out.append(token)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_join_negative_ranges(list(argv)))
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
