"""End-to-end count equalities binding the enumerators to the theorems.

Each check pairs an independently enumerated left side (vector partitions
or residue-class partitions) with the bucketed gap-partition counts on
the right, and reports both totals plus the per-bucket breakdown.

The bucketed counts are built through cached censuses: one enumeration
sweep per bound pair classifies every gap partition by its color counts
and its unique boundary statistic, and all later lookups are O(1).  The
statistic's uniqueness is asserted during the sweep, never assumed.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .partitions import (
    NoValidStatistic,
    _G3_satisfies,
    _satisfies_S,
    count_V,
    goellnitz_counts,
    iter_schur_gap,
    iter_type1,
    schur_counts,
    _count_P3,
)

__all__ = [
    "CountReport",
    "check_goellnitz",
    "check_schur",
    "check_theorem1",
    "check_theorem2",
    "check_theorem3",
    "reports_to_csv",
]


@dataclass(frozen=True)
class CountReport:
    theorem: str
    params: dict
    lhs_count: int
    rhs_count: int
    breakdown: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.lhs_count == self.rhs_count

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": dict(self.params),
            "lhs": self.lhs_count,
            "rhs": self.rhs_count,
            "holds": self.holds,
            "breakdown": {",".join(map(str, k)) if isinstance(k, tuple) else str(k): v
                          for k, v in self.breakdown.items()},
        }


def reports_to_csv(reports: list[CountReport]) -> str:
    """Render reports as CSV with one parameter column each."""
    param_names: list[str] = []
    for r in reports:
        for name in r.params:
            if name not in param_names:
                param_names.append(name)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["theorem", *param_names, "lhs", "rhs", "holds"])
    for r in reports:
        writer.writerow([r.theorem,
                         *(r.params.get(p, "") for p in param_names),
                         r.lhs_count, r.rhs_count, r.holds])
    return buf.getvalue()


# --------------------------------------------------------------------------
# censuses


@lru_cache(maxsize=None)
def _vector_census(n_max: int) -> dict:
    """(n, i, j) -> number of pairs of distinct a-parts / b-parts."""
    from .partitions import count_distinct_parts
    out: dict[tuple[int, int, int], int] = {}
    for n in range(0, n_max + 1):
        for i in range(0, n + 1):
            if i * (i + 1) // 2 > n:
                break
            for j in range(0, n + 1):
                if i * (i + 1) // 2 + j * (j + 1) // 2 > n:
                    break
                total = sum(count_distinct_parts(m, i, m) *
                            count_distinct_parts(n - m, j, n - m)
                            for m in range(0, n + 1))
                if total:
                    out[(n, i, j)] = total
    return out


@lru_cache(maxsize=None)
def _type1_census(n_max: int) -> dict:
    """(n, r, s, t) -> number of gap partitions of n by color counts."""
    out: dict[tuple[int, int, int, int], int] = {}
    for parts in iter_type1(n_max):
        n = sum(p.weight for p in parts)
        r = sum(1 for p in parts if p.color == "a")
        s = sum(1 for p in parts if p.color == "b")
        t = sum(1 for p in parts if p.color == "ab")
        key = (n, r, s, t)
        out[key] = out.get(key, 0) + 1
    return out


def _unique_bucket(candidates: list[int], what: str) -> Optional[int]:
    if not candidates:
        return None
    if len(candidates) > 1:
        raise NoValidStatistic(f"{what}: bucket statistic not unique ({candidates})")
    return candidates[0]


@lru_cache(maxsize=None)
def _s_census(L: int, M: int, n_max: int) -> dict:
    """(n, r, s, t, l) -> bounded gap-partition counts for the regime
    M >= L (bucket l is the boundary statistic at the bound L)."""
    out: dict[tuple[int, int, int, int, int], int] = {}
    for parts in iter_type1(n_max, a_max=M, b_max=min(L, M), ab_max=M):
        n = sum(p.weight for p in parts)
        fits = [l for l in range(0, len(parts) + 1) if _satisfies_S(parts, l, L, M)]
        l = _unique_bucket(fits, f"partition {'+'.join(map(str, parts)) or 'empty'}")
        if l is None:
            continue
        r = sum(1 for p in parts if p.color == "a")
        s = sum(1 for p in parts if p.color == "b")
        t = sum(1 for p in parts if p.color == "ab")
        key = (n, r, s, t, l)
        out[key] = out.get(key, 0) + 1
    return out


def _satisfies_S_mirrored(parts, m: int, L: int, M: int) -> bool:
    """Mirrored profile for L >= M: a,ab-parts <= M-m, b-parts <= L,
    exactly m b-parts >= M-m+2, no part = M-m+1."""
    marked = 0
    for p in parts:
        if p.color == "b":
            if p.weight > L:
                return False
            if p.weight >= M - m + 2:
                marked += 1
        else:
            if p.weight > M - m:
                return False
        if p.weight == M - m + 1:
            return False
    return marked == m


@lru_cache(maxsize=None)
def _s_census_mirrored(L: int, M: int, n_max: int) -> dict:
    out: dict[tuple[int, int, int, int, int], int] = {}
    for parts in iter_type1(n_max, a_max=min(L, M), b_max=L, ab_max=min(L, M)):
        n = sum(p.weight for p in parts)
        fits = [m for m in range(0, len(parts) + 1)
                if _satisfies_S_mirrored(parts, m, L, M)]
        m = _unique_bucket(fits, f"partition {'+'.join(map(str, parts)) or 'empty'}")
        if m is None:
            continue
        r = sum(1 for p in parts if p.color == "a")
        s = sum(1 for p in parts if p.color == "b")
        t = sum(1 for p in parts if p.color == "ab")
        key = (n, r, s, t, m)
        out[key] = out.get(key, 0) + 1
    return out


@lru_cache(maxsize=None)
def _g3_census(L: int, M: int, n_max: int) -> dict:
    """(n, r, s, t, l) -> bounded Schur-gap counts in the dilated world."""
    out: dict[tuple[int, int, int, int, int], int] = {}
    # the loosest per-class caps are 3M-2 (class 1) and 3L-1 (class 2, l = 0)
    cap = max(3 * M - 2, 3 * L - 1, 0)
    for n in range(0, n_max + 1):
        for parts in iter_schur_gap(n, min(n, cap)):
            fits = [l for l in range(0, len(parts) + 1)
                    if _G3_satisfies(parts, l, L, M)]
            l = _unique_bucket(fits, f"partition {parts}")
            if l is None:
                continue
            counts = [0, 0, 0]
            for p in parts:
                counts[p % 3] += 1
            key = (n, counts[1], counts[2], counts[0], l)
            out[key] = out.get(key, 0) + 1
    return out


# --------------------------------------------------------------------------
# theorem checks


def check_theorem1(n: int, i: int, j: int) -> CountReport:
    """Unbounded refinement: vector-partition count V(n; i, j) equals the
    gap-partition count summed over color splits r+t = i, s+t = j."""
    if min(n, i, j) < 0:
        raise ValueError("n, i, j must be nonnegative")
    lhs = _vector_census(n).get((n, i, j), 0)
    breakdown = {}
    rhs = 0
    census = _type1_census(n)
    for t in range(0, min(i, j) + 1):
        r, s = i - t, j - t
        c = census.get((n, r, s, t), 0)
        if c:
            breakdown[(r, s, t)] = c
            rhs += c
    return CountReport("T1", dict(n=n, i=i, j=j), lhs, rhs, breakdown)


def check_theorem2(n: int, i: int, j: int, L: int, M: int, *,
                   regime: str = "auto") -> CountReport:
    """Double-bounded refinement.

    In the standard regime (M >= L >= i+j) the right side sums the
    bucketed counts over r+t = i, s+t = j and the boundary statistic l at
    the bound L; ``regime='nu_M'`` (for L >= M) swaps the roles of the
    two bounds per the mirrored statement.
    """
    if min(n, i, j) < 0:
        raise ValueError("n, i, j must be nonnegative")
    if regime == "auto":
        regime = "nu_L" if M >= L else "nu_M"
    if regime == "nu_L":
        if not (M >= L >= i + j):
            raise ValueError("standard regime needs M >= L >= i+j")
        census = _s_census(L, M, n)
    elif regime == "nu_M":
        if not (L >= M >= i + j):
            raise ValueError("mirrored regime needs L >= M >= i+j")
        census = _s_census_mirrored(L, M, n)
    else:
        raise ValueError(f"unknown regime {regime!r}")
    lhs = count_V(n, i, j, L, M)
    rhs = 0
    breakdown = {}
    for t in range(0, min(i, j) + 1):
        r, s = i - t, j - t
        for l in range(0, n + 1):
            c = census.get((n, r, s, t, l), 0)
            if c:
                breakdown[(r, s, t, l)] = c
                rhs += c
    return CountReport("T2", dict(n=n, i=i, j=j, L=L, M=M), lhs, rhs, breakdown)


def check_theorem3(n: int, i: int, j: int, L: int, M: int) -> CountReport:
    """Dilated double-bounded refinement, plus the consistency cross-check
    that its counts agree with the undilated ones: P(n; i, j, L, M) equals
    V((n+2i+j)/3; i, j, L, M) when 3 divides n+2i+j and is 0 otherwise,
    and likewise per (r, s, t, l) bucket."""
    if min(n, i, j) < 0:
        raise ValueError("n, i, j must be nonnegative")
    if not (M >= L >= i + j):
        raise ValueError("needs M >= L >= i+j")
    lhs = _count_P3(n, i, j, L, M)
    census = _g3_census(L, M, n)
    rhs = 0
    breakdown = {}
    for t in range(0, min(i, j) + 1):
        r, s = i - t, j - t
        for l in range(0, L + 1):
            c = census.get((n, r, s, t, l), 0)
            if c:
                breakdown[(r, s, t, l)] = c
                rhs += c
    # cross-check against the undilated world
    undilated = 0
    if (n + 2 * i + j) % 3 == 0:
        undilated = count_V((n + 2 * i + j) // 3, i, j, L, M)
    if lhs != undilated:
        raise NoValidStatistic(
            f"dilation cross-check failed at {dict(n=n, i=i, j=j, L=L, M=M)}: "
            f"P = {lhs}, V = {undilated}")
    return CountReport("T3", dict(n=n, i=i, j=j, L=L, M=M), lhs, rhs, breakdown)


def check_schur(n_max: int) -> list[CountReport]:
    """Classical two-residue theorem checked for every n <= n_max."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    reports = []
    for n in range(0, n_max + 1):
        distinct, gap = schur_counts(n)
        reports.append(CountReport("S", dict(n=n), distinct, gap))
    return reports


def check_goellnitz(n_max: int) -> list[CountReport]:
    """Three-residue difference theorem checked for every n <= n_max."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    reports = []
    for n in range(0, n_max + 1):
        distinct, gap = goellnitz_counts(n)
        reports.append(CountReport("G", dict(n=n), distinct, gap))
    return reports
