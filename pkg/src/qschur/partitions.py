"""Colored integers, gap-condition partitions, counters and Durfee splits.

Integers occur in two primary colors a, b and one secondary color ab
(the integer 1 only in primary colors).  Symbols are totally ordered by

    a1 < b1 < ab2 < a2 < b2 < ab3 < a3 < b3 < ...

which is realized by the rank a_n -> 3n+1, b_n -> 3n+2, ab_n -> 3n.  A
gap partition ("Type 1") is a decreasing sequence of symbols whose
consecutive weights differ by at least 1, and by at least 2 whenever the
larger part is colored ab, or the larger is colored a and the smaller b.
Dilating a_n -> 3n-2, b_n -> 3n-1, ab_n -> 3n-3 turns the symbol order
into the natural order on positive integers and the gap condition into
the classical Schur gap condition (difference >= 3, strict if the larger
part is a multiple of 3).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "COLORS",
    "ColoredPartition",
    "ColoredSymbol",
    "DurfeeDecomposition",
    "NoRectangle",
    "NoValidStatistic",
    "PartitionStats",
    "count_S",
    "count_V",
    "count_distinct_parts",
    "dilate_symbol",
    "durfee_decompose",
    "enumerate_type1",
    "goellnitz_counts",
    "is_type1",
    "iter_type1",
    "nu_statistics",
    "schur_counts",
    "theorem3_counts",
]

COLORS = ("a", "b", "ab")


class NoValidStatistic(ValueError):
    """No boundary statistic fits: the input is outside the theorem's class."""


class NoRectangle(ValueError):
    """No Durfee rectangle with the required row/column offset exists."""


@dataclass(frozen=True, slots=True)
class ColoredSymbol:
    """The integer ``weight`` carrying one of the colors a, b, ab."""

    color: str
    weight: int

    def __post_init__(self):
        if self.color not in COLORS:
            raise ValueError(f"unknown color {self.color!r}")
        if self.weight < 1:
            raise ValueError("weight must be a positive integer")
        if self.color == "ab" and self.weight < 2:
            raise ValueError("the integer 1 occurs only in primary colors")

    @property
    def rank(self) -> int:
        """Position in the total symbol order (strictly increasing along it)."""
        n = self.weight
        return 3 * n + {"ab": 0, "a": 1, "b": 2}[self.color]

    @property
    def dilated(self) -> int:
        """Image as an ordinary integer: a_n -> 3n-2, b_n -> 3n-1, ab_n -> 3n-3."""
        n = self.weight
        return {"a": 3 * n - 2, "b": 3 * n - 1, "ab": 3 * n - 3}[self.color]

    def __lt__(self, other: "ColoredSymbol") -> bool:
        return self.rank < other.rank

    def __le__(self, other: "ColoredSymbol") -> bool:
        return self.rank <= other.rank

    def __gt__(self, other: "ColoredSymbol") -> bool:
        return self.rank > other.rank

    def __ge__(self, other: "ColoredSymbol") -> bool:
        return self.rank >= other.rank

    def __str__(self) -> str:
        return f"{self.color}{self.weight}"

    _PARSE = re.compile(r"^(ab|a|b)(\d+)$")

    @classmethod
    def parse(cls, text: str) -> "ColoredSymbol":
        m = cls._PARSE.match(text.strip())
        if m is None:
            raise ValueError(f"cannot parse colored symbol {text!r}")
        return cls(m.group(1), int(m.group(2)))


_SYMBOL_CACHE: dict[tuple[str, int], ColoredSymbol] = {}


def _sym(color: str, weight: int) -> ColoredSymbol:
    # interned instances; the enumerators create symbols in the millions
    key = (color, weight)
    cached = _SYMBOL_CACHE.get(key)
    if cached is None:
        cached = _SYMBOL_CACHE[key] = ColoredSymbol(color, weight)
    return cached


def dilate_symbol(symbol: ColoredSymbol) -> int:
    return symbol.dilated


def symbol(text: str) -> ColoredSymbol:
    """Shorthand parser: symbol('ab12') == ColoredSymbol('ab', 12)."""
    return ColoredSymbol.parse(text)


@dataclass(frozen=True)
class PartitionStats:
    sigma: int
    lambda_rank: int
    nu_a: int
    nu_b: int
    nu_ab: int
    nu_l: Optional[int] = None
    nu_m: Optional[int] = None


class ColoredPartition:
    """A strictly decreasing (by rank) sequence of colored symbols.

    Besides gap partitions this also represents the distinct-part vector
    partition components (all-a or all-b).  The text form joins symbols
    with '+' in decreasing order, e.g. ``ab12+ab10+b7+b6+a5+ab4+b2+a1``;
    the empty partition renders as a lone '∅'.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[ColoredSymbol] = (), *, sort: bool = True):
        seq = list(parts)
        if sort:
            seq.sort(key=lambda s: s.rank, reverse=True)
        for prev, cur in zip(seq, seq[1:]):
            if prev.rank <= cur.rank:
                raise ValueError("parts must be strictly decreasing in the symbol order")
        self.parts = tuple(seq)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_text(cls, text: str) -> "ColoredPartition":
        """Parse '+'-joined symbols in any order ('∅', '-', or '' is empty)."""
        body = text.strip()
        if body in ("", "-", "0", "∅", "empty"):
            return cls(())
        return cls(ColoredSymbol.parse(tok) for tok in body.split("+"))

    @classmethod
    def colored(cls, color: str, weights: Iterable[int]) -> "ColoredPartition":
        """All parts in one color; used for the vector-partition components."""
        return cls(ColoredSymbol(color, w) for w in weights)

    # -- statistics ----------------------------------------------------------

    @property
    def sigma(self) -> int:
        """Total weight: the sum of the part weights."""
        return sum(p.weight for p in self.parts)

    @property
    def lambda_rank(self) -> int:
        """Rank of the largest part, 0 for the empty partition."""
        return self.parts[0].rank if self.parts else 0

    def count(self, color: str) -> int:
        return sum(1 for p in self.parts if p.color == color)

    @property
    def nu_a(self) -> int:
        return self.count("a")

    @property
    def nu_b(self) -> int:
        return self.count("b")

    @property
    def nu_ab(self) -> int:
        return self.count("ab")

    def stats(self, L: Optional[int] = None, M: Optional[int] = None) -> PartitionStats:
        nu_l = nu_m = None
        if L is not None and M is not None:
            nu_l, nu_m = nu_statistics(self, L, M)
        return PartitionStats(self.sigma, self.lambda_rank,
                              self.nu_a, self.nu_b, self.nu_ab, nu_l, nu_m)

    def dilated(self) -> tuple[int, ...]:
        """The ordinary-integer image of each part (decreasing)."""
        return tuple(p.dilated for p in self.parts)

    # -- plumbing -------------------------------------------------------------

    def __iter__(self) -> Iterator[ColoredSymbol]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, ColoredPartition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts) if self.parts else "∅"

    def __repr__(self) -> str:
        return f"ColoredPartition({self})"

    def to_json(self) -> list[dict]:
        return [{"color": p.color, "weight": p.weight} for p in self.parts]


def _gap_needed(upper: ColoredSymbol, lower_color: str) -> int:
    if upper.color == "ab" or (upper.color == "a" and lower_color == "b"):
        return 2
    return 1


def is_type1(partition: ColoredPartition) -> bool:
    """Check the gap condition on every consecutive pair of parts."""
    for upper, lower in zip(partition.parts, partition.parts[1:]):
        if upper.weight - lower.weight < _gap_needed(upper, lower.color):
            return False
    return True


def _color_cap(color: str, a_max, b_max, ab_max) -> Optional[int]:
    return {"a": a_max, "b": b_max, "ab": ab_max}[color]


def iter_type1(max_weight: int,
               largest: Optional[ColoredSymbol] = None,
               a_max: Optional[int] = None,
               b_max: Optional[int] = None,
               ab_max: Optional[int] = None) -> Iterator[tuple[ColoredSymbol, ...]]:
    """Yield every gap partition with total weight <= max_weight.

    ``largest`` bounds the largest part in the symbol order; the per-color
    arguments cap the weight of parts of that color.  Parts come out in
    decreasing order and the stream is duplicate-free, ordered
    lexicographically by the rank sequence (largest first).
    """

    rank_offset = {"ab": 0, "a": 1, "b": 2}
    caps = {"a": a_max, "b": b_max, "ab": ab_max}

    def candidates(budget: int, rank_bound: int, prev: Optional[ColoredSymbol]):
        top = min(budget, max_weight)
        if prev is not None:
            top = min(top, prev.weight - 1)
        for w in range(top, 0, -1):
            base = 3 * w
            for color in ("b", "a", "ab"):  # descending rank within a weight
                if color == "ab" and w < 2:
                    continue
                cap = caps[color]
                if cap is not None and w > cap:
                    continue
                if base + rank_offset[color] > rank_bound:
                    continue
                if prev is not None and prev.weight - w < _gap_needed(prev, color):
                    continue
                yield _sym(color, w)

    def extend(prev: Optional[ColoredSymbol], budget: int, rank_bound: int):
        yield ()
        for s in candidates(budget, rank_bound, prev):
            for rest in extend(s, budget - s.weight, s.rank - 1):
                yield (s,) + rest

    top_rank = largest.rank if largest is not None else 3 * max_weight + 2
    yield from extend(None, max_weight, top_rank)


def enumerate_type1(max_weight: int,
                    largest: Optional[ColoredSymbol] = None,
                    a_max: Optional[int] = None,
                    b_max: Optional[int] = None,
                    ab_max: Optional[int] = None) -> list[ColoredPartition]:
    """List form of iter_type1, wrapped as ColoredPartition values."""
    return [ColoredPartition(parts, sort=False)
            for parts in iter_type1(max_weight, largest, a_max, b_max, ab_max)]


# --------------------------------------------------------------------------
# boundary statistics


def _scan_statistic(parts: Sequence[ColoredSymbol], X: int, Y: int,
                    bounded_colors: tuple[str, ...]) -> int:
    """Find the unique ell >= 0 such that the partition has exactly ell
    parts with weights in [X-ell+2, Y], every part colored in
    ``bounded_colors`` has weight <= X-ell, and no part has weight
    X-ell+1."""
    weights = [p.weight for p in parts]
    found = []
    for ell in range(0, len(parts) + 1):
        in_interval = sum(1 for w in weights if X - ell + 2 <= w <= Y)
        if in_interval != ell:
            continue
        if any(w == X - ell + 1 for w in weights):
            continue
        if any(p.weight > X - ell for p in parts if p.color in bounded_colors):
            continue
        found.append(ell)
    if not found:
        raise NoValidStatistic(
            f"no boundary statistic fits (bounds {X}, {Y}; partition {'+'.join(map(str, parts)) or '∅'})")
    if len(found) > 1:
        raise NoValidStatistic(f"boundary statistic not unique: candidates {found}")
    return found[0]


def nu_statistics(partition: ColoredPartition, L: int, M: int) -> tuple[int, int]:
    """The pair (nu(L), nu(M)) of boundary statistics.

    nu(L) is 0 when L >= M; otherwise it is the unique ell with exactly
    ell parts in [L-ell+2, M], all b-parts <= L-ell and no part equal to
    L-ell+1.  nu(M) is symmetric with the roles of the bounds swapped and
    a,ab-parts in place of b-parts.  Raises NoValidStatistic when no (or
    no unique) ell fits, which flags an input outside the theorem's
    partition class.
    """
    nu_l = 0 if L >= M else _scan_statistic(partition.parts, L, M, ("b",))
    nu_m = 0 if M >= L else _scan_statistic(partition.parts, M, L, ("a", "ab"))
    return nu_l, nu_m


# --------------------------------------------------------------------------
# counting functions


@lru_cache(maxsize=None)
def count_distinct_parts(n: int, k: int, cap: int) -> int:
    """Partitions of n into exactly k distinct parts, each in [1, cap]."""
    if k == 0:
        return 1 if n == 0 else 0
    if k < 0 or n < k * (k + 1) // 2 or cap < k:
        return 0
    # largest part p, remaining parts distinct and < p
    return sum(count_distinct_parts(n - p, k - 1, p - 1)
               for p in range(k, min(n, cap) + 1))


def count_V(n: int, i: int, j: int, L: int, M: int) -> int:
    """Vector partitions of n: i distinct a-parts <= M-j and j distinct
    b-parts <= L."""
    if n < 0 or i < 0 or j < 0:
        return 0
    return sum(count_distinct_parts(m, i, max(M - j, 0))
               * count_distinct_parts(n - m, j, max(L, 0))
               for m in range(0, n + 1))


def _satisfies_S(parts: tuple[ColoredSymbol, ...], l: int, L: int, M: int) -> bool:
    """The bound profile of the bucketed gap-partition count: a,ab-parts
    <= M, b-parts <= L-l, exactly l a,ab-parts >= L-l+2, no part = L-l+1."""
    marked = 0
    for p in parts:
        if p.color == "b":
            if p.weight > L - l:
                return False
        else:
            if p.weight > M:
                return False
            if p.weight >= L - l + 2:
                marked += 1
        if p.weight == L - l + 1:
            return False
    return marked == l


def count_S(n: int, r: int, s: int, t: int, l: int, L: int, M: int) -> int:
    """Gap partitions of n with r a-parts <= M, s b-parts <= L-l, t
    ab-parts <= M, exactly l a,ab-parts >= L-l+2 and no part = L-l+1."""
    if min(n, r, s, t, l) < 0:
        return 0
    total = 0
    for parts in iter_type1(n, a_max=M, b_max=max(L - l, 0), ab_max=M):
        if sum(p.weight for p in parts) != n:
            continue
        counts = (sum(1 for p in parts if p.color == "a"),
                  sum(1 for p in parts if p.color == "b"),
                  sum(1 for p in parts if p.color == "ab"))
        if counts == (r, s, t) and _satisfies_S(parts, l, L, M):
            total += 1
    return total


# -- ordinary-integer (dilated) enumerations --------------------------------


def _schur_next_bound(p: int) -> int:
    return p - 3 - (1 if p % 3 == 0 else 0)


def iter_schur_gap(n: int, largest_cap: int) -> Iterator[tuple[int, ...]]:
    """Partitions of exactly n, parts differing by >= 3 with strict
    inequality when the larger part is a multiple of 3."""
    def rec(budget: int, bound: int):
        if budget == 0:
            yield ()
            return
        for p in range(min(budget, bound), 0, -1):
            for rest in rec(budget - p, min(budget - p, _schur_next_bound(p))):
                yield (p,) + rest
    yield from rec(n, largest_cap)


@lru_cache(maxsize=None)
def _count_schur_gap(n: int, bound: int) -> int:
    if n == 0:
        return 1
    if bound <= 0:
        return 0
    return sum(_count_schur_gap(n - p, min(n - p, _schur_next_bound(p)))
               for p in range(1, min(n, bound) + 1))


@lru_cache(maxsize=None)
def _count_distinct_residue(n: int, residues: tuple[int, ...], modulus: int,
                            bound: int) -> int:
    """Distinct parts <= bound, all congruent to one of ``residues``."""
    if n == 0:
        return 1
    if bound <= 0:
        return 0
    total = 0
    for p in range(1, min(n, bound) + 1):
        if p % modulus in residues:
            total += _count_distinct_residue(n - p, residues, modulus, p - 1)
    return total


def schur_counts(n: int) -> tuple[int, int]:
    """Both sides of Schur's theorem at n: (distinct parts congruent to 1
    or 2 mod 3, gap partitions)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return (_count_distinct_residue(n, (1, 2), 3, n), _count_schur_gap(n, n))


def _goellnitz_next_bound(p: int) -> int:
    return p - 6 - (1 if p % 6 in (0, 1, 3) else 0)


@lru_cache(maxsize=None)
def _count_goellnitz_gap(n: int, bound: int) -> int:
    if n == 0:
        return 1
    if bound <= 1:
        return 0
    total = 0
    for p in range(2, min(n, bound) + 1):
        if p == 3:
            continue
        total += _count_goellnitz_gap(n - p, min(n - p, _goellnitz_next_bound(p)))
    return total


def goellnitz_counts(n: int) -> tuple[int, int]:
    """Both sides of the three-residue difference theorem at n: (distinct
    parts congruent to 2, 4 or 5 mod 6, gap-6 partitions avoiding 1 and 3
    with strict gaps at parts congruent to 0, 1, 3 mod 6)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return (_count_distinct_residue(n, (2, 4, 5), 6, n), _count_goellnitz_gap(n, n))


def _count_P3(n: int, i: int, j: int, L: int, M: int) -> int:
    """Partitions of n into i distinct parts = 1 mod 3 each <= 3(M-j)-2
    and j distinct parts = 2 mod 3 each <= 3L-1."""
    total = 0
    for m in range(0, n + 1):
        x = _count_distinct_in_class(m, i, 1, max(3 * (M - j) - 2, 0))
        if x:
            total += x * _count_distinct_in_class(n - m, j, 2, max(3 * L - 1, 0))
    return total


@lru_cache(maxsize=None)
def _count_distinct_in_class(n: int, k: int, residue: int, cap: int) -> int:
    """Exactly k distinct parts = residue (mod 3), each <= cap, summing to n."""
    if k == 0:
        return 1 if n == 0 else 0
    if n <= 0 or cap < 1:
        return 0
    total = 0
    for p in range(residue, cap + 1, 3):
        if p > n:
            break
        total += _count_distinct_in_class(n - p, k - 1, residue, p - 1)
    return total


def _G3_satisfies(parts: tuple[int, ...], l: int, L: int, M: int) -> bool:
    """Dilated bound profile: parts = 1 mod 3 <= 3M-2, parts = 2 mod 3 <=
    3(L-l)-1, parts = 0 mod 3 <= 3M-3, exactly l parts (in the 0,1 mod 3
    classes) > 3(L-l)+2, no part equal to 3(L-l) or 3(L-l)+1."""
    marked = 0
    for p in parts:
        r = p % 3
        if r == 2:
            if p > 3 * (L - l) - 1:
                return False
        else:
            if p > (3 * M - 2 if r == 1 else 3 * M - 3):
                return False
            if p > 3 * (L - l) + 2:
                marked += 1
        if p in (3 * (L - l), 3 * (L - l) + 1):
            return False
    return marked == l


def _count_G3(n: int, r: int, s: int, t: int, l: int, L: int, M: int) -> int:
    """Schur-gap partitions of n matching the dilated (r, s, t, l) profile."""
    total = 0
    for parts in iter_schur_gap(n, min(n, max(3 * M - 2, 0))):
        counts = [0, 0, 0]
        for p in parts:
            counts[p % 3] += 1
        if (counts[1], counts[2], counts[0]) == (r, s, t) and _G3_satisfies(parts, l, L, M):
            total += 1
    return total


def theorem3_counts(n: int, i: int, j: int, L: int, M: int) -> tuple[int, int]:
    """Both sides of the dilated double-bounded refinement: the residue-
    class count P and the bucketed gap-partition sum over r+t=i, s+t=j, l."""
    P = _count_P3(n, i, j, L, M)
    G = 0
    for t in range(0, min(i, j) + 1):
        r, s = i - t, j - t
        for l in range(0, L + 1):
            G += _count_G3(n, r, s, t, l, L, M)
    return P, G


# --------------------------------------------------------------------------
# Durfee rectangles


@dataclass(frozen=True)
class DurfeeDecomposition:
    """Split of an ordinary partition around its maximal inscribed
    rectangle with (rows, cols) = (j-k, i-k)."""

    k: int
    rows: int
    cols: int
    below: tuple[int, ...]
    right: tuple[int, ...]

    def reassemble(self) -> tuple[int, ...]:
        """Rebuild the original partition from the three pieces."""
        padded_right = list(self.right) + [0] * (self.rows - len(self.right))
        rows = [self.cols + r for r in padded_right]
        rows.extend(self.below)
        return tuple(p for p in rows if p)


def durfee_decompose(partition: Sequence[int], i: int, j: int, L: int) -> DurfeeDecomposition:
    """Decompose a partition with <= j parts, each <= L-j, around the
    maximal rectangle whose column count exceeds its row count by i-j.

    Picks the largest rectangle of shape (j-k) x (i-k) that fits in the
    Ferrers graph (smallest k), then splits off the partition below it
    (<= k parts, each <= i-k) and the partition to its right (<= j-k
    parts, each <= L-i-j+k).
    """
    parts = sorted((p for p in partition if p), reverse=True)
    if any(p < 0 for p in partition):
        raise ValueError("parts must be nonnegative")
    if len(parts) > j or any(p > L - j for p in parts):
        raise ValueError("partition does not fit the (j, L-j) box")
    padded = parts + [0] * (j - len(parts))
    for k in range(0, min(i, j) + 1):
        rows, cols = j - k, i - k
        if cols < 0:
            continue
        if rows == 0 or padded[rows - 1] >= cols:
            below = tuple(p for p in padded[rows:] if p)
            right = tuple(x for x in (p - cols for p in padded[:rows]) if x)
            result = DurfeeDecomposition(k, rows, cols, below, right)
            assert len(below) <= k and all(p <= cols for p in below)
            assert len(right) <= rows and all(p <= L - i - j + k for p in right)
            assert result.reassemble() == tuple(parts)
            return result
    raise NoRectangle(f"no rectangle with offset {i - j} fits")
