"""Exact arithmetic in Z[q, q^-1] and in formal marker series over it.

Everything downstream of this module computes in the ring of Laurent
polynomials in q with arbitrary-precision integer coefficients, optionally
graded by formal markers A, B (and C).  All arithmetic is exact; there is
no floating point and no rational rounding anywhere in the package.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

__all__ = [
    "LaurentPoly",
    "MarkerSeries",
    "NotDivisible",
    "Truncation",
    "ONE",
    "ZERO",
    "qpow",
]


class NotDivisible(ArithmeticError):
    """No exact Laurent quotient exists (misuse, or a falsified identity)."""


# --------------------------------------------------------------------------
# low-level term-dict arithmetic
#
# Multiplication has a Kronecker-substitution fast path: pack the
# coefficient vector of each operand into a single big integer (128-bit
# digits), multiply once with CPython's subquadratic bigint product, and
# unpack.  Digits must stay nonnegative and below 2^128, so operands are
# split by sign and an exact coefficient bound is checked before packing.

_PACK_BITS = 128
_PACK_BYTES = _PACK_BITS // 8
_PACK_LIMIT = 1 << _PACK_BITS
_PACK_MIN_WORK = 1500  # len(a)*len(b) below this: plain dict loop wins


def _mul_dicts(a: dict, b: dict) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out: dict[int, int] = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            v = get(e)
            out[e] = ca * cb if v is None else v + ca * cb
    return {e: c for e, c in out.items() if c}


def _pack(d: dict, lo: int, span: int) -> int:
    buf = bytearray(span * _PACK_BYTES)
    for e, c in d.items():
        off = (e - lo) * _PACK_BYTES
        buf[off:off + _PACK_BYTES] = c.to_bytes(_PACK_BYTES, "little")
    return int.from_bytes(buf, "little")


def _unpack(n: int, lo: int) -> dict:
    raw = n.to_bytes((n.bit_length() + 7) // 8 + _PACK_BYTES, "little")
    out = {}
    for idx in range(len(raw) // _PACK_BYTES):
        c = int.from_bytes(raw[idx * _PACK_BYTES:(idx + 1) * _PACK_BYTES], "little")
        if c:
            out[lo + idx] = c
    return out


def _mul_nonneg(a: dict, b: dict) -> Optional[dict]:
    """Packed product of two dicts with nonnegative coefficients.

    Returns None when packing is unsafe (possible digit overflow) or
    unprofitable (exponents too sparse); the caller then falls back to
    the schoolbook loop.
    """
    alo, ahi = min(a), max(a)
    blo, bhi = min(b), max(b)
    aspan, bspan = ahi - alo + 1, bhi - blo + 1
    if aspan > 8 * len(a) + 64 or bspan > 8 * len(b) + 64:
        return None
    # any product coefficient is at most min(max(a)*sum(b), max(b)*sum(a))
    if min(max(a.values()) * sum(b.values()),
           max(b.values()) * sum(a.values())) >= _PACK_LIMIT:
        return None
    prod = _pack(a, alo, aspan) * _pack(b, blo, bspan)
    return _unpack(prod, alo + blo)


def _mul_terms(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) * len(b) < _PACK_MIN_WORK:
        return _mul_dicts(a, b)
    apos = {e: c for e, c in a.items() if c > 0}
    aneg = {e: -c for e, c in a.items() if c < 0}
    bpos = {e: c for e, c in b.items() if c > 0}
    bneg = {e: -c for e, c in b.items() if c < 0}
    plus: dict[int, int] = {}
    minus: dict[int, int] = {}
    for x, y, acc in ((apos, bpos, plus), (aneg, bneg, plus),
                      (apos, bneg, minus), (aneg, bpos, minus)):
        if not x or not y:
            continue
        part = _mul_nonneg(x, y) if len(x) * len(y) >= _PACK_MIN_WORK else None
        if part is None:
            part = _mul_dicts(x, y)
        for e, c in part.items():
            acc[e] = acc.get(e, 0) + c
    if not minus:
        return plus
    for e, c in minus.items():
        v = plus.get(e, 0) - c
        if v:
            plus[e] = v
        else:
            plus.pop(e, None)
    return plus


class LaurentPoly:
    """A Laurent polynomial in q over the integers.

    Terms are stored sparsely as an exponent -> coefficient mapping;
    exponents may be negative, coefficients are Python ints, and zero
    coefficients are never stored (the zero polynomial is the empty
    mapping).  Instances are immutable: every operation returns a new
    value, so polynomials can be shared freely (including across
    threads) and used as cache values.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[int, int], Iterable[tuple[int, int]]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be ints")
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        self._terms = acc

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # trusted constructor: terms already normalized, ownership passes
        self = object.__new__(cls)
        self._terms = terms
        return self

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({0: c} if c else {})

    # -- inspection ---------------------------------------------------------

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def terms(self) -> Iterator[tuple[int, int]]:
        """Iterate (exponent, coefficient) pairs in ascending exponent order."""
        return iter(sorted(self._terms.items()))

    @property
    def min_exp(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    @property
    def max_exp(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for e, c in b.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly._raw(_mul_terms(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def dilated(self, power: int) -> "LaurentPoly":
        """Substitute q -> q^power (power >= 1)."""
        if power < 1:
            raise ValueError("dilation power must be >= 1")
        if power == 1:
            return self
        return LaurentPoly._raw({e * power: c for e, c in self._terms.items()})

    def truncated(self, q_cap: int) -> "LaurentPoly":
        """Drop terms with exponent above q_cap."""
        return LaurentPoly._raw({e: c for e, c in self._terms.items() if e <= q_cap})

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Return c with c * other == self, raising NotDivisible otherwise."""
        other = _coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return ZERO
        alo = min(self._terms)
        blo = min(other._terms)
        num = {e - alo: c for e, c in self._terms.items()}
        den = {e - blo: c for e, c in other._terms.items()}
        ddeg = max(den)
        dlead = den[ddeg]
        quo: dict[int, int] = {}
        while num:
            ndeg = max(num)
            if ndeg < ddeg:
                raise NotDivisible("no exact Laurent quotient (remainder left)")
            c, r = divmod(num[ndeg], dlead)
            if r:
                raise NotDivisible("no exact Laurent quotient (integer coefficients)")
            shift = ndeg - ddeg
            quo[shift] = c
            for e, bc in den.items():
                e2 = e + shift
                v = num.get(e2, 0) - c * bc
                if v:
                    num[e2] = v
                else:
                    num.pop(e2, None)
        off = alo - blo
        return LaurentPoly._raw({e + off: c for e, c in quo.items()})

    def evaluate(self, q0: Union[int, Fraction]) -> Fraction:
        """Evaluate at a nonzero rational point; the exactness oracle for tests."""
        x = Fraction(q0)
        if x == 0 and self.min_exp is not None and self.min_exp < 0:
            raise ZeroDivisionError("negative exponents cannot be evaluated at 0")
        return sum((c * x ** e for e, c in self._terms.items()), Fraction(0))

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        # constants hash like the ints they equal
        if not self._terms:
            return hash(0)
        if len(self._terms) == 1 and 0 in self._terms:
            return hash(self._terms[0])
        return hash(frozenset(self._terms.items()))

    # -- canonical text -----------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e, c in sorted(self._terms.items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                qpart = "q" if e == 1 else f"q^{e}"
                body = qpart if mag == 1 else f"{mag}*{qpart}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    _TERM_RE = re.compile(
        r"^(?:(?P<num>\d+)|(?:(?P<coeff>\d+)\*)?q(?:\^(?P<exp>-?\d+))?)$")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the canonical text rendering produced by ``str``."""
        s = text.strip()
        if s == "0":
            return ZERO
        s = s.replace(" - ", " + -").replace(" + ", "\x00")
        terms = []
        for chunk in s.split("\x00"):
            chunk = chunk.strip()
            sign = 1
            if chunk.startswith("-"):
                sign, chunk = -1, chunk[1:]
            m = cls._TERM_RE.match(chunk)
            if m is None:
                raise ValueError(f"cannot parse polynomial term {chunk!r}")
            if m.group("num") is not None:
                terms.append((0, sign * int(m.group("num"))))
            else:
                coeff = int(m.group("coeff") or 1)
                exp = int(m.group("exp") if m.group("exp") is not None else 1)
                terms.append((exp, sign * coeff))
        return cls(terms)


def _coerce(value) -> "LaurentPoly":
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.const(value)
    return NotImplemented


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})


def qpow(exponent: int, coeff: int = 1) -> LaurentPoly:
    """The monomial coeff * q^exponent."""
    return LaurentPoly._raw({exponent: coeff} if coeff else {})


# --------------------------------------------------------------------------
# marker series


@dataclass(frozen=True)
class Truncation:
    """Explicit truncation caps for a MarkerSeries.

    ``marker_caps`` bounds the exponent of each marker position,
    ``q_cap`` bounds the q-exponent.  ``None`` anywhere means "no cap".
    Mixing two series combines caps by taking the minimum.
    """

    marker_caps: Optional[tuple[int, ...]] = None
    q_cap: Optional[int] = None

    @staticmethod
    def merge(a: Optional["Truncation"], b: Optional["Truncation"]) -> Optional["Truncation"]:
        if a is None:
            return b
        if b is None:
            return a
        if a.marker_caps is None:
            caps = b.marker_caps
        elif b.marker_caps is None:
            caps = a.marker_caps
        else:
            caps = tuple(min(x, y) for x, y in zip(a.marker_caps, b.marker_caps))
        if a.q_cap is None:
            qc = b.q_cap
        elif b.q_cap is None:
            qc = a.q_cap
        else:
            qc = min(a.q_cap, b.q_cap)
        return Truncation(caps, qc)


_MARKER_NAMES = ("A", "B", "C")


def _tuple_key(exps: tuple[int, ...]) -> tuple:
    # total marker degree first, then alphabetically by marker (A before B)
    return (sum(exps), tuple(-e for e in exps))


class MarkerSeries:
    """A polynomial (or explicitly truncated series) in formal markers.

    Coefficients are LaurentPoly values keyed by the marker exponent
    tuple: (i, j) for two markers A, B, or (i, j, k) for A, B, C.  Marker
    exponents are nonnegative.  Values are immutable and operations are
    pure; terms beyond the declared truncation caps are dropped on
    construction, and mixing two series takes the minimum of their caps.
    """

    __slots__ = ("_arity", "_coeffs", "_trunc")

    def __init__(self, arity: int,
                 coeffs: Mapping[tuple[int, ...], Union[LaurentPoly, int]] = (),
                 truncation: Optional[Truncation] = None):
        if arity not in (2, 3):
            raise ValueError("arity must be 2 or 3")
        if truncation is not None and truncation.marker_caps is not None \
                and len(truncation.marker_caps) != arity:
            raise ValueError("marker_caps length must equal the arity")
        acc: dict[tuple[int, ...], LaurentPoly] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for exps, poly in items:
            exps = tuple(exps)
            if len(exps) != arity or any(e < 0 for e in exps):
                raise ValueError(f"bad marker exponent tuple {exps!r}")
            poly = _coerce(poly)
            if poly is NotImplemented:
                raise TypeError("coefficients must be LaurentPoly or int")
            if _beyond(exps, truncation):
                continue
            if truncation is not None and truncation.q_cap is not None:
                poly = poly.truncated(truncation.q_cap)
            if poly:
                prev = acc.get(exps)
                poly = poly if prev is None else prev + poly
                if poly:
                    acc[exps] = poly
                else:
                    acc.pop(exps, None)
        self._arity = arity
        self._coeffs = acc
        self._trunc = truncation

    @classmethod
    def _raw(cls, arity: int, coeffs: dict, trunc: Optional[Truncation]) -> "MarkerSeries":
        self = object.__new__(cls)
        self._arity = arity
        self._coeffs = coeffs
        self._trunc = trunc
        return self

    @classmethod
    def zero(cls, arity: int = 2, truncation: Optional[Truncation] = None) -> "MarkerSeries":
        return cls._raw(arity, {}, truncation)

    @classmethod
    def one(cls, arity: int = 2, truncation: Optional[Truncation] = None) -> "MarkerSeries":
        return cls(arity, {(0,) * arity: ONE}, truncation)

    @classmethod
    def term(cls, exps: Sequence[int], poly: Union[LaurentPoly, int],
             truncation: Optional[Truncation] = None) -> "MarkerSeries":
        exps = tuple(exps)
        return cls(len(exps), {exps: poly}, truncation)

    # -- inspection ---------------------------------------------------------

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def truncation(self) -> Optional[Truncation]:
        return self._trunc

    def coeff(self, exps: Sequence[int]) -> LaurentPoly:
        """The stored LaurentPoly at a marker tuple, or zero if absent."""
        return self._coeffs.get(tuple(exps), ZERO)

    def terms(self) -> Iterator[tuple[tuple[int, ...], LaurentPoly]]:
        """Iterate (marker tuple, coefficient) in canonical order."""
        return iter(sorted(self._coeffs.items(), key=lambda kv: _tuple_key(kv[0])))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    # -- arithmetic ---------------------------------------------------------

    def _check_arity(self, other: "MarkerSeries"):
        if self._arity != other._arity:
            raise ValueError("cannot mix series with different marker arities")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_arity(other)
        trunc = Truncation.merge(self._trunc, other._trunc)
        out = dict(self._coeffs)
        for exps, poly in other._coeffs.items():
            prev = out.get(exps)
            v = poly if prev is None else prev + poly
            if v:
                out[exps] = v
            else:
                out.pop(exps, None)
        return MarkerSeries._raw(self._arity, out, trunc)._retruncated()

    __radd__ = __add__

    def __neg__(self):
        return MarkerSeries._raw(
            self._arity, {e: -p for e, p in self._coeffs.items()}, self._trunc)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            scalar = _coerce(other)
            if not scalar:
                return MarkerSeries.zero(self._arity, self._trunc)
            out = {}
            qc = self._trunc.q_cap if self._trunc else None
            for exps, poly in self._coeffs.items():
                v = poly * scalar
                if qc is not None:
                    v = v.truncated(qc)
                if v:
                    out[exps] = v
            return MarkerSeries._raw(self._arity, out, self._trunc)
        if not isinstance(other, MarkerSeries):
            return NotImplemented
        self._check_arity(other)
        trunc = Truncation.merge(self._trunc, other._trunc)
        qc = trunc.q_cap if trunc else None
        out: dict[tuple[int, ...], LaurentPoly] = {}
        for e1, p1 in self._coeffs.items():
            for e2, p2 in other._coeffs.items():
                exps = tuple(x + y for x, y in zip(e1, e2))
                if _beyond(exps, trunc):
                    continue
                v = p1 * p2
                if qc is not None:
                    v = v.truncated(qc)
                if not v:
                    continue
                prev = out.get(exps)
                v = v if prev is None else prev + v
                if v:
                    out[exps] = v
                else:
                    out.pop(exps, None)
        return MarkerSeries._raw(self._arity, out, trunc)

    __rmul__ = __mul__

    def _coerce(self, value):
        if isinstance(value, MarkerSeries):
            return value
        if isinstance(value, (int, LaurentPoly)):
            poly = _coerce(value)
            return MarkerSeries(self._arity, {(0,) * self._arity: poly})
        return NotImplemented

    def _retruncated(self) -> "MarkerSeries":
        t = self._trunc
        if t is None:
            return self
        out = {}
        for exps, poly in self._coeffs.items():
            if _beyond(exps, t):
                continue
            if t.q_cap is not None:
                poly = poly.truncated(t.q_cap)
            if poly:
                out[exps] = poly
        return MarkerSeries._raw(self._arity, out, t)

    def with_truncation(self, truncation: Optional[Truncation]) -> "MarkerSeries":
        """Re-cap the series (terms beyond the new caps are dropped)."""
        return MarkerSeries._raw(self._arity, dict(self._coeffs), truncation)._retruncated()

    def dilate(self, q_power: int, shifts: Sequence[int]) -> "MarkerSeries":
        """Apply q -> q^q_power together with a per-marker q-shift.

        A term A^i B^j [C^k] q^e becomes A^i B^j [C^k] q^{q_power*e + i*sA
        + j*sB [+ k*sC]}.  The series must not carry a q-cap (a capped
        series is only known up to its cap, and dilation would move the
        horizon).
        """
        shifts = tuple(shifts)
        if len(shifts) != self._arity:
            raise ValueError("one shift per marker required")
        if q_power < 1:
            raise ValueError("dilation power must be >= 1")
        if self._trunc is not None and self._trunc.q_cap is not None \
                and (q_power != 1 or any(shifts)):
            raise ValueError("cannot dilate a q-truncated series")
        out = {}
        for exps, poly in self._coeffs.items():
            shift = sum(e * s for e, s in zip(exps, shifts))
            out[exps] = poly.dilated(q_power).shifted(shift)
        return MarkerSeries._raw(self._arity, out, self._trunc)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        # deliberately strict: no scalar coercion here, so that equality
        # stays transitive across series of different arities
        if not isinstance(other, MarkerSeries):
            return NotImplemented
        return self._arity == other._arity and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._arity, frozenset(self._coeffs.items())))

    # -- canonical text and JSON --------------------------------------------

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for exps, poly in self.terms():
            marker = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(_MARKER_NAMES, exps) if e)
            for e, c in poly.terms():
                mag = abs(c)
                parts = []
                if mag != 1:
                    parts.append(str(mag))
                if marker:
                    parts.append(marker)
                if e:
                    parts.append("q" if e == 1 else f"q^{e}")
                body = "*".join(parts) if parts else "1"
                if not pieces:
                    pieces.append(("-" if c < 0 else "") + body)
                else:
                    pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"MarkerSeries({self})"

    def to_json_dict(self) -> dict:
        trunc = None
        if self._trunc is not None:
            trunc = {
                "marker_caps": list(self._trunc.marker_caps)
                if self._trunc.marker_caps is not None else None,
                "q_cap": self._trunc.q_cap,
            }
        return {
            "markers": "".join(_MARKER_NAMES[: self._arity]),
            "truncation": trunc,
            "terms": [{"m": list(exps), "c": str(poly)} for exps, poly in self.terms()],
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, data: dict) -> "MarkerSeries":
        arity = len(data["markers"])
        trunc = None
        if data.get("truncation") is not None:
            caps = data["truncation"].get("marker_caps")
            trunc = Truncation(tuple(caps) if caps is not None else None,
                               data["truncation"].get("q_cap"))
        coeffs = {tuple(t["m"]): LaurentPoly.parse(t["c"]) for t in data["terms"]}
        return cls(arity, coeffs, trunc)

    @classmethod
    def from_json_text(cls, text: str) -> "MarkerSeries":
        return cls.from_json_dict(json.loads(text))


def _beyond(exps: tuple[int, ...], trunc: Optional[Truncation]) -> bool:
    return (trunc is not None and trunc.marker_caps is not None
            and any(e > cap for e, cap in zip(exps, trunc.marker_caps)))
