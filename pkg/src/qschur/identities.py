"""Exact verifiers for the bounded key identities and their consequences.

Every verifier computes both sides of one identity as exact LaurentPoly
or MarkerSeries values and returns a Verdict with the difference and,
when it fails, a witness locating the first differing q-coefficient.
Identity tags (eq21, eq32, ...) are the stable vocabulary shared with
the command line; see IDENTITIES for the registry.

The generating function G_L of gap partitions with parts bounded by b_L
is always built twice, from the enumeration and from the k-sum formula,
and the two constructions are asserted equal before either is used.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Optional, Sequence, Union

from .coefficients import qbinom, qmultinomial3, qtrinomial, triangular
from .partitions import ColoredSymbol, iter_type1
from .qseries import LaurentPoly, MarkerSeries, Truncation, ONE, ZERO, qpow

__all__ = [
    "GoellnitzComposition",
    "IDENTITIES",
    "InternalMismatch",
    "SweepResult",
    "Verdict",
    "Witness",
    "build_GL",
    "build_PL",
    "build_RL",
    "goellnitz_compositions",
    "lhs_21",
    "rhs_21",
    "sweep",
    "trinomial_rhs",
    "verify_11",
    "verify_21",
    "verify_26_cell",
    "verify_32",
    "verify_44",
    "verify_46",
    "verify_48",
    "verify_516",
    "verify_53",
    "verify_61",
    "verify_63",
    "verify_63_closed_LM",
    "verify_rec512",
    "verify_rec55",
    "verify_rec58",
    "verify_rec59",
    "verify_recurrence",
    "verify_truncated",
]


class InternalMismatch(AssertionError):
    """Two constructions that must agree did not; falsifies an assumption."""


@dataclass(frozen=True)
class Witness:
    """First differing coefficient between the two sides."""

    q_exp: int
    lhs_coeff: int
    rhs_coeff: int
    marker: Optional[tuple[int, ...]] = None

    def to_json_dict(self) -> dict:
        out = {"q_exp": self.q_exp, "lhs": self.lhs_coeff, "rhs": self.rhs_coeff}
        if self.marker is not None:
            out["marker"] = list(self.marker)
        return out


Value = Union[LaurentPoly, MarkerSeries]


@dataclass(frozen=True)
class Verdict:
    """Outcome of one identity check."""

    identity: str
    params: dict
    holds: bool
    lhs: Value
    rhs: Value
    difference: Value
    witness: Optional[Witness] = None

    def to_json_dict(self) -> dict:
        def render(v: Value):
            return str(v) if isinstance(v, LaurentPoly) else v.to_json_dict()
        return {
            "identity": self.identity,
            "params": dict(self.params),
            "holds": self.holds,
            "lhs": render(self.lhs),
            "rhs": render(self.rhs),
            "witness": self.witness.to_json_dict() if self.witness else None,
        }


def _first_witness(lhs: Value, rhs: Value) -> Optional[Witness]:
    if isinstance(lhs, LaurentPoly):
        diff = lhs - rhs
        if not diff:
            return None
        e = diff.min_exp
        return Witness(e, lhs.coeff(e), rhs.coeff(e))
    diff = lhs - rhs
    if not diff:
        return None
    exps, poly = next(diff.terms())
    e = poly.min_exp
    return Witness(e, lhs.coeff(exps).coeff(e), rhs.coeff(exps).coeff(e), marker=exps)


def _verdict(identity: str, params: dict, lhs: Value, rhs: Value) -> Verdict:
    difference = lhs - rhs
    witness = _first_witness(lhs, rhs)
    return Verdict(identity, params, witness is None, lhs, rhs, difference, witness)


# --------------------------------------------------------------------------
# the bounded key identity and its variants


def lhs_21(L: int, M: int, i: int, j: int) -> LaurentPoly:
    """Sum over k of q^{(i-k)(j-k)} [M-i-j+k; k] [M-j; i-k] [L-i; j-k]."""
    total = ZERO
    for k in range(0, min(i, j) + 1):
        term = qbinom(M - i - j + k, k) * qbinom(M - j, i - k) * qbinom(L - i, j - k)
        total = total + term.shifted((i - k) * (j - k))
    return total


def rhs_21(L: int, M: int, i: int, j: int) -> LaurentPoly:
    return qbinom(L, j) * qbinom(M - j, i)


def verify_21(L: int, M: int, i: int, j: int) -> Verdict:
    """The double-bounded key identity; valid for arbitrary integers."""
    return _verdict("eq21", dict(L=L, M=M, i=i, j=j),
                    lhs_21(L, M, i, j), rhs_21(L, M, i, j))


def verify_32(L: int, i: int, j: int) -> Verdict:
    """The M-free Durfee-rectangle identity (i, j >= 0, L >= i+j)."""
    lhs = ZERO
    for k in range(0, min(i, j) + 1):
        term = qbinom(i, k) * qbinom(L - i, j - k)
        lhs = lhs + term.shifted((i - k) * (j - k))
    return _verdict("eq32", dict(L=L, i=i, j=j), lhs, qbinom(L, j))


def verify_44(L: int, M: int, i: int, j: int) -> Verdict:
    """Triangular-exponent form of the key identity.

    Also cross-asserts, termwise via T_{i+j-k} + T_k = T_i + T_j +
    (i-k)(j-k), that this is exactly q^{T_i+T_j} times the eq21 form.
    """
    lhs = ZERO
    for k in range(0, min(i, j) + 1):
        term = qbinom(M - i - j + k, k) * qbinom(M - j, i - k) * qbinom(L - i, j - k)
        lhs = lhs + term.shifted(triangular(i + j - k) + triangular(k))
    rhs = (qbinom(L, j) * qbinom(M - j, i)).shifted(triangular(i) + triangular(j))
    shift = triangular(i) + triangular(j)
    if lhs != lhs_21(L, M, i, j).shifted(shift):
        raise InternalMismatch("triangular-exponent form disagrees with eq21 scaling")
    return _verdict("eq44", dict(L=L, M=M, i=i, j=j), lhs, rhs)


def verify_48(L: int, M: int, i: int, j: int) -> Verdict:
    """Multinomial-kernel bounded identity (0 <= i <= M, 0 <= j <= L)."""
    lhs = (qbinom(M, i) * qbinom(L, j)).shifted(triangular(i) + triangular(j))
    rhs = ZERO
    for k in range(0, min(i, j) + 1):
        # [M; M-i, i-k, k] = (q)_M / ((q)_{M-i} (q)_{i-k} (q)_k)
        term = qmultinomial3(M, M - i, i - k) * qbinom(L - i, j - k)
        rhs = rhs + term.shifted(triangular(i + j - k) + triangular(k))
    return _verdict("eq48", dict(L=L, M=M, i=i, j=j), lhs, rhs)


def verify_46(L: int, M: int) -> Verdict:
    """Finite two-marker product expansion.

    The product prod_{m<=M}(1+Aq^m) * prod_{m<=L}(1+Bq^m) must equal the
    double sum of A^i B^j q^{T_i+T_j} [M; i] [L; j]; both sides are exact
    polynomials, compared coefficientwise over all (i, j).
    """
    product = MarkerSeries.one(2)
    for m in range(1, M + 1):
        product = product * MarkerSeries(2, {(0, 0): ONE, (1, 0): qpow(m)})
    for m in range(1, L + 1):
        product = product * MarkerSeries(2, {(0, 0): ONE, (0, 1): qpow(m)})
    expansion = MarkerSeries(2, {
        (i, j): (qbinom(M, i) * qbinom(L, j)).shifted(triangular(i) + triangular(j))
        for i in range(0, max(M, 0) + 1) for j in range(0, max(L, 0) + 1)})
    return _verdict("eq46", dict(L=L, M=M), product, expansion)


# --------------------------------------------------------------------------
# the L = M world: G_L, R_L, P_L, recurrences, trinomials


def _series_from_type1(L: int) -> MarkerSeries:
    """G_L by direct enumeration of gap partitions with parts <= b_L."""
    acc: dict[tuple[int, int], dict[int, int]] = {}
    bound = ColoredSymbol("b", L) if L >= 1 else None
    if L >= 1:
        stream = iter_type1(triangular(L), largest=bound)
    else:
        stream = iter([()])
    for parts in stream:
        sigma = 0
        nu = {"a": 0, "b": 0, "ab": 0}
        for p in parts:
            sigma += p.weight
            nu[p.color] += 1
        key = (nu["a"] + nu["ab"], nu["b"] + nu["ab"])
        cell = acc.setdefault(key, {})
        cell[sigma] = cell.get(sigma, 0) + 1
    return MarkerSeries(2, {k: LaurentPoly(v) for k, v in acc.items()})


def _series_from_sum(L: int) -> MarkerSeries:
    """G_L by the k-sum formula: sum over i, j of A^i B^j times
    sum_k q^{T_{i+j-k}+T_k} [L-i-j+k; k] [L-j; i-k] [L-i; j-k]."""
    coeffs = {}
    for i in range(0, L + 1):
        for j in range(0, L - i + 1):
            cell = ZERO
            for k in range(0, min(i, j) + 1):
                term = (qbinom(L - i - j + k, k) * qbinom(L - j, i - k)
                        * qbinom(L - i, j - k))
                cell = cell + term.shifted(triangular(i + j - k) + triangular(k))
            if cell:
                coeffs[(i, j)] = cell
    return MarkerSeries(2, coeffs)


@lru_cache(maxsize=None)
def build_GL(L: int) -> MarkerSeries:
    """The generating function of gap partitions with parts <= b_L.

    Computed independently by enumeration and by the k-sum formula; the
    two must agree exactly (InternalMismatch otherwise).
    """
    if L < 0:
        raise ValueError("L must be nonnegative")
    enumerated = _series_from_type1(L)
    summed = _series_from_sum(L)
    if enumerated != summed:
        raise InternalMismatch(
            f"enumeration and k-sum constructions of G_{L} disagree")
    return summed


@lru_cache(maxsize=None)
def build_RL(L: int) -> MarkerSeries:
    """The multinomial side: sum of A^i B^j q^{T_i+T_j} [L; i, j, L-i-j]."""
    if L < 0:
        raise ValueError("L must be nonnegative")
    coeffs = {}
    for i in range(0, L + 1):
        for j in range(0, L - i + 1):
            m = qmultinomial3(L, i, j)
            if m:
                coeffs[(i, j)] = m.shifted(triangular(i) + triangular(j))
    return MarkerSeries(2, coeffs)


@lru_cache(maxsize=None)
def build_PL(L: int) -> MarkerSeries:
    """Numerator convergent of the continued fraction
    1 + (A+B)q + ABq^2(1-q) / (1 + (A+B)q^2 + ABq^3(1-q^2) / (...)),
    by its three-term recurrence from P_0 = 1, P_1 = 1 + (A+B)q."""
    if L < 0:
        raise ValueError("L must be nonnegative")
    if L == 0:
        return MarkerSeries.one(2)
    if L == 1:
        return MarkerSeries(2, {(0, 0): ONE, (1, 0): qpow(1), (0, 1): qpow(1)})
    prev2, prev1 = build_PL(L - 2), build_PL(L - 1)
    lead = MarkerSeries(2, {(0, 0): ONE, (1, 0): qpow(L), (0, 1): qpow(L)})
    tail = MarkerSeries(2, {(1, 1): qpow(L) - qpow(2 * L - 1)})
    return lead * prev1 + tail * prev2


def verify_53(L: int) -> Verdict:
    """G_L equals the multinomial series R_L."""
    return _verdict("eq53", dict(L=L), build_GL(L), build_RL(L))


def verify_rec55(L: int) -> Verdict:
    """Three-term recurrence for G_L (L >= 2)."""
    lead = MarkerSeries(2, {(0, 0): ONE, (1, 0): qpow(L), (0, 1): qpow(L)})
    tail = MarkerSeries(2, {(1, 1): qpow(L) - qpow(2 * L - 1)})
    rhs = lead * build_GL(L - 1) + tail * build_GL(L - 2)
    return _verdict("rec55", dict(L=L), build_GL(L), rhs)


def verify_rec512(L: int) -> Verdict:
    """Numerator convergents equal G_L."""
    return _verdict("rec512", dict(L=L), build_PL(L), build_GL(L))


def verify_rec58(L: int, i: int, j: int) -> Verdict:
    """Symmetric second-order multinomial recurrence (L >= 2)."""
    lhs = qmultinomial3(L, i, j)
    rhs = (qmultinomial3(L - 1, i, j)
           + qmultinomial3(L - 1, i - 1, j).shifted(L - i)
           + qmultinomial3(L - 1, i, j - 1).shifted(L - j)
           + ((ONE - qpow(L - 1)) * qmultinomial3(L - 2, i - 1, j - 1)).shifted(L - i - j))
    return _verdict("rec58", dict(L=L, i=i, j=j), lhs, rhs)


def verify_rec59(L: int, i: int, j: int) -> Verdict:
    """Standard first-order multinomial recurrence (L >= 1)."""
    lhs = qmultinomial3(L, i, j)
    rhs = (qmultinomial3(L - 1, i, j)
           + qmultinomial3(L - 1, i, j - 1).shifted(L - i - j)
           + qmultinomial3(L - 1, i - 1, j).shifted(L - i))
    return _verdict("rec59", dict(L=L, i=i, j=j), lhs, rhs)


def verify_recurrence(variant: str, **params) -> Verdict:
    """Dispatch on {'rec55', 'rec58', 'rec59', 'rec512'}."""
    table = {"rec55": verify_rec55, "rec512": verify_rec512,
             "rec58": verify_rec58, "rec59": verify_rec59}
    if variant not in table:
        raise ValueError(f"unknown recurrence {variant!r}")
    return table[variant](**params)


def trinomial_rhs(L: int) -> MarkerSeries:
    """The trinomial representation: sum over tau in [-L, L] of
    A^tau q^{tau(3tau-1)/2} times the base-q^3 trinomial at c = AB."""
    acc: dict[tuple[int, int], LaurentPoly] = {}
    for tau in range(-L, L + 1):
        prefix = tau * (3 * tau - 1) // 2
        for j, entry in qtrinomial(L, tau).entries.items():
            exps = (j + tau, j)
            value = entry.dilated(3).shifted(prefix)
            acc[exps] = acc.get(exps, ZERO) + value
    return MarkerSeries(2, acc)


def verify_516(L: int) -> Verdict:
    """Dilated G_L (q -> q^3, A -> Aq^-2, B -> Bq^-1) equals the
    two-parameter trinomial sum (L >= 1)."""
    lhs = build_GL(L).dilate(3, (-2, -1))
    return _verdict("eq516", dict(L=L), lhs, trinomial_rhs(L))


# --------------------------------------------------------------------------
# three-color (Goellnitz) identities


@dataclass(frozen=True)
class GoellnitzComposition:
    """A composition (alpha..phi) of (i, j, k) with i = alpha+delta+epsilon,
    j = beta+delta+phi, k = gamma+epsilon+phi; s is the total number of
    parts alpha+beta+gamma+delta+epsilon+phi."""

    alpha: int
    beta: int
    gamma: int
    delta: int
    epsilon: int
    phi: int

    @property
    def s(self) -> int:
        return (self.alpha + self.beta + self.gamma
                + self.delta + self.epsilon + self.phi)


def goellnitz_compositions(i: int, j: int, k: int) -> Iterator[GoellnitzComposition]:
    """All nonnegative compositions compatible with (i, j, k)."""
    for delta in range(0, min(i, j) + 1):
        for epsilon in range(0, min(i - delta, k) + 1):
            for phi in range(0, min(j - delta, k - epsilon) + 1):
                yield GoellnitzComposition(
                    alpha=i - delta - epsilon,
                    beta=j - delta - phi,
                    gamma=k - epsilon - phi,
                    delta=delta, epsilon=epsilon, phi=phi)


def _lhs_63(L: int, M: int, i: int, j: int, k: int, *,
            alt_s: bool = False) -> LaurentPoly:
    total = ZERO
    for c in goellnitz_compositions(i, j, k):
        # alt_s uses the rejected alternative statistic (delta counted
        # twice, gamma omitted); kept so a failing sweep can report which
        # bookkeeping actually holds
        s = c.alpha + c.beta + 2 * c.delta + c.epsilon + c.phi if alt_s else c.s
        shift = (triangular(s) + triangular(c.delta)
                 + triangular(c.epsilon) + triangular(c.phi - 1))
        common = (qbinom(L - s + c.beta, c.beta) * qbinom(M - s + c.gamma, c.gamma)
                  * qbinom(L - s, c.delta) * qbinom(M - s, c.epsilon))
        if not common:
            continue
        first = (qbinom(L - s + c.alpha, c.alpha) * qbinom(M - s, c.phi)).shifted(c.phi)
        second = qbinom(L - s + c.alpha - 1, c.alpha - 1) * qbinom(M - s, c.phi - 1)
        total = total + (common * (first + second)).shifted(shift)
    return total


def _rhs_63(L: int, M: int, i: int, j: int, k: int) -> LaurentPoly:
    total = ZERO
    for tau in range(0, min(i, j, k) + 1):
        term = (qbinom(L - tau, tau) * qbinom(L - 2 * tau, i - tau)
                * qbinom(L - i - tau, j - tau) * qbinom(M - i - j, k - tau))
        shift = (tau * (M + 2) - triangular(tau) + triangular(i - tau)
                 + triangular(j - tau) + triangular(k - tau))
        total = total + term.shifted(shift)
    return total


def verify_63(L: int, M: int, i: int, j: int, k: int, *,
              alt_s: bool = False) -> Verdict:
    """The double-bounded three-color key identity (i, j, k >= 0).

    ``alt_s`` switches the composition statistic s to the alternative
    bookkeeping (see _lhs_63); it exists only for falsification reports.
    """
    tag = "eq63(alt-s)" if alt_s else "eq63"
    return _verdict(tag, dict(L=L, M=M, i=i, j=j, k=k),
                    _lhs_63(L, M, i, j, k, alt_s=alt_s), _rhs_63(L, M, i, j, k))


def verify_63_closed_LM(L: int, i: int, j: int, k: int) -> Verdict:
    """At L = M the tau-sum collapses to the cyclic closed form
    q^{T_i+T_j+T_k} [L-k; i] [L-i; j] [L-j; k]."""
    lhs = _rhs_63(L, L, i, j, k)
    rhs = (qbinom(L - k, i) * qbinom(L - i, j) * qbinom(L - j, k)).shifted(
        triangular(i) + triangular(j) + triangular(k))
    return _verdict("eq63lm", dict(L=L, i=i, j=j, k=k), lhs, rhs)


# --------------------------------------------------------------------------
# truncated infinite identities


@lru_cache(maxsize=None)
def inv_poch_trunc(n: int, q_cap: int) -> LaurentPoly:
    """1/(q)_n as a power series truncated at q^q_cap (n >= 0), obtained
    by multiplying the truncated geometric expansion of each factor."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ONE
    geom = LaurentPoly({t: 1 for t in range(0, q_cap + 1, n)})
    return (inv_poch_trunc(n - 1, q_cap) * geom).truncated(q_cap)


def verify_26_cell(i: int, j: int, qmax: int) -> Verdict:
    """Termwise limit identity at one (i, j): the k-sum of
    q^{T_{i+j-k}+T_k} / ((q)_{i-k} (q)_{j-k} (q)_k) equals
    q^{T_i+T_j} / ((q)_i (q)_j), both truncated at qmax."""
    lhs = ZERO
    for k in range(0, min(i, j) + 1):
        term = inv_poch_trunc(i - k, qmax) * inv_poch_trunc(j - k, qmax)
        term = term.truncated(qmax) * inv_poch_trunc(k, qmax)
        lhs = lhs + term.truncated(qmax).shifted(
            triangular(i + j - k) + triangular(k)).truncated(qmax)
    rhs = (inv_poch_trunc(i, qmax) * inv_poch_trunc(j, qmax)).truncated(qmax)
    rhs = rhs.shifted(triangular(i) + triangular(j)).truncated(qmax)
    return _verdict("eq26", dict(i=i, j=j, qmax=qmax), lhs, rhs)


def _marker_product(caps: Sequence[int], q_cap: int) -> MarkerSeries:
    """prod_{m=1..q_cap} of (1 + X q^m) over each marker X, truncated."""
    arity = len(caps)
    trunc = Truncation(tuple(caps), q_cap)
    series = MarkerSeries.one(arity, trunc)
    for pos in range(arity):
        unit = [0] * arity
        unit[pos] = 1
        for m in range(1, q_cap + 1):
            factor = MarkerSeries(arity, {(0,) * arity: ONE, tuple(unit): qpow(m)}, trunc)
            series = series * factor
    return series


def verify_11(amax: int, bmax: int, qmax: int) -> Verdict:
    """Truncated two-marker key identity: the k-sum double series, the
    Pochhammer double series and the double product all agree within the
    caps.  The verdict compares the k-sum form against the product; the
    middle form is checked against both en route."""
    trunc = Truncation((amax, bmax), qmax)
    ksum: dict[tuple[int, int], LaurentPoly] = {}
    middle: dict[tuple[int, int], LaurentPoly] = {}
    for i in range(0, amax + 1):
        for j in range(0, bmax + 1):
            cell = verify_26_cell(i, j, qmax)
            if not cell.holds:
                break
            if cell.lhs:
                ksum[(i, j)] = cell.lhs
            if cell.rhs:
                middle[(i, j)] = cell.rhs
    lhs = MarkerSeries(2, ksum, trunc)
    mid = MarkerSeries(2, middle, trunc)
    product = _marker_product((amax, bmax), qmax)
    if mid != product:
        return _verdict("eq11", dict(amax=amax, bmax=bmax, qmax=qmax), mid, product)
    return _verdict("eq11", dict(amax=amax, bmax=bmax, qmax=qmax), lhs, product)


def _cell_61(i: int, j: int, k: int, q_cap: int) -> LaurentPoly:
    """The composition sum with the (1 - q^alpha + q^{alpha+phi}) factor,
    truncated at q_cap."""
    total = ZERO
    for c in goellnitz_compositions(i, j, k):
        shift = (triangular(c.s) + triangular(c.delta)
                 + triangular(c.epsilon) + triangular(c.phi - 1))
        if shift > q_cap:
            continue
        inv = ONE
        for n in (c.alpha, c.beta, c.gamma, c.delta, c.epsilon, c.phi):
            inv = (inv * inv_poch_trunc(n, q_cap)).truncated(q_cap)
        bracket = ONE - qpow(c.alpha) + qpow(c.alpha + c.phi)
        total = total + (inv * bracket).truncated(q_cap).shifted(shift).truncated(q_cap)
    return total


def verify_61(amax: int, bmax: int, cmax: int, qmax: int) -> Verdict:
    """Truncated three-marker key identity: for each (i, j, k) within the
    caps the composition sum must reduce to q^{T_i+T_j+T_k} / ((q)_i (q)_j
    (q)_k), and summed against the markers it must equal the triple
    product."""
    trunc = Truncation((amax, bmax, cmax), qmax)
    cells: dict[tuple[int, int, int], LaurentPoly] = {}
    for i in range(0, amax + 1):
        for j in range(0, bmax + 1):
            for k in range(0, cmax + 1):
                cell = _cell_61(i, j, k, qmax)
                reduced = inv_poch_trunc(i, qmax) * inv_poch_trunc(j, qmax)
                reduced = reduced.truncated(qmax) * inv_poch_trunc(k, qmax)
                reduced = reduced.truncated(qmax).shifted(
                    triangular(i) + triangular(j) + triangular(k)).truncated(qmax)
                if cell != reduced:
                    lhs = MarkerSeries(3, {(i, j, k): cell}, trunc)
                    rhs = MarkerSeries(3, {(i, j, k): reduced}, trunc)
                    return _verdict("eq61", dict(amax=amax, bmax=bmax,
                                                 cmax=cmax, qmax=qmax), lhs, rhs)
                if cell:
                    cells[(i, j, k)] = cell
    lhs = MarkerSeries(3, cells, trunc)
    product = _marker_product((amax, bmax, cmax), qmax)
    return _verdict("eq61", dict(amax=amax, bmax=bmax, cmax=cmax, qmax=qmax),
                    lhs, product)


def verify_truncated(variant: str, **caps) -> Verdict:
    """Dispatch on {'eq26', 'eq11', 'eq61'} with their cap arguments."""
    if variant == "eq26":
        return verify_26_cell(caps["i"], caps["j"], caps["qmax"])
    if variant == "eq11":
        return verify_11(caps["amax"], caps["bmax"], caps["qmax"])
    if variant == "eq61":
        return verify_61(caps["amax"], caps["bmax"], caps["cmax"], caps["qmax"])
    raise ValueError(f"unknown truncated variant {variant!r}")


# --------------------------------------------------------------------------
# sweep harness


@dataclass(frozen=True)
class IdentitySpec:
    """Registry entry: how to drive one identity from parameter ranges."""

    fn: Callable[..., Verdict]
    range_params: tuple[str, ...]
    cap_params: tuple[str, ...] = ()
    valid: Optional[Callable[..., bool]] = None
    description: str = ""


IDENTITIES: dict[str, IdentitySpec] = {
    "eq21": IdentitySpec(verify_21, ("L", "M", "i", "j"),
                         description="double-bounded key identity (all integers)"),
    "eq32": IdentitySpec(verify_32, ("L", "i", "j"),
                         valid=lambda L, i, j: 0 <= i and 0 <= j and i + j <= L,
                         description="M-free Durfee-rectangle identity"),
    "eq44": IdentitySpec(verify_44, ("L", "M", "i", "j"),
                         valid=lambda L, M, i, j: 0 <= i + j <= min(L, M) and i >= 0 and j >= 0,
                         description="triangular-exponent key identity"),
    "eq46": IdentitySpec(verify_46, ("L", "M"),
                         valid=lambda L, M: L >= 0 and M >= 0,
                         description="finite double-product expansion"),
    "eq48": IdentitySpec(verify_48, ("L", "M", "i", "j"),
                         valid=lambda L, M, i, j: 0 <= i <= M and 0 <= j <= L,
                         description="multinomial-kernel bounded identity"),
    "eq53": IdentitySpec(verify_53, ("L",), valid=lambda L: L >= 0,
                         description="gap-partition series equals multinomial series"),
    "eq516": IdentitySpec(verify_516, ("L",), valid=lambda L: L >= 1,
                          description="two-parameter trinomial representation"),
    "eq63": IdentitySpec(verify_63, ("L", "M", "i", "j", "k"),
                         valid=lambda L, M, i, j, k: min(i, j, k) >= 0,
                         description="double-bounded three-color key identity"),
    "eq63lm": IdentitySpec(verify_63_closed_LM, ("L", "i", "j", "k"),
                           valid=lambda L, i, j, k: min(L, i, j, k) >= 0,
                           description="equal-bound closed form of eq63"),
    "rec55": IdentitySpec(verify_rec55, ("L",), valid=lambda L: L >= 2,
                          description="three-term recurrence for G_L"),
    "rec58": IdentitySpec(verify_rec58, ("L", "i", "j"),
                          valid=lambda L, i, j: L >= 2,
                          description="symmetric multinomial recurrence"),
    "rec59": IdentitySpec(verify_rec59, ("L", "i", "j"),
                          valid=lambda L, i, j: L >= 1,
                          description="standard multinomial recurrence"),
    "rec512": IdentitySpec(verify_rec512, ("L",), valid=lambda L: L >= 0,
                           description="continued-fraction convergents equal G_L"),
    "eq26": IdentitySpec(verify_26_cell, ("i", "j"), cap_params=("qmax",),
                         valid=lambda i, j: i >= 0 and j >= 0,
                         description="termwise truncated limit identity"),
    "eq11": IdentitySpec(verify_11, (), cap_params=("amax", "bmax", "qmax"),
                         description="truncated two-marker key identity"),
    "eq61": IdentitySpec(verify_61, (), cap_params=("amax", "bmax", "cmax", "qmax"),
                         description="truncated three-color key identity"),
}

DEFAULT_CAPS = {"amax": 8, "bmax": 8, "cmax": 8, "qmax": 60}


@dataclass
class SweepResult:
    identity: str
    cells: int
    skipped: int
    failures: list[Verdict] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {"identity": self.identity, "cells": self.cells,
                "skipped": self.skipped, "holds": self.holds,
                "failures": len(self.failures)}


def _perturbed(verdict: Verdict) -> Verdict:
    """Self-test hook: recompute the verdict with the right side shifted
    by +1, which must fail with a witness at the constant coefficient."""
    return _verdict(verdict.identity + "+perturbed", verdict.params,
                    verdict.lhs, verdict.rhs + 1)


def sweep(identity: str, ranges: dict[str, Sequence[int]],
          caps: Optional[dict[str, int]] = None, *,
          perturb: bool = False,
          map_fn=map) -> SweepResult:
    """Check one identity over the Cartesian grid of its parameter ranges.

    Returns the failures only (in deterministic grid order) plus counts;
    ``map_fn`` may be an executor map for parallel cell evaluation.
    """
    if identity not in IDENTITIES:
        raise KeyError(f"unknown identity {identity!r}")
    spec = IDENTITIES[identity]
    missing = [p for p in spec.range_params if p not in ranges]
    if missing:
        raise ValueError(f"{identity} needs ranges for {', '.join(missing)}")
    cap_values = {}
    for cap in spec.cap_params:
        cap_values[cap] = (caps or {}).get(cap, DEFAULT_CAPS[cap])

    grids = [list(ranges[p]) for p in spec.range_params]
    cells = skipped = 0
    jobs = []
    for combo in itertools.product(*grids):
        params = dict(zip(spec.range_params, combo))
        if spec.valid is not None and not spec.valid(**params):
            skipped += 1
            continue
        cells += 1
        jobs.append(params)

    def run(params: dict) -> Verdict:
        verdict = spec.fn(**params, **cap_values)
        return _perturbed(verdict) if perturb else verdict

    failures = [v for v in map_fn(run, jobs) if not v.holds]
    return SweepResult(identity, cells, skipped, failures)
