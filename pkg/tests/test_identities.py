"""Identity verifiers: frozen examples, invariants, and the sweep harness."""

import itertools

import pytest

from qschur.coefficients import qbinom, qmultinomial3, triangular
from qschur.identities import (
    IDENTITIES,
    build_GL,
    build_PL,
    build_RL,
    goellnitz_compositions,
    lhs_21,
    rhs_21,
    sweep,
    trinomial_rhs,
    verify_11,
    verify_21,
    verify_26_cell,
    verify_32,
    verify_44,
    verify_46,
    verify_48,
    verify_516,
    verify_53,
    verify_61,
    verify_63,
    verify_63_closed_LM,
    verify_rec512,
    verify_rec55,
    verify_rec58,
    verify_rec59,
    verify_recurrence,
    verify_truncated,
)
from qschur.qseries import LaurentPoly, MarkerSeries, ONE, ZERO, qpow


class TestKeyIdentity:
    def test_basic_example(self):
        v = verify_21(2, 2, 1, 1)
        assert v.holds and v.lhs == ONE + qpow(1)

    def test_zero_orders(self):
        for L in range(-2, 3):
            for M in range(-2, 3):
                v = verify_21(L, M, 0, 0)
                assert v.holds and v.lhs == ONE

    def test_negative_top_cell(self):
        v = verify_21(-1, 0, 0, 0)
        assert v.holds and v.lhs == ONE

    def test_empty_sum_matches_zero_right_side(self):
        # min(i, j) < 0 gives an empty sum; the right side vanishes too
        for L, M, i, j in ((3, 3, -1, 2), (3, 3, 2, -1), (0, -2, -3, 5)):
            v = verify_21(L, M, i, j)
            assert v.holds and v.lhs == ZERO and v.rhs == ZERO

    def test_mixed_sign_grid(self):
        for L, M, i, j in itertools.product(range(-3, 4), repeat=4):
            assert lhs_21(L, M, i, j) == rhs_21(L, M, i, j)

    def test_M_independence_of_the_reduced_identity(self):
        # for L, M >= i+j the left side divided by [M-j; i] does not
        # depend on M
        for L in range(0, 6):
            for i in range(0, 4):
                for j in range(0, 4):
                    if i + j > L:
                        continue
                    reduced = None
                    for M in range(i + j, i + j + 4):
                        quotient = lhs_21(L, M, i, j).divide_exact(qbinom(M - j, i))
                        if reduced is None:
                            reduced = quotient
                        assert quotient == reduced


class TestDurfeeIdentity:
    def test_examples(self):
        assert verify_32(2, 1, 1).holds
        assert verify_32(2, 1, 1).lhs == ONE + qpow(1)
        assert verify_32(3, 0, 3).holds  # L = j, i = 0 single term
        v = verify_32(4, 2, 2)
        assert v.holds and v.lhs == qbinom(4, 2)

    def test_grid(self):
        for L in range(0, 9):
            for i in range(0, L + 1):
                for j in range(0, L - i + 1):
                    assert verify_32(L, i, j).holds


class TestTriangularForm:
    def test_example_is_scaled_eq21(self):
        v = verify_44(2, 2, 1, 1)
        assert v.holds and v.lhs == (ONE + qpow(1)).shifted(2)

    def test_zero_orders(self):
        assert verify_44(4, 7, 0, 0).lhs == ONE

    def test_oracle_cell(self):
        v = verify_44(3, 4, 1, 2)
        assert v.holds

    def test_scaling_relation_holds_on_grid(self):
        for L, M, i, j in itertools.product(range(0, 5), range(0, 5),
                                            range(0, 3), range(0, 3)):
            if min(L, M) < i + j:
                continue
            shift = triangular(i) + triangular(j)
            assert verify_44(L, M, i, j).lhs == lhs_21(L, M, i, j).shifted(shift)


class TestMultinomialKernel:
    def test_trivial(self):
        assert verify_48(3, 3, 0, 0).lhs == ONE

    def test_small_cells(self):
        assert verify_48(1, 1, 1, 1).holds
        assert verify_48(2, 2, 1, 1).holds

    def test_grid(self):
        for M in range(0, 6):
            for L in range(0, 6):
                for i in range(0, M + 1):
                    for j in range(0, L + 1):
                        assert verify_48(L, M, i, j).holds


class TestProductExpansion:
    def test_one_by_one(self):
        v = verify_46(1, 1)
        assert v.holds
        assert v.lhs == MarkerSeries(2, {(0, 0): ONE, (1, 0): qpow(1),
                                         (0, 1): qpow(1), (1, 1): qpow(2)})

    def test_coefficient_of_A2(self):
        v = verify_46(1, 2)  # L = 1, M = 2
        assert v.lhs.coeff((2, 0)) == qpow(3)

    def test_trivial_coefficient(self):
        assert verify_46(3, 2).lhs.coeff((0, 0)) == ONE


class TestGeneratingFunctions:
    def test_G0_G1(self):
        assert build_GL(0) == MarkerSeries.one(2)
        assert build_GL(1) == MarkerSeries(2, {(0, 0): ONE, (1, 0): qpow(1),
                                               (0, 1): qpow(1)})

    def test_G2_closed_form(self):
        expected = MarkerSeries(2, {
            (0, 0): ONE,
            (1, 0): qpow(1) + qpow(2),
            (0, 1): qpow(1) + qpow(2),
            (1, 1): qpow(2) + qpow(3),
            (2, 0): qpow(3),
            (0, 2): qpow(3),
        })
        assert build_GL(2) == expected

    def test_G2_single_coefficient(self):
        # the A^2 coefficient comes from the unique two-a-part partition
        assert build_GL(2).coeff((2, 0)) == qpow(3)

    def test_RL_examples(self):
        assert build_RL(0) == MarkerSeries.one(2)
        assert build_RL(1) == build_GL(1)
        assert build_RL(2).coeff((2, 0)) == qpow(3)

    def test_series_equality(self):
        for L in range(0, 7):
            assert verify_53(L).holds

    def test_marker_symmetry_of_RL(self):
        for L in range(0, 7):
            series = build_RL(L)
            for (i, j), poly in series.terms():
                assert series.coeff((j, i)) == poly


class TestRecurrences:
    def test_rec55_small(self):
        assert verify_rec55(2).holds
        assert all(verify_rec55(L).holds for L in range(2, 9))

    def test_rec58_hand_expansion(self):
        v = verify_rec58(2, 1, 1)
        assert v.holds and v.lhs == ONE + qpow(1)

    def test_rec58_grid(self):
        for L in range(2, 8):
            for i in range(0, L + 1):
                for j in range(0, L + 1):
                    assert verify_rec58(L, i, j).holds

    def test_rec59_trivial(self):
        v = verify_rec59(1, 0, 0)
        assert v.holds and v.lhs == ONE

    def test_rec59_grid(self):
        for L in range(1, 8):
            for i in range(0, L + 1):
                for j in range(0, L + 1):
                    assert verify_rec59(L, i, j).holds

    def test_convergents_initial_conditions(self):
        assert build_PL(0) == build_GL(0)
        assert build_PL(1) == build_GL(1)

    def test_convergents_equal_GL(self):
        for L in range(0, 7):
            assert verify_rec512(L).holds

    def test_dispatcher(self):
        assert verify_recurrence("rec55", L=3).holds
        assert verify_recurrence("rec58", L=3, i=1, j=1).holds
        with pytest.raises(ValueError):
            verify_recurrence("rec999", L=3)


class TestTrinomialRepresentation:
    def test_L1_closed_form(self):
        v = verify_516(1)
        assert v.holds
        assert v.lhs == MarkerSeries(2, {(0, 0): ONE, (1, 0): qpow(1),
                                         (0, 1): qpow(2)})

    def test_L2_closed_form(self):
        v = verify_516(2)
        assert v.holds
        expected = MarkerSeries(2, {
            (0, 0): ONE,
            (1, 0): qpow(1) + qpow(4),
            (0, 1): qpow(2) + qpow(5),
            (1, 1): qpow(3) + qpow(6),
            (2, 0): qpow(5),
            (0, 2): qpow(7),
        })
        assert v.lhs == expected == trinomial_rhs(2)

    def test_constant_coefficient(self):
        for L in range(1, 5):
            assert trinomial_rhs(L).coeff((0, 0)) == ONE

    def test_up_to_L4(self):
        assert verify_516(3).holds and verify_516(4).holds


class TestThreeColorIdentity:
    def test_compositions_partition_the_index_set(self):
        for i, j, k in itertools.product(range(0, 4), repeat=3):
            seen = set()
            for c in goellnitz_compositions(i, j, k):
                assert (c.alpha + c.delta + c.epsilon, c.beta + c.delta + c.phi,
                        c.gamma + c.epsilon + c.phi) == (i, j, k)
                assert min(c.alpha, c.beta, c.gamma, c.delta, c.epsilon, c.phi) >= 0
                assert c.s == c.alpha + c.beta + c.gamma + c.delta + c.epsilon + c.phi
                key = (c.alpha, c.beta, c.gamma, c.delta, c.epsilon, c.phi)
                assert key not in seen
                seen.add(key)

    def test_zero_orders(self):
        for L in range(0, 4):
            for M in range(0, 4):
                v = verify_63(L, M, 0, 0, 0)
                assert v.holds and v.lhs == ONE

    def test_k0_slice_reduces_to_the_multinomial_coefficients(self):
        for L in range(0, 5):
            for i in range(0, 3):
                for j in range(0, 3):
                    v = verify_63(L, L, i, j, 0)
                    expected = qmultinomial3(L, i, j).shifted(
                        triangular(i) + triangular(j))
                    assert v.holds and v.lhs == expected

    def test_i0_slice_matches_the_two_color_identity(self):
        # empirically the i = 0 slice IS the triangular-exponent identity
        # with its first order set to k
        for L in range(0, 5):
            for M in range(0, 6):
                for j in range(0, 3):
                    for k in range(0, 3):
                        v63 = verify_63(L, M, 0, j, k)
                        v44 = verify_44(L, M, k, j)
                        assert v63.lhs == v44.lhs and v63.rhs == v44.rhs

    def test_unequal_bounds_both_ways(self):
        for L, M in ((3, 5), (5, 3), (4, 6), (6, 4)):
            for i, j, k in itertools.product(range(0, 3), repeat=3):
                assert verify_63(L, M, i, j, k).holds

    def test_degenerate_orders_give_zero_on_both_sides(self):
        # negative orders empty both the composition set and the tau sum
        for i, j, k in ((-1, 2, 2), (2, -1, 2), (2, 2, -1), (-2, -2, -2)):
            v = verify_63(3, 4, i, j, k)
            assert v.holds and v.lhs == ZERO and v.rhs == ZERO

    def test_alternative_statistic_is_genuinely_different(self):
        # the rejected bookkeeping (delta twice, gamma omitted) must fail
        # somewhere, otherwise keeping it for falsification is pointless
        outcomes = [verify_63(L, L, i, j, 0, alt_s=True).holds
                    for L in range(2, 5) for i in range(0, 3) for j in range(0, 3)]
        assert not all(outcomes)

    def test_closed_form_examples(self):
        assert verify_63_closed_LM(4, 0, 0, 0).lhs == ONE
        v = verify_63_closed_LM(2, 1, 0, 0)
        assert v.holds and v.lhs == qpow(1) * qbinom(2, 1)
        assert verify_63_closed_LM(3, 1, 1, 1).holds

    def test_closed_form_grid(self):
        for L in range(0, 6):
            for i, j, k in itertools.product(range(0, 4), repeat=3):
                assert verify_63_closed_LM(L, i, j, k).holds


class TestTruncated:
    def test_eq26_trivial(self):
        v = verify_26_cell(0, 0, 10)
        assert v.holds and v.lhs == ONE

    def test_eq26_cell(self):
        assert verify_26_cell(1, 1, 10).holds
        assert verify_26_cell(3, 2, 25).holds

    def test_eq11_small_caps(self):
        v = verify_11(2, 2, 10)
        assert v.holds
        # the A^1 B^1 coefficient is (q + q^2 + ...)^2 = q^2 + 2q^3 + 3q^4 + ...
        assert v.rhs.coeff((1, 1)).coeff(2) == 1
        assert v.rhs.coeff((1, 1)).coeff(3) == 2
        assert v.rhs.coeff((1, 1)).coeff(4) == 3

    def test_eq61_small_caps(self):
        assert verify_61(2, 2, 2, 16).holds

    def test_dispatcher(self):
        assert verify_truncated("eq26", i=1, j=2, qmax=12).holds
        assert verify_truncated("eq11", amax=2, bmax=2, qmax=8).holds
        with pytest.raises(ValueError):
            verify_truncated("eq99", qmax=5)


class TestSweep:
    def test_registry_covers_the_cli_vocabulary(self):
        assert set(IDENTITIES) == {
            "eq21", "eq32", "eq44", "eq46", "eq48", "eq53", "eq516", "eq63",
            "eq63lm", "rec55", "rec58", "rec59", "rec512", "eq26", "eq11", "eq61"}

    def test_full_grid_no_failures(self):
        result = sweep("eq21", {"L": range(-2, 3), "M": range(-2, 3),
                                "i": range(-2, 3), "j": range(-2, 3)})
        assert result.holds and result.cells == 625 and result.skipped == 0

    def test_skips_invalid_cells(self):
        result = sweep("eq32", {"L": range(0, 4), "i": range(0, 4), "j": range(0, 4)})
        assert result.holds
        assert result.cells + result.skipped == 64
        assert result.skipped > 0

    def test_skipping_respects_each_precondition(self):
        result = sweep("eq48", {"L": range(-1, 4), "M": range(-1, 4),
                                "i": range(-1, 4), "j": range(-1, 4)})
        assert result.holds
        evaluated = sum(1 for L in range(-1, 4) for M in range(-1, 4)
                        for i in range(-1, 4) for j in range(-1, 4)
                        if 0 <= i <= M and 0 <= j <= L)
        assert result.cells == evaluated

    def test_perturbed_harness_detects_the_break(self):
        result = sweep("eq21", {"L": [1, 2], "M": [1], "i": [0, 1], "j": [0]},
                       perturb=True)
        assert not result.holds
        assert len(result.failures) == result.cells
        for verdict in result.failures:
            assert verdict.witness.q_exp == 0
            assert verdict.witness.rhs_coeff - verdict.witness.lhs_coeff == 1

    def test_witness_locates_first_differing_coefficient(self):
        lhs = LaurentPoly({-1: 2, 0: 1, 5: 3})
        rhs = LaurentPoly({-1: 2, 0: 1, 5: 4, 7: 1})
        from qschur.identities import _verdict
        v = _verdict("probe", {}, lhs, rhs)
        assert not v.holds
        assert v.witness.q_exp == 5
        assert (v.witness.lhs_coeff, v.witness.rhs_coeff) == (3, 4)

    def test_missing_range_is_an_error(self):
        with pytest.raises(ValueError):
            sweep("eq21", {"L": [1]})
        with pytest.raises(KeyError):
            sweep("bogus", {})
