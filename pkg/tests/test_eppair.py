"""Unit tests for Euler-Poincare pairings and their comparison with the index pairing"""

import pytest

from weightdirac.core.eppair import ep_induced, ep_pair, verify_main2, verma_coefficients
from weightdirac.core.errors import UnsupportedModuleError, WindowTooSmallError
from weightdirac.core.modules import dual, induce_parabolic, levi_cuspidal, simple_hw, verma
from weightdirac.core.rootdata import Weight, window_weights
from weightdirac.schemas.ep import EPMethod
from weightdirac.schemas.reports import CheckStatus


class TestVermaCoefficients:
    """Tests for resolving L(lambda) by Vermas"""

    def test_trivial_module(self, a1, a1_window):
        """Test ch L(0) = ch M(0) - ch M(-2)"""
        assert verma_coefficients(a1, Weight.of(0), a1_window) == [(Weight.of(0), 1), (Weight.of(-2), -1)]

    def test_finite_dimensional_module(self, a1):
        """Test ch L(3) = ch M(3) - ch M(-5)"""
        window = window_weights(a1, Weight.of(3), 4)
        assert verma_coefficients(a1, Weight.of(3), window) == [(Weight.of(3), 1), (Weight.of(-5), -1)]

    def test_antidominant_weight(self, a1, a1_window):
        """Test that an antidominant simple module is its own Verma"""
        assert verma_coefficients(a1, Weight.of(-2), a1_window) == [(Weight.of(-2), 1)]

    def test_window_too_small(self, a1):
        """Test that a missing orbit point is reported"""
        with pytest.raises(WindowTooSmallError):
            verma_coefficients(a1, Weight.of(0), [Weight.of(0)])

    @pytest.mark.slow
    def test_sl3_trivial_module(self, a2):
        """Test the alternating Weyl sum for L(0) of sl(3)"""
        window = window_weights(a2, Weight.of(0, 0), 3)
        coefficients = dict(verma_coefficients(a2, Weight.of(0, 0), window))
        assert len(coefficients) == 6
        assert coefficients[Weight.of(0, 0)] == 1
        assert coefficients[Weight.of(-2, 1)] == -1
        assert coefficients[Weight.of(-2, -2)] == -1


class TestInducedPairing:
    """Tests for pairings with an induced first argument"""

    @pytest.mark.parametrize(
        "first,second,expected",
        [("m0", "m0", 1), ("m0", "l0", 1), ("m_minus_alpha", "l0", -1), ("m_minus_alpha", "m0", 0)],
    )
    def test_golden_values(self, request, a1_window, first, second, expected):
        """Test EP(M(lambda), N) for the sl(2) golden modules"""
        result = ep_pair(request.getfixturevalue(first), request.getfixturevalue(second), a1_window)
        assert result.value == expected
        assert result.method == EPMethod.INDUCED_COLLAPSE
        assert result.audit[0].step == "induced-collapse"

    def test_verma_against_cuspidal(self, m0, cuspidal, a1_window):
        """Test that u-cohomology of a cuspidal module vanishes"""
        assert ep_pair(m0, cuspidal, a1_window).value == 0

    def test_inducing_module_must_be_character(self, a1_borel, cuspidal, m0, a1_window):
        """Test that over h only characters can be induced"""
        with pytest.raises(UnsupportedModuleError):
            ep_induced(a1_borel, cuspidal, m0, a1_window)

    def test_weight_outside_window(self, m0, l0, a1):
        """Test that the contributing weight must lie in the window"""
        window = window_weights(a1, Weight.of(10), 1)
        with pytest.raises(WindowTooSmallError):
            ep_pair(m0, l0, window)

    def test_levi_cuspidal_induced_pairing(self, a2_levi1, a2):
        """Test that induction from a cuspidal Levi module pairs to zero through the Levi index"""
        module = induce_parabolic(a2_levi1, levi_cuspidal(a2_levi1, 0, "1/2", "1/2"))
        result = ep_pair(module, module, window_weights(a2, Weight.of(0, 0), 1))
        assert result.value == 0
        assert result.method == EPMethod.THEOREM_BASED


class TestDispatch:
    """Tests for Verma decomposition, dual flips and the index fallback"""

    def test_simple_against_simple(self, l0, a1_window):
        """Test EP(L(0), L(0)) = 2 through the Verma resolution"""
        result = ep_pair(l0, l0, a1_window)
        assert result.value == 2
        assert result.method == EPMethod.VERMA_DECOMPOSITION

    def test_cuspidal_against_simple_flips(self, cuspidal, l0, a1_window):
        """Test that a cuspidal first argument is moved to the second slot by duality"""
        result = ep_pair(cuspidal, l0, a1_window)
        assert result.value == 0
        assert result.method == EPMethod.DUAL_FLIP
        assert result.audit[0].step == "dual-flip"
        assert result.audit[1].step == "self-dual"

    def test_cuspidal_against_verma_uses_index(self, cuspidal, m0, a1_window):
        """Test that without a flip partner the index pairing is used"""
        result = ep_pair(cuspidal, m0, a1_window)
        assert result.value == 0
        assert result.method == EPMethod.THEOREM_BASED

    def test_dual_first_argument(self, m0, l0, a1_window):
        """Test EP(M(0)^v, L(0)) by flipping to EP(L(0), M(0))"""
        result = ep_pair(dual(m0), l0, a1_window)
        assert result.method == EPMethod.DUAL_FLIP
        assert result.value == ep_pair(l0, m0, a1_window).value

    def test_flip_consistency_is_audited(self, m0, l0, a1_window):
        """Test that check_flip records agreement of the flipped computation"""
        result = ep_pair(m0, l0, a1_window, check_flip=True)
        consistency = [a for a in result.audit if a.step == "dual-flip-consistency"]
        assert len(consistency) == 1
        assert "agrees" in consistency[0].detail

    def test_levi_module_is_not_a_g_module(self, a2_levi1, a2):
        """Test that modules of the Levi factor alone are rejected"""
        levi_module = levi_cuspidal(a2_levi1, 0, "1/2", "1/2")
        other = simple_hw(a2, Weight.of(0, 0))
        with pytest.raises(UnsupportedModuleError):
            ep_pair(levi_module, other, window_weights(a2, Weight.of(0, 0), 1))


class TestVerifyMain2:
    """Tests comparing the EP side with the index side"""

    def test_verma_against_simple(self, m0, l0, a1_window):
        """Test that both sides give 1 for (M(0), L(0))"""
        report = verify_main2(m0, l0, a1_window, ("M", "L"))
        assert report.first == "M"
        assert report.ep == 1
        assert report.index_pair == 1
        assert report.equal is True
        assert report.passed

    def test_simple_against_simple(self, l0, a1_window):
        """Test that both sides give 2 for (L(0), L(0))"""
        report = verify_main2(l0, l0, a1_window)
        assert report.ep == report.index_pair == 2
        assert report.equal is True

    @pytest.mark.parametrize(
        "first,second,expected,method",
        [
            (("simple", 3), ("simple", 3), 2, EPMethod.VERMA_DECOMPOSITION),
            (("simple", 3), ("verma", -5), -1, EPMethod.VERMA_DECOMPOSITION),
            (("verma", -3), ("simple", 1), -1, EPMethod.INDUCED_COLLAPSE),
        ],
    )
    def test_finite_and_antidominant_pairs(self, a1, first, second, expected, method):
        """Test both sides for finite-dimensional and antidominant highest weight modules"""
        build = {"simple": simple_hw, "verma": verma}
        left = build[first[0]](a1, Weight.of(first[1]))
        right = build[second[0]](a1, Weight.of(second[1]))
        report = verify_main2(left, right, window_weights(a1, Weight.of(-1), 4))
        assert report.ep == report.index_pair == expected
        assert report.method == method
        assert report.equal is True
        assert report.passed

    @pytest.mark.slow
    def test_sl3_trivial_against_itself(self, a2):
        """Test that EP(L(0), L(0)) = [I(L(0)), I(L(0))] = |W| for sl(3)"""
        trivial = simple_hw(a2, Weight.of(0, 0))
        report = verify_main2(trivial, trivial, window_weights(a2, Weight.of(0, 0), 3))
        assert report.ep == report.index_pair == 6
        assert report.method == EPMethod.VERMA_DECOMPOSITION
        assert report.equal is True
        assert report.passed

    def test_cuspidal_corollary(self, cuspidal, l0, a1_window):
        """Test that a cuspidal module has zero EP with L(0) in both orders"""
        report = verify_main2(cuspidal, l0, a1_window)
        assert report.ep == 0
        assert report.index_pair == 0
        assert report.corollary == CheckStatus.PASSED
        assert report.index_vanishing == CheckStatus.PASSED
        assert report.passed

    def test_theorem_based_is_not_compared(self, cuspidal, m0, a1_window):
        """Test that an EP value taken from the index pairing is not counted as agreement"""
        report = verify_main2(cuspidal, m0, a1_window)
        assert report.consistent_by_construction
        assert report.equal is None
