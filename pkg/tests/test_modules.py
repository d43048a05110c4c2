"""Unit tests for weight module constructors"""

from fractions import Fraction

import pytest

from weightdirac.core import linalg
from weightdirac.core.errors import (
    NonCommutingRootsError,
    NotBijectiveError,
    NotCuspidalError,
    UnsupportedModuleError,
)
from weightdirac.core.liestruct import chevalley_basis
from weightdirac.core.modules import (
    CharacterShape,
    bracket_compatibility,
    character_module,
    cuspidal_sl2,
    cuspidality_report,
    dual,
    induce_parabolic,
    koszul_vanishing,
    levi_cuspidal,
    module_degree,
    shapovalov_gram,
    simple_hw,
    sl2_invariant_scalars,
    sl2_monomial,
    twist,
    verma,
)
from weightdirac.core.rootdata import Weight, window_weights


def casimir(module, window):
    """h^2 + 2h + 4fe on the one-dimensional blocks of an sl(2) module."""
    values = set()
    for weight, (_, fe) in sl2_invariant_scalars(module, window).items():
        h = weight.coords[0]
        values.add(h * h + 2 * h + 4 * fe)
    return values


class TestVerma:
    """Tests for Verma modules"""

    def test_a1_dimensions(self, m0):
        """Test that M(0) has one-dimensional blocks at 0, -2, -4, ... only"""
        assert [m0.dim(Weight.of(k)) for k in (2, 0, -2, -4, -1)] == [0, 1, 1, 1, 0]

    def test_a2_partition_function(self, a2):
        """Test block dimensions given by the Kostant partition function"""
        module = verma(a2, Weight.of(0, 0))
        a1_, a2_ = a2.simple_roots
        assert module.dim(-(a1_ + a2_)) == 2
        assert module.dim(-(a1_ * 2 + a2_)) == 2
        assert module.dim(-(a1_ * 2 + a2_ * 2)) == 3

    def test_shape_and_highest_weight(self, m0):
        """Test that Vermas are certified highest weight modules"""
        assert m0.shape == CharacterShape.HIGHEST_WEIGHT
        assert m0.highest_weight == Weight.of(0)
        assert m0.is_g_module

    def test_brackets_are_respected(self, m0, a1_window):
        """Test that block matrices commute like the Lie bracket"""
        assert bracket_compatibility(m0, a1_window) == []

    @pytest.mark.slow
    def test_b2_brackets_are_respected(self, b2):
        """Test the bracket relations of a B2 Verma on a small window"""
        module = verma(b2, Weight.of(1, 0))
        window = window_weights(b2, Weight.of(1, 0) - b2.rho, 1)
        assert bracket_compatibility(module, window) == []

    def test_cache_counters(self, m0):
        """Test that repeated block requests hit the cache"""
        e = m0.algebra.e_indices[0]
        m0.act_basis(e, Weight.of(-2))
        computed = m0.blocks_computed
        m0.act_basis(e, Weight.of(-2))
        assert m0.blocks_computed == computed
        assert m0.cache_hits >= 1

    def test_action_of_e_on_verma(self, a1):
        """Test e f^k v = k (lambda - k + 1) f^(k-1) v"""
        module = verma(a1, Weight.of(3))
        e = module.algebra.e_indices[0]
        block = module.act_basis(e, Weight.of(3 - 4))
        assert linalg.to_rows(block) == [[Fraction(2 * (3 - 2 + 1))]]


class TestSimpleHighestWeight:
    """Tests for simple highest weight modules"""

    def test_trivial_module(self, l0):
        """Test that L(0) is one-dimensional"""
        assert [l0.dim(Weight.of(k)) for k in (2, 0, -2)] == [0, 1, 0]

    def test_finite_dimensional_sl3(self, a2):
        """Test that L(rho) of sl(3) is the adjoint representation"""
        module = simple_hw(a2, Weight.of(1, 1))
        window = window_weights(a2, Weight.of(0, 0), 2)
        assert sum(module.dim(w) for w in window) == 8
        assert module.dim(Weight.of(0, 0)) == 2

    def test_antidominant_simple_equals_verma(self, a1):
        """Test that L(-2) = M(-2)"""
        simple = simple_hw(a1, Weight.of(-2))
        assert [simple.dim(Weight.of(-2 - 2 * k)) for k in range(4)] == [1, 1, 1, 1]

    def test_shapovalov_gram(self, a1):
        """Test <f v, f v> = lambda for sl(2)"""
        assert linalg.to_rows(shapovalov_gram(a1, Weight.of(0), Weight.of(-2))) == [[0]]
        assert linalg.to_rows(shapovalov_gram(a1, Weight.of(1), Weight.of(-1))) == [[1]]

    def test_brackets_are_respected(self, a2):
        """Test the bracket relations on the adjoint representation of sl(3)"""
        module = simple_hw(a2, Weight.of(1, 1))
        window = window_weights(a2, Weight.of(0, 0), 1)
        assert bracket_compatibility(module, window) == []


class TestMonomialModules:
    """Tests for the sl(2) monomial modules"""

    def test_cuspidal_dimensions(self, cuspidal):
        """Test that F_(1/2, 1/2) has one-dimensional blocks at even weights"""
        assert [cuspidal.dim(Weight.of(k)) for k in (-4, -3, 0, 1, 6)] == [1, 0, 1, 0, 1]

    def test_integral_parameters_are_not_cuspidal(self, a1):
        """Test that cuspidal_sl2 rejects integral exponents"""
        with pytest.raises(NotCuspidalError):
            cuspidal_sl2(1, "1/2", a1)

    def test_cuspidal_needs_type_a1(self, a2):
        """Test that cuspidal_sl2 over sl(3) is unsupported"""
        with pytest.raises(UnsupportedModuleError):
            cuspidal_sl2("1/2", "1/2", a2)

    def test_monomial_module_with_integral_exponent(self, a1):
        """Test that an integral exponent gives a non-cuspidal module"""
        module = sl2_monomial(0, "1/2", a1)
        assert module.shape == CharacterShape.UNKNOWN
        window = window_weights(a1, Weight.of("-1/2"), 3)
        assert not cuspidality_report(module, window).is_cuspidal

    def test_cuspidal_is_bijective(self, cuspidal, a1_window):
        """Test that e and f act bijectively on the cuspidal module"""
        report = cuspidality_report(cuspidal, a1_window)
        assert report.is_cuspidal
        assert report.is_bijective
        assert report.failures() == []

    def test_casimir_is_constant(self, cuspidal, a1_window):
        """Test that the Casimir acts by the scalar (mu0 + mu1)(mu0 + mu1 + 2)"""
        assert casimir(cuspidal, a1_window) == {Fraction(3)}

    def test_brackets_are_respected(self, cuspidal, a1_window):
        """Test the bracket relations of F_mu"""
        assert bracket_compatibility(cuspidal, a1_window) == []

    def test_module_degree(self, cuspidal, a1_window):
        """Test that cuspidal sl(2) modules have degree one"""
        assert module_degree(cuspidal, a1_window) == 1


class TestLeviCuspidal:
    """Tests for cuspidal modules of an sl(2) Levi factor"""

    def test_acting_set(self, a2_levi1, a2):
        """Test that only the Levi root vectors and h act"""
        module = levi_cuspidal(a2_levi1, 0, "1/2", "1/2")
        g = module.algebra
        assert g.e(a2.simple_roots[0]) in module.acting
        assert g.e(a2.simple_roots[1]) not in module.acting
        with pytest.raises(ValueError):
            module.act_basis(g.e(a2.simple_roots[1]), Weight.of(0, 0))

    def test_wrong_levi(self, a2_borel):
        """Test that the Levi must be the sl(2) of the chosen root"""
        with pytest.raises(UnsupportedModuleError):
            levi_cuspidal(a2_borel, 0, "1/2", "1/2")

    def test_induced_shape(self, a2_levi1):
        """Test that inducing a cuspidal Levi module gives an induced-from-cuspidal module"""
        module = induce_parabolic(a2_levi1, levi_cuspidal(a2_levi1, 0, "1/2", "1/2"))
        assert module.shape == CharacterShape.INDUCED_FROM_CUSPIDAL
        assert module.highest_weight is None
        assert module.dim(Weight.of(0, 0)) == 1

    @pytest.mark.slow
    def test_induced_brackets_are_respected(self, a2_levi1, a2):
        """Test the bracket relations of a parabolically induced module"""
        module = induce_parabolic(a2_levi1, levi_cuspidal(a2_levi1, 0, "1/2", "1/2"))
        window = window_weights(a2, Weight.of(0, 0), 1)
        assert bracket_compatibility(module, window) == []


class TestCharacterModule:
    """Tests for one-dimensional Levi modules"""

    def test_weight_must_vanish_on_levi_coroots(self, a2_levi1, a2):
        """Test that C_lambda needs lambda orthogonal to the Levi roots"""
        g = chevalley_basis(a2)
        with pytest.raises(ValueError):
            character_module(g, Weight.of(1, 0), a2_levi1.levi_roots)
        assert character_module(g, Weight.of(0, 3), a2_levi1.levi_roots).dim(Weight.of(0, 3)) == 1

    def test_parabolic_verma(self, a2_levi1, a2):
        """Test that a generalized Verma from a character drops the Levi direction"""
        g = chevalley_basis(a2)
        module = induce_parabolic(a2_levi1, character_module(g, Weight.of(0, 0), a2_levi1.levi_roots))
        assert module.dim(-a2.simple_roots[0]) == 0
        assert module.dim(-a2.simple_roots[1]) == 1


class TestDual:
    """Tests for restricted duals"""

    def test_character_is_preserved(self, m0, a1_window):
        """Test that the restricted dual has the same block dimensions"""
        assert dual(m0).character(a1_window) == m0.character(a1_window)

    def test_sl2_scalars_are_preserved(self, cuspidal, a1_window):
        """Test that e f and f e act by the same scalars on the dual"""
        assert sl2_invariant_scalars(dual(cuspidal), a1_window) == sl2_invariant_scalars(cuspidal, a1_window)

    def test_brackets_are_respected(self, m0, a1_window):
        """Test the bracket relations of the dual Verma"""
        assert bracket_compatibility(dual(m0), a1_window) == []

    @pytest.mark.parametrize("name", ["m0", "cuspidal"])
    def test_double_dual_restores_action(self, request, name, a1_window):
        """Test that the dual of the dual has the same action matrices as the module"""
        module = request.getfixturevalue(name)
        twice = dual(dual(module))
        for index in range(module.algebra.dimension):
            for weight in a1_window:
                assert linalg.equal(twice.act_basis(index, weight), module.act_basis(index, weight))


class TestTwist:
    """Tests for twisting functors"""

    def test_zero_twist_is_identity(self, cuspidal, a1, a1_window):
        """Test that x = 0 gives identical action matrices"""
        twisted = twist(cuspidal, [a1.simple_roots[0]], [0])
        for index in range(twisted.algebra.dimension):
            for weight in a1_window:
                assert linalg.equal(twisted.act_basis(index, weight), cuspidal.act_basis(index, weight))

    def test_support_shifts_by_x_gamma(self, cuspidal, a1):
        """Test that twisting by x moves the support by x gamma"""
        twisted = twist(cuspidal, [a1.simple_roots[0]], ["1/2"])
        assert twisted.dim(Weight.of(1)) == 1
        assert twisted.dim(Weight.of(0)) == 0

    def test_twist_preserves_brackets_and_casimir(self, cuspidal, a1):
        """Test that a non-integral twist is again a module with the same central character"""
        twisted = twist(cuspidal, [a1.simple_roots[0]], ["1/2"])
        window = window_weights(a1, Weight.of(1), 3)
        assert bracket_compatibility(twisted, window) == []
        assert casimir(twisted, window) == {Fraction(3)}

    def test_needs_bijective_module(self, m0, a1, a1_window):
        """Test that twisting a Verma by its e-direction is rejected"""
        with pytest.raises(NotBijectiveError):
            twist(m0, [-a1.simple_roots[0]], ["1/2"], a1_window)

    def test_opposite_roots_do_not_commute(self, cuspidal, a1):
        """Test that gamma and -gamma are rejected together"""
        alpha = a1.simple_roots[0]
        with pytest.raises(NonCommutingRootsError):
            twist(cuspidal, [alpha, -alpha], [1, 1])

    def test_koszul_vanishing(self, cuspidal, a1):
        """Test that f_gamma has no kernel or cokernel on a cuspidal module"""
        assert koszul_vanishing(cuspidal, a1.simple_roots[0], Weight.of(0)) == (0, 0)

    def test_half_twist_of_cuspidal_is_not_cuspidal(self, cuspidal, a1):
        """Test that twisting F_(1/2,1/2) by 1/2 gives the scalars of F_(1,0) and a non-injective e"""
        alpha = a1.simple_roots[0]
        twisted = twist(cuspidal, [alpha], ["1/2"])
        window = window_weights(a1, Weight.of(1), 3)
        assert sl2_invariant_scalars(twisted, window) == sl2_invariant_scalars(sl2_monomial(1, 0, a1), window)
        e = twisted.algebra.e(alpha)
        assert linalg.to_rows(twisted.act_basis(e, Weight.of(1))) == [[0]]
        assert not cuspidality_report(twisted, window).is_cuspidal

    def test_opposite_twists_cancel(self, cuspidal, a1, a1_window):
        """Test that twisting by nu and then by -nu restores every action matrix"""
        alpha = a1.simple_roots[0]
        restored = twist(twist(cuspidal, [alpha], ["1/2"]), [alpha], ["-1/2"])
        for index in range(cuspidal.algebra.dimension):
            for weight in a1_window:
                assert linalg.equal(restored.act_basis(index, weight), cuspidal.act_basis(index, weight))

    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
    def test_integer_twist_is_conjugation(self, cuspidal, a1, a1_window, n):
        """Test that an integer twist acts by f^n u f^(-n) on the underlying blocks"""
        alpha = a1.simple_roots[0]
        algebra = cuspidal.algebra
        f = algebra.f(alpha)
        twisted = twist(cuspidal, [alpha], [n])

        def f_power(top: Weight):
            chain = linalg.identity(cuspidal.dim(top))
            for j in range(n):
                chain = linalg.matmul(cuspidal.act_basis(f, top - alpha * j), chain)
            return chain

        for index in range(algebra.dimension):
            for weight in a1_window:
                expected = linalg.matmul(
                    f_power(weight + algebra.weights[index]),
                    cuspidal.act_basis(index, weight),
                    linalg.try_inverse(f_power(weight)),
                )
                assert linalg.equal(twisted.act_basis(index, weight), expected), (index, weight)
