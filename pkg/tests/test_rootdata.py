"""Unit tests for root data, Weyl groups and parabolics"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weightdirac.core.errors import UnknownRootSystemError
from weightdirac.core.rootdata import (
    Weight,
    build_root_system,
    dot_orbit,
    parabolic,
    parabolic_height,
    window_weights,
)


class TestBuildRootSystem:
    """Tests for the supported root system tables"""

    @pytest.mark.parametrize(
        "label,positive,weyl",
        [("A1", 1, 2), ("A1xA1", 2, 4), ("A2", 3, 6), ("B2", 4, 8)],
    )
    def test_sizes(self, label, positive, weyl):
        """Test that each type has the expected number of positive roots and Weyl group order"""
        rd = build_root_system(label)
        assert len(rd.positive_roots) == positive
        assert len(rd.weyl_group) == weyl

    def test_aliases(self):
        """Test that lowercase, the times sign and C2 resolve to the canonical tables"""
        assert build_root_system("a1xa1").label == "A1xA1"
        assert build_root_system("A1×A1").label == "A1xA1"
        assert build_root_system("C2").label == "B2"

    def test_unknown_label(self):
        """Test that an unsupported type raises UnknownRootSystemError"""
        with pytest.raises(UnknownRootSystemError):
            build_root_system("G2")

    def test_simple_roots_are_cartan_rows(self, b2):
        """Test that alpha_i is row i of the Cartan matrix in fundamental coordinates"""
        assert b2.simple_roots == [Weight.of(2, -2), Weight.of(-1, 2)]

    def test_b2_root_lengths(self, b2):
        """Test that the first simple root of B2 is long and the second short"""
        long_root, short_root = b2.simple_roots
        assert b2.root_norm(long_root) == 2
        assert b2.root_norm(short_root) == 1

    def test_b2_positive_roots(self, b2):
        """Test the positive roots of B2 in simple-root coordinates"""
        coords = {b2.root_coords(beta) for beta in b2.positive_roots}
        assert coords == {(1, 0), (0, 1), (1, 1), (1, 2)}

    def test_positive_roots_start_with_simple_roots(self, any_rd):
        """Test that the height order keeps the simple roots first and in index order"""
        assert any_rd.positive_roots[: any_rd.rank] == any_rd.simple_roots

    def test_rho_is_half_sum_of_positive_roots(self, any_rd):
        """Test that rho = (1, ..., 1) equals half the sum of the positive roots"""
        total = Weight.zero(any_rd.rank)
        for beta in any_rd.positive_roots:
            total = total + beta
        assert total * Fraction(1, 2) == any_rd.rho


class TestForms:
    """Tests for coordinates and the invariant form"""

    def test_root_coords_round_trip(self, a2):
        """Test that from_root_coords inverts root_coords"""
        weight = Weight.of(3, -1)
        assert a2.from_root_coords(a2.root_coords(weight)) == weight

    def test_coroot_pairing_reads_coordinates(self, b2):
        """Test that pairing with a simple coroot returns the fundamental coordinate"""
        weight = Weight.of(5, -3)
        for i, alpha in enumerate(b2.simple_roots):
            assert b2.coroot_pairing(weight, alpha) == weight.coords[i]

    def test_in_root_lattice(self, a1):
        """Test root lattice membership for sl(2)"""
        assert a1.in_root_lattice(Weight.of(-4))
        assert not a1.in_root_lattice(Weight.of(1))

    def test_is_below(self, a2):
        """Test the dominance order"""
        assert a2.is_below(Weight.of(-1, -1), Weight.of(0, 0))
        assert not a2.is_below(Weight.of(0, 0), Weight.of(-1, -1))


class TestWeylGroup:
    """Tests for the Weyl group and the dot action"""

    def test_longest_element_sends_rho_to_minus_rho(self, any_rd):
        """Test that some Weyl element maps rho to -rho"""
        images = {any_rd.weyl_act(w, any_rd.rho) for w in any_rd.weyl_group}
        assert -any_rd.rho in images

    def test_dot_orbit_of_zero_in_a1(self, a1):
        """Test that the dot orbit of 0 is {0, -2}"""
        assert {mu for _, mu in dot_orbit(a1, Weight.of(0))} == {Weight.of(0), Weight.of(-2)}

    def test_dot_orbit_of_minus_rho_is_a_point(self, any_rd):
        """Test that -rho is fixed by the dot action"""
        assert [mu for _, mu in dot_orbit(any_rd, -any_rd.rho)] == [-any_rd.rho]

    def test_regular_orbit_size(self, b2):
        """Test that a regular integral weight has a full dot orbit"""
        assert len(dot_orbit(b2, Weight.of(0, 0))) == 8


class TestParabolic:
    """Tests for parabolic data"""

    def test_borel_rho_u_is_rho(self, any_rd):
        """Test that rho(u) = rho for the Borel"""
        pd = parabolic(any_rd, ())
        assert pd.is_borel
        assert pd.rho_u == any_rd.rho
        assert pd.rho_ubar == -any_rd.rho

    def test_a2_levi_split(self, a2_levi1, a2):
        """Test that the Levi of the first simple root keeps one positive root"""
        assert a2_levi1.levi_roots == (a2.simple_roots[0],)
        assert a2_levi1.dim_u == 2
        assert a2_levi1.is_nilradical_closed()

    def test_whole_algebra_has_trivial_nilradical(self, a2):
        """Test that the Levi of all simple roots has u = 0"""
        pd = parabolic(a2, (0, 1))
        assert pd.dim_u == 0
        assert pd.rho_u == Weight.zero(2)

    def test_invalid_levi(self, a1):
        """Test that an out-of-range simple root is rejected"""
        with pytest.raises(ValueError):
            parabolic(a1, (1,))

    def test_parabolic_height(self, a2_levi1, a2):
        """Test that the parabolic height ignores Levi coordinates"""
        nu = a2.from_root_coords((3, 2))
        assert parabolic_height(a2_levi1, nu) == 2


class TestWindow:
    """Tests for window enumeration"""

    def test_window_size(self, any_rd):
        """Test that a radius r box has (2r + 1)^rank weights"""
        weights = window_weights(any_rd, Weight.zero(any_rd.rank), 2)
        assert len(weights) == 5**any_rd.rank

    def test_window_is_sorted(self, a1):
        """Test that weights come in root-coordinate order"""
        assert window_weights(a1, Weight.of(0), 1) == [Weight.of(-2), Weight.of(0), Weight.of(2)]

    def test_negative_radius(self, a1):
        """Test that a negative radius is rejected"""
        with pytest.raises(ValueError):
            window_weights(a1, Weight.of(0), -1)


root_coords = st.tuples(st.integers(-6, 6), st.integers(-6, 6))


class TestHeightProperties:
    """Property tests for the parabolic height"""

    @given(root_coords, root_coords, st.sampled_from([(), (0,), (1,)]))
    @settings(max_examples=50, deadline=None)
    def test_additive(self, first, second, levi):
        """Test that ht_p is additive on the root lattice"""
        rd = build_root_system("B2")
        pd = parabolic(rd, levi)
        a, b = rd.from_root_coords(first), rd.from_root_coords(second)
        assert parabolic_height(pd, a + b) == parabolic_height(pd, a) + parabolic_height(pd, b)

    @given(root_coords)
    @settings(max_examples=30, deadline=None)
    def test_borel_height_is_root_height(self, coords):
        """Test that for the Borel the height is the sum of all root coordinates"""
        rd = build_root_system("A2")
        assert parabolic_height(parabolic(rd, ()), rd.from_root_coords(coords)) == sum(coords)
