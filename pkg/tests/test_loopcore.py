"""Tests for loopcore module."""

import numpy as np
import pytest

from src.exceptions import (
    LoopError,
    NotLatin,
    NotPowerAssociative,
    NoUnit,
    TwoSidedInverseMissing,
    UnitMismatch,
)
from src.loopcore import (
    Autotopism,
    Loop,
    Side,
    are_isomorphic,
    bol_autotopism,
    canonical_form,
    canonical_key,
    canonical_labeling,
    center,
    check_identity,
    commutant,
    direct_product,
    element_order,
    exponent,
    full_nucleus,
    has_central_squares,
    is_autotopism,
    is_normal_subloop,
    is_power_associative,
    is_right_bol,
    left_multiplication_group,
    nuclei,
    nucleus,
    right_multiplication_group,
    right_power_period,
    small_groups,
    squares_are_trivial,
    subloop_generated,
)


class TestLoopConstruction:
    """Tests for Loop validation and unit detection."""

    def test_detects_unit(self) -> None:
        """Test that the identity is found when it is not element 0."""
        loop = Loop.from_table([[1, 0], [0, 1]])
        assert loop.unit == 1

    def test_not_latin(self) -> None:
        """Test that a repeated row value is rejected."""
        with pytest.raises(NotLatin):
            Loop.from_table([[0, 1], [1, 1]])

    def test_no_unit(self) -> None:
        """x*y = -x-y mod 3 is a quasigroup without identity."""
        with pytest.raises(NoUnit):
            Loop.from_table([[0, 2, 1], [2, 1, 0], [1, 0, 2]])

    def test_unit_mismatch(self, c3: Loop) -> None:
        """Test that a wrong unit hint is rejected."""
        with pytest.raises(UnitMismatch):
            Loop(c3.table, 1)

    def test_non_square(self) -> None:
        """Test that a non-square table is rejected."""
        with pytest.raises(LoopError):
            Loop.from_table([[0, 1]])

    def test_table_is_read_only(self, c3: Loop) -> None:
        """Test that the stored table cannot be modified."""
        with pytest.raises(ValueError):
            c3.table[0, 0] = 1

    def test_divisions(self, non_bol: Loop) -> None:
        """1\\0 = 2 and 0/1 = 4 in the order-5 fixture."""
        assert non_bol.ldiv(1, 0) == 2
        assert non_bol.rdiv(0, 1) == 4
        assert not non_bol.has_inverses()
        with pytest.raises(TwoSidedInverseMissing):
            non_bol.inverses

    def test_inverse_is_per_element(self, non_bol: Loop) -> None:
        """Test that inverse(a) only fails for the element asked about."""
        assert non_bol.inverse(non_bol.unit) == non_bol.unit
        with pytest.raises(TwoSidedInverseMissing):
            non_bol.inverse(1)

    def test_group_inverses(self, s3: Loop) -> None:
        """Test that a·a⁻¹ is the unit for every element of a group."""
        for a in s3.elements():
            assert s3.mul(a, s3.inverse(a)) == s3.unit
            assert s3.inverse(a) == int(s3.inverses[a])

    def test_relabel_is_isomorphic(self, c4: Loop) -> None:
        """Test that relabeling yields an isomorphic loop with the moved unit."""
        relabeled = c4.relabel([2, 0, 3, 1])
        assert relabeled.unit == 2
        assert are_isomorphic(c4, relabeled) is not None

    def test_equality_ignores_name(self, c3: Loop) -> None:
        """Test that names do not take part in equality or hashing."""
        assert c3.with_name("other") == c3
        assert hash(c3.with_name(None)) == hash(c3)


class TestIdentities:
    """Tests for check_identity."""

    def test_groups_satisfy_group_identities(self) -> None:
        """Test that every small group satisfies the associative-law consequences."""
        for group in small_groups():
            for name in (
                "right_bol",
                "left_bol",
                "moufang",
                "associative",
                "rcc",
                "left_inverse_cancel",
                "bol_inverse_antihom",
            ):
                assert check_identity(group, name).holds, (group.name, name)

    def test_commutativity(self, c4: Loop, s3: Loop) -> None:
        """Test that a failing identity reports a witness."""
        assert check_identity(c4, "commutative")
        result = check_identity(s3, "commutative")
        assert not result
        assert result.witness is not None

    def test_aip_holds_exactly_for_abelian_groups(self, c4: Loop, s3: Loop, q8: Loop) -> None:
        """Test that AIP separates abelian from non-abelian groups."""
        assert check_identity(c4, "aip").holds
        assert not check_identity(s3, "aip").holds
        assert not check_identity(q8, "aip").holds

    def test_inverse_identities_fail_without_inverses(self, non_bol: Loop) -> None:
        """Test that inverse identities fail with a reason on the order-5 fixture."""
        for name in ("aip", "left_inverse_cancel", "bol_inverse_antihom"):
            result = check_identity(non_bol, name)
            assert not result.holds
            assert "inverse" in result.reason

    def test_right_inverse_is_left_inverse_cancel(self, q8: Loop) -> None:
        """Test that right_inverse is a synonym of left_inverse_cancel."""
        assert check_identity(q8, "right_inverse").holds == check_identity(q8, "left_inverse_cancel").holds

    def test_non_bol_fixture(self, non_bol: Loop) -> None:
        """Test that the order-5 fixture is not right Bol."""
        assert not is_right_bol(non_bol)

    def test_squares_commute_vs_central_squares(self, s3: Loop, d4: Loop) -> None:
        """Test that squares commute in D4 but not in S3."""
        assert not check_identity(s3, "squares_commute").holds
        assert check_identity(d4, "squares_commute").holds

    def test_squares_commute_iff_inverse_conjugation(self) -> None:
        """Test that ab² = b²a and ab·a⁻¹ = a⁻¹b·a agree on right Bol groups."""
        for group in small_groups():
            squares = check_identity(group, "squares_commute").holds
            assert squares == check_identity(group, "inverse_conjugation").holds, group.name

    def test_unknown_identity(self, c2: Loop) -> None:
        """Test that an unknown identity name raises ValueError."""
        with pytest.raises(ValueError):
            check_identity(c2, "flexible-ish")

    @pytest.mark.slow
    def test_enumerated_loops(self, bol8: tuple[Loop, ...]) -> None:
        """Test the identities every order-8 right Bol loop satisfies."""
        for loop in bol8:
            for name in ("right_bol", "rcc", "left_inverse_cancel", "bol_inverse_antihom"):
                assert check_identity(loop, name).holds, (loop.name, name)
            squares = check_identity(loop, "squares_commute").holds
            assert squares == check_identity(loop, "inverse_conjugation").holds, loop.name


class TestStructure:
    """Tests for orders, nuclei and center."""

    def test_element_orders(self, c4: Loop, s3: Loop, q8: Loop) -> None:
        """Test element orders and exponents of small groups."""
        assert element_order(c4, 1) == 4
        assert exponent(c4) == 4
        assert exponent(s3) == 6
        assert exponent(q8) == 4

    def test_power_associativity(self, non_bol: Loop) -> None:
        """1·1 = 2 and 1·2 = 0 but 2·1 = 3, so <1> is not associative."""
        assert not is_power_associative(non_bol)
        with pytest.raises(NotPowerAssociative):
            element_order(non_bol, 1)

    def test_group_nuclei_are_full(self, s3: Loop) -> None:
        """Test that every nucleus of a group is the whole group."""
        parts = nuclei(s3)
        assert all(len(parts[side]) == 6 for side in Side)
        assert nucleus(s3, "left") == frozenset(range(6))

    def test_centers(self, s3: Loop, q8: Loop, d4: Loop, c4: Loop) -> None:
        """Test the centers and commutant of small groups."""
        assert center(s3) == frozenset({s3.unit})
        assert len(center(q8)) == 2
        assert len(center(d4)) == 2
        assert commutant(c4) == frozenset(range(4))

    def test_central_squares(self, c4: Loop, s3: Loop, q8: Loop, d4: Loop) -> None:
        """Test that S3 is the only listed group without central squares."""
        assert has_central_squares(c4)
        assert not has_central_squares(s3)
        assert has_central_squares(q8)
        assert has_central_squares(d4)

    def test_normal_subloops(self, s3: Loop) -> None:
        """Test normality of the center, the rotations and a reflection subgroup."""
        assert is_normal_subloop(s3, center(s3))
        rotations = frozenset(a for a in s3.elements() if element_order(s3, a) in (1, 3))
        assert is_normal_subloop(s3, rotations)
        involution = next(a for a in s3.elements() if element_order(s3, a) == 2)
        assert not is_normal_subloop(s3, {s3.unit, involution})

    def test_subloop_generated(self, c4: Loop) -> None:
        """Test subloops generated by 2 and by 1 in C4."""
        assert subloop_generated(c4, [2]) == frozenset({0, 2})
        assert subloop_generated(c4, [1]) == frozenset(range(4))

    def test_right_power_period(self, c4: Loop, non_bol: Loop) -> None:
        """Test that right powers of 1 cycle back to the unit even without power associativity."""
        assert right_power_period(c4, 1) == 4
        assert right_power_period(non_bol, 1) == 5

    def test_squares_are_trivial(self, klein: Loop, c4: Loop) -> None:
        """Test that only exponent-two loops have trivial squares."""
        assert squares_are_trivial(klein)
        assert not squares_are_trivial(c4)

    def test_full_nucleus_of_group(self, q8: Loop) -> None:
        """Test that the nucleus of a group is the whole group."""
        assert full_nucleus(q8) == frozenset(q8.elements())

    def test_multiplication_groups_of_group(self, s3: Loop) -> None:
        """Test that both multiplication groups of a group are regular."""
        assert right_multiplication_group(s3).order() == 6
        assert left_multiplication_group(s3).order() == 6

    @pytest.mark.slow
    def test_enumerated_loops(self, bol8: tuple[Loop, ...]) -> None:
        """Test nuclei, exponent and RMlt size of the order-8 loops."""
        for loop in bol8:
            assert nucleus(loop, Side.MIDDLE) == nucleus(loop, Side.RIGHT), loop.name
            assert exponent(loop) in (2, 4), loop.name
            assert right_multiplication_group(loop).order() > 8, loop.name

    def test_middle_equals_right_nucleus(self, q8: Loop, s3: Loop) -> None:
        """Test that the middle and right nuclei agree on Bol loops."""
        for loop in (q8, s3):
            assert nucleus(loop, Side.MIDDLE) == nucleus(loop, Side.RIGHT)


class TestAutotopisms:
    """Tests for the Bol autotopism triple."""

    def test_identity_triple(self, q8: Loop, non_bol: Loop) -> None:
        """Test that the identity triple is an autotopism of any loop."""
        for loop in (q8, non_bol):
            assert is_autotopism(loop, Autotopism.identity(loop.order))

    def test_degree_mismatch(self, q8: Loop) -> None:
        """Test that a triple of the wrong degree is rejected."""
        with pytest.raises(ValueError):
            is_autotopism(q8, Autotopism.identity(4))

    def test_bol_loops_have_bol_autotopisms(self, q8: Loop, s3: Loop) -> None:
        """Test that every Bol triple of a group is an autotopism."""
        for loop in (q8, s3):
            assert all(is_autotopism(loop, bol_autotopism(loop, d)) for d in loop.elements())

    def test_non_bol_loop_fails_somewhere(self, non_bol: Loop) -> None:
        """Test that some Bol triple of the order-5 fixture is not an autotopism."""
        assert not all(
            is_autotopism(non_bol, bol_autotopism(non_bol, d)) for d in non_bol.elements()
        )

    @pytest.mark.slow
    def test_enumerated_loops(self, bol8: tuple[Loop, ...]) -> None:
        """Test that every Bol triple of the order-8 loops is an autotopism."""
        for loop in bol8:
            assert all(is_autotopism(loop, bol_autotopism(loop, d)) for d in loop.elements())


class TestIsomorphism:
    """Tests for canonical forms."""

    def test_canonical_form_is_invariant(self, q8: Loop) -> None:
        """Test that relabeling Q8 keeps its canonical form."""
        relabeled = q8.relabel([3, 1, 7, 0, 2, 6, 4, 5])
        assert canonical_form(relabeled) == canonical_form(q8)
        assert canonical_key(relabeled) == canonical_key(q8)

    def test_canonical_unit_is_zero(self, d4: Loop) -> None:
        """Test that the canonical form puts the unit first."""
        assert canonical_form(d4.relabel([5, 0, 1, 2, 3, 4, 6, 7])).unit == 0

    def test_canonical_labeling_mapping(self, d4: Loop) -> None:
        """Test that the returned mapping relabels the loop into its canonical form."""
        canonical, mapping = canonical_labeling(d4)
        assert d4.relabel(mapping) == canonical
        assert int(mapping[d4.unit]) == 0

    def test_non_isomorphic_groups(self, c4: Loop, klein: Loop, q8: Loop, d4: Loop) -> None:
        """Test that non-isomorphic groups of equal order are told apart."""
        assert are_isomorphic(c4, klein) is None
        assert are_isomorphic(q8, d4) is None

    def test_isomorphism_maps_tables(self, c2: Loop, klein: Loop) -> None:
        """Test that the returned mapping carries one table onto the other."""
        product = direct_product(c2, c2)
        mapping = are_isomorphic(product, klein)
        assert mapping is not None
        images = np.array(mapping.images)
        assert np.array_equal(images[product.table], klein.table[np.ix_(images, images)])

    def test_small_groups_pairwise_distinct(self) -> None:
        """Test that the listed small groups are pairwise non-isomorphic."""
        keys = {canonical_key(group) for group in small_groups()}
        assert len(keys) == len(small_groups())

    @pytest.mark.slow
    def test_random_relabelings_of_enumerated_loop(self, bol8: tuple[Loop, ...]) -> None:
        """Test that random relabelings of an order-8 loop share its canonical form."""
        rng = np.random.default_rng(8)
        loop = bol8[0]
        expected = canonical_form(loop)
        for _ in range(10):
            assert canonical_form(loop.relabel(rng.permutation(loop.order))) == expected
