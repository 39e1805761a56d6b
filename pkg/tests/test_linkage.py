import random

import pytest

from charp.frobenius import bracket_power
from charp.linkage import (
    NotUnmixed,
    corner_power,
    direct_link,
    link_delta,
    m_primary_link_lift,
    tilde_approx,
)
from charp.rings import Ideal, RingContext, find_parameter_ideal, is_unmixed
from charp.singularity import test_ideal as compute_test_ideal


@pytest.fixture
def fermat2():
    return RingContext(2, ["x", "y", "z"], "x^3+y^3+z^3")


@pytest.fixture
def poly3():
    return RingContext(3, ["x", "y", "z"])


class TestDirectLink:
    def test_worked_example_link(self, fermat2):
        I = fermat2.ideal("x^2", "y^2", "z^2")
        a = fermat2.ideal("x^2", "y^2")
        J, used = direct_link(I, a, random.Random(0))
        assert used == a
        assert J == fermat2.ideal("x^2", "y^2", "z")
        # double link comes back
        assert a.colon(J) == I

    def test_random_links_verify(self, fermat2):
        rng = random.Random(5)
        I = fermat2.maximal_ideal()
        for _ in range(3):
            J, a = direct_link(I, rng=rng)
            assert a.colon(J) == I
            assert I.contains_ideal(a)
            assert not J.is_unit()

    def test_rejects_mixed_ideal(self, poly3):
        mixed = poly3.ideal("x").intersect(poly3.ideal("x^2", "y"))
        with pytest.raises(NotUnmixed):
            direct_link(mixed, rng=random.Random(1))

    def test_height_one_link(self, fermat2):
        I = fermat2.ideal("x")
        J, a = direct_link(I, rng=random.Random(2), check_unmixed=False)
        assert a.colon(J) == I


class TestLinkDelta:
    def test_identities_on_nested_parameters(self, fermat2):
        rng = random.Random(7)
        m = fermat2.maximal_ideal()
        for _ in range(4):
            b = find_parameter_ideal(m, rng)
            a = find_parameter_ideal(b, rng)
            delta = link_delta(a, b)
            assert a + Ideal(fermat2, [delta]) == a.colon(b)
            assert a.colon(Ideal(fermat2, [delta])) == b

    def test_equal_ideals_give_unit_delta(self, fermat2):
        a = fermat2.ideal("x", "y")
        assert link_delta(a, a) == fermat2.poly.one()

    def test_requires_nesting(self, fermat2):
        with pytest.raises(Exception):
            link_delta(fermat2.ideal("x"), fermat2.ideal("y"))


class TestCornerPower:
    def test_worked_example_corner(self, fermat2):
        I = fermat2.ideal("x^2", "y^2", "z^2")
        result = corner_power(I, 1, samples=3, rng=random.Random(3))
        expected = fermat2.ideal("x^4", "y^4").colon(fermat2.ideal("z^2"))
        assert result.value == expected
        assert result.q == 2
        assert result.value.contains(fermat2.parse("x*y*z"))
        assert not I.contains(fermat2.parse("x*y*z"))

    def test_well_defined_across_samples(self, fermat2):
        # 3 independent parameter choices must agree (raises otherwise)
        I = fermat2.maximal_ideal()
        for e in (1, 2):
            corner_power(I, e, samples=3, rng=random.Random(11))

    def test_parameter_corners_are_brackets(self, fermat2):
        rng = random.Random(13)
        a = find_parameter_ideal(fermat2.maximal_ideal(), rng)
        for e in (1, 2):
            assert corner_power(a, e, samples=2, rng=rng).value == \
                bracket_power(a, e)

    def test_contains_bracket(self, fermat2):
        I = fermat2.ideal("x^2", "y^2", "z^2")
        for e in (1, 2):
            value = corner_power(I, e, samples=1, rng=random.Random(17)).value
            assert value.contains_ideal(bracket_power(I, e))

    def test_e_zero_recovers_unmixed_ideal(self, fermat2):
        I = fermat2.ideal("x^2", "y^2", "z^2")
        assert corner_power(I, 0, samples=2, rng=random.Random(19)).value == I

    def test_corner_above_tau_contains_tau(self, fermat2):
        # ideals containing tau keep their corners above tau
        tau = compute_test_ideal(fermat2).tau
        I = fermat2.maximal_ideal()
        for e in (1, 2):
            value = corner_power(I, e, samples=1, rng=random.Random(23)).value
            assert value.contains_ideal(tau)


class TestTildeApprox:
    def test_maximal_ideal_class(self, fermat2):
        m = fermat2.maximal_ideal()
        total, record = tilde_approx(m, depth=2, samples_per_node=3,
                                     rng=random.Random(29))
        assert total == m
        assert record.flags["m_primary"]
        assert record.flags["contained_in_root"]
        assert all(m.contains_ideal(node) for node in record.nodes)

    def test_record_json_shape(self, fermat2):
        _, record = tilde_approx(fermat2.maximal_ideal(), depth=1,
                                 samples_per_node=2, rng=random.Random(31))
        data = record.to_json()
        assert set(data) == {"nodes", "edges", "flags"}
        for edge in data["edges"]:
            assert edge["verified"]

    def test_sum_contains_root(self, fermat2):
        I = fermat2.ideal("x^2", "y^2", "z^2")
        total, record = tilde_approx(I, depth=2, samples_per_node=2,
                                     rng=random.Random(37))
        assert total.contains_ideal(I)


class TestMPrimaryLinkLift:
    def test_lift_contains_linked_ideal(self, fermat2):
        rng = random.Random(41)
        from charp.rings import unmixed_part
        I = unmixed_part(fermat2.ideal("x"), rng)
        _, a = direct_link(I, rng=rng, check_unmixed=False)
        J = a.colon(I)
        for t in (1, 2):
            Jt = m_primary_link_lift(I, [a], t, rng)
            assert Jt.contains_ideal(J)
            assert Jt.is_m_primary()

    def test_m_primary_input_passes_through(self, fermat2):
        rng = random.Random(43)
        I = fermat2.ideal("x^2", "y^2", "z^2")
        a = find_parameter_ideal(I, rng)
        Jt = m_primary_link_lift(I, [a], 2, rng)
        assert Jt == a.colon(I)
