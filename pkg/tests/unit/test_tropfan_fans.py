"""
Tests for src/tropfan/fans.py
"""

import logging
from fractions import Fraction

import pytest

from src.exactgeom import Fan, euler_characteristic_ok
from src.exceptions import FanStructureException
from src.tropfan import (
    TropicalPolynomial,
    build_F,
    build_F_cross_checked,
    distinct_nontrivial,
    fan_of_polynomials,
    linearity_witness,
    trop_phi2,
    tropical_plucker_family,
)

MIN_0_X = TropicalPolynomial(nvars=1, exponents=((0,), (1,)))


class TestTropicalPluckerFamily:
    def test_gr24(self):
        family = tropical_plucker_family(2, 4)
        assert set(family) == {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)}
        assert family[(2, 4)].exponents == ((0,), (1,))
        assert family[(3, 4)].exponents == ((1,),)

    @pytest.mark.parametrize(
        "x,expected",
        [
            (3, (0, 0, 0, 0, 0, 3)),
            (-2, (0, 0, 0, 0, -2, -2)),
            (0, (0, 0, 0, 0, 0, 0)),
        ],
    )
    def test_trop_phi2_gr24(self, x, expected):
        """Trop P on Gr(2,4) is (0, 0, 0, 0, min(0, x), x)"""
        image = trop_phi2(2, 4, [x])
        assert tuple(image[K] for K in sorted(image)) == expected

    def test_trop_phi2_is_exact(self):
        image = trop_phi2(2, 4, [Fraction(-1, 3)])
        assert image[(2, 4)] == Fraction(-1, 3)


class TestDistinctNontrivial:
    def test_monomials_and_translates_dropped(self):
        shifted = TropicalPolynomial(nvars=1, exponents=((2,), (3,)))
        monomial = TropicalPolynomial(nvars=1, exponents=((4,),))
        assert distinct_nontrivial([MIN_0_X, monomial, shifted]) == [MIN_0_X]

    def test_empty_family_gives_whole_space(self):
        monomial = TropicalPolynomial(nvars=2, exponents=((1, 1),))
        assert fan_of_polynomials([monomial], 2) == Fan.whole_space(2)


class TestBuildF:
    """Test F_{k,n} for the small cases"""

    def test_f_2_4(self):
        fan = build_F(2, 4)
        assert fan.ambient_dim == 1
        assert fan.rays == ((-1,), (1,))

    def test_f_2_5(self, fan_2_5):
        """Five cones around the pentagon"""
        assert fan_2_5.ambient_dim == 2
        assert len(fan_2_5.maximal_cones) == 5
        assert fan_2_5.f_vector() == (5, 5)
        assert fan_2_5.verify_complete(samples=50)

    def test_f_2_6(self):
        """The normal fan of the three-dimensional associahedron"""
        fan = build_F(2, 6)
        assert fan.f_vector() == (9, 21, 14)
        assert fan.facet_census() == {3: 14}
        assert euler_characteristic_ok(fan.f_vector(), 3)

    def test_routes_agree(self, fan_2_5):
        assert build_F(2, 5, "minkowski").same_cones(fan_2_5)
        assert build_F_cross_checked(2, 5).same_cones(fan_2_5)

    def test_parallel_agrees(self, fan_2_5):
        assert build_F(2, 5, threads=2) == fan_2_5

    def test_duality(self):
        """F_{2,5} and F_{3,5} live in the same dimension with the same counts"""
        assert build_F(3, 5).f_vector() == (5, 5)

    @pytest.mark.parametrize("k,n", [(1, 4), (3, 4), (1, 2)])
    def test_degenerate(self, k, n, caplog):
        """A zero-dimensional space gives the trivial fan with a warning"""
        with caplog.at_level(logging.WARNING, logger="src.tropfan.fans"):
            fan = build_F(k, n)

        assert fan.is_trivial
        assert fan.to_document().ambient_dim == 0
        assert "zero-dimensional" in caplog.text

    def test_linearity_witness(self, fan_2_5):
        family = list(tropical_plucker_family(2, 5).values())
        assert linearity_witness(fan_2_5, family, samples=3, seed=1)


class TestLinearityWitness:
    def test_fails_on_too_coarse_fan(self):
        """min(0, x) is not linear on the whole line"""
        with pytest.raises(FanStructureException) as exc_info:
            linearity_witness(Fan.whole_space(1), [MIN_0_X])

        assert "min(0, x1)" in str(exc_info.value)


def _random_full_dimensional(nvars, rng) -> TropicalPolynomial:
    """Exponent set containing a scaled simplex plus a few random points"""
    exponents = [(0,) * nvars]
    for i in range(nvars):
        e = [0] * nvars
        e[i] = rng.randint(1, 3)
        exponents.append(tuple(e))
    for _ in range(rng.randint(0, 3)):
        exponents.append(tuple(rng.randint(0, 3) for _ in range(nvars)))
    return TropicalPolynomial(nvars=nvars, exponents=tuple(exponents))


class TestRoutesOnRandomFamilies:
    """Refinement of linearity fans equals the normal fan of the Minkowski sum"""

    @pytest.mark.parametrize("nvars,count,trials", [(2, 3, 10), (3, 2, 4)])
    def test_routes_agree(self, nvars, count, trials, rng):
        for _ in range(trials):
            family = [_random_full_dimensional(nvars, rng) for _ in range(count)]
            direct = fan_of_polynomials(family, nvars, "direct")
            via_sum = fan_of_polynomials(family, nvars, "minkowski")
            assert direct.same_cones(via_sum)


class TestGr25TropicalMaps:
    """Trop P_K on Gr(2,5) with x1 = region (1,4) and x2 = region (1,5)"""

    EXPECTED = {
        (1, 2): "0",
        (1, 3): "0",
        (1, 4): "0",
        (1, 5): "0",
        (2, 3): "0",
        (2, 4): "min(0, x1)",
        (2, 5): "min(0, x1, x1+x2)",
        (3, 4): "x1",
        (3, 5): "min(x1, x1+x2)",
        (4, 5): "x1+x2",
    }

    def test_rendered_family(self):
        family = tropical_plucker_family(2, 5)
        assert {K: t.render() for K, t in family.items()} == self.EXPECTED

    @pytest.mark.parametrize(
        "x,expected",
        [
            ((-1, 2), (0, 0, 0, 0, 0, -1, -1, -1, -1, 1)),
            ((2, -3), (0, 0, 0, 0, 0, 0, -1, 2, -1, -1)),
            ((1, 1), (0, 0, 0, 0, 0, 0, 0, 1, 1, 2)),
        ],
    )
    def test_trop_phi2(self, x, expected):
        image = trop_phi2(2, 5, list(x))
        assert tuple(image[K] for K in sorted(image)) == expected
