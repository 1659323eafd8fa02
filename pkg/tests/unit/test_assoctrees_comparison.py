"""
Tests for src/assoctrees/comparison.py
"""

import pytest

from src.assoctrees import (
    SPComparison,
    check_F2n_equals_SP,
    sp_comparison,
    theta_fan_equivalent,
)
from src.exceptions import TreeException


class TestStanleyPitmanComparison:
    """F_{2,n} against the tree cones"""

    @pytest.mark.parametrize("n,cones", [(4, 2), (5, 5), (6, 14)])
    def test_equal(self, n, cones):
        assert sp_comparison(n) == SPComparison(n=n, f2n_cones=cones, sp_cones=cones, equal=True)

    def test_minkowski_route(self):
        assert check_F2n_equals_SP(5, route="minkowski")

    @pytest.mark.slow
    def test_n_7(self):
        assert sp_comparison(7).sp_cones == 42
        assert check_F2n_equals_SP(7)

    @pytest.mark.slow
    def test_n_8(self):
        assert sp_comparison(8) == SPComparison(n=8, f2n_cones=132, sp_cones=132, equal=True)


class TestThetaFans:
    """Prefix-sum minima and theta_ij share their linearity domains"""

    @pytest.mark.parametrize("i,j,n", [(0, 2, 5), (1, 2, 5), (1, 3, 6), (2, 3, 6), (2, 2, 6)])
    def test_equivalent(self, i, j, n):
        assert theta_fan_equivalent(i, j, n)

    @pytest.mark.parametrize("i,j,n", [(2, 1, 6), (0, 4, 6), (-1, 1, 5)])
    def test_out_of_range(self, i, j, n):
        with pytest.raises(TreeException):
            theta_fan_equivalent(i, j, n)
