from fractions import Fraction as F

import pytest

from nkdeform import ratlinalg
from nkdeform.errors import SpectrumError


def test_inverse_round_trip():
    m = [[F(2), F(1)], [F(1), F(1)]]
    inv = ratlinalg.inverse(m)
    assert ratlinalg.mat_mul(m, inv) == ratlinalg.identity(2)
    with pytest.raises(ZeroDivisionError):
        ratlinalg.inverse([[1, 2], [2, 4]])


def test_rank_and_nullspace():
    m = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert ratlinalg.rank(m) == 2
    for v in ratlinalg.nullspace(m):
        assert ratlinalg.mat_vec(m, v) == [0, 0, 0]
    assert len(ratlinalg.nullspace(m)) == 1


def test_solve_overdetermined():
    m = [[1, 0], [0, 1], [1, 1]]
    assert ratlinalg.solve(m, [2, 3, 5]) == [2, 3]
    with pytest.raises(ZeroDivisionError):
        ratlinalg.solve(m, [2, 3, 6])


def test_charpoly_and_rational_roots():
    m = [[2, 0, 0], [0, 2, 0], [0, 0, -1]]
    coeffs = ratlinalg.charpoly(m)
    roots = ratlinalg.rational_roots(coeffs)
    assert roots == {F(2): 2, F(-1): 1}
    # fractional eigenvalues
    m = [[F(1, 2), 0], [1, F(-3, 2)]]
    assert ratlinalg.rational_roots(ratlinalg.charpoly(m)) == {
        F(1, 2): 1,
        F(-3, 2): 1,
    }
    # zero eigenvalues are peeled first
    m = [[0, 0], [0, 5]]
    assert ratlinalg.rational_roots(ratlinalg.charpoly(m)) == {F(0): 1, F(5): 1}


def test_rational_roots_rejects_irrational_spectrum():
    with pytest.raises(SpectrumError):
        ratlinalg.rational_roots([F(1), F(0), F(-2)])  # t^2 - 2


def test_leading_principal_minors():
    m = [[-1, F(-3, 2)], [F(-3, 2), -3]]
    assert ratlinalg.leading_principal_minors(m) == [F(-1), F(3, 4)]


def test_det():
    assert ratlinalg.det([[1, 2], [3, 4]]) == -2
    assert ratlinalg.det([[1, 2], [2, 4]]) == 0
