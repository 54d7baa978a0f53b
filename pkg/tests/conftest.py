from fractions import Fraction

import pytest

from torusrep import cartan


def frac(x) -> Fraction:
    return Fraction(x)


@pytest.fixture
def a2():
    return cartan.validate_gcm([[2, -1], [-1, 2]])


@pytest.fixture
def a3():
    return cartan.validate_gcm(cartan.finite_a_matrix(3))


@pytest.fixture
def affine_a1():
    return cartan.validate_gcm([[2, -2], [-2, 2]])


@pytest.fixture
def affine_a2():
    return cartan.validate_gcm([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
