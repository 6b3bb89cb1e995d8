import pytest

from nakayama import algebra_from_kupisch, validate


@pytest.fixture
def lambda1():
    # cyclic, finite global dimension; relations x2x3, x3x4, x5x1x2
    return validate(5, [(2, 2), (3, 2), (5, 3)])


@pytest.fixture
def lambda2():
    # cyclic, infinite global dimension, resolution quiver weight 2
    return validate(5, [(1, 3), (2, 4), (4, 3), (5, 3)])


@pytest.fixture
def lambda3():
    # rad^2 = 0 on the 4-cycle; self-injective
    return algebra_from_kupisch((2, 2, 2, 2))


@pytest.fixture
def semisimple2():
    return validate(2, [(1, 1), (2, 1)])
