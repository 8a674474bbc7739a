import pytest

from kummergaps.curve import KummerCurve


@pytest.fixture
def c54():
    """y^5 = f(x), deg f = 4: the Hermitian curve over F_16, genus 6."""
    return KummerCurve(5, 4)


@pytest.fixture
def c32():
    return KummerCurve(3, 2)
