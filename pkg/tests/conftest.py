import pytest

from cech2.complexes import standard_space
from cech2.crossed_modules import aut_two_group, discrete_two_group, shift_two_group
from cech2.fixtures import z2z4_crossed_module, z2z4z2_group_ses
from cech2.groups import cyclic_group, symmetric_group, trivial_group


@pytest.fixture(scope="session")
def z1():
    return trivial_group()


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def z3():
    return cyclic_group(3)


@pytest.fixture(scope="session")
def z4():
    return cyclic_group(4)


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def z2z4():
    return z2z4_crossed_module()


@pytest.fixture(scope="session")
def z2z4z2():
    return z2z4z2_group_ses()


@pytest.fixture(scope="session")
def circle3():
    return standard_space("circle3")


@pytest.fixture(scope="session")
def sphere2():
    return standard_space("sphere2")


@pytest.fixture(scope="session")
def library_xmods(z2, z3, z4, s3):
    """Every named coefficient object the package ships."""
    return [
        discrete_two_group(z2),
        discrete_two_group(z4),
        discrete_two_group(s3),
        shift_two_group(z2),
        shift_two_group(z3),
        aut_two_group(z2),
        aut_two_group(z3),
        aut_two_group(s3),
        z2z4_crossed_module(),
    ]
