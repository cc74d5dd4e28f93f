import pytest

from schurrings import constructions as cons
from schurrings.groups import dihedral, quaternion8


@pytest.fixture(scope="session")
def d8():
    return dihedral(8)


@pytest.fixture(scope="session")
def q8():
    return quaternion8()


@pytest.fixture(scope="session")
def d8zp5():
    return cons.d8zp_sring(5)
