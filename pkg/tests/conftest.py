import pytest

from lrings import FiniteLattice, make_lattice
from lrings import fixtures


@pytest.fixture(scope="session")
def z4_setup():
    return fixtures.z4_chain3()


@pytest.fixture(scope="session")
def z6_setup():
    return fixtures.z6_chain2()


@pytest.fixture(scope="session")
def z12_setup():
    return fixtures.z12_chain3()


@pytest.fixture(scope="session")
def chain3():
    return FiniteLattice.chain(["b", "m", "t"], name="chain3")


@pytest.fixture(scope="session")
def m3():
    return make_lattice("m3")


@pytest.fixture(scope="session")
def square():
    return make_lattice("square")
