import pytest

from k3cone.lattice import catalog
from k3cone.rrk3 import K3Context
from k3cone import tables


@pytest.fixture(scope="session")
def lattices():
    return {name: catalog(name) for name in tables.FAMILY_NAMES}


@pytest.fixture(scope="session")
def records():
    return {name: tables.family(name) for name in tables.FAMILY_NAMES}


@pytest.fixture(scope="session")
def contexts():
    # built once: the V14 Hilbert basis dominates the cost
    return {name: K3Context.build(name) for name in tables.FAMILY_NAMES}
