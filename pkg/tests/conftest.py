import pytest

from mnl import algebra, birep, fock, loops


@pytest.fixture(scope="session")
def m7():
    return algebra.catalog_algebra("m7")


@pytest.fixture(scope="session")
def su2():
    return algebra.catalog_algebra("su2")


@pytest.fixture(scope="session")
def su2_doubled(su2):
    return su2.scaled(2)


@pytest.fixture(scope="session")
def oct_gen():
    return birep.octonion_lr_generators()


@pytest.fixture(scope="session")
def quat_gen():
    return birep.quaternion_lr_generators()


@pytest.fixture(scope="session")
def oct_loop():
    return loops.octonion_unit_loop()


@pytest.fixture(scope="session")
def quat_fields():
    return fock.build_fields(4, 1)


@pytest.fixture(scope="session")
def oct_fields():
    return fock.build_fields(8, 1)
