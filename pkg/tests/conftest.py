import pytest

import helpers


@pytest.fixture(scope="session")
def tri():
    return helpers.tri_pair()


@pytest.fixture(scope="session")
def infeas():
    return helpers.infeas_pair()


@pytest.fixture(scope="session")
def chain2():
    return helpers.chain2()
