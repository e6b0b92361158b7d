import pytest

from copwin.families import complete, cycle, hoffman_singleton, incidence, path, petersen


@pytest.fixture(scope="session")
def petersen_graph():
    return petersen()


@pytest.fixture(scope="session")
def heawood_graph():
    return incidence(2)


@pytest.fixture(scope="session")
def hoffman_singleton_graph():
    return hoffman_singleton()
