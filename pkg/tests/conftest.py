import pytest

from gendiv.problemfile import bundled_fixtures, load_problem


@pytest.fixture(scope="session")
def fixtures():
    return {name: load_problem(path) for name, path in bundled_fixtures().items()}


@pytest.fixture(scope="session")
def tacnode(fixtures):
    return fixtures["tacnode"]


@pytest.fixture(scope="session")
def elliptic(fixtures):
    return fixtures["elliptic"]


@pytest.fixture(scope="session")
def spectral3(fixtures):
    return fixtures["spectral3"]


@pytest.fixture(scope="session")
def identity(fixtures):
    return fixtures["identity"]
