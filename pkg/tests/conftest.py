import pytest

from homgroups import fixture

STOCK_FIXTURES = ("z3a", "z6a", "d3a", "z5a")


@pytest.fixture(scope="session")
def z3a():
    return fixture("z3a")


@pytest.fixture(scope="session")
def z6a():
    return fixture("z6a")


@pytest.fixture(scope="session")
def z5a():
    return fixture("z5a")


@pytest.fixture(scope="session")
def d3a():
    return fixture("d3a")


@pytest.fixture(params=STOCK_FIXTURES, scope="session")
def stock_fixture(request):
    return fixture(request.param)
