import pytest

from sl2shares.rewrite import Engine


@pytest.fixture(scope="session")
def engine():
    return Engine()
