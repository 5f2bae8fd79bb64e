import pytest

from nkdeform import clifford


@pytest.fixture(scope="session")
def rep():
    return clifford.build_rep()
