import pytest

from padelab.core.floats import DEFAULT_PRECISION, set_precision


@pytest.fixture(autouse=True)
def _reset_precision():
    """Commands and contexts may move the working precision; pin it per test."""
    set_precision(DEFAULT_PRECISION)
    yield
    set_precision(DEFAULT_PRECISION)
