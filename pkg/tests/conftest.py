import pytest

from stpd import Text
from textgen import T0


@pytest.fixture
def t0() -> Text:
    return Text.from_str(T0)
