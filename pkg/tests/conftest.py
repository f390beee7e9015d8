import pytest
from hypothesis import settings

from cricket_pitch.core import parse_board, parse_position

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@pytest.fixture
def P():
    return parse_position


@pytest.fixture
def B():
    return parse_board
