import pytest
from hypothesis import settings

from surfbraid.freewords import FreeWord

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@pytest.fixture
def word():
    def make(text: str) -> FreeWord:
        from surfbraid.freewords import parse_word
        return parse_word(text)
    return make
