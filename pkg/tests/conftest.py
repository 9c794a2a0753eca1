import pytest

from corpus import golden_corpus


@pytest.fixture
def corpus():
    return golden_corpus()
