import pytest

from helpers import corpus_entries


@pytest.fixture(scope="session")
def corpus():
    return {e.name: e for e in corpus_entries()}
