import pytest

from homoper import examples


@pytest.fixture(scope="session")
def corpus():
    return examples.corpus()


@pytest.fixture(scope="session")
def coh_corpus():
    return examples.cohomology_corpus()
