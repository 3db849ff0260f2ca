import pytest

from apaltools.loaders.corpus.load_corpus import load_model_m1, load_model_m2


@pytest.fixture(scope="session")
def m1():
    return load_model_m1()


@pytest.fixture(scope="session")
def m2():
    return load_model_m2()
