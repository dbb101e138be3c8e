import pytest

from reslat.fixtures import FIXTURES
from reslat.harness import standard_corpus, verify_corpus


@pytest.fixture(scope="session")
def godel3():
    return FIXTURES["godel3"]()


@pytest.fixture(scope="session")
def lukasiewicz3():
    return FIXTURES["lukasiewicz3"]()


@pytest.fixture(scope="session")
def bool4():
    return FIXTURES["bool4"]()


@pytest.fixture(scope="session")
def ex5():
    return FIXTURES["diamondtop5"]()


@pytest.fixture(scope="session")
def corpus5():
    return standard_corpus(size_max=5)


# The one full harness run of the suite; everything that needs corpus-wide
# verdicts shares it.
@pytest.fixture(scope="session")
def full_report(corpus5):
    return verify_corpus(corpus5)
