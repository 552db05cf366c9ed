import pytest

from pgsem.demo import bundled_lexicon
from pgsem.pregroup import TypePoset, TypeRegistry, trivial_poset


@pytest.fixture(scope="session")
def registry():
    return TypeRegistry(["n", "s", "j", "sigma"])


@pytest.fixture(scope="session")
def poset(registry):
    return trivial_poset(registry)


@pytest.fixture(scope="session")
def paper_lexicon():
    return bundled_lexicon("paper")


@pytest.fixture(scope="session")
def bool_lexicon():
    return bundled_lexicon("paper_bool")
