import pytest

from agraded.core import DEFAULT_PRIME
from agraded.examples_lib import build_example


@pytest.fixture(scope="session")
def hyper():
    return build_example("hyper-y3", DEFAULT_PRIME)


@pytest.fixture(scope="session")
def s5():
    return build_example("paper-s5", DEFAULT_PRIME)


@pytest.fixture(scope="session")
def ci3():
    return build_example("ci-3var", DEFAULT_PRIME)


@pytest.fixture(scope="session")
def ord2():
    return build_example("generic-2x2-ord2", DEFAULT_PRIME)


@pytest.fixture(scope="session")
def ord3():
    return build_example("generic-2x2-ord3", DEFAULT_PRIME)
