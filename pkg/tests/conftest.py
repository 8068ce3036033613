import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from closurelab import GF, QQ, make_ring, polynomial_ring, toric_ring  # noqa: E402

R4_VECTORS = [[4, 0], [3, 1], [1, 3], [0, 4]]


def build_r2(K=QQ):
    return make_ring(K, "xyz", relations=[lambda x, y, z: x * y, lambda x, y, z: x * z], name="R2")


def build_r3(K=QQ):
    return make_ring(K, "abcd", relations=[lambda a, b, c, d: a * c, lambda a, b, c, d: a * d,
                                           lambda a, b, c, d: b * c, lambda a, b, c, d: b * d], name="R3")


def build_r4(K=QQ):
    return toric_ring(K, R4_VECTORS, "abcd", name="R4")


def build_r5(K=QQ):
    return make_ring(K, "xyz", relations=[lambda x, y, z: x ** 2 - y * z], name="R5")


@pytest.fixture(params=["QQ", "GF65537"])
def field(request):
    return QQ if request.param == "QQ" else GF(65537)


@pytest.fixture
def P2():
    return polynomial_ring(QQ, "xy")


@pytest.fixture
def P3():
    return polynomial_ring(QQ, "xyz")


@pytest.fixture(scope="session")
def R2():
    return build_r2()


@pytest.fixture(scope="session")
def R3():
    return build_r3()


@pytest.fixture(scope="session")
def R4():
    return build_r4()


@pytest.fixture(scope="session")
def R5():
    return build_r5()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number])
