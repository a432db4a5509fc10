import pytest
from loguru import logger

from leechkit.config.config import settings
from leechkit.core import catalog
from leechkit.core.catalog import T1_GRAM, T2_GRAM
from leechkit.core.klein_cubic import klein_cubic
from leechkit.core.lattice import Lattice
from leechkit.core.niemeier import build_niemeier, get_spec


@pytest.fixture(autouse=True, scope="session")
def _quiet_logs(tmp_path_factory):
    settings.log_file = str(tmp_path_factory.mktemp("logs") / "leechkit.log")
    logger.remove()
    yield


@pytest.fixture(scope="session")
def e8():
    return catalog.e_n(8)


@pytest.fixture(scope="session")
def s11():
    return catalog.s11()


@pytest.fixture(scope="session")
def t1():
    return Lattice(T1_GRAM, "T1_11")


@pytest.fixture(scope="session")
def t2():
    return Lattice(T2_GRAM, "T2_11")


@pytest.fixture(scope="session")
def n23():
    return build_niemeier(get_spec("N23"))


@pytest.fixture(scope="session")
def n22():
    return build_niemeier(get_spec("N22"))


@pytest.fixture(scope="session")
def h():
    return klein_cubic()
