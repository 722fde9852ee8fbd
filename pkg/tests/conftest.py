import pytest

from src.ribbon.models.link_diagram import LinkDiagram
from src.ribbon.services.diagram_core import parse_pd
from src.ribbon.utils.config import get_settings

from helpers import FIGURE8, HOPF, KINK, PRETZEL, TREFOIL


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def hopf() -> LinkDiagram:
    return parse_pd(HOPF)


@pytest.fixture
def trefoil() -> LinkDiagram:
    return parse_pd(TREFOIL)


@pytest.fixture
def kink() -> LinkDiagram:
    return parse_pd(KINK)


@pytest.fixture
def figure8() -> LinkDiagram:
    return parse_pd(FIGURE8)


@pytest.fixture
def pretzel() -> LinkDiagram:
    return parse_pd(PRETZEL)
