import pytest

from hamclosure.graphs import Graph
from hamclosure.verify import curated_graphs, full_corpus


@pytest.fixture(scope="session")
def curated() -> dict[str, Graph]:
    return curated_graphs()


@pytest.fixture(scope="session")
def corpus() -> list[Graph]:
    return full_corpus(seed=0)


@pytest.fixture(scope="session")
def net(curated) -> Graph:
    return curated["net"]


@pytest.fixture(scope="session")
def g8(curated) -> Graph:
    return curated["G8"]
