import pytest

from combint.graph import build_graph


def cycle_graph(m, stubs=False):
    vs = [f"v{i}" for i in range(m)]
    closed = [(f"e{i + 1}", vs[i], vs[(i + 1) % m]) for i in range(m)]
    half = [(f"h{i + 1}", v) for i, v in enumerate(vs)] if stubs else []
    return build_graph(vs, closed, half)


@pytest.fixture
def theta():
    return build_graph(["a", "b"], [("e1", "a", "b"), ("e2", "a", "b"), ("e3", "a", "b")])


@pytest.fixture
def petal():
    return build_graph(["v"], [("l1", "v", "v"), ("l2", "v", "v")])


@pytest.fixture
def cycle3():
    return cycle_graph(3)


@pytest.fixture
def two_stubs():
    return build_graph(["v"], [], [("h1", "v"), ("h2", "v")])
