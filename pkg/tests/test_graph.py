import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
import randgen
from combint.errors import DanglingEndpoint, Disconnected, DuplicateId, NotComposable, UnknownEdge
from combint.graph import (
    GroupAlgebraElement,
    PathWord,
    SpanningTree,
    bar,
    build_graph,
    core,
    cycle_basis,
    reduce,
)
from conftest import cycle_graph


def test_petal_is_proper_with_one_cycle():
    g = build_graph(["v"], [("l", "v", "v")])
    assert g.is_proper
    assert g.betti == 1
    assert sorted(g.star("v")) == ["-l", "l"]


def test_theta_betti(theta):
    assert theta.betti == 2
    assert len(SpanningTree(theta).tree_edges) == 1


def test_vertex_with_stub_has_trivial_core():
    g = build_graph(["v"], [], [("h", "v")])
    assert not g.is_proper
    c = core(g)
    assert set(c.vertices) == {"v"}
    assert not c.closed and not c.half_open


def test_core_drops_stubs():
    c = core(cycle_graph(4, stubs=True))
    assert c == cycle_graph(4)
    assert len(c.edges) == 4


def test_theta_core_is_itself(theta):
    assert core(theta) == theta


@pytest.mark.parametrize("vertices, closed, half, err", [
    (["a", "a"], [], [], DuplicateId),
    (["a"], [("e", "a", "a"), ("e", "a", "a")], [], DuplicateId),
    (["a"], [("e", "a", "b")], [], DanglingEndpoint),
    (["a", "b"], [], [], Disconnected),
    (["a"], [("e", "a", "a")], [("e", "a")], DuplicateId),
])
def test_build_graph_rejects(vertices, closed, half, err):
    with pytest.raises(err):
        build_graph(vertices, closed, half)


def test_path_validation(theta):
    assert theta.path(["e1", "-e2"]).end == "a"
    with pytest.raises(NotComposable):
        theta.path(["e1", "e2"])
    with pytest.raises(UnknownEdge):
        theta.path(["e9"])
    with pytest.raises(NotComposable):
        theta.path([])


def test_half_open_edges_are_not_paths():
    g = build_graph(["v"], [], [("h", "v")])
    with pytest.raises(NotComposable):
        g.path(["h"])


def test_reduce_backtrack():
    g = build_graph(["a", "b"], [("e", "a", "b")])
    assert reduce(g.path(["e", "-e"])).edges == ()
    assert reduce(g.path(["e", "-e"])).start == "a"


def test_reduce_inner_backtrack():
    g = build_graph(["a", "b", "c", "d"], [("e1", "a", "b"), ("e2", "c", "b"), ("e3", "b", "d")])
    assert reduce(g.path(["e1", "-e2", "e2", "e3"])).edges == ("e1", "e3")


def test_bar_is_an_involution():
    assert bar(bar("e")) == "e"
    assert bar("e") == "-e"


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(0, 12))
def test_reduce_matches_repeated_cancellation(seed, length):
    rng = random.Random(seed)
    g = randgen.random_graph(rng)
    v = rng.choice(sorted(g.vertices))
    edges = []
    for _ in range(length):
        arrows = randgen.out_arrows(g, v)
        if not arrows:
            break
        a = rng.choice(arrows)
        edges.append(a)
        v = g.terminal(a)
    w = g.path(edges) if edges else g.constant(v)
    r = reduce(w)
    assert r.edges == oracles.reduce_by_cancellation(edges)
    assert r.is_reduced()
    assert reduce(r) == r


def test_cycle_basis_shapes(theta, petal):
    assert len(cycle_basis(petal)) == 2
    loops = cycle_basis(theta)
    # the BFS tree is {e1}, so the loops are the inverses of e1 -e2 and e1 -e3
    assert [w.edges for w in loops] == [("e2", "-e1"), ("e3", "-e1")]
    assert [w.inverse().edges for w in loops] == [("e1", "-e2"), ("e1", "-e3")]
    m = cycle_basis(cycle_graph(5))
    assert len(m) == 1 and len(m[0]) == 5


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_cycle_basis_size_matches_boundary_rank(seed):
    g = randgen.random_graph(random.Random(seed))
    assert len(cycle_basis(g)) == len(g.closed) - oracles.boundary_rank(g)


def test_cycle_basis_at_other_base(theta):
    for w in cycle_basis(theta, "b"):
        assert w.start == w.end == "b"
        assert w.is_reduced()


def test_tree_coordinates_of_generators(theta):
    tree = SpanningTree(theta)
    loops = cycle_basis(theta, "b")
    assert [tree.coordinates(w) for w in loops] == [((0, 1),), ((1, 1),)]
    assert tree.coordinates(reduce(loops[0] * loops[1].inverse())) == ((0, 1), (1, -1))


def test_path_word_concatenation_and_inverse(theta):
    p = theta.path(["e1"])
    q = theta.path(["-e2"])
    assert (p * q).edges == ("e1", "-e2")
    assert (p * q).inverse().edges == ("e2", "-e1")
    with pytest.raises(NotComposable):
        p * p


def test_group_algebra_augmentation_and_products(cycle3):
    loop = cycle_basis(cycle3)[0]
    one = GroupAlgebraElement.one("v0")
    x = GroupAlgebraElement.from_path(loop) - one
    assert x.augmentation() == 0
    assert (x * x).augmentation() == 0
    assert len((x * x).terms) == 3
    y = x * cycle3.path(["e1"])
    assert y.base == ("v0", "v1")
    assert (GroupAlgebraElement.from_path(loop) * GroupAlgebraElement.from_path(loop.inverse())) == one


def test_group_algebra_rejects_mismatched_endpoints(cycle3):
    with pytest.raises(NotComposable):
        GroupAlgebraElement.one("v0") + GroupAlgebraElement.one("v1")
    with pytest.raises(NotComposable):
        GroupAlgebraElement.one("v1") * GroupAlgebraElement.one("v0")


def test_empty_path_word_str():
    assert str(PathWord("v", "v", ())) != ""
