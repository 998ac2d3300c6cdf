import pytest

from pastings import fixtures
from pastings.errors import PreconditionFailed
from pastings.movement import (forward_obstruction, move_backward, move_forward, moves,
                               orthogonal, split_move)


def S(*xs):
    return frozenset(xs)


@pytest.fixture
def two_pd():
    return fixtures.load("two_pd").hypergraph


@pytest.fixture
def ex_ppc():
    return fixtures.load("ex_ppc").hypergraph


def test_moves_examples(two_pd, ex_ppc):
    all2 = {"alpha", "beta", "gamma", "delta"}
    assert moves(two_pd, all2, {"a", "b", "e", "h"}, {"a", "d", "g", "h"})
    assert moves(two_pd, set(), {"a", "b"}, {"a", "b"})
    assert moves(ex_ppc, {"alpha"}, {"a", "c"}, {"b", "d"})
    assert not moves(ex_ppc, {"alpha"}, {"a", "c"}, {"b"})


def test_move_forward(two_pd, ex_ppc):
    assert move_forward(ex_ppc, {"a", "c"}, {"alpha"}) == S("b", "d")
    assert move_forward(two_pd, {"a", "b"}, set()) == S("a", "b")
    assert move_forward(two_pd, {"a", "b", "e", "h"}, {"alpha"}) == S("a", "c", "e", "h")
    assert move_forward(ex_ppc, {"a"}, {"alpha"}) is None
    assert forward_obstruction(ex_ppc, {"a"}, {"alpha"})["missing"] == ["c"]
    assert forward_obstruction(ex_ppc, {"a", "c", "b"}, {"alpha"})["shared"] == ["b"]
    assert move_backward(ex_ppc, {"b", "d"}, {"alpha"}) == S("a", "c")


def test_orthogonal(two_pd):
    assert orthogonal(two_pd, {"alpha"}, set())
    assert orthogonal(two_pd, {"alpha"}, {"gamma"})
    assert orthogonal(two_pd, {"alpha"}, {"beta"})
    assert not orthogonal(two_pd, {"alpha"}, {"alpha"})


def test_split_move(two_pd):
    U, W = {"a", "b", "e", "h"}, {"a", "c", "f", "h"}
    assert split_move(two_pd, U, W, {"alpha"}, {"gamma"}) == S("a", "c", "e", "h")
    assert split_move(two_pd, U, W, set(), {"alpha", "gamma"}) == S(*U)


def test_split_move_names_hypothesis(two_pd):
    U, W = {"a", "b", "e", "h"}, {"a", "c", "f", "h"}
    with pytest.raises(PreconditionFailed) as e:
        split_move(two_pd, U, U, {"alpha"}, {"gamma"})
    assert e.value.info["hypothesis"] == "moves"
    with pytest.raises(PreconditionFailed) as e:
        split_move(two_pd, U, W, {"alpha", "gamma"}, {"alpha"})
    assert e.value.info["hypothesis"] in ("moves", "orthogonal")
