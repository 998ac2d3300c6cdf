from itertools import permutations

import pytest
from hypothesis import given, strategies as st

import laws
from pastings import cells, fixtures, freeterm
from pastings.errors import CyclicOrder, NotWhiskeringShape
from pastings.freeterm import Comp, Gen, Id, eval_cell, linear_extensions, word


@pytest.fixture
def ce_tf():
    return fixtures.load("ce_tf")


def test_counterexample_terms(ce_tf):
    H = ce_tf.hypergraph
    X1, X2 = eval_cell(H, ce_tf.terms["Xi1"]), eval_cell(H, ce_tf.terms["Xi2"])
    assert X1 == X2 == ce_tf.cells["X"]
    w1, w2 = word(ce_tf.terms["Xi1"], ce_tf.letters), word(ce_tf.terms["Xi2"], ce_tf.letters)
    assert w1 == ["A", "B"] and w2 == ["B", "A"]


def test_eval_generator():
    H = laws.H_of("two_pd")
    assert eval_cell(H, Gen("alpha")) == cells.atom(H, "alpha")


def test_intro_composites_agree():
    F = fixtures.load("two_pd")
    H = F.hypergraph
    assert eval_cell(H, F.terms["intro1"]) == eval_cell(H, F.terms["intro2"]) == F.cells["X"]


def test_eval_is_compositional():
    H = laws.H_of("two_pd")
    for X in cells.enumerate_cells(H, 2):
        t = cells.decompose(H, X)
        if isinstance(t, Comp):
            m = X.dim
            L, R = cells._lift(eval_cell(H, t.l), m), cells._lift(eval_cell(H, t.r), m)
            assert eval_cell(H, t) == cells.compose(H, L, R, t.i)


def test_word_rules(ce_tf):
    letters = ce_tf.letters
    assert word(Id(Gen("A"), 4), letters) == []
    t = ce_tf.terms["Xi1"]
    assert word(Comp(2, t, Id(Gen("a"), 3)), letters) == ["A", "B"]
    with pytest.raises(NotWhiskeringShape):
        word(Comp(1, Gen("A"), Gen("B")), letters)


def test_linear_extensions_counts():
    assert len(list(linear_extensions({1, 2, 3}, lambda a, b: False))) == 6
    assert list(linear_extensions({1, 2, 3}, lambda a, b: a < b)) == [[1, 2, 3]]
    F = fixtures.load("two_pd")
    H, X = F.hypergraph, F.cells["X"]
    R = freeterm.top_order(H, X)
    exts = list(linear_extensions(X.top, R, key=H.key))
    assert len(exts) == 6
    for e in exts:
        assert e.index("alpha") < e.index("beta") and e.index("gamma") < e.index("delta")
    with pytest.raises(CyclicOrder):
        list(linear_extensions({1, 2}, lambda a, b: True))


def test_reorder_two_pd():
    F = fixtures.load("two_pd")
    H, X = F.hypergraph, F.cells["X"]
    R = freeterm.top_order(H, X)
    firsts = set()
    for sigma in linear_extensions(X.top, R, key=H.key):
        t = freeterm.reorder_decomposition(H, X, sigma)
        assert eval_cell(H, t) == X
        assert freeterm.top_leaves(H, t, 2) == sigma
        firsts.add(sigma[0])
    assert firsts == {"alpha", "gamma"}
    with pytest.raises(CyclicOrder):
        freeterm.reorder_decomposition(H, X, ["beta", "alpha", "gamma", "delta"])


def test_reorder_single_generator():
    H = laws.H_of("two_pd")
    A = cells.atom(H, "alpha")
    assert freeterm.reorder_decomposition(H, A, ["alpha"]) == cells.decompose(H, A)


def test_reorder_ce_tf(ce_tf):
    H, X = ce_tf.hypergraph, ce_tf.cells["X"]
    words = set()
    for sigma in (["A", "B"], ["B", "A"]):
        t = freeterm.reorder_decomposition(H, X, sigma)
        assert eval_cell(H, t) == X
        words.add(tuple(word(t, ce_tf.letters)))
    assert words == {("A", "B"), ("B", "A")}


@given(rng=st.randoms(use_true_random=False))
def test_decompose_leaf_order_respects_tl(rng):
    name = rng.choice(laws.GPC)
    H = laws.H_of(name)
    n = rng.randrange(1, H.top_dim + 1)
    X = rng.choice(cells.enumerate_cells(H, n))
    top = freeterm.top_leaves(H, cells.decompose(H, X), n)
    R = freeterm.top_order(H, X)
    assert all(not R(b, a) for i, a in enumerate(top) for b in top[i + 1:])


@given(rng=st.randoms(use_true_random=False))
def test_linear_extensions_match_permutation_filter(rng):
    k = rng.randrange(0, 6)
    pairs = {(a, b) for a in range(k) for b in range(a + 1, k) if rng.random() < 0.3}
    rel = lambda a, b: (a, b) in pairs
    got = sorted(map(tuple, linear_extensions(range(k), rel)))
    want = sorted(p for p in permutations(range(k))
                  if all(p.index(a) < p.index(b) for a, b in pairs))
    assert got == want
