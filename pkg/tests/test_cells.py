from itertools import chain, combinations, product

import pytest

import laws
from pastings import cells, fixtures, trees
from pastings.cells import (Cell, activate, atom, compose, decompose, dual_activate, dual_glue,
                            enumerate_cells, evaluate, excise, glue, identity, is_cell,
                            is_relevant, rank, rank_lt, src, tgt)
from pastings.errors import CapExceeded, IsAtom, NotComposable, NotGlueable
from pastings.hypergraph import tl


def S(*xs):
    return frozenset(xs)


# brute-force oracle: every tuple of layers, checked straight from the definition

def _subsets(items):
    items = sorted(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, k)
                                                      for k in range(len(items) + 1))]


def _ff(H, n, U):
    if n == 0:
        return len(U) == 1
    return all(not (H.src(x) & H.src(y)) and not (H.tgt(x) & H.tgt(y))
               for x, y in combinations(U, 2))


def _moves(H, M, U, V):
    Mm = set().union(*[H.src(m) for m in M]) if M else set()
    Mp = set().union(*[H.tgt(m) for m in M]) if M else set()
    return U == (V | Mm) - Mp and V == (U | Mp) - Mm


def brute_cells(H, n):
    out = set()
    opts = [_subsets(H.level(i)) for i in range(n + 1)]
    for layers in product(*[p for i in range(n) for p in (opts[i], opts[i])], opts[n]):
        neg, pos, top = layers[0:2 * n:2], layers[1:2 * n:2], layers[-1]
        X = Cell(tuple(neg), tuple(pos), top)
        ok = all(_ff(H, i, X.layer(i, e)) for i in range(n) for e in "-+") and _ff(H, n, top)
        for i in range(n):
            for M in ((X.neg[i + 1], X.pos[i + 1]) if i + 1 < n else (top,)):
                ok = ok and _moves(H, M, X.neg[i], X.pos[i])
        if ok:
            out.add(X)
    return out


@pytest.mark.parametrize("name", ["ex_ppc", "ex_wfs", "not_3b", "loop_ok"])
def test_enumeration_matches_brute_force(name):
    H = fixtures.load(name).hypergraph
    for n in range(H.top_dim + 1):
        assert set(enumerate_cells(H, n)) == brute_cells(H, n), n


def test_zero_cells():
    H = fixtures.load("ex_ppc").hypergraph
    assert [X.top for X in enumerate_cells(H, 0)] == [S("x"), S("y"), S("y'"), S("z")]


def test_enumeration_cap():
    H = fixtures.load("two_pd").hypergraph
    with pytest.raises(CapExceeded):
        enumerate_cells(H, 2, cap=10)


def test_enumerated_cells_are_cells():
    H = fixtures.load("ohg_cells").hypergraph
    for n in range(H.top_dim + 1):
        for X in enumerate_cells(H, n):
            assert is_cell(H, X)


def test_fixture_cells():
    F = fixtures.load("ohg_cells")
    H, X = F.hypergraph, F.cells["X"]
    assert is_cell(H, X)
    assert X == Cell((S("t"), S("a", "b", "c", "d", "e", "f")),
                     (S("z"), S("a", "b'", "c'", "d'", "e'", "f")),
                     S("alpha", "beta", "gamma", "delta"))
    assert src(X) == Cell((S("t"),), (S("z"),), S("a", "b", "c", "d", "e", "f"))
    assert is_cell(H, Cell((), (), S("t")))
    F = fixtures.load("ce_tf")
    assert is_cell(F.hypergraph, F.cells["X"])


def test_globular_boundaries(fixture_name):
    H = fixtures.load(fixture_name).hypergraph
    if H.top_dim < 2:
        return
    for X in enumerate_cells(H, 2, cap=5000):
        for bd in (src, tgt):
            assert bd(src(X), 0) == bd(tgt(X), 0)


def test_cell_violation_names_layer():
    H = fixtures.load("ex_ppc").hypergraph
    X = Cell((S("x"),), (S("z"),), S("a", "b"))
    w = cells.cell_violation(H, X)
    assert w["condition"] == "not fork-free" and w["layer"] == [1, "top"]


def test_compose_two_pd_halves():
    F = fixtures.load("two_pd")
    H, X = F.hypergraph, F.cells["X"]
    left = [Y for Y in enumerate_cells(H, 2) if Y.top == S("alpha", "beta")
            and src(Y, 0).top == S("u") and tgt(Y, 0).top == S("w")]
    right = [Z for Z in enumerate_cells(H, 2) if Z.top == S("gamma", "delta")
             and src(Z, 0).top == S("w") and tgt(Z, 0).top == S("y")]
    (Y,), (Z,) = left, right
    assert compose(H, Y, Z, 0) == X
    with pytest.raises(NotComposable):
        compose(H, Z, Y, 0)


def test_ce_tf_terms_evaluate_to_X():
    F = fixtures.load("ce_tf")
    H = F.hypergraph
    X1, X2 = evaluate(H, F.terms["Xi1"]), evaluate(H, F.terms["Xi2"])
    assert X1 == X2 == F.cells["X"]
    assert src(X1, 2) == src(X2, 2)


def test_identity():
    H = fixtures.load("ex_ppc").hypergraph
    x = Cell((), (), S("x"))
    assert identity(x) == Cell((S("x"),), (S("x"),), S())
    assert identity(x, 2).dim == 2 and is_cell(H, identity(x, 2))
    X = atom(H, "alpha")
    assert src(identity(X), 2) == tgt(identity(X), 2) == X
    for j in range(2):
        assert compose(H, X, identity(tgt(X, j), 2), j) == X


def test_atoms_and_relevance():
    H = fixtures.load("ohg_cells").hypergraph
    A = atom(H, "alpha")
    assert is_relevant(H, "alpha") and is_cell(H, A)
    assert A.neg == (S("u"), S("b", "c''")) and A.pos == (S("w'"), S("b'", "c'''"))
    assert is_relevant(H, "u")
    H = fixtures.load("johnson_non_glob").hypergraph
    assert not is_relevant(H, "f")


def test_glue_and_activate():
    F = fixtures.load("ex_non_segment")
    H, X = F.hypergraph, F.cells["X"]
    A = activate(H, X, {"A"})
    assert A.top == S("alpha2", "alpha3", "alpha1'", "alpha4'")
    G = glue(H, X, {"A"})
    assert G.top == S("A") and src(G) == X and tgt(G) == A
    assert glue(H, X, set()) == identity(X)
    with pytest.raises(NotGlueable):
        glue(H, A, {"A"})
    D = dual_glue(H, A, {"A"})
    assert D == G and dual_activate(H, A, {"A"}) == X


def test_sequential_activation_reaches_target():
    F = fixtures.load("two_pd")
    H, X = F.hypergraph, F.cells["X"]
    R = tl(H, X.top)
    order = sorted(X.top, key=lambda x: sum(R(y, x) for y in X.top))
    cur = src(X)
    for x in order:
        cur = activate(H, cur, {x})
    assert cur == tgt(X)


def test_rank():
    F = fixtures.load("ohg_cells")
    H = F.hypergraph
    assert rank(F.cells["X"]) == (2, 4)
    for x in H:
        if H.dim(x) > 0:
            assert rank(atom(H, x))[-1] == 1
    assert rank(identity(F.cells["X"]))[-1] == 0
    assert rank_lt((5, 1), (0, 2)) and not rank_lt((0, 2), (5, 1))
    assert not rank_lt((1, 1), (1, 1))


@pytest.mark.parametrize("name", ["two_pd", "ohg_cells"])
def test_excision_round_trip(name):
    F = fixtures.load(name)
    H, X = F.hypergraph, F.cells["X"]
    for u in sorted(X.top):
        i, Y, Z = excise(H, X, u)
        assert compose(H, Y, Z, i) == X
        assert rank_lt(rank(Y), rank(X)) and rank_lt(rank(Z), rank(X))


def test_excise_atom():
    H = fixtures.load("two_pd").hypergraph
    with pytest.raises(IsAtom):
        excise(H, atom(H, "alpha"), "alpha")


def test_decompose():
    F = fixtures.load("two_pd")
    H, X = F.hypergraph, F.cells["X"]
    assert decompose(H, atom(H, "alpha")) == trees.Leaf("alpha")
    assert decompose(H, identity(atom(H, "a"))) == trees.Id(trees.Leaf("a"), 2)
    t = decompose(H, X)
    assert evaluate(H, t) == X
    top = [g for g in trees.leaves(t) if H.dim(g) == 2]
    assert sorted(top) == sorted(X.top)
    R = tl(H, X.top)
    for a, b in combinations(top, 2):
        assert not R(b, a)


@pytest.mark.parametrize("name", laws.GPC)
def test_decompose_round_trip(name):
    H = laws.H_of(name)
    for n in range(H.top_dim + 1):
        for X in enumerate_cells(H, n):
            t = decompose(H, X)
            assert evaluate(H, t) == X
            top = [g for g in trees.leaves(t) if H.dim(g) == n]
            assert len(top) == len(set(top)) and set(top) == X.top


def test_tree_json_round_trip():
    F = fixtures.load("ce_tf")
    for t in F.terms.values():
        assert trees.from_json(trees.to_json(t)) == t


def test_cell_json_round_trip():
    X = fixtures.load("ohg_cells").cells["X"]
    assert Cell.from_json(X.to_json()) == X


def test_lemma_cell_comp_top_disjoint():
    P = laws.pool("two_pd")
    H = P.H
    for Y, Z, i in P.harvested:
        if i == Y.dim - 1:
            assert not (Y.top & Z.top)
            assert not (set().union(*[H.src(x) for x in Y.top] or [set()])
                        & set().union(*[H.tgt(z) for z in Z.top] or [set()]))
