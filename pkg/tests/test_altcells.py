import pytest

import laws
from pastings import altcells, cells, fixtures
from pastings.cells import src, tgt
from pastings.errors import DimensionZero, NotComposable
from pastings.hypergraph import Fgs, closure_set, mp, pm


def S(*xs):
    return frozenset(xs)


def test_ctoprinc_ohg():
    F = fixtures.load("ohg_cells")
    H, X = F.hypergraph, F.cells["X"]
    M = altcells.ctoprinc(H, X)
    assert M[1] == S("a", "f") == X.neg[1] & X.pos[1]
    assert M.top == X.top
    assert M[0] == X.neg[0] & X.pos[0]
    assert altcells.is_maximal(H, M) and altcells.is_mwf(H, M)


def test_ctocl_two_pd():
    F = fixtures.load("two_pd")
    H, X = F.hypergraph, F.cells["X"]
    assert altcells.ctocl(H, X).all() == S("u", "v", "w", "x", "y", "a", "b", "c", "d", "e", "f",
                                            "g", "h", "alpha", "beta", "gamma", "delta")


def test_closed_boundaries_ex_wfs():
    F = fixtures.load("ex_wfs")
    H, full = F.hypergraph, F.fgs["full"]
    assert altcells.clsrc(H, full) == F.fgs["upper"]
    assert altcells.cltgt(H, full) == F.fgs["lower"]
    assert altcells.is_clwf(H, full)
    with pytest.raises(DimensionZero):
        altcells.clsrc(H, F.fgs["x"])


def test_prsrc_of_empty_top():
    H = laws.H_of("two_pd")
    M = Fgs.of({"u"}, {"a"}, set())
    assert altcells.prsrc(H, M) == Fgs(M.layers[:2])


def test_non_fork_free_top_is_not_wf():
    H = laws.H_of("ex_ppc")
    X = Fgs.from_set(H, closure_set(H, {"a", "b"}), 1)
    assert not altcells.is_clwf(H, X)
    assert not altcells.is_mwf(H, altcells.max_fgs(H, X))


def test_composition_mismatch():
    H = laws.H_of("ex_wfs")
    a = altcells.ctocl(H, cells.atom(H, "alpha"))
    b = altcells.ctocl(H, cells.atom(H, "beta"))
    assert altcells.compcl(H, a, b, 1) == fixtures.load("ex_wfs").fgs["full"]
    with pytest.raises(NotComposable):
        altcells.compcl(H, b, a, 1)
    with pytest.raises(NotComposable):
        altcells.comppr(H, altcells.cltoprinc(H, b), altcells.cltoprinc(H, a), 1)


def test_identities():
    X = Fgs.of({"x"})
    assert altcells.fgs_identity(X) == Fgs.of({"x"}, set())
    assert altcells.idpr(X, 3).dim == 3


@pytest.mark.parametrize("name", laws.GPC)
def test_cell_lemmas(name):
    H = laws.H_of(name)
    for n in range(1, H.top_dim + 1):
        for X in cells.enumerate_cells(H, n):
            mx = altcells.maximal(H, X.all())
            for m in range(n):
                assert mx & H.level(m) == X.neg[m] & X.pos[m]
                for x in X.neg[m] - mx:
                    up = X.neg[m + 1] if m + 1 < n else X.top
                    assert x in mp(H, up)
                for x in X.pos[m] - mx:
                    up = X.pos[m + 1] if m + 1 < n else X.top
                    assert x in pm(H, up)
            M = altcells.ctoprinc(H, X)
            assert altcells.ctocl(H, X) == altcells.princtocl(H, M)
            C = altcells.ctocl(H, X)
            assert altcells.is_clwf(H, C)
            if n >= 2:
                for side in (altcells.clsrc, altcells.cltgt):
                    assert side(H, altcells.clsrc(H, C)) == side(H, altcells.cltgt(H, C))


@pytest.mark.parametrize("name", laws.GPC)
def test_translations_commute_with_boundaries(name):
    H = laws.H_of(name)
    for n in range(1, H.top_dim + 1):
        for X in cells.enumerate_cells(H, n):
            C, M = altcells.ctocl(H, X), altcells.ctoprinc(H, X)
            for k in range(n):
                assert altcells._iterate(altcells.clsrc, H, C, k) == altcells.ctocl(H, src(X, k))
                assert altcells._iterate(altcells.prtgt, H, M, k) == altcells.ctoprinc(H, tgt(X, k))


def test_compcl_is_union_on_harvested_pairs():
    P = laws.pool("ohg_cells")
    H = P.H
    for Y, Z, i in P.harvested:
        a, b = altcells.ctocl(H, Y), altcells.ctocl(H, Z)
        assert altcells.compcl(H, a, b, i) == altcells.ctocl(H, cells.compose(H, Y, Z, i))
