"""Maximal and closed graded subsets as alternative views of cells.

The six translations move between the three representations:

    Cell  --ctoprinc-->  maximal fgs  --princtocl-->  closed fgs
    Cell  <--princtoc--  maximal fgs  <--cltoprinc--  closed fgs

with ctocl and cltoc the composites.
"""

from .cells import Cell
from .errors import DimensionZero, NotComposable
from .hypergraph import Fgs, closure, closure_set, fork_free, mp, plus, minus, pm


def maximal(H, S):
    """Members of S that are not in the closure of another member."""
    S = frozenset(S)
    below = set()
    for y in S:
        below |= closure_set(H, [y]) - {y}
    return S - below


def union(X):
    return X.all()


def max_fgs(H, X):
    return Fgs.from_set(H, maximal(H, X.all()), X.dim)


def is_maximal(H, X):
    return max_fgs(H, X) == X


def is_closed(H, X):
    return closure(H, X) == X


# translations

def ctoprinc(H, X):
    return Fgs.from_set(H, maximal(H, X.all()), X.dim)


def princtoc(H, X):
    n = X.dim
    neg, pos = [None] * n, [None] * n
    lm = lp = X.top
    for i in range(n - 1, -1, -1):
        lm = X[i] | mp(H, lm)
        lp = X[i] | pm(H, lp)
        neg[i], pos[i] = lm, lp
    return Cell(tuple(neg), tuple(pos), X.top)


def princtocl(H, X):
    return closure(H, X)


def cltoprinc(H, X):
    return max_fgs(H, X)


def ctocl(H, X):
    return Fgs.from_set(H, closure_set(H, X.all()), X.dim)


def cltoc(H, X):
    return princtoc(H, cltoprinc(H, X))


# sources and targets

def _need_positive(X):
    if X.dim == 0:
        raise DimensionZero("a 0-dimensional fgs has no source or target")


def prsrc(H, X):
    _need_positive(X)
    n = X.dim
    return Fgs(X.layers[:n - 1] + (X[n - 1] | mp(H, X.top),))


def prtgt(H, X):
    _need_positive(X)
    n = X.dim
    return Fgs(X.layers[:n - 1] + (X[n - 1] | pm(H, X.top),))


def _cl_boundary(H, X, side):
    _need_positive(X)
    drop = X.top | closure_set(H, side(H, X.top))
    return Fgs.from_set(H, closure_set(H, X.all() - drop), X.dim - 1)


def clsrc(H, X):
    return _cl_boundary(H, X, plus)


def cltgt(H, X):
    return _cl_boundary(H, X, minus)


def _iterate(f, H, X, k):
    while X.dim > k:
        X = f(H, X)
    return X


# well-formedness

def _is_wf(H, X, src, tgt, memo):
    if X in memo:
        return memo[X]
    n = X.dim
    ok = fork_free(H, n, X.top)
    if ok and n > 0:
        s, t = src(H, X), tgt(H, X)
        ok = _is_wf(H, s, src, tgt, memo) and _is_wf(H, t, src, tgt, memo)
        if ok and n >= 2:
            ok = src(H, s) == src(H, t) and tgt(H, s) == tgt(H, t)
    memo[X] = ok
    return ok


def is_mwf(H, X):
    return is_maximal(H, X) and _is_wf(H, X, prsrc, prtgt, {})


def is_clwf(H, X):
    return is_closed(H, X) and _is_wf(H, X, clsrc, cltgt, {})


# compositions and identities

def _check_comp(H, X, Y, i, src, tgt):
    if X.dim != Y.dim or not 0 <= i < X.dim:
        raise NotComposable("need two n-fgs and i < n", index=i)
    if _iterate(tgt, H, X, i) != _iterate(src, H, Y, i):
        raise NotComposable("boundaries do not match at index %d" % i, index=i)


def comppr(H, X, Y, i):
    _check_comp(H, X, Y, i, prsrc, prtgt)
    both = closure_set(H, X.all()) | closure_set(H, Y.all())
    return Fgs.from_set(H, maximal(H, both), X.dim)


def compcl(H, X, Y, i):
    _check_comp(H, X, Y, i, clsrc, cltgt)
    return Fgs(tuple(a | b for a, b in zip(X.layers, Y.layers)))


def fgs_identity(X, m=None):
    if m is None:
        m = X.dim + 1
    return Fgs(X.layers + (frozenset(),) * (m - X.dim))


idpr = idcl = fgs_identity
