"""Pasting schemes: the B/E relations, direct loops and well-formed sets."""

from .altcells import ctocl
from .axioms import AxiomReport, nonempty_witness
from .cells import enumerate_cells
from .errors import CapExceeded, DimensionZero, NotComposable
from .hypergraph import (MINUS, PLUS, Fgs, atom_layer, closure, closure_set, fork_free,
                         segment_violation, tl_level)


class PastingRelations:
    """B[(n, m)][x] and E[(n, m)][x] for x in P_n and m <= n."""

    def __init__(self, H):
        self.H = H
        self.B, self.E = {}, {}
        for n in range(H.top_dim + 1):
            for R, first in ((self.B, H.src), (self.E, H.tgt)):
                R[n, n] = {x: frozenset([x]) for x in H.level(n)}
                if n == 0:
                    continue
                R[n, n - 1] = {x: first(x) for x in H.level(n)}
            for m in range(n - 2, -1, -1):
                for R in (self.B, self.E):
                    R[n, m] = {x: self._step(R[n, n - 1][x], n - 1, m) for x in H.level(n)}

    def _step(self, U, k, m):
        via_b, via_e = set(), set()
        for u in U:
            via_b |= self.B[k, m][u]
            via_e |= self.E[k, m][u]
        return frozenset(via_b & via_e)

    def rel(self, which, n, m):
        R = self.B if which == "B" else self.E
        if m > n:
            return {x: frozenset() for x in self.H.level(n)}
        return R[n, m]

    def image(self, which, x, m=None):
        """B(x) or E(x) across all dimensions, or only dimension m."""
        n = self.H.dim(x)
        if m is not None:
            return self.rel(which, n, m)[x]
        out = set()
        for k in range(n + 1):
            out |= self.rel(which, n, k)[x]
        return frozenset(out)

    def B_of(self, x, m=None):
        return self.image("B", x, m)

    def E_of(self, x, m=None):
        return self.image("E", x, m)

    def of_set(self, which, S):
        out = set()
        for x in S:
            out |= self.image(which, x)
        return frozenset(out)


def derive_relations(H):
    key = ("pasting-relations",)
    if key not in H._cache:
        H._cache[key] = PastingRelations(H)
    return H._cache[key]


def has_direct_loop(H):
    """A witness of a direct loop, or None."""
    R = derive_relations(H)
    for n in range(1, H.top_dim + 1):
        T = tl_level(H, n)
        for x in H.sort(T.nodes):
            for y in H.sort(T.succ[x]):
                shared = R.E_of(y) & R.B_of(x)
                if shared:
                    return {"criterion": "pair", "x": x, "y": y, "shared": H.sort(shared)}
    for z in H:
        shared = R.E_of(z) & R.B_of(z)
        if shared != {z}:
            return {"criterion": "single", "z": z, "shared": H.sort(shared - {z})}
    return None


# finite graded subsets

def fgs_src(H, X):
    return _fgs_boundary(H, X, "E")


def fgs_tgt(H, X):
    return _fgs_boundary(H, X, "B")


def _fgs_boundary(H, X, which):
    if X.dim == 0:
        raise DimensionZero("a 0-fgs has no source or target")
    drop = derive_relations(H).of_set(which, X.top)
    return Fgs(tuple(l - drop for l in X.layers[:-1]))


def fgs_boundary(H, X, eps, k):
    while X.dim > k:
        X = fgs_src(H, X) if eps == MINUS else fgs_tgt(H, X)
    return X


def is_wfs(H, X, _memo=None):
    memo = {} if _memo is None else _memo
    if X in memo:
        return memo[X]
    ok = closure(H, X) == X and fork_free(H, X.dim, X.top)
    if ok and X.dim > 0:
        ok = is_wfs(H, fgs_src(H, X), memo) and is_wfs(H, fgs_tgt(H, X), memo)
    memo[X] = ok
    return ok


def atom_wfs(H, x):
    return Fgs.from_set(H, closure_set(H, [x]), H.dim(x))


def wfs_compose(H, X, Y, i):
    if X.dim != Y.dim or not 0 <= i < X.dim:
        raise NotComposable("need two n-wfs and i < n", index=i)
    if fgs_boundary(H, X, PLUS, i) != fgs_boundary(H, Y, MINUS, i):
        raise NotComposable("boundaries do not match at index %d" % i, index=i)
    return Fgs(tuple(a | b for a, b in zip(X.layers, Y.layers)))


def wfs_identity(X, m=None):
    if m is None:
        m = X.dim + 1
    return Fgs(X.layers + (frozenset(),) * (m - X.dim))


def enumerate_wfs(H, n, cap=100000):
    """n-wfs obtained as closures of n-cells."""
    return [ctocl(H, X) for X in enumerate_cells(H, n, cap)]


# axioms

def j1_witness(H):
    R = derive_relations(H)
    for n in range(2, H.top_dim + 1):
        for k in range(n - 1):
            for which in ("B", "E"):
                Rk = R.rel(which, n - 1, k)
                for x in H.sort(H.level(n)):
                    for first, other in (("E", "B"), ("B", "E")):
                        reach = set()
                        for u in R.image(first, x, n - 1):
                            reach |= Rk[u]
                        alt = set()
                        for u in R.image(other, x, n - 1):
                            alt |= Rk[u]
                        bad = reach - R.image(first, x, k) - alt
                        if bad:
                            return {"x": x, "y": H.sort(bad)[0], "k": k, "relation": which,
                                    "via": first}
    return None


def j3_witness(H):
    for x in H:
        if not is_wfs(H, atom_wfs(H, x)):
            return {"generator": x}
    return None


def j4_witness(H, cap):
    for k in range(1, H.top_dim):
        wfs = None
        for n in range(k + 1, H.top_dim + 1):
            for x in H.sort(H.level(n)):
                A = atom_wfs(H, x)
                for eps in (MINUS, PLUS):
                    bound = fgs_boundary(H, A, eps, k).all()
                    V = atom_layer(H, x, k, eps)
                    if wfs is None:
                        wfs = enumerate_wfs(H, k, cap)
                    for X in wfs:
                        if bound <= X.all():
                            c = segment_violation(H, X.top, V)
                            if c is not None:
                                return {"generator": x, "k": k, "side": eps,
                                        "wfs": X.to_json(), "chain": c}
    return None


def j5_witness(H, cap):
    R = derive_relations(H)
    for n in range(H.top_dim):
        xs = H.sort(H.level(n + 1))
        if not xs:
            continue
        for X in enumerate_wfs(H, n, cap):
            members = X.all()
            for x in xs:
                if not H.src(x) <= X.top:
                    continue
                meet = members & R.E_of(x)
                if meet:
                    return {"part": "a", "x": x, "wfs": X.to_json(), "shared": H.sort(meet)}
                Bx = R.B_of(x)
                for y in H.sort(members - Bx):
                    if Bx & closure_set(H, [y]):
                        return {"part": "b", "x": x, "y": y, "wfs": X.to_json()}
    return None


def check_johnson(H, cap=100000):
    r = AxiomReport("ps")
    r.add("J0", nonempty_witness(H))
    r.add("J1", j1_witness(H))
    r.add("J2", has_direct_loop(H))
    r.add("J3", j3_witness(H))
    for name, fn in (("J4", j4_witness), ("J5", j5_witness)):
        try:
            r.add(name, fn(H, cap))
        except CapExceeded as e:
            r.add(name, skipped="cap exceeded (%s)" % e)
    return r
