"""The augmented directed complex freely spanned by a hypergraph.

Chains are `Elem`s: an integer coefficient per generator of one dimension.
A monoid element is an Elem with no negative coefficient.
"""

from dataclasses import dataclass

from .axioms import AxiomReport
from .cells import Cell, cell_violation
from .errors import DimensionMismatch, DimensionZero, NotACell, NotComposable
from .hypergraph import Relation


class Elem:
    """A finitely supported Z-valued function on the generators of dimension `dim`."""

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim, coeffs=None):
        self.dim = dim
        self.coeffs = {b: int(c) for b, c in (coeffs or {}).items() if c}

    @staticmethod
    def zero(dim):
        return Elem(dim)

    def _check(self, other):
        if self.dim != other.dim:
            raise DimensionMismatch("adding chains of dimensions %d and %d" % (self.dim, other.dim))

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for b, c in other.coeffs.items():
            out[b] = out.get(b, 0) + c
        return Elem(self.dim, out)

    def __neg__(self):
        return Elem(self.dim, {b: -c for b, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        return Elem(self.dim, {b: k * c for b, c in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, Elem) and self.dim == other.dim and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.dim, frozenset(self.coeffs.items())))

    def __le__(self, other):
        self._check(other)
        return all(self[b] <= other[b] for b in set(self.coeffs) | set(other.coeffs))

    def __getitem__(self, b):
        return self.coeffs.get(b, 0)

    def __bool__(self):
        return bool(self.coeffs)

    def meet(self, other):
        self._check(other)
        return Elem(self.dim, {b: min(c, other[b]) for b, c in self.coeffs.items()})

    def support(self):
        return frozenset(self.coeffs)

    @property
    def positive(self):
        return all(c > 0 for c in self.coeffs.values())

    def to_json(self):
        return {"dim": self.dim, "coeffs": dict(sorted(self.coeffs.items()))}

    @staticmethod
    def from_json(obj):
        return Elem(int(obj["dim"]), obj["coeffs"])

    def __repr__(self):
        if not self.coeffs:
            return "0@%d" % self.dim
        return " + ".join("%s%s" % ("" if c == 1 else "%d*" % c, b)
                          for b, c in sorted(self.coeffs.items()))


MonoidElem = GroupElem = Elem


def s2m(H, S, n=None):
    S = frozenset(S)
    if n is None:
        n = H.set_dim(S)
        if n is None:
            raise ValueError("dimension of an empty set must be given")
    return Elem(n, {x: 1 for x in S})


def m2s(u):
    return u.support()


def gen(H, x):
    return Elem(H.dim(x), {x: 1})


def boundary(H, g):
    if g.dim == 0:
        raise DimensionZero("no boundary below dimension 0")
    out = Elem(g.dim - 1)
    for x, c in g.coeffs.items():
        out = out + c * (s2m(H, H.tgt(x), g.dim - 1) - s2m(H, H.src(x), g.dim - 1))
    return out


def augmentation(H, g):
    if g.dim != 0:
        raise DimensionMismatch("augmentation is defined in dimension 0")
    return sum(g.coeffs.values())


def split(g):
    """(neg, pos) with g = pos - neg and neg meet pos = 0."""
    return (Elem(g.dim, {b: -c for b, c in g.coeffs.items() if c < 0}),
            Elem(g.dim, {b: c for b, c in g.coeffs.items() if c > 0}))


def strict_minus(H, u):
    """u^-+ : the negative part of the boundary."""
    return split(boundary(H, u))[0]


def strict_plus(H, u):
    return split(boundary(H, u))[1]


def border_minus(H, u):
    """u^- : sum over the support of the weighted b^-+."""
    out = Elem(u.dim - 1)
    for b, c in u.coeffs.items():
        out = out + c * strict_minus(H, gen(H, b))
    return out


def border_plus(H, u):
    out = Elem(u.dim - 1)
    for b, c in u.coeffs.items():
        out = out + c * strict_plus(H, gen(H, b))
    return out


def monoid_fork_free(H, s):
    if s.dim == 0:
        return augmentation(H, s) == 1
    items = sorted(s.coeffs)
    for i, x in enumerate(items):
        if s[x] >= 2 and (H.src(x) or H.tgt(x)):
            return False
        for y in items[i + 1:]:
            if H.src(x) & H.src(y) or H.tgt(x) & H.tgt(y):
                return False
    return True


def radical(s):
    return all(c < 2 for c in s.coeffs.values())


def adc_witness(H):
    """A generator on which d d or e d does not vanish, or None."""
    for x in H:
        n = H.dim(x)
        if n == 1:
            e = augmentation(H, boundary(H, gen(H, x)))
            if e:
                return {"generator": x, "condition": "augmentation of boundary", "value": e}
        elif n >= 2:
            dd = boundary(H, boundary(H, gen(H, x)))
            if dd:
                return {"generator": x, "condition": "boundary of boundary",
                        "value": dd.to_json()}
    return None


def is_adc(H):
    return adc_witness(H) is None


@dataclass(frozen=True)
class AdcCell:
    neg: tuple
    pos: tuple
    top: Elem

    @property
    def dim(self):
        return len(self.neg)

    def layer(self, i, eps):
        if i == self.dim:
            return self.top
        return self.neg[i] if eps == "-" else self.pos[i]

    def to_json(self):
        return {"dim": self.dim, "neg": [e.to_json() for e in self.neg],
                "pos": [e.to_json() for e in self.pos], "top": self.top.to_json()}

    @staticmethod
    def from_json(obj):
        return AdcCell(tuple(Elem.from_json(e) for e in obj["neg"]),
                       tuple(Elem.from_json(e) for e in obj["pos"]), Elem.from_json(obj["top"]))


def adc_cell_violation(H, X):
    n = X.dim
    for i in range(n + 1):
        for eps in "-+":
            e = X.layer(i, eps)
            if e.dim != i or any(c < 0 for c in e.coeffs.values()) or \
                    any(b not in H or H.dim(b) != i for b in e.coeffs):
                return {"layer": [i, eps], "condition": "not a monoid element of dimension %d" % i}
    for i in range(n):
        d = X.pos[i] - X.neg[i]
        for eps in "-+":
            if boundary(H, X.layer(i + 1, eps)) != d:
                return {"layer": [i + 1, eps], "condition": "boundary mismatch"}
    for eps in "-+":
        if augmentation(H, X.layer(0, eps)) != 1:
            return {"layer": [0, eps], "condition": "augmentation is not 1"}
    return None


def is_adc_cell(H, X):
    return adc_cell_violation(H, X) is None


def c2st(H, X):
    bad = cell_violation(H, X)
    if bad is not None:
        raise NotACell("not a cell", witness=bad)
    n = X.dim
    return AdcCell(tuple(s2m(H, l, i) for i, l in enumerate(X.neg)),
                   tuple(s2m(H, l, i) for i, l in enumerate(X.pos)), s2m(H, X.top, n))


def st2c(H, X):
    bad = adc_cell_violation(H, X)
    if bad is not None:
        raise NotACell("not a cell of the complex", witness=bad)
    return Cell(tuple(m2s(e) for e in X.neg), tuple(m2s(e) for e in X.pos), m2s(X.top))


def st_atom(H, x):
    n = H.dim(x)
    neg, pos = [None] * n, [None] * n
    lm = lp = gen(H, x)
    for j in range(n - 1, -1, -1):
        lm, lp = strict_minus(H, lm), strict_plus(H, lp)
        neg[j], pos[j] = lm, lp
    return AdcCell(tuple(neg), tuple(pos), gen(H, x))


def st_boundary(X, eps, k=None):
    if k is None:
        k = X.dim - 1
    if k == X.dim:
        return X
    return AdcCell(X.neg[:k], X.pos[:k], X.layer(k, eps))


def st_compose(X, Y, i):
    n = X.dim
    if Y.dim != n or not 0 <= i < n or st_boundary(X, "+", i) != st_boundary(Y, "-", i):
        raise NotComposable("cells are not %d-composable" % i, index=i)
    neg, pos = list(X.neg[:i]) + [X.neg[i]], list(X.pos[:i]) + [Y.pos[i]]
    for j in range(i + 1, n):
        neg.append(X.neg[j] + Y.neg[j])
        pos.append(X.pos[j] + Y.pos[j])
    return AdcCell(tuple(neg), tuple(pos), X.top + Y.top)


def st_identity(X, m=None):
    if m is None:
        m = X.dim + 1
    while X.dim < m:
        X = AdcCell(X.neg + (X.top,), X.pos + (X.top,), Elem(X.dim + 1))
    return X


def lt_relation(H, i):
    """<_i on the generators of dimension > i."""
    key = ("lt", i)
    if key not in H._cache:
        nodes = [x for x in H if H.dim(x) > i]
        atoms = {x: st_atom(H, x) for x in nodes}
        edges = {}
        for x in nodes:
            xp = atoms[x].layer(i, "+")
            edges[x] = {y for y in nodes if xp.meet(atoms[y].layer(i, "-"))}
        H._cache[key] = Relation(nodes, edges, key=H.key)
    return H._cache[key]


def loop_witness(H):
    for i in range(H.top_dim):
        R = lt_relation(H, i)
        c = R.cycle()
        if c is not None:
            via = []
            for a, b in zip(c, c[1:] + c[:1]):
                m = st_atom(H, a).layer(i, "+").meet(st_atom(H, b).layer(i, "-"))
                via.append(sorted(m.coeffs))
            return {"i": i, "cycle": c, "via": via}
    return None


def unital_witness(H):
    for x in H:
        A = st_atom(H, x)
        for eps in "-+":
            e = augmentation(H, A.layer(0, eps))
            if e != 1:
                return {"generator": x, "side": eps, "value": e}
    return None


def check_steiner(H, cap=None):
    r = AxiomReport("adc")
    r.add("adc", adc_witness(H))
    r.add("unital", unital_witness(H))
    r.add("loop-free", loop_witness(H))
    return r
