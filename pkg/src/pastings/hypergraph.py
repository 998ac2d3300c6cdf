"""Graded generators with source and target sets, and the basic relations on them."""

from collections import deque
from dataclasses import dataclass

from .errors import (DanglingBorder, DimensionMismatch, DimensionUnderflow,
                     DuplicateId, InvalidHypergraph)

MINUS, PLUS = "-", "+"
SIGNS = (MINUS, PLUS)
STRICT_MINUS, STRICT_PLUS = "∓", "±"  # the x^{-+} and x^{+-} forms

_EMPTY = frozenset()


class Hypergraph:
    """An omega-hypergraph.

    `generators` is an iterable of (id, dim, src, tgt). Nothing is checked here;
    call `validate` (or build through `from_json`) before use.
    """

    def __init__(self, generators, name=""):
        self.name = name
        self._raw = [(g, d, tuple(s or ()), tuple(t or ())) for g, d, s, t in generators]
        self._dim = {}
        self._src = {}
        self._tgt = {}
        for g, d, s, t in self._raw:
            self._dim[g] = d
            self._src[g] = frozenset(s)
            self._tgt[g] = frozenset(t)
        top = max(self._dim.values(), default=-1)
        levels = [set() for _ in range(top + 1)]
        for g, d in self._dim.items():
            if d >= 0:
                levels[d].add(g)
        self.levels = tuple(frozenset(l) for l in levels)
        # interned order: by dimension, then by id
        order = sorted(self._dim, key=lambda g: (self._dim[g], g))
        self.index = {g: i for i, g in enumerate(order)}
        self._cache = {}

    # basic accessors

    def __contains__(self, x):
        return x in self._dim

    def __iter__(self):
        return iter(sorted(self._dim, key=self.index.__getitem__))

    def __len__(self):
        return len(self._dim)

    @property
    def top_dim(self):
        return len(self.levels) - 1

    def dim(self, x):
        return self._dim[x]

    def level(self, n):
        if 0 <= n < len(self.levels):
            return self.levels[n]
        return _EMPTY

    def src(self, x):
        return self._src[x]

    def tgt(self, x):
        return self._tgt[x]

    def border1(self, x, eps):
        return self._src[x] if eps == MINUS else self._tgt[x]

    def key(self, x):
        return self.index[x]

    def sort(self, S):
        return sorted(S, key=self.index.__getitem__)

    def set_dim(self, S):
        """Common dimension of a nonempty set of generators (None when empty)."""
        dims = {self._dim[x] for x in S}
        if not dims:
            return None
        if len(dims) > 1:
            raise DimensionMismatch("mixed dimensions in %s" % sorted(S))
        return dims.pop()

    def restrict(self, keep, name=None):
        """Sub-hypergraph on `keep`, which must be closed under borders."""
        keep = set(keep)
        gens = [(g, d, s, t) for g, d, s, t in self._raw if g in keep]
        return Hypergraph(gens, self.name if name is None else name)

    def __repr__(self):
        return "Hypergraph(%r, %d generators)" % (self.name, len(self._dim))


def validate(H):
    seen = set()
    for g, d, s, t in H._raw:
        if not isinstance(g, str) or not g:
            raise InvalidHypergraph("generator ids must be non-empty strings", generator=g)
        if g in seen:
            raise DuplicateId("duplicate generator %r" % g, generator=g)
        seen.add(g)
        if not isinstance(d, int) or d < 0:
            raise DimensionMismatch("bad dimension for %r" % g, generator=g)
    for g, d, s, t in H._raw:
        if d == 0 and (s or t):
            raise DimensionMismatch("0-generator %r has borders" % g, generator=g)
        for side in (s, t):
            if len(set(side)) != len(side):
                raise DuplicateId("repeated border element in %r" % g, generator=g)
            for y in side:
                if y not in H._dim:
                    raise DanglingBorder("%r refers to unknown %r" % (g, y),
                                         generator=g, missing=y)
                if H._dim[y] != d - 1:
                    raise DimensionMismatch("%r has border %r of dimension %d" % (g, y, H._dim[y]),
                                            generator=g, border=y)


def from_json(obj):
    try:
        gens = []
        for item in obj["generators"]:
            d = item["dim"]
            gens.append((item["id"], d, item.get("src", ()), item.get("tgt", ())))
        H = Hypergraph(gens, obj.get("name", ""))
    except (KeyError, TypeError) as e:
        raise InvalidHypergraph("malformed hypergraph JSON: %s" % e)
    validate(H)
    return H


def to_json(H):
    gens = []
    for g in H:
        item = {"id": g, "dim": H.dim(g)}
        if H.dim(g) > 0:
            item["src"] = sorted(H.src(g))
            item["tgt"] = sorted(H.tgt(g))
        gens.append(item)
    return {"name": H.name, "generators": gens}


# borders

def minus(H, S):
    out = set()
    for x in S:
        out |= H.src(x)
    return frozenset(out)


def plus(H, S):
    out = set()
    for x in S:
        out |= H.tgt(x)
    return frozenset(out)


def sign(H, S, eps):
    return minus(H, S) if eps == MINUS else plus(H, S)


def mp(H, S):
    """S^-+ : sources that are not targets."""
    return minus(H, S) - plus(H, S)


def pm(H, S):
    """S^+- : targets that are not sources."""
    return plus(H, S) - minus(H, S)


def strict(H, S, eps):
    return mp(H, S) if eps == MINUS else pm(H, S)


_PATH_ALIASES = {"-": MINUS, "+": PLUS, STRICT_MINUS: STRICT_MINUS, STRICT_PLUS: STRICT_PLUS,
                 "−": MINUS}


def border(H, S, path, n=None):
    """Iterated border along `path`, e.g. "--", "+-" or "-∓"."""
    steps = [_PATH_ALIASES.get(c) for c in path]
    if not steps or None in steps:
        raise ValueError("bad border path %r" % path)
    for c in steps[:-1]:
        if c in (STRICT_MINUS, STRICT_PLUS):
            raise ValueError("strict border only allowed as the last step")
    S = frozenset(S)
    if n is None:
        n = H.set_dim(S)
    if n is not None and len(steps) > n:
        raise DimensionUnderflow("path %r too long for dimension %d" % (path, n))
    for c in steps:
        if c == MINUS:
            S = minus(H, S)
        elif c == PLUS:
            S = plus(H, S)
        elif c == STRICT_MINUS:
            S = mp(H, S)
        else:
            S = pm(H, S)
    return S


def fork_free(H, n, U):
    U = list(U)
    if n == 0:
        return len(U) == 1
    for eps in SIGNS:
        seen = set()
        for x in U:
            b = H.border1(x, eps)
            if seen & b:
                return False
            seen |= b
    return True


def fork_witness(H, n, U):
    """A pair (x, y, sign, shared) breaking fork-freeness, or None."""
    U = H.sort(U)
    if n == 0:
        return None if len(U) == 1 else {"size": len(U)}
    for i, x in enumerate(U):
        for y in U[i + 1:]:
            for eps in SIGNS:
                common = H.border1(x, eps) & H.border1(y, eps)
                if common:
                    return {"pair": [x, y], "sign": eps, "shared": H.sort(common)}
    return None


# relations

class Relation:
    """A relation on a finite ground set, stored as one-step edges plus closure."""

    def __init__(self, nodes, edges, reflexive=False, key=None):
        self.nodes = frozenset(nodes)
        self.key = key
        self.edges = {x: frozenset(edges.get(x, ())) for x in self.nodes}
        self.reflexive = reflexive
        reach = {}
        for x in self.nodes:
            seen = set()
            todo = list(self.edges[x])
            while todo:
                y = todo.pop()
                if y in seen:
                    continue
                seen.add(y)
                todo.extend(self.edges[y])
            if reflexive:
                seen.add(x)
            reach[x] = frozenset(seen)
        self.succ = reach

    def __call__(self, x, y):
        return x in self.succ and y in self.succ[x]

    def __contains__(self, pair):
        return self(*pair)

    def pairs(self):
        return {(x, y) for x, ys in self.succ.items() for y in ys}

    def irreflexive(self):
        return all(x not in self.succ[x] for x in self.nodes)

    def _sorted(self, S):
        return sorted(S, key=self.key) if self.key else sorted(S)

    def chain(self, x, y):
        """Shortest one-step chain x = c0, c1, ..., ck = y (k >= 1), or None."""
        if self.reflexive and x == y:
            return [x]
        parent = {}
        todo = deque()
        for z in self._sorted(self.edges.get(x, ())):
            if z not in parent:
                parent[z] = x
                todo.append(z)
        while todo:
            z = todo.popleft()
            if z == y:
                path = [y]
                while True:
                    p = parent[path[-1]]
                    path.append(p)
                    if p == x and len(path) > 1:
                        break
                return path[::-1]
            for w in self._sorted(self.edges[z]):
                if w not in parent:
                    parent[w] = z
                    todo.append(w)
        return None

    def cycle(self):
        """Some x with x R x and a shortest cycle through it, or None."""
        for x in self._sorted(self.nodes):
            if x in self.succ[x]:
                return self.chain(x, x)[:-1]
        return None


def tl1(H, x, y):
    return bool(H.tgt(x) & H.src(y))


def tl(H, U):
    """The transitive closure of x <|1 y (x+ meets y-) restricted to U."""
    U = frozenset(U)
    key = ("tl", U)
    if key not in H._cache:
        by_src = {}
        for y in U:
            for b in H.src(y):
                by_src.setdefault(b, set()).add(y)
        edges = {}
        for x in U:
            out = set()
            for b in H.tgt(x):
                out |= by_src.get(b, set())
            edges[x] = out
        H._cache[key] = Relation(U, edges, key=H.key)
    return H._cache[key]


def tl_level(H, n):
    return tl(H, H.level(n))


def acyclic(H):
    """(True, None) or (False, {"dim": n, "cycle": [...]})."""
    for n in range(1, H.top_dim + 1):
        c = tl_level(H, n).cycle()
        if c is not None:
            return False, {"dim": n, "cycle": c}
    return True, None


def segment_violation(H, U, V):
    """A <|1-chain inside U leaving V and coming back, or None."""
    U = frozenset(U)
    V = frozenset(V)
    R = tl(H, U)
    for x in H.sort(V):
        parent = {}
        todo = deque()
        for y in H.sort(R.edges[x] - V):
            parent[y] = x
            todo.append(y)
        while todo:
            y = todo.popleft()
            for z in H.sort(R.edges[y]):
                if z in V:
                    path = [z, y]
                    while path[-1] != x:
                        path.append(parent[path[-1]])
                    return path[::-1]
                if z not in parent:
                    parent[z] = y
                    todo.append(z)
    return None


def is_segment(H, U, V):
    return segment_violation(H, U, V) is None


def is_initial(H, U, V):
    R = tl(H, U)
    V = frozenset(V)
    return all(x in V for x in R.nodes if R.succ[x] & V)


def is_terminal(H, U, V):
    R = tl(H, U)
    V = frozenset(V)
    return all(y in V for x in V for y in R.succ[x])


def jtl(H, n):
    """Reflexive-transitive closure of: x in z- and y in z+ for some z of dimension n+1."""
    key = ("jtl", n)
    if key not in H._cache:
        edges = {}
        for z in H.level(n + 1):
            for x in H.src(z):
                edges.setdefault(x, set()).update(H.tgt(z))
        H._cache[key] = Relation(H.level(n), edges, reflexive=True, key=H.key)
    return H._cache[key]


def jtl_between(H, S, T, n=None):
    return jtl_witness(H, S, T, n) is not None


def jtl_witness(H, S, T, n=None):
    """Shortest chain s = c0 ... ck = t with s in S, t in T, or None."""
    S, T = frozenset(S), frozenset(T)
    if n is None:
        n = H.set_dim(S | T)
    if n is None:
        return None
    R = jtl(H, n)
    best = None
    for s in H.sort(S):
        for t in H.sort(T):
            if R(s, t):
                c = R.chain(s, t)
                if best is None or len(c) < len(best):
                    best = c
    return best


# atoms and closure

def atom_layers(H, x):
    """(neg, pos, top): neg[i] and pos[i] are the i-th layers below x."""
    n = H.dim(x)
    neg = [None] * n
    pos = [None] * n
    cm = cp = frozenset([x])
    for j in range(n - 1, -1, -1):
        cm = mp(H, cm)
        cp = pm(H, cp)
        neg[j] = cm
        pos[j] = cp
    return tuple(neg), tuple(pos), frozenset([x])


def atom_layer(H, x, i, eps):
    neg, pos, top = atom_layers(H, x)
    if i == H.dim(x):
        return top
    return neg[i] if eps == MINUS else pos[i]


def closure_set(H, S):
    """Least superset of S closed under taking sources and targets."""
    out = set(S)
    todo = list(out)
    while todo:
        x = todo.pop()
        for y in H.src(x) | H.tgt(x):
            if y not in out:
                out.add(y)
                todo.append(y)
    return frozenset(out)


@dataclass(frozen=True)
class Fgs:
    """A finite graded subset (X_0, ..., X_n)."""
    layers: tuple

    @staticmethod
    def of(*layers):
        return Fgs(tuple(frozenset(l) for l in layers))

    @staticmethod
    def from_set(H, S, n=None):
        S = frozenset(S)
        if n is None:
            n = max((H.dim(x) for x in S), default=0)
        layers = [set() for _ in range(n + 1)]
        for x in S:
            d = H.dim(x)
            if d > n:
                raise DimensionMismatch("%r above dimension %d" % (x, n))
            layers[d].add(x)
        return Fgs(tuple(frozenset(l) for l in layers))

    @property
    def dim(self):
        return len(self.layers) - 1

    @property
    def top(self):
        return self.layers[-1]

    def all(self):
        out = set()
        for l in self.layers:
            out |= l
        return frozenset(out)

    def __getitem__(self, i):
        return self.layers[i]

    def to_json(self):
        return {"dim": self.dim, "layers": [sorted(l) for l in self.layers]}

    @staticmethod
    def from_json(obj):
        layers = tuple(frozenset(l) for l in obj["layers"])
        if len(layers) != obj["dim"] + 1:
            raise InvalidHypergraph("fgs layer count does not match dim")
        return Fgs(layers)


def check_fgs(H, X):
    for i, l in enumerate(X.layers):
        for x in l:
            if x not in H or H.dim(x) != i:
                raise DimensionMismatch("%r does not belong in layer %d" % (x, i))


def closure(H, X):
    """Closure of an fgs, keeping its dimension."""
    return Fgs.from_set(H, closure_set(H, X.all()), X.dim)
