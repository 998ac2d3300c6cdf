"""Cells, their omega-category operations, gluing, excision and decomposition."""

import os
from dataclasses import dataclass

from . import trees
from .errors import (AxiomViolation, CapExceeded, IllTyped, IsAtom, NotACell,
                     NotComposable, NotGlueable, PastingError)
from .hypergraph import (MINUS, PLUS, SIGNS, atom_layers, fork_free, fork_witness,
                         minus, mp, plus, pm, tl)
from .movement import move_forward, moves

DEBUG = bool(os.environ.get("PASTINGS_DEBUG"))


def set_debug(flag):
    global DEBUG
    DEBUG = bool(flag)


@dataclass(frozen=True)
class Cell:
    """A pre-cell (X0-, X0+, ..., X(n-1)-, X(n-1)+, Xn).

    Whether it is a cell depends on the hypergraph; see `is_cell`.
    """
    neg: tuple
    pos: tuple
    top: frozenset

    @staticmethod
    def make(neg, pos, top):
        return Cell(tuple(frozenset(l) for l in neg), tuple(frozenset(l) for l in pos),
                    frozenset(top))

    @property
    def dim(self):
        return len(self.neg)

    def layer(self, i, eps):
        if i == self.dim:
            return self.top
        return self.neg[i] if eps == MINUS else self.pos[i]

    def all(self):
        out = set(self.top)
        for l in self.neg + self.pos:
            out |= l
        return frozenset(out)

    def to_json(self):
        return {"dim": self.dim, "neg": [sorted(l) for l in self.neg],
                "pos": [sorted(l) for l in self.pos], "top": sorted(self.top)}

    @staticmethod
    def from_json(obj):
        try:
            n = obj["dim"]
            if len(obj["neg"]) != n or len(obj["pos"]) != n:
                raise NotACell("neg/pos must have length dim")
            return Cell.make(obj["neg"], obj["pos"], obj["top"])
        except (KeyError, TypeError) as e:
            raise NotACell("malformed cell JSON: %s" % e)

    def __repr__(self):
        parts = []
        for a, b in zip(self.neg, self.pos):
            parts.append("%s|%s" % (sorted(a), sorted(b)))
        parts.append(str(sorted(self.top)))
        return "Cell(%s)" % ", ".join(parts)


PreCell = Cell


def cell_key(H, X):
    layers = [X.top]
    for a, b in zip(X.neg, X.pos):
        layers += [a, b]
    return (X.dim,) + tuple(tuple(H.sort(l)) for l in layers)


def cell_violation(H, X):
    """First reason why X is not a cell, or None."""
    n = X.dim
    for i in range(n + 1):
        for eps in SIGNS:
            for x in X.layer(i, eps):
                if x not in H or H.dim(x) != i:
                    return {"layer": [i, eps], "condition": "wrong dimension", "generator": x}
    for i in range(n + 1):
        for eps in (SIGNS if i < n else (MINUS,)):
            U = X.layer(i, eps)
            if not fork_free(H, i, U):
                return {"layer": [i, eps if i < n else "top"], "condition": "not fork-free",
                        "detail": fork_witness(H, i, U)}
    for i in range(n):
        for eps in (SIGNS if i + 1 < n else (MINUS,)):
            M = X.layer(i + 1, eps)
            if not moves(H, M, X.neg[i], X.pos[i]):
                return {"layer": [i + 1, eps if i + 1 < n else "top"],
                        "condition": "does not move X(%d,-) to X(%d,+)" % (i, i)}
    return None


def is_cell(H, X):
    return cell_violation(H, X) is None


def require_cell(H, X, what="cell"):
    bad = cell_violation(H, X)
    if bad is not None:
        raise NotACell("%s is not a cell" % what, witness=bad)


def boundary(X, eps, k=None):
    """The k-source (eps='-') or k-target (eps='+'); k defaults to dim - 1."""
    n = X.dim
    if k is None:
        k = n - 1
    if k < 0 or k > n:
        raise ValueError("boundary index %d out of range for a %d-cell" % (k, n))
    if k == n:
        return X
    return Cell(X.neg[:k], X.pos[:k], X.layer(k, eps))


def src(X, k=None):
    return boundary(X, MINUS, k)


def tgt(X, k=None):
    return boundary(X, PLUS, k)


def composable(X, Y, i):
    return X.dim == Y.dim and i < X.dim and tgt(X, i) == src(Y, i)


def compose(H, X, Y, i):
    n = X.dim
    if Y.dim != n:
        raise NotComposable("dimensions differ (%d vs %d)" % (n, Y.dim), index=i)
    if not 0 <= i < n:
        raise NotComposable("index %d out of range for %d-cells" % (i, n), index=i)
    if tgt(X, i) != src(Y, i):
        raise NotComposable("target of the left cell differs from source of the right one",
                            index=i, left=tgt(X, i).to_json(), right=src(Y, i).to_json())
    neg, pos = list(X.neg[:i]), list(X.pos[:i])
    if i < n:
        neg.append(X.neg[i])
        pos.append(Y.pos[i])
    for j in range(i + 1, n):
        neg.append(X.neg[j] | Y.neg[j])
        pos.append(X.pos[j] | Y.pos[j])
    Z = Cell(tuple(neg), tuple(pos), X.top | Y.top)
    if DEBUG:
        require_cell(H, Z, "composite")
        if i == n - 1:
            assert not (X.top & Y.top)
            assert not (minus(H, X.top) & plus(H, Y.top))
    return Z


def identity(X, m=None):
    """The identity on X lifted to dimension m (default dim + 1)."""
    if m is None:
        m = X.dim + 1
    if m < X.dim:
        raise ValueError("cannot lift a %d-cell to dimension %d" % (X.dim, m))
    while X.dim < m:
        X = Cell(X.neg + (X.top,), X.pos + (X.top,), frozenset())
    return X


def atom(H, x):
    key = ("atom", x)
    if key not in H._cache:
        neg, pos, top = atom_layers(H, x)
        H._cache[key] = Cell(neg, pos, top)
    return H._cache[key]


def is_relevant(H, x):
    return is_cell(H, atom(H, x))


# gluing

def _check_glue_set(H, n, G):
    if not fork_free(H, n + 1, G):
        raise NotGlueable("G is not fork-free", condition="fork-free",
                          detail=fork_witness(H, n + 1, G))
    for g in G:
        if H.dim(g) != n + 1:
            raise NotGlueable("%r is not of dimension %d" % (g, n + 1), condition="dimension")


def glue(H, X, G):
    """The (n+1)-cell with top G sitting on the n-cell X."""
    G = frozenset(G)
    n = X.dim
    _check_glue_set(H, n, G)
    missing = mp(H, G) - X.top
    if missing:
        raise NotGlueable("G^-+ is not contained in the top of X", condition="G^-+ in Xn",
                          missing=H.sort(missing))
    Y = Cell(X.neg + (X.top,), X.pos + ((X.top | plus(H, G)) - minus(H, G),), G)
    if DEBUG:
        assert not (plus(H, G) & X.top), "gluing theorem (a) failed"
        require_cell(H, Y, "glued cell")
    return Y


def activate(H, X, G):
    return tgt(glue(H, X, G))


def dual_glue(H, X, G):
    G = frozenset(G)
    n = X.dim
    _check_glue_set(H, n, G)
    missing = pm(H, G) - X.top
    if missing:
        raise NotGlueable("G^+- is not contained in the top of X", condition="G^+- in Xn",
                          missing=H.sort(missing))
    Y = Cell(X.neg + ((X.top | minus(H, G)) - plus(H, G),), X.pos + (X.top,), G)
    if DEBUG:
        assert not (minus(H, G) & X.top), "dual gluing theorem (a) failed"
        require_cell(H, Y, "dually glued cell")
    return Y


def dual_activate(H, X, G):
    return src(dual_glue(H, X, G))


# rank and excision

def rank(X):
    n = X.dim
    r = tuple(len(X.neg[i] & X.pos[i]) for i in range(1, n))
    return r + (len(X.top),)


def rank_lt(r, s):
    if len(r) != len(s):
        raise ValueError("ranks of different lengths")
    for a, b in zip(reversed(r), reversed(s)):
        if a != b:
            return a < b
    return False


def _left_split(H, X, i, x):
    n = X.dim
    Y = identity(glue(H, src(X, i), {x}), n)
    moved = (X.neg[i] | H.tgt(x)) - H.src(x)
    neg = list(X.neg[:i]) + [moved] + [l - {x} if j == i + 1 else l
                                       for j, l in enumerate(X.neg[i + 1:], i + 1)]
    pos = list(X.pos[:i]) + [X.pos[i]] + [l - {x} if j == i + 1 else l
                                          for j, l in enumerate(X.pos[i + 1:], i + 1)]
    top = X.top - {x} if i + 1 == n else X.top
    return Y, Cell(tuple(neg), tuple(pos), top)


def _right_split(H, X, i, y):
    n = X.dim
    Z = identity(dual_glue(H, tgt(X, i), {y}), n)
    moved = (X.pos[i] | H.src(y)) - H.tgt(y)
    neg = list(X.neg[:i]) + [X.neg[i]] + [l - {y} if j == i + 1 else l
                                          for j, l in enumerate(X.neg[i + 1:], i + 1)]
    pos = list(X.pos[:i]) + [moved] + [l - {y} if j == i + 1 else l
                                       for j, l in enumerate(X.pos[i + 1:], i + 1)]
    top = X.top - {y} if i + 1 == n else X.top
    return Cell(tuple(neg), tuple(pos), top), Z


def _extremes(H, U, w, lower):
    """Elements of U that are <|-minimal below w (or maximal above w)."""
    R = tl(H, U)
    if lower:
        near = {v for v in U if R(v, w)} | {w}
        return [v for v in H.sort(near) if not any(R(t, v) for t in U)]
    near = {v for v in U if R(w, v)} | {w}
    return [v for v in H.sort(near) if not any(R(v, t) for t in U)]


def excise(H, X, u):
    """Split X as Y *_i Z with both ranks strictly smaller. Returns (i, Y, Z)."""
    n = X.dim
    if u not in X.top:
        raise ValueError("%r is not in the top layer" % u)
    A = atom(H, u)
    if X == A:
        raise IsAtom("the cell is the atom of %r" % u, generator=u)
    i = n - 1
    while i >= 0 and X.layer(i + 1, MINUS) == A.layer(i + 1, MINUS) and \
            X.layer(i + 1, PLUS) == A.layer(i + 1, PLUS):
        i -= 1
    if i < 0:
        raise AxiomViolation("cell agrees with the atom of %r above dimension 0" % u)
    lo, hi = X.layer(i + 1, MINUS), X.layer(i + 1, PLUS)
    inner = (lo & hi) - (A.layer(i + 1, MINUS) | A.layer(i + 1, PLUS))
    if not inner:
        raise AxiomViolation("no excisable generator at dimension %d" % (i + 1))
    w = H.sort(inner)[0]
    r = rank(X)
    tried = []
    for x in _extremes(H, lo, w, True):
        if x not in A.layer(i + 1, MINUS):
            tried.append(("left", x))
    for y in _extremes(H, hi, w, False):
        if y not in A.layer(i + 1, PLUS):
            tried.append(("right", y))
    # fall back on any inner generator if the extremal choices do not work out
    for x in H.sort(inner):
        tried += [("left", x), ("right", x)]
    seen = set()
    for side, x in tried:
        if (side, x) in seen:
            continue
        seen.add((side, x))
        try:
            if side == "left":
                if not mp(H, {x}) <= X.neg[i] or x not in lo:
                    continue
                Y, Z = _left_split(H, X, i, x)
            else:
                if not pm(H, {x}) <= X.pos[i] or x not in hi:
                    continue
                Y, Z = _right_split(H, X, i, x)
        except PastingError:
            continue
        if not (is_cell(H, Y) and is_cell(H, Z)):
            continue
        if not (rank_lt(rank(Y), r) and rank_lt(rank(Z), r)):
            continue
        try:
            if compose(H, Y, Z, i) != X:
                continue
        except NotComposable:
            continue
        return i, Y, Z
    raise AxiomViolation("excision failed at dimension %d" % (i + 1),
                         generator=u, tried=[list(t) for t in tried])


def decompose(H, X):
    """A composite tree of atoms and identities evaluating to X."""
    n = X.dim
    if n == 0:
        (x,) = X.top
        return trees.Leaf(x)
    if not X.top:
        if X.neg[n - 1] != X.pos[n - 1]:
            raise NotACell("empty top with different boundaries")
        return trees.Id(decompose(H, src(X)), n)
    u = H.sort(X.top)[0]
    if X == atom(H, u):
        return trees.Leaf(u)
    i, Y, Z = excise(H, X, u)
    return trees.Comp(i, decompose(H, Y), decompose(H, Z))


def _lift(X, m):
    return identity(X, m) if X.dim < m else X


def evaluate(H, t, path="$"):
    """Evaluate a composite tree. Lower-dimensional operands are lifted by identities."""
    if isinstance(t, trees.Leaf):
        if t.gen not in H:
            raise IllTyped("unknown generator %r" % t.gen, path=path)
        return atom(H, t.gen)
    if isinstance(t, trees.Id):
        X = evaluate(H, t.sub, path + ".id")
        if t.dim < X.dim:
            raise IllTyped("identity to dimension %d below %d" % (t.dim, X.dim), path=path)
        return identity(X, t.dim)
    X = evaluate(H, t.l, path + ".l")
    Y = evaluate(H, t.r, path + ".r")
    m = max(X.dim, Y.dim)
    try:
        return compose(H, _lift(X, m), _lift(Y, m), t.i)
    except NotComposable as e:
        raise IllTyped(str(e), path=path, **e.info)


# enumeration

def _fork_free_subsets(H, n, cands):
    """All fork-free subsets of cands (n > 0), as frozensets."""
    cands = H.sort(cands)
    out = []

    def go(k, chosen, used_m, used_p):
        if k == len(cands):
            out.append(frozenset(chosen))
            return
        go(k + 1, chosen, used_m, used_p)
        x = cands[k]
        if not (H.src(x) & used_m) and not (H.tgt(x) & used_p):
            chosen.append(x)
            go(k + 1, chosen, used_m | H.src(x), used_p | H.tgt(x))
            chosen.pop()

    go(0, [], frozenset(), frozenset())
    return out


def enumerate_cells(H, n, cap=100000):
    """Every n-cell of H, sorted. Raises CapExceeded beyond `cap` cells at any level."""
    key = ("cells", n)
    if key in H._cache:
        found = H._cache[key]
        if len(found) > cap:
            raise CapExceeded("more than %d cells of dimension %d" % (cap, n), count=len(found))
        return found
    if n == 0:
        found = [Cell((), (), frozenset([x])) for x in H.sort(H.level(0))]
    else:
        found = {}
        for Y in enumerate_cells(H, n - 1, cap):
            U = Y.top
            cands = [s for s in H.level(n) if not (H.tgt(s) & U)]
            for S in _fork_free_subsets(H, n, cands):
                V = move_forward(H, U, S)
                if V is None:
                    continue
                X = Cell(Y.neg + (U,), Y.pos + (V,), S)
                if is_cell(H, X):
                    found[cell_key(H, X)] = X
                    if len(found) > cap:
                        raise CapExceeded("more than %d cells of dimension %d" % (cap, n),
                                          count=len(found))
        found = [found[k] for k in sorted(found)]
    H._cache[key] = found
    return found
