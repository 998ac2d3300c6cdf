"""Formal composites: evaluation into cells, linear extensions and the word
interpretation separating the two composites of the torsion counter-example."""

from .cells import activate, decompose, evaluate, glue, src
from .errors import CyclicOrder, NotACell, NotWhiskeringShape
from .hypergraph import tl
from .trees import Comp, Id, Leaf, comp, leaves

Gen = Leaf


def eval_cell(H, t):
    return evaluate(H, t)


def _bears(t, letters):
    return any(g in letters for g in leaves(t))


def word(t, letters, path="$"):
    """The sequence of top letters of a whiskered composite."""
    if isinstance(t, Leaf):
        return [letters[t.gen]] if t.gen in letters else []
    if isinstance(t, Id):
        return []
    left, right = word(t.l, letters, path + ".l"), word(t.r, letters, path + ".r")
    if t.i == 2:
        return left + right
    if _bears(t.l, letters) and _bears(t.r, letters):
        raise NotWhiskeringShape("both sides of a %d-composite carry letters" % t.i, path=path)
    return left or right


def linear_extensions(U, rel, key=None):
    """All orderings of U compatible with the strict order `rel(x, y)`.

    Emitted in lexicographic order of `key` (default: the ids themselves).
    """
    items = sorted(U, key=key)
    below = {x: {y for y in items if y != x and rel(y, x)} for x in items}
    if any(rel(x, x) for x in items) or _has_cycle(items, below):
        raise CyclicOrder("relation is not acyclic on the given set")

    def go(placed, rest):
        if not rest:
            yield list(placed)
            return
        for x in rest:
            if below[x] <= set(placed):
                placed.append(x)
                yield from go(placed, [y for y in rest if y != x])
                placed.pop()

    return go([], items)


def _has_cycle(items, below):
    state = {}

    def visit(x):
        state[x] = 1
        for y in below[x]:
            s = state.get(y)
            if s == 1 or (s is None and visit(y)):
                return True
        state[x] = 2
        return False

    return any(state.get(x) is None and visit(x) for x in items)


def top_order(H, X):
    """The relation <| restricted to the top of X."""
    return tl(H, X.top)


def reorder_decomposition(H, X, sigma):
    """A composition tree of X whose top generators appear in the order sigma.

    Glue the generators one at a time on the source of X, decompose each
    single-generator slice and chain the slices along dimension n - 1.
    """
    n = X.dim
    sigma = list(sigma)
    if n == 0 or sorted(sigma) != sorted(X.top):
        raise NotACell("sigma must enumerate the top of a positive-dimensional cell")
    if not X.top:
        return decompose(H, X)
    R = top_order(H, X)
    pos = {x: k for k, x in enumerate(sigma)}
    for x in sigma:
        for y in R.succ[x]:
            if pos[y] < pos[x]:
                raise CyclicOrder("sigma is not a linear extension", first=y, second=x)
    cur = src(X)
    pieces = []
    for x in sigma:
        pieces.append(decompose(H, glue(H, cur, {x})))
        cur = activate(H, cur, {x})
    return comp(n - 1, *pieces)


def top_leaves(H, t, n):
    return [g for g in leaves(t) if H.dim(g) == n]


__all__ = ["Gen", "Id", "Comp", "eval_cell", "word", "linear_extensions",
           "reorder_decomposition", "top_order", "top_leaves"]
