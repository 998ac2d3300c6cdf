"""Movement of sets of generators and orthogonality."""

from .errors import PreconditionFailed
from .hypergraph import minus, mp, plus


def moves(H, M, U, V):
    """True when M moves U to V."""
    U, V = frozenset(U), frozenset(V)
    Mm, Mp = minus(H, M), plus(H, M)
    return U == (V | Mm) - Mp and V == (U | Mp) - Mm


def forward_obstruction(H, U, M):
    """Why move_forward(U, M) is undefined, or None when it is defined."""
    U = frozenset(U)
    missing = mp(H, M) - U
    if missing:
        return {"condition": "M^-+ not in U", "missing": H.sort(missing)}
    clash = U & plus(H, M)
    if clash:
        return {"condition": "U meets M+", "shared": H.sort(clash)}
    return None


def move_forward(H, U, M):
    """(U | M+) - M- when M^-+ is in U and U misses M+, else None."""
    if forward_obstruction(H, U, M) is not None:
        return None
    return (frozenset(U) | plus(H, M)) - minus(H, M)


def move_backward(H, V, M):
    """Dual of move_forward: the U that M moves to V."""
    V = frozenset(V)
    if not (plus(H, M) - minus(H, M)) <= V or V & minus(H, M):
        return None
    return (V | minus(H, M)) - plus(H, M)


def orthogonal(H, S, T):
    return not (minus(H, S) & minus(H, T)) and not (plus(H, S) & plus(H, T))


def split_move(H, U, W, S, T):
    """V such that S moves U to V and T moves V to W."""
    S, T = frozenset(S), frozenset(T)
    if not moves(H, S | T, U, W):
        raise PreconditionFailed("S | T does not move U to W", hypothesis="moves")
    if not mp(H, S) <= frozenset(U):
        raise PreconditionFailed("S^-+ is not contained in U", hypothesis="S^-+ in U")
    if not orthogonal(H, S, T):
        raise PreconditionFailed("S and T are not orthogonal", hypothesis="orthogonal")
    return (frozenset(U) | plus(H, S)) - minus(H, S)
