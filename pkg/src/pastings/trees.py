"""Formal composite trees: leaves, identities and i-composites."""

from dataclasses import dataclass

from .errors import IllTyped


@dataclass(frozen=True)
class Leaf:
    gen: str


@dataclass(frozen=True)
class Id:
    sub: object
    dim: int


@dataclass(frozen=True)
class Comp:
    i: int
    l: object
    r: object


def to_json(t, leaf="atom"):
    if isinstance(t, Leaf):
        return {leaf: t.gen}
    if isinstance(t, Id):
        return {"id": to_json(t.sub, leaf), "dim": t.dim}
    return {"comp": t.i, "l": to_json(t.l, leaf), "r": to_json(t.r, leaf)}


def from_json(obj, path="$"):
    if not isinstance(obj, dict):
        raise IllTyped("tree node must be an object", path=path)
    for k in ("atom", "gen"):
        if k in obj:
            return Leaf(obj[k])
    if "id" in obj:
        return Id(from_json(obj["id"], path + ".id"), int(obj["dim"]))
    if "comp" in obj:
        return Comp(int(obj["comp"]), from_json(obj["l"], path + ".l"),
                    from_json(obj["r"], path + ".r"))
    raise IllTyped("unrecognised tree node", path=path)


def leaves(t):
    if isinstance(t, Leaf):
        return [t.gen]
    if isinstance(t, Id):
        return leaves(t.sub)
    return leaves(t.l) + leaves(t.r)


def comp(i, *ts):
    """Left-nested i-composite of several trees."""
    out = ts[0]
    for t in ts[1:]:
        out = Comp(i, out, t)
    return out
