"""Axiom checkers for the formalisms, each reporting a witness on failure.

Axiom names: C0..C5 (parity complexes), J0..J5 (pasting schemes),
unital/loop-free (directed complexes), A0..A4 with A3', A4' for the
generalized axioms and their computable strengthenings.
"""

from .cells import atom, cell_violation, enumerate_cells, is_relevant
from .errors import CapExceeded
from .hypergraph import (MINUS, PLUS, SIGNS, acyclic, atom_layer, fork_free, fork_witness,
                         jtl_witness, minus, plus, pm, segment_violation, tl, tl_level)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


class AxiomReport:
    """Ordered verdicts for one formalism."""

    def __init__(self, formalism):
        self.formalism = formalism
        self.entries = []

    def add(self, name, witness=None, skipped=None):
        if skipped is not None:
            self.entries.append({"name": name, "verdict": SKIPPED, "reason": skipped})
        elif witness is None:
            self.entries.append({"name": name, "verdict": PASS})
        else:
            self.entries.append({"name": name, "verdict": FAIL, "witness": witness})
        return self

    def get(self, name):
        for e in self.entries:
            if e["name"] == name:
                return e
        raise KeyError(name)

    def verdict(self, name):
        return self.get(name)["verdict"]

    def witness(self, name):
        return self.get(name).get("witness")

    def failed(self):
        return [e["name"] for e in self.entries if e["verdict"] == FAIL]

    @property
    def status(self):
        vs = {e["verdict"] for e in self.entries}
        if FAIL in vs:
            return FAIL
        return SKIPPED if SKIPPED in vs else PASS

    @property
    def ok(self):
        return self.status == PASS

    def extend(self, other):
        self.entries.extend(other.entries)
        return self

    def to_json(self):
        return {"formalism": self.formalism, "status": self.status,
                "axioms": [dict(e) for e in self.entries]}

    def __repr__(self):
        return "AxiomReport(%s, %s)" % (self.formalism, self.status)


def _pos_dims(H):
    return range(1, H.top_dim + 1)


# shared pieces

def nonempty_witness(H):
    for n in _pos_dims(H):
        for x in H.sort(H.level(n)):
            for eps in SIGNS:
                if not H.border1(x, eps):
                    return {"generator": x, "side": eps}
    return None


def acyclic_witness(H):
    ok, w = acyclic(H)
    return None if ok else w


def relevance_witness(H):
    for n in _pos_dims(H):
        for x in H.sort(H.level(n)):
            if not is_relevant(H, x):
                return {"generator": x, "reason": cell_violation(H, atom(H, x))}
    return None


# Street

def globular_sides(H, x):
    X = frozenset([x])
    mm, pp = minus(H, minus(H, X)), plus(H, plus(H, X))
    mpl, pmi = plus(H, minus(H, X)), minus(H, plus(H, X))
    return mm | pp, mpl | pmi


def tight_witness(H, n, T):
    """(u, v, shared) with u <| v, v in T and u- meeting T^+-, or None."""
    T = frozenset(T)
    R = tl_level(H, n)
    Tpm = pm(H, T)
    for v in H.sort(T):
        for u in H.sort(R.nodes):
            if R(u, v):
                shared = H.src(u) & Tpm
                if shared:
                    return {"u": u, "v": v, "shared": H.sort(shared)}
    return None


def tight(H, n, T):
    if n < 1:
        raise ValueError("tightness is defined for n >= 1")
    return tight_witness(H, n, T) is None


def bridge_witness(H):
    """x <| y inside z^e and z^f with e != f (breaks C4)."""
    for n in range(H.top_dim):
        R = tl_level(H, n)
        for z in H.sort(H.level(n + 1)):
            for x in H.sort(H.src(z)):
                for y in H.sort(H.tgt(z)):
                    for a, b in ((x, y), (y, x)):
                        if R(a, b):
                            return {"x": a, "y": b, "z": z, "chain": R.chain(a, b)}
    return None


def check_street(H, cap=None, strict=False):
    r = AxiomReport("pc")
    r.add("C0", nonempty_witness(H))
    w = None
    for n in range(2, H.top_dim + 1):
        for x in H.sort(H.level(n)):
            left, right = globular_sides(H, x)
            if left != right:
                w = {"generator": x, "left": H.sort(left), "right": H.sort(right)}
                break
        if w:
            break
    r.add("C1", w)
    w = None
    for n in _pos_dims(H):
        for x in H.sort(H.level(n)):
            for eps in SIGNS:
                b = H.border1(x, eps)
                if not fork_free(H, n - 1, b):
                    w = {"generator": x, "side": eps, "set": H.sort(b),
                         "detail": fork_witness(H, n - 1, b)}
                    break
            if w:
                break
        if w:
            break
    r.add("C2", w)
    r.add("C3", acyclic_witness(H))
    r.add("C4", bridge_witness(H))
    w = None
    sides = SIGNS if strict else (MINUS,)
    for n in _pos_dims(H):
        for x in H.sort(H.level(n)):
            for i in range(1, n):
                for eps in sides:
                    T = atom_layer(H, x, i, eps)
                    t = tight_witness(H, i, T)
                    if t:
                        w = dict(t, generator=x, layer=[i, eps])
                        break
                if w:
                    break
            if w:
                break
        if w:
            break
    r.add("C5", w)
    return r


# generalized parity complexes

def a3c_witness(H):
    """x, k with <x>_(k,+) |> <x>_(k,-) (breaks A3')."""
    for n in _pos_dims(H):
        for x in H.sort(H.level(n)):
            for k in range(n):
                c = jtl_witness(H, atom_layer(H, x, k, PLUS), atom_layer(H, x, k, MINUS), k)
                if c is not None:
                    return {"generator": x, "k": k, "chain": c}
    return None


def a4c_witness(H):
    """x, y, n with disjoint <x>_(n,+), <y>_(n,-) chasing each other one level down."""
    for n in range(1, H.top_dim):
        high = H.sort([g for g in H if H.dim(g) > n])
        for x in high:
            xp = atom_layer(H, x, n, PLUS)
            xp1, xm1 = atom_layer(H, x, n - 1, PLUS), atom_layer(H, x, n - 1, MINUS)
            for y in high:
                if xp & atom_layer(H, y, n, MINUS):
                    continue
                c1 = jtl_witness(H, xp1, atom_layer(H, y, n - 1, MINUS), n - 1)
                if c1 is None:
                    continue
                c2 = jtl_witness(H, atom_layer(H, y, n - 1, PLUS), xm1, n - 1)
                if c2 is not None:
                    return {"x": x, "y": y, "n": n, "chains": [c1, c2]}
    return None


def _set_tl(R, S, T):
    for s in S:
        for t in T:
            if R(s, t):
                return [s, t]
    return None


def torsion(H, x, y, Z, n):
    """Evidence that x and y are in torsion with respect to the n-cell Z, or None."""
    Zn = Z.top
    xp, ym = atom_layer(H, x, n, PLUS), atom_layer(H, y, n, MINUS)
    if not (xp <= Zn and ym <= Zn) or xp & ym:
        return None
    R = tl(H, Zn)
    a, b = _set_tl(R, H.sort(xp), H.sort(ym)), _set_tl(R, H.sort(ym), H.sort(xp))
    if a and b:
        return {"forward": R.chain(*a), "backward": R.chain(*b)}
    return None


def a3_witness(H, cap):
    """Brute force: an atom slice that is not a segment in some cell. Raises CapExceeded."""
    for n in range(1, H.top_dim):
        cells = None
        for m in range(n + 1, H.top_dim + 1):
            for x in H.sort(H.level(m)):
                for eps in SIGNS:
                    V = atom_layer(H, x, n, eps)
                    if cells is None:
                        cells = enumerate_cells(H, n, cap)
                    for X in cells:
                        if V <= X.top:
                            c = segment_violation(H, X.top, V)
                            if c is not None:
                                return {"generator": x, "n": n, "side": eps,
                                        "cell": X.to_json(), "chain": c}
    return None


def a4_witness(H, cap):
    for n in range(1, H.top_dim):
        high = H.sort([g for g in H if H.dim(g) > n])
        if not high:
            continue
        cells = enumerate_cells(H, n, cap)
        for x in high:
            for y in high:
                for Z in cells:
                    t = torsion(H, x, y, Z, n)
                    if t is not None:
                        return dict(t, x=x, y=y, n=n, cell=Z.to_json())
    return None


def _base_gpc(H, formalism):
    r = AxiomReport(formalism)
    r.add("A0", nonempty_witness(H))
    r.add("A1", acyclic_witness(H))
    r.add("A2", relevance_witness(H))
    return r


def check_gpc_computable(H, cap=None):
    r = _base_gpc(H, "gpc_computable")
    r.add("A3'", a3c_witness(H))
    r.add("A4'", a4c_witness(H))
    return r


def check_gpc_full(H, cap=100000):
    r = _base_gpc(H, "gpc")
    for name, fn in (("A3", a3_witness), ("A4", a4_witness)):
        try:
            r.add(name, fn(H, cap))
        except CapExceeded as e:
            r.add(name, skipped="cap exceeded (%s)" % e)
    return r


def check_formalisms(H, cap=100000):
    from .johnson import check_johnson
    from .steiner import check_steiner
    return {
        "pc": check_street(H, cap),
        "ps": check_johnson(H, cap),
        "adc": check_steiner(H),
        "gpc_computable": check_gpc_computable(H, cap),
        "gpc": check_gpc_full(H, cap),
    }
