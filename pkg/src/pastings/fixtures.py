"""The worked examples as loadable hypergraphs, with a few cells and terms each.

Generator names use ASCII words for Greek letters and apostrophes for primes.
`expected` maps a formalism to axioms it is known to fail. An empty list
means every axiom of that formalism holds; a non-empty one only pins the
listed failures. Formalisms left out are not pinned.
"""

from dataclasses import dataclass, field

from .cells import Cell
from .errors import UnknownFixture
from .hypergraph import Fgs, Hypergraph, validate
from .trees import Comp, Leaf, comp


@dataclass
class Fixture:
    name: str
    hypergraph: Hypergraph
    cells: dict = field(default_factory=dict)
    terms: dict = field(default_factory=dict)
    fgs: dict = field(default_factory=dict)
    letters: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    note: str = ""


def _hg(name, points, *levels):
    """points: 0-generators; each level maps id -> (src, tgt)."""
    gens = [(p, 0, (), ()) for p in points.split()]
    for d, level in enumerate(levels, 1):
        for g, (s, t) in level.items():
            gens.append((g, d, tuple(s.split()), tuple(t.split())))
    H = Hypergraph(gens, name)
    validate(H)
    return H


def _cell(*layers):
    """_cell(X0-, X0+, ..., Xn) with layers given as space separated ids."""
    *low, top = layers
    neg = [l.split() for l in low[0::2]]
    pos = [l.split() for l in low[1::2]]
    return Cell.make(neg, pos, top.split())


def _ex_ppc():
    H = _hg("ex_ppc", "x y y' z",
            {"a": ("x", "y"), "b": ("x", "y'"), "c": ("y", "z"), "d": ("y'", "z")},
            {"alpha": ("a c", "b d")})
    return Fixture("ex_ppc", H, note="the 2-generator is called f in the pasting-scheme reading")


def _two_pd():
    H = _hg("two_pd", "u v w x y",
            {"a": ("u", "v"), "b": ("v", "w"), "c": ("v", "w"), "d": ("v", "w"),
             "e": ("w", "x"), "f": ("w", "x"), "g": ("w", "x"), "h": ("x", "y")},
            {"alpha": ("b", "c"), "beta": ("c", "d"), "gamma": ("e", "f"), "delta": ("f", "g")})
    L = Leaf
    t1 = comp(0, L("a"), Comp(1, L("alpha"), L("beta")),
              Comp(1, Comp(0, L("gamma"), L("h")), Comp(0, L("delta"), L("h"))))
    t2 = comp(1, comp(0, L("a"), L("alpha"), L("e"), L("h")),
              comp(0, L("a"), L("c"), L("gamma"), L("h")),
              comp(0, L("a"), L("beta"), L("delta"), L("h")))
    X = _cell("u", "y", "a b e h", "a d g h", "alpha beta gamma delta")
    return Fixture("two_pd", H, cells={"X": X}, terms={"intro1": t1, "intro2": t2},
                   expected={"gpc_computable": [], "gpc": []})


def _two_pd_ambi():
    H = _hg("two_pd_ambi", "w x y z",
            {"a": ("w", "x"), "a'": ("w", "x"), "b": ("x", "y"),
             "c": ("y", "z"), "c'": ("y", "z")},
            {"alpha": ("a b", "a' b"), "beta": ("b c", "b c'")})
    return Fixture("two_pd_ambi", H, expected={"ps": ["J2"], "gpc": ["A1"]})


def _not_acyclic():
    H = _hg("not_acyclic", "x y", {"f": ("x", "y"), "g": ("y", "x")})
    return Fixture("not_acyclic", H, expected={"pc": ["C3"], "gpc": ["A1"]})


def _johnson_non_glob():
    H = _hg("johnson_non_glob", "w x y z",
            {"a": ("w", "z"), "b": ("x", "y")},
            {"f": ("a", "b")})
    return Fixture("johnson_non_glob", H, expected={"pc": ["C1"], "gpc": ["A2"]})


def _ex_non_wfs():
    H = _hg("ex_non_wfs", "x y z", {"f": ("x y", "z")})
    return Fixture("ex_non_wfs", H, expected={"pc": ["C2"], "ps": ["J3"], "gpc": ["A2"]})


def _not_3b():
    H = _hg("not_3b", "x y y' z",
            {"f": ("x", "y"), "f'": ("x", "y'"), "g": ("y", "z"), "g'": ("y'", "z"),
             "h": ("y", "y'")},
            {"alpha": ("f g", "f' g'")})
    return Fixture("not_3b", H,
                   expected={"pc": ["C4"], "ps": [], "adc": [], "gpc": []})


def _ohg_cells():
    H = _hg("ohg_cells", "t u v v' w w' w'' x x' y z",
            {"a": ("t", "u"), "b": ("u", "v"), "b'": ("u", "v'"),
             "c": ("v", "w"), "c''": ("v", "w'"), "c'''": ("v'", "w'"), "c'": ("v'", "w''"),
             "d": ("w", "x"), "d''": ("w'", "x"), "d'''": ("w'", "x'"), "d'": ("w''", "x'"),
             "e": ("x", "y"), "e'": ("x'", "y"), "f": ("y", "z")},
            {"alpha": ("b c''", "b' c'''"), "beta": ("c d", "c'' d''"),
             "gamma": ("c''' d'''", "c' d'"), "delta": ("d'' e", "d''' e'")})
    X = _cell("t", "z", "a b c d e f", "a b' c' d' e' f", "alpha beta gamma delta")
    # the printed listing has b in place of b' on the target side
    Y = _cell("t", "w'", "a b c''", "a b' c'''", "alpha")
    return Fixture("ohg_cells", H, cells={"X": X, "Y": Y, "t": _cell("t")})


def _wfs_shape(name, y1, y2):
    return _hg(name, "x %s z" % (y1 if y1 == y2 else y1 + " " + y2),
               {"a1": ("x", y1), "a2": (y1, "z"), "b": ("x", "z"),
                "c1": ("x", y2), "c2": (y2, "z")},
               {"alpha": ("a1 a2", "b"), "beta": ("b", "c1 c2")})


def _ex_wfs():
    H = _wfs_shape("ex_wfs", "y1", "y2")
    fgs = {
        "x": Fgs.of({"x"}),
        "z": Fgs.of({"z"}),
        "upper": Fgs.of({"x", "y1", "z"}, {"a1", "a2"}),
        "lower": Fgs.of({"x", "y2", "z"}, {"c1", "c2"}),
        "full": Fgs.of({"x", "y1", "y2", "z"}, {"a1", "a2", "b", "c1", "c2"},
                       {"alpha", "beta"}),
    }
    return Fixture("ex_wfs", H, fgs=fgs, expected={"adc": [], "ps": []})


def _ex_johncyclic():
    H = _wfs_shape("ex_johncyclic", "y", "y")
    return Fixture("ex_johncyclic", H, expected={"ps": ["J2"]})


def _non_segment_core(name, with_a):
    lv2 = {"alpha1": ("a", "a'"), "alpha2": ("a' b", "b'"),
           "alpha3": ("b'", "c d e"), "alpha4": ("d", "d'")}
    levels = [{"a": ("x", "y"), "a'": ("x", "y"), "c": ("x", "y"),
               "d": ("y", "z"), "d'": ("y", "z"), "b": ("y", "w"), "b'": ("x", "w"),
               "e": ("z", "w")}, lv2]
    if with_a:
        lv2["alpha1'"] = ("a", "a'")
        lv2["alpha4'"] = ("d", "d'")
        levels.append({"A": ("alpha1 alpha4", "alpha1' alpha4'")})
    return _hg(name, "x y z w", *levels)


def _ex_non_segment():
    H = _non_segment_core("ex_non_segment", True)
    X = _cell("x", "w", "a b", "c d' e", "alpha1 alpha2 alpha3 alpha4")
    return Fixture("ex_non_segment", H, cells={"X": X},
                   expected={"gpc_computable": ["A3'"], "gpc": ["A3"]},
                   note="alpha2, alpha3 borders reconstructed from the figure")


def _ce_inc_johnson():
    H = _non_segment_core("ce_inc_johnson", False)
    return Fixture("ce_inc_johnson", H,
                   expected={"ps": ["J2"], "pc": [], "adc": [], "gpc": []})


def _ce_tf():
    H = _hg("ce_tf", "x y z",
            {"a": ("x", "y"), "b": ("x", "y"), "c": ("x", "y"),
             "d": ("y", "z"), "e": ("y", "z"), "f": ("y", "z")},
            {"alpha": ("a", "b"), "alpha'": ("a", "b"), "beta": ("b", "c"), "beta'": ("b", "c"),
             "gamma": ("d", "e"), "gamma'": ("d", "e"), "delta": ("e", "f"), "delta'": ("e", "f")},
            {"A": ("alpha delta", "alpha' delta'"), "B": ("beta gamma", "beta' gamma'")})
    L = Leaf

    def c0(p, q):
        return Comp(0, L(p), L(q))

    xi1 = Comp(2, comp(1, c0("a", "gamma"), L("A"), c0("beta", "f")),
               comp(1, c0("alpha'", "d"), L("B"), c0("c", "delta'")))
    xi2 = Comp(2, comp(1, c0("alpha", "d"), L("B"), c0("c", "delta")),
               comp(1, c0("a", "gamma'"), L("A"), c0("beta'", "f")))
    X = _cell("x", "z", "a d", "c f", "alpha beta gamma delta",
              "alpha' beta' gamma' delta'", "A B")
    Z = _cell("x", "z", "a d", "c f", "alpha' beta gamma delta'")
    return Fixture("ce_tf", H, cells={"X": X, "Z": Z}, terms={"Xi1": xi1, "Xi2": xi2},
                   letters={"A": "A", "B": "B"},
                   expected={"pc": [], "gpc_computable": ["A4'"], "gpc": ["A4"], "adc": ["loop-free"]},
                   note="Xi1/Xi2 are also called F1/F2 and H1/H2")


def _ce_inc_steiner():
    H = _hg("ce_inc_steiner", "w x y z",
            {"a": ("w", "x"), "b": ("w", "x"), "c": ("w", "x"),
             "d": ("x", "y"), "e": ("x", "y"), "f": ("x", "y"),
             "g": ("y", "z"), "h": ("y", "z"), "i": ("y", "z")},
            {"alpha": ("a", "b"), "beta": ("b", "c"), "gamma": ("d", "e"), "delta": ("e", "f"),
             "epsilon": ("g", "h"), "zeta": ("h", "i"),
             "beta'": ("b", "c"), "gamma'": ("d", "e"), "delta'": ("e", "f"),
             "epsilon'": ("g", "h"), "alpha'": ("a", "b"), "gamma''": ("d", "f"),
             "zeta'": ("h", "i")},
            {"A": ("beta gamma", "beta' gamma'"), "B": ("delta epsilon", "delta' epsilon'"),
             "C": ("alpha gamma' delta' zeta", "alpha' gamma'' zeta'")})
    return Fixture("ce_inc_steiner", H,
                   expected={"adc": ["loop-free"], "pc": [], "ps": [], "gpc": []})


def _loop_ok():
    H = _hg("loop_ok", "w x y z",
            {"a": ("w", "x"), "a'": ("w", "x"), "b": ("x", "y"), "c": ("y", "z")},
            {"alpha": ("a b", "a' b")})
    return Fixture("loop_ok", H, expected={"gpc": ["A1"]})


_BUILDERS = {
    "ex_ppc": _ex_ppc,
    "two_pd": _two_pd,
    "two_pd_ambi": _two_pd_ambi,
    "not_acyclic": _not_acyclic,
    "johnson_non_glob": _johnson_non_glob,
    "ex_non_wfs": _ex_non_wfs,
    "not_3b": _not_3b,
    "ohg_cells": _ohg_cells,
    "ex_wfs": _ex_wfs,
    "ex_johncyclic": _ex_johncyclic,
    "ex_non_segment": _ex_non_segment,
    "ce_tf": _ce_tf,
    "ce_inc_johnson": _ce_inc_johnson,
    "ce_inc_steiner": _ce_inc_steiner,
    "loop_ok": _loop_ok,
}


def names():
    return sorted(_BUILDERS)


def load(name):
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise UnknownFixture("unknown fixture %r" % name, name=name)
