"""Gluing pairs and the six-cycles that merge two cycles of the factor.

For a gluing pair ``x = u0v011``, ``y = u0v101`` the hexagon in the middle
levels graph is

    x0 = 0u0v011, y1 = 0u0v111, y0 = 0u0v101,
    x5 = 0u1v101, x6 = 0u1v001, x1 = 0u1v011

with flip labels ``(|u|+|v|+3, |u|+|v|+4, |u|+2)`` repeated twice.  The edges
``(x0, x1)``, ``(x5, x6)`` and ``(y0, y1)`` are f-edges.  Between ``x1`` and
``x5`` the path ``P(x0)`` runs through ``x2 = 0u1v010``, ``x3 = 0u1v110`` and
``x4 = 0u1v100``; gluing reverses that stretch.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import necklaces, trees
from .bits import flip_position, rotate


@dataclass(frozen=True)
class GluingPair:
    x: str
    y: str
    u: str
    v: str

    @property
    def n(self) -> int:
        return len(self.x) // 2


def make_gluing_pair(x: str) -> GluingPair:
    u, v = trees.gluing_parts(x)
    n = len(x) // 2
    if n >= 4 and x == trees.star(n):
        raise ValueError("the star paired with its pull is excluded")
    return GluingPair(x, trees.pull(x), u, v)


def gluing_pairs(n: int) -> list[GluingPair]:
    """Every gluing pair with ``n`` edges, sorted by ``x``."""
    out = []
    for w in trees.dyck_words(n):
        if trees.pullable(w) and not (n >= 4 and w == trees.star(n)):
            out.append(make_gluing_pair(w))
    return out


HEX_NAMES = ("x0", "y1", "y0", "x5", "x6", "x1")


@dataclass(frozen=True)
class GluingCycle:
    pair: GluingPair
    i: int

    def _raw(self) -> dict[str, str]:
        u, v = self.pair.u, self.pair.v
        return {
            "x0": "0" + u + "0" + v + "011",
            "x1": "0" + u + "1" + v + "011",
            "x2": "0" + u + "1" + v + "010",
            "x3": "0" + u + "1" + v + "110",
            "x4": "0" + u + "1" + v + "100",
            "x5": "0" + u + "1" + v + "101",
            "x6": "0" + u + "1" + v + "001",
            "y0": "0" + u + "0" + v + "101",
            "y1": "0" + u + "0" + v + "111",
        }

    def vertex(self, name: str) -> str:
        return rotate(self._raw()[name], self.i)

    @property
    def vertices(self) -> tuple[str, ...]:
        raw = self._raw()
        return tuple(rotate(raw[k], self.i) for k in HEX_NAMES)

    def flip_labels(self) -> tuple[int, ...]:
        vs = self.vertices
        return tuple(flip_position(vs[k], vs[(k + 1) % 6]) for k in range(6))

    def f_edges(self) -> set[frozenset[str]]:
        return {
            frozenset((self.vertex("x0"), self.vertex("x1"))),
            frozenset((self.vertex("x5"), self.vertex("x6"))),
            frozenset((self.vertex("y0"), self.vertex("y1"))),
        }

    def reversed_path(self) -> tuple[str, ...]:
        return tuple(self.vertex(f"x{k}") for k in range(1, 6))

    def reversed_edges(self) -> set[frozenset[str]]:
        p = self.reversed_path()
        return {frozenset(p[k:k + 2]) for k in range(4)}


def gluing_cycle(pair: GluingPair, i: int = 0) -> GluingCycle:
    return GluingCycle(pair, i % (2 * pair.n + 1))


@dataclass(frozen=True)
class Relation:
    compatible: bool
    nested: bool
    interleaved: bool


def relation(ci: GluingCycle, cj: GluingCycle) -> Relation:
    """Compatibility, nesting and interleaving of two rotated gluing cycles.

    Both the edge-level definitions and the closed-form criteria are
    evaluated; a disagreement raises ``AssertionError``.
    """
    compatible = not (ci.f_edges() & cj.f_edges())
    nested_geo = frozenset((ci.vertex("y0"), ci.vertex("y1"))) in cj.reversed_edges()
    inter_geo = frozenset((cj.vertex("x0"), cj.vertex("x1"))) in ci.reversed_edges()
    m = 2 * ci.pair.n + 1
    x, y = ci.pair.x, ci.pair.y
    x2 = cj.pair.x
    inter_alg = (ci.i - cj.i - 2) % m == 0 and x2 == trees.rho(trees.rho(x))
    nested_alg = (ci.i - cj.i + 1) % m == 0 and x2 == trees.rho_inv(y)
    assert nested_geo == nested_alg, (ci, cj, "nested")
    assert inter_geo == inter_alg, (ci, cj, "interleaved")
    return Relation(compatible, nested_geo, inter_geo)


def graft(pair: GluingPair) -> necklaces.PeriodicPath:
    """Merge ``P(x0)`` and ``P(y0)`` along the hexagon of ``pair`` into one periodic path."""
    if trees.canonical_word(pair.x) == trees.canonical_word(pair.y):
        raise ValueError("both halves lie in the same plane tree")
    cyc = gluing_cycle(pair)
    px = necklaces.periodic_path(cyc.vertex("x0"))
    py = necklaces.periodic_path(cyc.vertex("y0"))
    lam_y = py.flips.shift
    xs = px.vertices
    if len(xs) < 8:
        raise ValueError("P(x0) is too short to reverse the stretch x1..x5")
    head = [xs[0]] + list(py.vertices[1:])
    tail = [py.vertices[0], xs[5], xs[4], xs[3], xs[2], xs[1]] + list(xs[6:])
    verts = head + [rotate(z, -lam_y) for z in tail]
    end = rotate(necklaces.f(xs[-1]), -lam_y)
    flips = [flip_position(a, b) for a, b in zip(verts, verts[1:] + [end])]
    seq = necklaces.FlipSequence(tuple(flips), len(xs[0]), necklaces.shift_between(verts[0], end))
    return necklaces.PeriodicPath(tuple(verts), seq)
