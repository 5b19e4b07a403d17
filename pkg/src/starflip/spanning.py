"""The gluing multigraph on plane trees and the rule-based spanning tree.

Every plane tree ``T`` other than the star gets one gluing pair ``(x, y)`` with
``T`` equal to ``[x]`` or ``[y]``.  The choice is local to ``T``:

1. fix a centroid ``c`` and a clockwise order ``t_1, ..., t_k`` of the
   ``c``-subtrees (lexicographically least, via Booth's algorithm on the
   separator-joined words);
2. pick a subtree ``t_i'`` by the conditions (i)-(iv);
3. pick a leaf ``a`` of it and pull or push it.

:func:`select_gluing_pair` runs in time linear in the size of the tree, which
is what the streaming generator relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import trees
from .bits import least_rotation
from .trees import Q_WORDS, Tree

Q0, Q1, Q2, Q4 = Q_WORDS[0], Q_WORDS[1], Q_WORDS[2], Q_WORDS[4]

PULL_RULES = ("q137", "q8", "e", "o1")
PUSH_RULES = ("q24", "q5", "o2", "D")


class StarTree(ValueError):
    """Raised when asked for the selection of the star, which has none."""


@dataclass(frozen=True)
class Selection:
    """The gluing pair chosen for one plane tree, with the choices that led to it."""

    tree: str
    x: str
    y: str
    rule: str
    centroid: int
    subtrees: tuple[str, ...]
    index: int
    leaf: int
    condition: str = ""

    @property
    def is_pull(self) -> bool:
        return self.rule in PULL_RULES


def _is_dumbbell(t: Tree, cs: list[int]) -> bool:
    n = t.edges
    if n < 5 or n % 2 == 0 or len(cs) != 2:
        return False
    h = (n - 1) // 2
    return t.degree(cs[0]) == h + 1 and t.degree(cs[1]) == h + 1


def _least_cyclic_order(ts: list[str]) -> int:
    """Index ``r`` such that ``ts[r:] + ts[:r]`` is the least cyclic order."""
    joined = "".join("." + w for w in ts)
    k = least_rotation(joined)
    # '.' sorts below '0' and '1', so the least rotation starts at a separator
    return joined[:k].count(".")


def _t2_unique(ts: list[str]) -> tuple[int, str]:
    """Conditions (i)-(iv) for a unique centroid; returns (index, condition)."""
    k = len(ts)
    for i in range(k):
        if ts[i] == Q1 and ts[i - 1] == Q0:
            return i, "i"
    for i in range(k):
        if (ts[i] == Q2 or ts[i] == Q4) and ts[(i + 1) % k] in (Q0, Q1, Q2):
            return i, "ii"
    for i in range(k):
        if ts[i] not in (Q0, Q1, Q2, Q4):
            return i, "iii"
    for i in range(k):
        if ts[i] != Q0:
            return i, "iv"
    raise ValueError("all subtrees are single edges")


def _pull_pair(t: Tree, c: int, a: int) -> tuple[str, str]:
    x = trees.root_for_pull(t, c, a)
    return x, trees.pull(x)


def _push_pair(t: Tree, c: int, a: int) -> tuple[str, str]:
    y = trees.root_for_push(t, c, a)
    return trees.push(y), y


def select_gluing_pair(w: str) -> Selection:
    """Choose the gluing pair for the plane tree containing the rooted word ``w``."""
    t = Tree(w)
    n = t.edges
    if n < 4:
        raise ValueError("selection rules need n >= 4")
    cs, phi = t.centroids()
    if len(cs) == 1 and all(t.is_leaf(b) for b in t.nbrs[cs[0]]):
        raise StarTree("the star has no selected gluing pair")

    if _is_dumbbell(t, cs):
        c = cs[0]
        b = next(u for u in t.nbrs[c] if not t.is_leaf(u))
        a = t.word_next(b, c)
        y = t.rooted_at(b, a)
        return Selection(w, trees.push(y), y, "D", c, (t.branch(c, b),), 0, a)

    if len(cs) == 2:
        best = None
        for c in cs:
            other = cs[1] if c == cs[0] else cs[0]
            act = t.clockwise(c, other)[1:]
            ts = [t.branch(c, b) for b in act]
            if all(s == Q0 for s in ts):
                continue
            key = "".join("." + s for s in ts)
            if best is None or key < best[0]:
                best = (key, c, act, ts)
        _, c, act, ts = best
        ip = next(i for i, s in enumerate(ts) if s != Q0)
        cond = "first"
    else:
        c = cs[0]
        cw = t.clockwise(c)
        ts0 = [t.branch(c, b) for b in cw]
        r = _least_cyclic_order(ts0)
        act = cw[r:] + cw[:r]
        ts = ts0[r:] + ts0[:r]
        ip, cond = select_subtree(ts)

    b = act[ip]
    sub = ts[ip]
    leaves = t.leaves_beyond(c, b)
    pattern = trees.q_pattern(sub)
    j = pattern[1] if pattern else None
    if j in (1, 3, 7):
        rule, a = "q137", leaves[-1]
    elif j in (2, 4):
        rule, a = "q24", leaves[0]
    elif j == 5:
        rule, a = "q5", leaves[1]
    elif j == 8:
        rule, a = "q8", leaves[0]
    elif phi % 2 == 0:
        rule, a = "e", leaves[-1]
    elif t.degree(t.nbrs[leaves[0]][0]) <= 2:
        rule, a = "o1", leaves[0]
    else:
        rule, a = "o2", leaves[0]
    if rule in PULL_RULES:
        x, y = _pull_pair(t, c, a)
    else:
        x, y = _push_pair(t, c, a)
    return Selection(w, x, y, rule, c, tuple(ts), ip, a, cond)


# Module-level hook so the subtree choice can be swapped out in tests.
select_subtree: Callable[[list[str]], tuple[int, str]] = _t2_unique


# ---------------------------------------------------------------------------
# global graphs (desk scale)


@dataclass(frozen=True)
class Arc:
    source: str
    target: str
    x: str
    y: str
    rule: str = ""


@dataclass
class GluingGraph:
    n: int
    nodes: list[str]
    arcs: list[Arc]

    def to_dot(self, name: str = "G") -> str:
        lines = [f"digraph {name} {{"]
        for v in self.nodes:
            lines.append(f'  "{v}";')
        for a in self.arcs:
            label = f"{a.x}/{a.y}" + (f" {a.rule}" if a.rule else "")
            lines.append(f'  "{a.source}" -> "{a.target}" [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        rows = ["source,target,x,y,rule"]
        rows += [f"{a.source},{a.target},{a.x},{a.y},{a.rule}" for a in self.arcs]
        return "\n".join(rows) + "\n"


def _check_range(n: int, hi: int = 10) -> None:
    if not 4 <= n <= hi:
        raise ValueError(f"n must be in [4, {hi}]")


def build_H(n: int) -> GluingGraph:
    """All plane trees with ``n`` edges and one arc ``[x] -> [y]`` per gluing pair."""
    _check_range(n)
    canon: dict[str, str] = {}
    nodes = []
    for w in trees.dyck_words(n):
        if w not in canon:
            orbit = trees.rho_orbit(w)
            rep = min(orbit)
            nodes.append(rep)
            for z in orbit:
                canon[z] = rep
    star = trees.star(n)
    arcs = []
    for w in trees.dyck_words(n):
        if w != star and trees.pullable(w):
            y = trees.pull(w)
            arcs.append(Arc(canon[w], canon[y], w, y))
    return GluingGraph(n, sorted(nodes), arcs)


def build_T(n: int) -> tuple[GluingGraph, dict[str, Selection]]:
    """The spanning tree given by the selection rules, with the per-tree choices."""
    _check_range(n)
    nodes = trees.plane_tree_words(n)
    star = trees.canonical_word(trees.star(n))
    sels = {}
    arcs = []
    for w in nodes:
        if w == star:
            continue
        s = select_gluing_pair(w)
        sels[w] = s
        arcs.append(Arc(trees.canonical_word(s.x), trees.canonical_word(s.y), s.x, s.y, s.rule))
    return GluingGraph(n, nodes, arcs), sels


def check_subtree_choice(sels: dict[str, Selection]) -> list[str]:
    """Report trees whose selected subtree breaks the neighbourhood guarantees of (i)/(ii).

    With a unique centroid: a selected ``q1`` must follow a ``q0`` or all
    subtrees are ``q1``; a selected ``q2`` or ``q4`` must precede a ``q0``,
    ``q1`` or ``q2``, or all subtrees are ``q4``.
    """
    bad = []
    for w, s in sels.items():
        if s.rule == "D" or s.condition == "first":
            continue
        ts, i = s.subtrees, s.index
        k = len(ts)
        if ts[i] == Q1:
            if not (ts[i - 1] == Q0 or all(z == Q1 for z in ts)):
                bad.append(w)
        elif ts[i] in (Q2, Q4):
            if not (ts[(i + 1) % k] in (Q0, Q1, Q2) or all(z == Q4 for z in ts)):
                bad.append(w)
    return bad


# ---------------------------------------------------------------------------
# local membership


class SelectionOracle:
    """Answer "is ``w`` the x (or y) of some selected gluing pair?" without building the tree.

    A selected pair ``(x, y)`` belongs to either ``[x]`` or ``[y]``, so ``w``
    is a selected ``x`` iff the selection of ``[w]`` or of ``[pull(w)]``
    returns it; likewise for ``y`` with ``push``.  Each query costs at most
    two selections, i.e. linear time.  Results are memoised in a small
    bounded cache.
    """

    def __init__(self, n: int, cache_size: int = 64):
        if n < 4:
            raise ValueError("selection rules need n >= 4")
        self.n = n
        self._cache_size = cache_size
        self._sel: dict[str, Selection | None] = {}
        self._memo: dict[tuple[str, str], bool] = {}

    def selection(self, w: str) -> Selection | None:
        """Selection for the plane tree ``[w]`` (``None`` for the star)."""
        s = self._sel.get(w, False)
        if s is False:
            try:
                s = select_gluing_pair(w)
            except StarTree:
                s = None
            if len(self._sel) >= self._cache_size:
                self._sel.clear()
            self._sel[w] = s
        return s

    def remember(self, w: str, s: Selection | None) -> None:
        """Seed the cache with a selection already known for ``[w]``."""
        if len(self._sel) >= self._cache_size:
            self._sel.clear()
        self._sel[w] = s

    def _lookup(self, kind: str, w: str) -> bool:
        key = (kind, w)
        r = self._memo.get(key)
        if r is None:
            if kind == "x":
                r = trees.pullable(w) and self._owns(w, "x", trees.pull)
            else:
                r = trees.pushable(w) and self._owns(w, "y", trees.push)
            if len(self._memo) >= self._cache_size:
                self._memo.clear()
            self._memo[key] = r
        return r

    def _owns(self, w: str, attr: str, move) -> bool:
        s = self.selection(w)
        if s is not None and getattr(s, attr) == w:
            return True
        s = self.selection(move(w))
        return s is not None and getattr(s, attr) == w

    def in_x(self, w: str) -> bool:
        return self._lookup("x", w)

    def in_y(self, w: str) -> bool:
        return self._lookup("y", w)
