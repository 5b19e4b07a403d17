"""Rooted trees as Dyck words, plane trees as rotation classes.

A Dyck word ``w`` encodes a rooted tree read recursively: ``w = u0v1`` where
``v`` is the subtree hanging at the *rightmost* child of the root and ``u`` is
the rest.  The tree rotation ``rho(u0v1) = 0u1v`` re-roots the tree at that
rightmost child; a plane tree is an orbit of ``rho``.

Neighbour orders.  For a vertex ``v`` of a parsed tree the *word order* of its
neighbours is (parent, children left to right).  The clockwise order used by
the selection rules, the pull/push predicates and :func:`subtrees_at` is the
reverse of the word order.  ``T^(a, b)`` (see :meth:`Tree.rooted_at`) is the
rooted word with root ``a`` whose rightmost child is ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bits import is_dyck, split_first, split_last


def _check(w: str) -> None:
    if not w or not is_dyck(w):
        raise ValueError(f"not a nonempty Dyck word: {w!r}")


def rho(w: str) -> str:
    """Re-root at the rightmost child: ``u0v1 -> 0u1v``."""
    u, v = split_last(w)
    return "0" + u + "1" + v


def rho_inv(w: str) -> str:
    """Inverse of :func:`rho`: ``0u1v -> u0v1``."""
    u, v = split_first(w)
    return u + "0" + v + "1"


def rho_orbit(w: str) -> list[str]:
    """The distinct words ``w, rho(w), rho^2(w), ...`` in order."""
    _check(w)
    orbit = [w]
    z = rho(w)
    while z != w:
        orbit.append(z)
        if len(orbit) > len(w):
            raise RuntimeError("rho did not return to the start word")
        z = rho(z)
    return orbit


def lambda_of(w: str) -> int:
    """Least ``i >= 1`` with ``rho^i(w) == w``."""
    return len(rho_orbit(w))


def canonical_word(w: str) -> str:
    """Lexicographically least word in the rho-orbit of ``w``."""
    return min(rho_orbit(w))


def dyck_words(n: int) -> list[str]:
    """All Dyck words with ``n`` zeros, in lexicographic order."""
    out: list[str] = []

    def rec(prefix: str, opened: int, height: int) -> None:
        if len(prefix) == 2 * n:
            out.append(prefix)
            return
        if opened < n:
            rec(prefix + "0", opened + 1, height + 1)
        if height > 0:
            rec(prefix + "1", opened, height - 1)

    rec("", 0, 0)
    return out


def plane_tree_words(n: int) -> list[str]:
    """Canonical words of all plane trees with ``n`` edges, sorted."""
    seen: set[str] = set()
    reps = []
    for w in dyck_words(n):
        if w in seen:
            continue
        orbit = rho_orbit(w)
        seen.update(orbit)
        reps.append(min(orbit))
    return sorted(reps)


# ---------------------------------------------------------------------------
# parsed trees


class Tree:
    """Adjacency view of a rooted word.

    Vertex 0 is the root of the parsing word; vertices are numbered in the
    order their opening ``0`` appears.  ``nbrs[v]`` lists the neighbours of
    ``v`` in word order (parent first, then children left to right).
    """

    __slots__ = ("word", "size", "parent", "nbrs", "_pos")

    def __init__(self, word: str):
        _check(word)
        self.word = word
        parent = [-1]
        nbrs: list[list[int]] = [[]]
        stack = [0]
        for c in word:
            if c == "0":
                v = len(parent)
                p = stack[-1]
                parent.append(p)
                nbrs.append([p])
                nbrs[p].append(v)
                stack.append(v)
            else:
                stack.pop()
        self.parent = parent
        self.nbrs = nbrs
        self.size = len(parent)
        # _pos[v][u] = index of u in nbrs[v]
        self._pos = [{u: i for i, u in enumerate(nb)} for nb in nbrs]

    @property
    def edges(self) -> int:
        return self.size - 1

    def degree(self, v: int) -> int:
        return len(self.nbrs[v])

    def is_leaf(self, v: int) -> bool:
        return len(self.nbrs[v]) == 1

    def word_next(self, v: int, u: int) -> int:
        """Neighbour of ``v`` following ``u`` in cyclic word order."""
        nb = self.nbrs[v]
        return nb[(self._pos[v][u] + 1) % len(nb)]

    def word_prev(self, v: int, u: int) -> int:
        nb = self.nbrs[v]
        return nb[(self._pos[v][u] - 1) % len(nb)]

    def clockwise(self, v: int, start: int | None = None) -> list[int]:
        """Neighbours of ``v`` in clockwise order, beginning with ``start``."""
        nb = self.nbrs[v]
        k = len(nb)
        i = 0 if start is None else self._pos[v][start]
        return [nb[(i - j) % k] for j in range(k)]

    def _emit(self, out: list[str], v: int, came_from: int) -> None:
        """Append the word of the subtree below ``v`` (entered from ``came_from``)."""
        # iterative DFS over (vertex, incoming neighbour, next offset)
        stack = [(v, came_from, 1)]
        while stack:
            x, frm, j = stack.pop()
            if x < 0:
                out.append("1")
                continue
            nb = self.nbrs[x]
            k = len(nb)
            if j < k:
                stack.append((x, frm, j + 1))
                child = nb[(self._pos[x][frm] + j) % k]
                out.append("0")
                stack.append((-1, -1, 0))  # closing marker
                stack.append((child, x, 1))

    def rooted_at(self, a: int, b: int) -> str:
        """The rooted word ``T^(a, b)``: root ``a`` with rightmost child ``b``."""
        out: list[str] = []
        nb = self.nbrs[a]
        k = len(nb)
        i = self._pos[a][b]
        for j in range(1, k + 1):
            child = nb[(i + j) % k]
            out.append("0")
            self._emit(out, child, a)
            out.append("1")
        return "".join(out)

    def branch(self, c: int, b: int) -> str:
        """The ``c``-subtree through neighbour ``b``: the edge ``cb`` plus everything beyond ``b``."""
        out = ["0"]
        self._emit(out, b, c)
        out.append("1")
        return "".join(out)

    def distances(self, s: int) -> list[int]:
        d = [-1] * self.size
        d[s] = 0
        queue = [s]
        for v in queue:
            for u in self.nbrs[v]:
                if d[u] < 0:
                    d[u] = d[v] + 1
                    queue.append(u)
        return d

    def potential(self, v: int) -> int:
        return sum(self.distances(v))

    def centroids(self) -> tuple[list[int], int]:
        """Centroid vertices (minimal potential) and the minimal potential.

        Linear time: subtree sizes give the largest component left when a
        vertex is removed; centroids minimise it.
        """
        n = self.size
        sizes = [1] * n
        # vertices are numbered in preorder, so a reverse sweep is postorder
        for v in range(n - 1, 0, -1):
            sizes[self.parent[v]] += sizes[v]
        heavy = [0] * n
        for v in range(n):
            m = n - sizes[v]
            for u in self.nbrs[v]:
                if u != self.parent[v] and sizes[u] > m:
                    m = sizes[u]
            heavy[v] = m
        best = min(heavy)
        cs = [v for v in range(n) if heavy[v] == best]
        return cs, self.potential(cs[0])

    def path(self, a: int, c: int) -> list[int]:
        """Vertices ``p^0 = a, p^1, ..., c`` on the path from ``a`` to ``c``."""
        prev = [-1] * self.size
        prev[c] = c
        queue = [c]
        for v in queue:
            if v == a:
                break
            for u in self.nbrs[v]:
                if prev[u] < 0:
                    prev[u] = v
                    queue.append(u)
        out = [a]
        while out[-1] != c:
            out.append(prev[out[-1]])
        return out

    def leaves_beyond(self, c: int, b: int) -> list[int]:
        """Leaves of the ``c``-subtree through ``b``, left to right in word order."""
        leaves: list[int] = []
        stack = [(b, c)]
        while stack:
            x, frm = stack.pop()
            nb = self.nbrs[x]
            k = len(nb)
            if k == 1:
                leaves.append(x)
                continue
            i = self._pos[x][frm]
            # push in reverse so the leftmost child is processed first
            for j in range(k - 1, 0, -1):
                stack.append((nb[(i + j) % k], x))
        return leaves


# ---------------------------------------------------------------------------
# plane trees


@dataclass(frozen=True)
class PlaneTree:
    canonical: str
    lam: int
    centroids: tuple[int, ...]
    potential: int

    @property
    def edges(self) -> int:
        return len(self.canonical) // 2


def canonical_plane(w: str) -> PlaneTree:
    orbit = rho_orbit(w)
    canon = min(orbit)
    cs, phi = Tree(canon).centroids()
    return PlaneTree(canon, len(orbit), tuple(cs), phi)


def centroid_and_potential(w: str) -> tuple[list[int], int]:
    """Centroids (as vertex ids of ``Tree(w)``) and the potential of the tree."""
    return Tree(w).centroids()


def subtrees_at(w: str | Tree, c: int, start: int | None = None) -> list[str]:
    """The ``c``-subtrees in clockwise order, beginning at neighbour ``start``.

    Gluing them at their roots from right to left (so the word is the
    concatenation of the list in reverse) re-roots the tree at ``c``.
    """
    t = w if isinstance(w, Tree) else Tree(w)
    return [t.branch(c, b) for b in t.clockwise(c, start)]


# ---------------------------------------------------------------------------
# leaves, pull and push


@dataclass(frozen=True)
class LeafContext:
    centroid: int
    leaf: int
    path: tuple[int, ...]
    thin: bool
    pullable_to: bool
    pushable_to: bool
    pullable_from: bool
    pushable_from: bool

    @property
    def distance(self) -> int:
        return len(self.path) - 1


def leaf_flags(t: Tree, c: int, a: int) -> LeafContext:
    if not t.is_leaf(a):
        raise ValueError(f"vertex {a} is not a leaf")
    if a == c:
        raise ValueError("leaf must differ from the centroid")
    p = t.path(a, c)
    d = len(p) - 1
    p1 = p[1]
    thin = t.degree(p1) <= 2
    pull_to = push_to = pull_from = push_from = False
    if d >= 2:
        p2 = p[2]
        k = t.degree(p1)
        # clockwise successor is the word-order predecessor
        pull_to = t.word_prev(p1, p2) == a
        push_to = t.word_prev(p1, a) == p2
        pull_from = not pull_to and k > 2
        push_from = not push_to and k > 2
    elif not t.is_leaf(c):
        pull_from = push_from = True
    return LeafContext(c, a, tuple(p), thin, pull_to, push_to, pull_from, push_from)


def pullable(x: str) -> bool:
    """True iff ``x = u0v011`` with ``u, v`` Dyck words."""
    if len(x) < 4 or not x.endswith("011"):
        return False
    _, v = split_last(x)
    return v.endswith("01")


def pushable(y: str) -> bool:
    """True iff ``y = u0v101`` with ``u, v`` Dyck words."""
    return len(y) >= 4 and y.endswith("01") and is_dyck(y[:-2])


def pull(x: str) -> str:
    """``u0v011 -> u0v101``: move the last leaf up to the root."""
    if not pullable(x):
        raise ValueError(f"not of the form u0v011: {x!r}")
    u, v = split_last(x)
    return u + "0" + v[:-2] + "101"


def push(y: str) -> str:
    """``u0v101 -> u0v011``: inverse of :func:`pull`."""
    if not pushable(y):
        raise ValueError(f"not of the form u0v101: {y!r}")
    u, v = split_last(y[:-2])
    return u + "0" + v + "011"


def gluing_parts(x: str) -> tuple[str, str]:
    """``(u, v)`` for a pullable ``x = u0v011``."""
    if not pullable(x):
        raise ValueError(f"not of the form u0v011: {x!r}")
    u, v = split_last(x)
    return u, v[:-2]


def root_for_pull(t: Tree, c: int, a: int) -> str:
    """``x(T, c, a) = T^(p2, p1)``; ``pull`` of it moves ``a`` away from ``c``."""
    p = t.path(a, c)
    if len(p) < 3:
        raise ValueError("leaf must be at distance at least 2 from the centroid")
    x = t.rooted_at(p[2], p[1])
    if not pullable(x):
        raise ValueError("leaf is not pullable to the centroid")
    return x


def root_for_push(t: Tree, c: int, a: int) -> str:
    """``y[T, c, a] = T^(p1, a)``; ``push`` of it moves ``a`` towards ``c``."""
    p = t.path(a, c)
    if len(p) < 3:
        raise ValueError("leaf must be at distance at least 2 from the centroid")
    y = t.rooted_at(p[1], a)
    if not pushable(y):
        raise ValueError("leaf is not pushable to the centroid")
    return y


# ---------------------------------------------------------------------------
# named trees

Q_WORDS = (
    "01",
    "0011",
    "001011",
    "00100111",
    "00101011",
    "0010010111",
    "0010100111",
    "0001100111",
    "0001101011",
    "0010101011",
)
Q_INDEX = {w: j for j, w in enumerate(Q_WORDS)}


def star(n: int) -> str:
    """The star with ``n`` edges rooted at a leaf: ``0(01)^(n-1)1``."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return "0" + "01" * (n - 1) + "1"


def footed_star(n: int) -> str:
    """``01`` followed by the star with ``n - 1`` edges."""
    if n < 4:
        raise ValueError("footed star needs n >= 4")
    return "01" + star(n - 1)


def dumbbell(n: int) -> str:
    """``(01)^h 0 (01)^h 1`` with ``h = (n-1)/2``: two stars joined at their centres."""
    if n < 5 or n % 2 == 0:
        raise ValueError("dumbbell needs odd n >= 5")
    h = (n - 1) // 2
    return "01" * h + "0" + "01" * h + "1"


def dumbbell_rotated(n: int) -> str:
    """``rho^2`` of :func:`dumbbell`, the push target used for the dumbbell tree."""
    return rho(rho(dumbbell(n)))


def special_trees(n: int) -> dict[str, str]:
    out = {f"q{j}": w for j, w in enumerate(Q_WORDS)}
    out["s"] = star(n)
    if n >= 4:
        out["s'"] = footed_star(n)
    if n >= 5 and n % 2 == 1:
        out["d"] = dumbbell(n)
        out["d'"] = dumbbell_rotated(n)
    return out


def q_pattern(t: str) -> tuple[int, int] | None:
    """``(l, j)`` if ``t == 0^l q_j 1^l``, else ``None``."""
    l = 0
    while True:
        j = Q_INDEX.get(t)
        if j is not None:
            return l, j
        if len(t) >= 4 and t[0] == "0" and t[-1] == "1":
            u, v = split_first(t)
            if v == "":
                t = u
                l += 1
                continue
        return None
