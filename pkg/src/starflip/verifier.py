"""Brute-force certificates for the generator and the structural claims behind it.

Everything here is recomputed from scratch with deliberately plain code:
rooted-tree rotation, orbits, centroids, hexagon vertices and graph checks
are reimplemented locally.  Only the bitstring primitives are shared with the
rest of the package.  The library functions under test (``f``, the cycle
factor, the spanning-tree selection, the generator) are called, and their
output is compared with the independent computations.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable

from .bits import dyck_align, necklace, rotate


@dataclass
class Certificate:
    claim: str
    n: int
    passed: bool
    counterexample: dict | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"claim": self.claim, "n": self.n, "pass": self.passed}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" {json.dumps(self.counterexample, sort_keys=True)}" if self.counterexample else ""
        return f"{status} {self.claim} n={self.n}{extra}"


# ---------------------------------------------------------------------------
# graphs


@dataclass
class GraphSnapshot:
    n: int
    vertices: list[str]
    adjacency: dict[str, set[str]] = field(repr=False)


def _bounded(n: int, hi: int, what: str) -> None:
    if not 1 <= n <= hi:
        raise ValueError(f"{what} is limited to 1 <= n <= {hi}")


def build_M(n: int) -> GraphSnapshot:
    _bounded(n, 7, "the middle levels graph")
    m = 2 * n + 1
    verts = ["".join(b) for b in itertools.product("01", repeat=m) if b.count("1") in (n, n + 1)]
    vs = set(verts)
    adj = {}
    for v in verts:
        nb = set()
        for i in range(m):
            w = v[:i] + ("1" if v[i] == "0" else "0") + v[i + 1:]
            if w in vs:
                nb.add(w)
        adj[v] = nb
    return GraphSnapshot(n, verts, adj)


def build_N(n: int) -> GraphSnapshot:
    _bounded(n, 9, "the necklace graph")
    m = 2 * n + 1
    verts = set()
    for ones in (n, n + 1):
        for pos in itertools.combinations(range(m), ones):
            w = ["0"] * m
            for p in pos:
                w[p] = "1"
            verts.add(necklace("".join(w)))
    adj = {v: set() for v in verts}
    for v in verts:
        for i in range(m):
            w = necklace(v[:i] + ("1" if v[i] == "0" else "0") + v[i + 1:])
            if w in adj and w != v:
                adj[v].add(w)
    return GraphSnapshot(n, sorted(verts), adj)


# ---------------------------------------------------------------------------
# stream certificates


def certify_hamilton(stream: Iterable[str], n: int, check_graph: bool = False) -> Certificate:
    combos = list(stream)
    N = comb(2 * n + 2, n + 1)
    claim = "hamilton"
    if len(combos) != N:
        return Certificate(claim, n, False, {"reason": "length", "expected": N, "got": len(combos)})
    seen = {}
    for k, c in enumerate(combos):
        if len(c) != 2 * n + 2 or c.count("1") != n + 1:
            return Certificate(claim, n, False, {"reason": "not a combination", "index": k, "word": c})
        if c in seen:
            return Certificate(claim, n, False, {"reason": "duplicate", "index": k, "first": seen[c], "word": c})
        seen[c] = k
    for k in range(N):
        a, b = combos[k], combos[(k + 1) % N]
        diff = [i for i in range(len(a)) if a[i] != b[i]]
        if len(diff) != 2 or diff[0] != 0:
            return Certificate(claim, n, False, {"reason": "not a star transposition", "step": k, "from": a, "to": b})
    if check_graph:
        g = build_M(n)
        for k in range(N):
            a, b = combos[k][1:], combos[(k + 1) % N][1:]
            if b not in g.adjacency[a]:
                return Certificate(claim, n, False, {"reason": "not an edge of M_n", "step": k})
    return Certificate(claim, n, True)


def certify_blocks(flips: list[int], n: int, s: int) -> Certificate:
    """Round ``i`` must equal round 0 with ``i * s`` subtracted (mod 2n+1, values 1..2n+1)."""
    m = 2 * n + 1
    L = comb(2 * n, n) // (n + 1) * 2
    claim = "blocks"
    if len(flips) != m * L:
        return Certificate(claim, n, False, {"reason": "length", "expected": m * L, "got": len(flips)})
    for i in range(m):
        for j in range(L):
            want = (flips[j] - 1 - i * s) % m + 1
            if flips[i * L + j] != want:
                return Certificate(claim, n, False, {"block": i, "offset": j, "expected": want, "got": flips[i * L + j]})
    return Certificate(claim, n, True, detail=f"block length {L}")


# ---------------------------------------------------------------------------
# independent tree code


def _dyck(n: int) -> list[str]:
    out = []
    for pos in itertools.combinations(range(2 * n), n):
        w = ["1"] * (2 * n)
        for p in pos:
            w[p] = "0"
        h = 0
        ok = True
        for c in w:
            h += 1 if c == "0" else -1
            if h < 0:
                ok = False
                break
        if ok:
            out.append("".join(w))
    return out


def _reroot(w: str) -> str:
    """Rotate a rooted word: make the rightmost child of the root the new root."""
    # find the opening position of the last top-level block
    depth = 0
    start = 0
    for i, c in enumerate(w):
        if c == "0":
            if depth == 0:
                start = i
            depth += 1
        else:
            depth -= 1
    u, v = w[:start], w[start + 1:-1]
    return "0" + u + "1" + v


def _orbit(w: str) -> list[str]:
    out = [w]
    z = _reroot(w)
    while z != w:
        out.append(z)
        z = _reroot(z)
    return out


def _adjacency(w: str) -> list[list[int]]:
    adj: list[list[int]] = [[]]
    stack = [0]
    for c in w:
        if c == "0":
            v = len(adj)
            adj.append([stack[-1]])
            adj[stack[-1]].append(v)
            stack.append(v)
        else:
            stack.pop()
    return adj


def _potentials(w: str) -> list[int]:
    adj = _adjacency(w)
    out = []
    for s in range(len(adj)):
        dist = {s: 0}
        queue = [s]
        for v in queue:
            for u in adj[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        out.append(sum(dist.values()))
    return out


def _centroid_info(w: str) -> tuple[int, int]:
    """(number of centroids, potential)."""
    pots = _potentials(w)
    lo = min(pots)
    return pots.count(lo), lo


def _classes(n: int) -> dict[str, str]:
    """Map every Dyck word to the least word of its orbit."""
    canon = {}
    for w in _dyck(n):
        if w not in canon:
            orb = _orbit(w)
            rep = min(orb)
            for z in orb:
                canon[z] = rep
    return canon


def _f_period(x: str, f: Callable[[str], str]) -> int:
    start = necklace(x)
    z = f(x)
    k = 1
    while necklace(z) != start:
        z = f(z)
        k += 1
        if k > 8 * len(x):
            return -1
    return k


def _star(n: int) -> str:
    return "0" + "01" * (n - 1) + "1"


def _is_pair(x: str) -> bool:
    """``x = u0v011`` with ``u, v`` Dyck words."""
    if not x.endswith("011"):
        return False
    depth = 0
    start = 0
    for i, c in enumerate(x):
        if c == "0":
            if depth == 0:
                start = i
            depth += 1
        else:
            depth -= 1
    inner = x[start + 1:-1]
    return inner.endswith("01")


def _pull(x: str) -> str:
    return x[:-3] + "101"


# ---------------------------------------------------------------------------
# structural checks


def check_kappa(n: int) -> Certificate:
    from . import necklaces

    claim = "kappa_is_twice_lambda"
    m = 2 * n + 1
    for bits in itertools.product("01", repeat=m):
        x = "".join(bits)
        if x.count("1") not in (n, n + 1):
            continue
        _, _, t = dyck_align(x)
        want = 2 * len(_orbit(t))
        got = _f_period(x, necklaces.f)
        if got != want:
            return Certificate(claim, n, False, {"x": x, "kappa": got, "twice_lambda": want})
    return Certificate(claim, n, True)


def check_lambda_law(n: int) -> Certificate:
    from . import trees

    claim = "lambda_centroid_law"
    reps = sorted(set(_classes(n).values()))
    for w in reps:
        lam = len(_orbit(w))
        k, phi = _centroid_info(w)
        ok = (2 * n) % lam == 0
        if k == 1:
            ok = ok and lam % 2 == 0
        elif n % 2 == 1:
            ok = ok and lam in (n, 2 * n)
        else:
            ok = ok and lam == 2 * n
        lib = trees.canonical_plane(w)
        if not ok or lib.lam != lam or len(lib.centroids) != k or lib.potential != phi:
            return Certificate(claim, n, False, {"tree": w, "lambda": lam, "centroids": k,
                                                 "library_lambda": lib.lam})
    return Certificate(claim, n, True, detail=f"{len(reps)} plane trees")


def check_cycle_factor(n: int) -> Certificate:
    from . import necklaces

    claim = "cycle_factor_count"
    reps = set(_classes(n).values())
    cf = necklaces.cycle_factor(n)
    if len(cf) != len(reps) or set(cf) != reps:
        return Certificate(claim, n, False, {"cycles": len(cf), "orbits": len(reps)})
    for w, cyc in cf.items():
        if len(cyc) != 2 * len(_orbit(w)) or len(set(cyc.necklaces)) != len(cyc):
            return Certificate(claim, n, False, {"tree": w, "cycle_length": len(cyc)})
    if n <= 6:
        allneck = set(build_N(n).vertices)
        covered = [k for cyc in cf.values() for k in cyc.necklaces]
        if len(covered) != len(allneck) or set(covered) != allneck:
            return Certificate(claim, n, False, {"reason": "cycles do not partition the necklaces",
                                                 "covered": len(covered), "necklaces": len(allneck)})
    return Certificate(claim, n, True, detail=f"{len(reps)} cycles")


def check_gluing_periods(n: int) -> Certificate:
    from . import necklaces

    claim = "gluing_pair_periods"
    star = _star(n)
    count = 0
    for x in _dyck(n):
        if x == star or not _is_pair(x):
            continue
        y = _pull(x)
        kx = _f_period("0" + x, necklaces.f)
        ky = _f_period("0" + y, necklaces.f)
        count += 1
        if kx < 8 or ky < 4:
            return Certificate(claim, n, False, {"x": x, "y": y, "kappa_x0": kx, "kappa_y0": ky})
    return Certificate(claim, n, True, detail=f"{count} pairs")


def check_spanning_tree(n: int) -> Certificate:
    from . import spanning

    claim = "spanning_tree"
    canon = _classes(n)
    nodes = sorted(set(canon.values()))
    star = canon[_star(n)]
    g, sels = spanning.build_T(n)
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    pot = {v: _centroid_info(v)[1] for v in nodes}
    lower = {v: 0 for v in nodes}
    for a in g.arcs:
        if not _is_pair(a.x) or _pull(a.x) != a.y:
            return Certificate(claim, n, False, {"reason": "arc is not a gluing pair", "x": a.x, "y": a.y})
        s, t = canon[a.x], canon[a.y]
        if abs(pot[s] - pot[t]) != 1:
            return Certificate(claim, n, False, {"reason": "potential step", "x": a.x, "y": a.y})
        if pot[s] < pot[t]:
            lower[t] += 1
        else:
            lower[s] += 1
        rs, rt = find(s), find(t)
        if rs == rt:
            return Certificate(claim, n, False, {"reason": "cycle", "x": a.x, "y": a.y})
        parent[rs] = rt
    if len(g.arcs) != len(nodes) - 1:
        return Certificate(claim, n, False, {"reason": "arc count", "arcs": len(g.arcs), "nodes": len(nodes)})
    for v in nodes:
        want = 0 if v == star else 1
        if lower[v] != want:
            return Certificate(claim, n, False, {"reason": "lower neighbours", "tree": v, "count": lower[v]})
    return Certificate(claim, n, True, detail=f"{len(nodes)} nodes")


def _hexagon(x: str) -> dict[str, str]:
    # x = u0v011 ; locate u and v independently of the tree module
    depth = 0
    start = 0
    for i, c in enumerate(x):
        if c == "0":
            if depth == 0:
                start = i
            depth += 1
        else:
            depth -= 1
    u, v = x[:start], x[start + 1:-3]
    return {
        "x0": "0" + u + "0" + v + "011", "x1": "0" + u + "1" + v + "011",
        "x2": "0" + u + "1" + v + "010", "x3": "0" + u + "1" + v + "110",
        "x4": "0" + u + "1" + v + "100", "x5": "0" + u + "1" + v + "101",
        "x6": "0" + u + "1" + v + "001", "y0": "0" + u + "0" + v + "101",
        "y1": "0" + u + "0" + v + "111",
    }


def check_gluing_cycles(n: int) -> list[Certificate]:
    """Compatibility, nesting and interleaving over all rotations of the selected hexagons."""
    from . import spanning

    _, sels = spanning.build_T(n)
    m = 2 * n + 1
    fedge: dict[frozenset, tuple[int, int]] = {}
    revedge: dict[frozenset, tuple[int, int]] = {}
    hexes = []
    bad_compat = bad_nest = bad_inter = None
    for k, s in enumerate(sels.values()):
        h = _hexagon(s.x)
        hexes.append(h)
        for i in range(m):
            r = {name: rotate(w, i) for name, w in h.items()}
            for a, b in (("x0", "x1"), ("x5", "x6"), ("y0", "y1")):
                e = frozenset((r[a], r[b]))
                if e in fedge and fedge[e][0] != k and bad_compat is None:
                    bad_compat = {"pair": s.x, "other": list(sels.values())[fedge[e][0]].x}
                fedge[e] = (k, i)
            for j in range(1, 5):
                revedge[frozenset((r[f"x{j}"], r[f"x{j + 1}"]))] = (k, i)
    for k, h in enumerate(hexes):
        for i in range(m):
            ey = frozenset((rotate(h["y0"], i), rotate(h["y1"], i)))
            ex = frozenset((rotate(h["x0"], i), rotate(h["x1"], i)))
            hit = revedge.get(ey)
            if hit and hit[0] != k and bad_nest is None:
                bad_nest = {"pair": list(sels.values())[k].x, "other": list(sels.values())[hit[0]].x}
            hit = revedge.get(ex)
            if hit and hit[0] != k and bad_inter is None:
                bad_inter = {"pair": list(sels.values())[k].x, "other": list(sels.values())[hit[0]].x}
    return [
        Certificate("hexagons_compatible", n, bad_compat is None, bad_compat),
        Certificate("nesting_free", n, bad_nest is None, bad_nest),
        Certificate("interleaving_free", n, bad_inter is None, bad_inter),
    ]


def check_selection_guarantees(n: int) -> Certificate:
    from . import spanning

    _, sels = spanning.build_T(n)
    bad = spanning.check_subtree_choice(sels)
    return Certificate("subtree_choice", n, not bad, {"trees": bad[:5]} if bad else None)


def check_shift_identity(n: int) -> Certificate:
    """One round of the unswitched walk realises the shift ``C_n mod 2n+1``."""
    from .generator import LocalSuccessor, default_start

    claim = "shift_identity"
    m = 2 * n + 1
    cat = comb(2 * n, n) // (n + 1)
    succ = LocalSuccessor(n)
    x1 = default_start(n)
    z = x1
    seen = set()
    for _ in range(2 * cat):
        k = necklace(z)
        if k in seen:
            return Certificate(claim, n, False, {"reason": "necklace revisited", "vertex": z})
        seen.add(k)
        z = succ.base_step(z)[0]
    if necklace(z) != necklace(x1):
        return Certificate(claim, n, False, {"reason": "round does not close", "vertex": z})
    s = next(i for i in range(m) if rotate(z, i) == x1)
    if s != cat % m:
        return Certificate(claim, n, False, {"measured": s, "catalan_mod": cat % m})
    return Certificate(claim, n, True, detail=f"shift {s}")


def check_generator(n: int) -> list[Certificate]:
    from .generator import Generator

    g = Generator(n)
    items = list(g)
    combos = [c for _, c in items]
    flips = [q for q, _ in items]
    return [certify_hamilton(combos, n, check_graph=n <= 6), certify_blocks(flips, n, g.shift)]


def _guarded(claim: str, n: int, fn, *args) -> list[Certificate]:
    """Run one check; an exception in the code under test counts as a failure."""
    try:
        out = fn(*args)
    except Exception as exc:  # noqa: BLE001 - any crash is a failed certificate
        return [Certificate(claim, n, False, {"error": f"{type(exc).__name__}: {exc}"})]
    return out if isinstance(out, list) else [out]


def lemma_suite(n: int) -> list[Certificate]:
    """Every structural check whose desk-scale bound admits ``n``."""
    plan = []
    if n <= 6:
        plan.append(("kappa_is_twice_lambda", check_kappa))
    if n <= 8:
        plan.append(("lambda_centroid_law", check_lambda_law))
        plan.append(("cycle_factor_count", check_cycle_factor))
    if 4 <= n <= 7:
        plan.append(("gluing_pair_periods", check_gluing_periods))
    if 4 <= n <= 9:
        plan.append(("spanning_tree", check_spanning_tree))
        plan.append(("subtree_choice", check_selection_guarantees))
    if 4 <= n <= 7:
        plan.append(("gluing_cycles", check_gluing_cycles))
    if 4 <= n <= 8:
        plan.append(("shift_identity", check_shift_identity))
    out = []
    for claim, fn in plan:
        out.extend(_guarded(claim, n, fn, n))
    return out


def run_suite(n: int, suite: str = "all") -> list[Certificate]:
    if suite not in ("lemmas", "hamilton", "blocks", "all"):
        raise ValueError(f"unknown suite {suite!r}")
    out = []
    if suite in ("lemmas", "all"):
        out.extend(lemma_suite(n))
    if suite in ("hamilton", "blocks", "all"):
        if n > 8:
            raise ValueError("full-stream certificates are limited to n <= 8")
        res = _guarded("generator", n, check_generator, n)
        if len(res) == 1:
            return out + res
        ham, blk = res
        if suite in ("hamilton", "all"):
            out.append(ham)
        if suite in ("blocks", "all"):
            out.append(blk)
    return out
