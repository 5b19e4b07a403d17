"""Streaming star-transposition Gray code for (n+1, n+1)-combinations.

The walk on the middle levels graph ``M_n`` follows ``f`` except near the
hexagons of the selected gluing pairs, where it takes the hexagon edges and
runs the reversed stretch with ``f^-1``.  Whether a vertex is near such a
hexagon is decided locally from its Dyck word with a
:class:`~starflip.spanning.SelectionOracle`, so each step costs ``O(n)``.

The flip sequence of one round (``2 C_n`` steps) realises a shift ``s``; the
next round is the same sequence with ``s`` subtracted from every entry.
Switches adjust ``s`` until it is a unit mod ``2n+1``, after which the
*scaling trick* (multiplying every position by a unit) produces any other
unit shift.

Combinations have ``2n+2`` bits: position 1 is the star bit and ``M_n``
position ``p`` is combination position ``p + 1``.  A star transposition that
swaps positions 1 and ``p + 1`` flips bit ``p`` of the ``M_n`` vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, gcd
from typing import Iterator

from . import necklaces, switches, trees
from .bits import dyck_align, flip, flip_position, necklace, rotate, split_first, split_last
from .necklaces import shift_between
from .spanning import SelectionOracle

# hardcoded rounds for n <= 3: (start vertex, flip block)
SMALL_CASES = {
    1: ("010", (3, 2)),
    2: ("00011", (1, 5, 3, 1)),
    3: ("0000111", (2, 6, 3, 5, 4, 2, 6, 7, 5, 3)),
}


def catalan_mod(n: int, m: int) -> int:
    """``C_n mod m`` by Segner's recurrence ``C_{k+1} = sum C_i C_{k-i}``."""
    c = [1 % m]
    for k in range(n):
        c.append(sum(c[i] * c[k - i] for i in range(k + 1)) % m)
    return c[n]


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def base_shift(n: int) -> int:
    """Shift of one round of the unswitched glued walk: ``C_n mod 2n+1``."""
    return catalan_mod(n, 2 * n + 1)


def default_start(n: int) -> str:
    if n in SMALL_CASES:
        return SMALL_CASES[n][0]
    return "0" * (n + 1) + "1" * n


# ---------------------------------------------------------------------------
# successors on M_n


class LocalSuccessor:
    """Successor function of the glued walk for ``n >= 4``, evaluated locally.

    ``step(z)`` returns ``(next_vertex, position, kind)`` where ``kind`` is
    one of ``f``, ``inv``, ``glue`` or ``switch``.
    """

    def __init__(self, n: int, oracle: SelectionOracle | None = None):
        self.n = n
        self.m = 2 * n + 1
        self.oracle = oracle or SelectionOracle(n)
        # (side, word) -> (alignment shift, replacement successor)
        self._switch: dict[tuple[str, str], tuple[int, str]] = {}
        self.switch_signs: list[int] = []

    def aligned_rule(self, side: str, t: str) -> tuple[int, str]:
        """Aligned flip position and kind of the base rule at an aligned vertex."""
        o = self.oracle
        if side == "A":
            if o.in_x(t):
                u, v = trees.gluing_parts(t)
                return len(u) + len(v) + 3, "glue"
            if o.in_y(t):
                u, _ = split_last(t[:-2])
                return len(u) + 2, "glue"
            r1 = trees.rho_inv(t)
            if o.in_x(r1) or o.in_x(trees.rho_inv(r1)):
                return 1, "inv"
            u, _ = split_last(t)
            return len(u) + 2, "f"
        r1 = trees.rho_inv(t)
        if o.in_x(r1):
            u, v = trees.gluing_parts(r1)
            return len(u) + len(v) + 4, "glue"
        r2 = trees.rho_inv(r1)
        if o.in_x(r2) or o.in_x(trees.rho_inv(r2)):
            u, _ = split_first(t)
            return len(u) + 2, "inv"
        return self.m, "f"

    def base_step(self, z: str) -> tuple[str, int, str]:
        side, l, t = dyck_align(z)
        p, kind = self.aligned_rule(side, t)
        pos = (p - 1 - l) % self.m + 1
        return flip(z, pos), pos, kind

    def step(self, z: str) -> tuple[str, int, str]:
        if self._switch:
            side, l, t = dyck_align(z)
            hit = self._switch.get((side, t))
            if hit is not None:
                l0, rep = hit
                nz = rotate(rep, l0 - l)
                return nz, flip_position(z, nz), "switch"
        return self.base_step(z)

    def add_switch(self, tau: "switches.Switch") -> int:
        """Install a switch; returns the change it causes in the round shift."""
        x, y, yp, lam = tau.x, tau.y, tau.y_prime, tau.shift
        if self.base_step(x)[0] == y:
            a, rep, sign = x, yp, 1
        elif self.base_step(x)[0] == yp:
            a, rep, sign = x, y, -1
        elif self.base_step(y)[0] == x:
            a, rep, sign = y, rotate(x, lam), -1
        elif self.base_step(yp)[0] == x:
            a, rep, sign = yp, rotate(x, -lam), 1
        else:
            raise ValueError("switch edge is not on the walk")
        side, l0, t = dyck_align(a)
        if (side, t) in self._switch:
            raise ValueError("two switches share an edge")
        self._switch[(side, t)] = (l0, rep)
        self.switch_signs.append(sign)
        return sign * lam


class GlobalSuccessor:
    """Reference successor built from the whole spanning tree (desk-scale ``n`` only).

    The rule table is keyed by ``(side, aligned word)`` and lists every vertex
    of every selected hexagon explicitly, so it shares no decision logic with
    :class:`LocalSuccessor`.
    """

    def __init__(self, n: int):
        from .spanning import build_T

        self.n = n
        self.m = 2 * n + 1
        _, sels = build_T(n)
        rules: dict[tuple[str, str], tuple[int, str]] = {}
        for s in sels.values():
            u, v = trees.gluing_parts(s.x)
            r1 = trees.rho(s.x)
            r2 = trees.rho(r1)
            r3 = trees.rho(r2)
            rules[("A", s.x)] = (len(u) + len(v) + 3, "glue")
            rules[("A", s.y)] = (len(u) + 2, "glue")
            rules[("B", r1)] = (len(u) + len(v) + 4, "glue")
            for key in (("B", r3), ("A", r2), ("B", r2), ("A", r1)):
                if key in rules:
                    raise AssertionError("hexagons overlap")
                rules[key] = (0, "inv")
        self.rules = rules

    def step(self, z: str) -> tuple[str, int, str]:
        side, l, t = dyck_align(z)
        p, kind = self.rules.get((side, t), (0, "f"))
        if kind == "f":
            nz = necklaces.f(z)
        elif kind == "inv":
            nz = necklaces.f_inv(z)
        else:
            nz = flip(z, (p - 1 - l) % self.m + 1)
        return nz, flip_position(z, nz), kind


class TableSuccessor:
    """Successor function for ``n <= 3`` driven by the hardcoded rounds."""

    def __init__(self, n: int):
        start, block = SMALL_CASES[n]
        self.n = n
        self.m = 2 * n + 1
        z = start
        for p in block:
            z = flip(z, p)
        self.round_shift = shift_between(start, z)
        self._next: dict[str, tuple[str, int]] = {}
        z = start
        rounds = self.m
        for r in range(rounds):
            for p in block:
                q = (p - 1 - r * self.round_shift) % self.m + 1
                nz = flip(z, q)
                if z in self._next:
                    raise AssertionError("hardcoded round does not give a Hamilton cycle")
                self._next[z] = (nz, q)
                z = nz
        if z != start or len(self._next) != comb(self.m + 1, self.n + 1):
            raise AssertionError("hardcoded round does not close up")

    def step(self, z: str) -> tuple[str, int, str]:
        nz, q = self._next[z]
        return nz, q, "table"


# ---------------------------------------------------------------------------
# the generator


def vertex_to_combination(x: str) -> str:
    n = len(x) // 2
    return ("1" if x.count("1") == n else "0") + x


def combination_to_vertex(c: str) -> str:
    n = len(c) // 2 - 1
    if len(c) % 2 or len(c) < 4 or c.count("1") != n + 1 or set(c) - {"0", "1"}:
        raise ValueError(f"not an (n+1, n+1)-combination: {c!r}")
    return c[1:]


def permute(x: str, factor: int) -> str:
    """Move bit ``p`` of ``x`` to position ``factor * p`` (1-based, mod ``len(x)``)."""
    m = len(x)
    out = [""] * m
    for p in range(1, m + 1):
        out[(factor * p - 1) % m] = x[p - 1]
    return "".join(out)


def scale_sequence(entries, s: int, s_target: int, m: int) -> list[int]:
    """Multiply flip positions by ``s^-1 * s_target`` mod ``m`` (representatives 1..m)."""
    if gcd(s % m, m) != 1 or gcd(s_target % m, m) != 1:
        raise ValueError("both shifts must be units mod 2n+1")
    factor = pow(s, -1, m) * s_target % m
    return [(p * factor - 1) % m + 1 for p in entries]


@dataclass
class Generator:
    """Iterator over ``(flip position, combination)`` pairs.

    Item ``k`` carries combination ``c_k`` and the ``M_n`` position whose
    flip leads to ``c_{k+1}``.  ``c_0`` is the start combination and the
    stream has exactly ``C(2n+2, n+1)`` items, after which ``c_0`` recurs.
    ``shift`` is the rotation realised by one round of ``2 C_n`` flips: the
    ``i``-th round equals the first with ``i * shift`` subtracted from every
    position.
    """

    n: int
    shift: int | None = None
    start: str | None = None
    plan: "switches.ShiftPlan | None" = field(default=None, init=False)

    def __post_init__(self) -> None:
        n = self.n
        if n < 1:
            raise ValueError("n must be at least 1")
        m = self.m = 2 * n + 1
        if n in SMALL_CASES:
            self._succ = TableSuccessor(n)
            native = self._succ.round_shift
        else:
            succ = LocalSuccessor(n)
            s = base_shift(n)
            self.plan = switches.plan_shift_fix(n, s)
            native = s
            for step in self.plan.steps:
                delta = succ.add_switch(step.switch)
                if delta % m != step.sign * step.switch.shift % m:
                    raise AssertionError("switch changed the shift with the wrong sign")
                native += delta
            self._succ = succ
        self.native_shift = native % m
        if self.shift is None:
            self.shift = self.native_shift
        self.shift %= m
        if gcd(self.shift, m) != 1:
            raise ValueError(f"shift {self.shift} is not coprime to {m}")
        self.factor = pow(self.native_shift, -1, m) * self.shift % m
        if self.start is None:
            self._base = default_start(n)
            self.start = vertex_to_combination(permute(self._base, self.factor))
        else:
            v = combination_to_vertex(self.start)
            if len(v) != m:
                raise ValueError("start combination has the wrong length")
            self._base = permute(v, pow(self.factor, -1, m))
        self.length = comb(2 * n + 2, n + 1)
        self.round_length = 2 * catalan(n)

    def map_position(self, p: int) -> int:
        return (p * self.factor - 1) % self.m + 1

    def __iter__(self) -> Iterator[tuple[int, str]]:
        z = self._base
        comb_bits = bytearray(self.start, "ascii")
        step = self._succ.step
        m, factor = self.m, self.factor
        for _ in range(self.length):
            z, p, _kind = step(z)
            q = (p * factor - 1) % m + 1
            yield q, comb_bits.decode("ascii")
            comb_bits[0], comb_bits[q] = comb_bits[q], comb_bits[0]

    def flips(self, limit: int | None = None) -> list[int]:
        out = []
        for k, (q, _) in enumerate(self):
            if limit is not None and k >= limit:
                break
            out.append(q)
        return out


def generate(n: int, shift: int | None = None, start: str | None = None) -> Iterator[tuple[int, str]]:
    return iter(Generator(n, shift, start))
