"""The flip bijection ``f`` on the middle levels graph and its periodic paths.

``f`` is defined on aligned vertices and extended by rotation:

* A vertex ``x`` with ``rotate(x, l) == '0' + t`` maps to
  ``rotate(rho(t) + '1', -l)``.
* A vertex ``y`` with ``rotate(y, l) == t + '1'`` maps to ``rotate(t + '0', -l)``.

Iterating ``f`` from ``x`` returns to the necklace of ``x`` after
``kappa(x) = 2 * lambda_of(t(x))`` steps.  The flip sequence of such a
periodic path has a *shift* ``s`` defined by ``x_1 == rotate(x_{k+1}, s)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import trees
from .bits import dyck_align, flip, flip_position, necklace, rotate


def f(x: str) -> str:
    side, l, t = dyck_align(x)
    if side == "A":
        return rotate(trees.rho(t) + "1", -l)
    return rotate(t + "0", -l)


def f_inv(y: str) -> str:
    side, l, t = dyck_align(y)
    if side == "B":
        return rotate("0" + trees.rho_inv(t), -l)
    return rotate(t + "1", 1 - l)


def kappa(x: str) -> int:
    """Number of ``f`` steps from ``x`` until the necklace of ``x`` recurs."""
    start = necklace(x)
    z = f(x)
    k = 1
    while necklace(z) != start:
        z = f(z)
        k += 1
        if k > 2 * len(x):
            raise RuntimeError("f did not return to the start necklace")
    return k


def shift_between(first: str, last: str) -> int:
    """The ``s`` in ``[0, m)`` with ``first == rotate(last, s)``."""
    m = len(first)
    for s in range(m):
        if rotate(last, s) == first:
            return s
    raise ValueError(f"{first!r} and {last!r} are not rotations of each other")


def _norm(p: int, m: int) -> int:
    return (p - 1) % m + 1


@dataclass(frozen=True)
class FlipSequence:
    """Flip positions (1-based, in ``[1, m]``) together with the shift they realise.

    Driving the sequence from ``x_1`` gives ``x_1, ..., x_{k+1}`` with
    ``x_1 == rotate(x_{k+1}, shift)``.  Continuing periodically, the next
    block of flips is this block with ``shift`` subtracted from every entry.
    """

    entries: tuple[int, ...]
    m: int
    shift: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(_norm(p, self.m) for p in self.entries))
        object.__setattr__(self, "shift", self.shift % self.m)

    def __len__(self) -> int:
        return len(self.entries)

    def drive(self, x: str) -> list[str]:
        """All vertices ``x_1, ..., x_{k+1}`` visited from ``x``."""
        out = [x]
        for p in self.entries:
            x = flip(x, p)
            out.append(x)
        return out

    def rev(self) -> "FlipSequence":
        """The reversed path, moved back to start in the necklace of ``x_1``."""
        return FlipSequence(tuple(p + self.shift for p in reversed(self.entries)), self.m, -self.shift)

    def mov(self) -> "FlipSequence":
        """Start one step later: the first flip moves to the end, adjusted by the shift."""
        if not self.entries:
            return self
        a = self.entries
        return FlipSequence(a[1:] + (a[0] - self.shift,), self.m, self.shift)

    def add(self, i: int) -> "FlipSequence":
        """Shift every entry by ``i`` (the sequence of the rotated path)."""
        return FlipSequence(tuple(p + i for p in self.entries), self.m, self.shift)

    def scale(self, factor: int) -> "FlipSequence":
        return FlipSequence(tuple(p * factor for p in self.entries), self.m, self.shift * factor)

    def __str__(self) -> str:
        return "".join(str(p) for p in self.entries) if self.m <= 9 else " ".join(map(str, self.entries))


def measure_shift(entries, x: str) -> FlipSequence:
    """Drive ``entries`` from ``x`` and return the resulting :class:`FlipSequence`."""
    m = len(x)
    z = x
    for p in entries:
        z = flip(z, _norm(p, m))
    return FlipSequence(tuple(entries), m, shift_between(x, z))


@dataclass(frozen=True)
class PeriodicPath:
    vertices: tuple[str, ...]
    flips: FlipSequence

    @property
    def kappa(self) -> int:
        return len(self.vertices)


def periodic_path(x: str) -> PeriodicPath:
    start = necklace(x)
    verts = [x]
    flips = []
    z = x
    while True:
        nz = f(z)
        flips.append(flip_position(z, nz))
        z = nz
        if necklace(z) == start:
            break
        verts.append(z)
        if len(verts) > 2 * len(x):
            raise RuntimeError("f did not return to the start necklace")
    seq = FlipSequence(tuple(flips), len(x), shift_between(x, z))
    return PeriodicPath(tuple(verts), seq)


def flip_seq(x: str) -> FlipSequence:
    return periodic_path(x).flips


@dataclass(frozen=True)
class FactorCycle:
    """One cycle of the factor: the necklaces met along ``P('0' + tree)``."""

    tree: str
    lam: int
    necklaces: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.necklaces)


def cycle_factor(n: int) -> dict[str, FactorCycle]:
    """Cycles of the necklace graph traced by ``f``, keyed by canonical plane-tree word."""
    if n < 1:
        raise ValueError("n must be positive")
    out = {}
    for w in trees.plane_tree_words(n):
        path = periodic_path("0" + w)
        out[w] = FactorCycle(w, trees.lambda_of(w), tuple(necklace(v) for v in path.vertices))
    return out


def is_coprime(s: int, m: int) -> bool:
    return gcd(s % m, m) == 1
