"""Bitstring primitives for the middle levels of the (2n+1)-cube.

Bitstrings are plain Python ``str`` objects over ``'0'`` and ``'1'``.  Slicing
and comparison run in C, so every primitive here is a single linear pass.

Conventions used throughout the package:

* ``rotate(x, i)`` is the cyclic *right* rotation by ``i`` places,
  so ``rotate('0011', 1) == '1001'``.
* In a Dyck word ``0`` is an up-step and ``1`` a down-step; every prefix has
  at least as many 0s as 1s and the totals agree.
* ``A`` vertices have ``n`` ones, ``B`` vertices have ``n + 1`` ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple


def rotate(x: str, i: int) -> str:
    """Cyclic right rotation of ``x`` by ``i`` positions (negative means left)."""
    m = len(x)
    if m == 0:
        return x
    i %= m
    return x[m - i:] + x[:m - i] if i else x


def least_rotation(s: str) -> int:
    """Start index of the lexicographically least rotation of ``s`` (Booth)."""
    n = len(s)
    if n == 0:
        return 0
    ss = s + s
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        c = ss[j]
        i = fail[j - k - 1]
        while i != -1 and c != ss[k + i + 1]:
            if c < ss[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if c != ss[k + i + 1]:
            if c < ss[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k


def necklace(x: str) -> str:
    """Canonical representative of the rotation class of ``x`` (least rotation)."""
    k = least_rotation(x)
    return x[k:] + x[:k]


def deficiency(x: str) -> int:
    """Number of 0s minus number of 1s."""
    return len(x) - 2 * x.count("1")


def is_dyck(x: str) -> bool:
    h = 0
    for c in x:
        if c == "0":
            h += 1
        else:
            h -= 1
            if h < 0:
                return False
    return h == 0


class Alignment(NamedTuple):
    """Result of aligning a middle-levels vertex to its Dyck word.

    For an A vertex ``rotate(x, shift) == '0' + word``; for a B vertex
    ``rotate(x, shift) == word + '1'``.
    """

    side: str
    shift: int
    word: str


def dyck_align(x: str) -> Alignment:
    """Find the unique rotation exposing the Dyck word inside a vertex.

    Raises ``ValueError`` if ``x`` is not a vertex of the middle levels graph.
    """
    m = len(x)
    ones = x.count("1")
    if m % 2 == 0 or m < 3 or 2 * ones not in (m - 1, m + 1):
        raise ValueError(f"not a middle-levels vertex: {x!r}")
    side_a = 2 * ones == m - 1
    # prefix heights h(0..m-1); the Dyck rotation starts at the last (A) or
    # first (B) position where the height is minimal
    h = 0
    best = 0
    start = 0
    for i, c in enumerate(x):
        if side_a:
            if h <= best:
                best, start = h, i
        elif h < best:
            best, start = h, i
        h += 1 if c == "0" else -1
    shift = (m - start) % m
    r = x[start:] + x[:start]
    if side_a:
        return Alignment("A", shift, r[1:])
    return Alignment("B", shift, r[:-1])


def split_last(w: str) -> tuple[str, str]:
    """Split a nonempty Dyck word ``w = u0v1`` where ``0v1`` is its last block."""
    h = 0
    for i in range(len(w) - 1, -1, -1):
        h += 1 if w[i] == "1" else -1
        if h == 0:
            return w[:i], w[i + 1:-1]
    raise ValueError(f"not a nonempty Dyck word: {w!r}")


def split_first(w: str) -> tuple[str, str]:
    """Split a nonempty Dyck word ``w = 0u1v`` where ``0u1`` is its first block."""
    h = 0
    for i, c in enumerate(w):
        h += 1 if c == "0" else -1
        if h == 0:
            return w[1:i], w[i + 1:]
    raise ValueError(f"not a nonempty Dyck word: {w!r}")


def flip_position(x: str, y: str) -> int:
    """1-based position of the single bit where ``x`` and ``y`` differ."""
    pos = [i for i, (a, b) in enumerate(zip(x, y)) if a != b]
    if len(x) != len(y) or len(pos) != 1:
        raise ValueError(f"{x!r} and {y!r} are not adjacent")
    return pos[0] + 1


def flip(x: str, p: int) -> str:
    """Complement the bit at 1-based position ``p``."""
    i = p - 1
    return x[:i] + ("1" if x[i] == "0" else "0") + x[i + 1:]


@dataclass(frozen=True)
class Bitstring:
    """A value-typed bitstring with the rotation primitives attached."""

    bits: str

    def __post_init__(self) -> None:
        if not set(self.bits) <= {"0", "1"}:
            raise ValueError(f"bitstring must contain only 0/1: {self.bits!r}")

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits

    def rotate(self, i: int) -> "Bitstring":
        return Bitstring(rotate(self.bits, i))

    def necklace(self) -> "Bitstring":
        return Bitstring(necklace(self.bits))

    def deficiency(self) -> int:
        return deficiency(self.bits)

    def is_dyck(self) -> bool:
        return is_dyck(self.bits)

    def dyck_align(self) -> Alignment:
        return dyck_align(self.bits)
