import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starflip import trees
from starflip.bits import dyck_align, flip, necklace, rotate
from starflip.necklaces import (
    FlipSequence,
    cycle_factor,
    f,
    f_inv,
    flip_seq,
    kappa,
    measure_shift,
    periodic_path,
    shift_between,
)

from conftest import middle_levels


@st.composite
def vertex(draw, hi=10):
    n = draw(st.integers(1, hi))
    ones = draw(st.sampled_from([n, n + 1]))
    bits = ["1"] * ones + ["0"] * (2 * n + 1 - ones)
    return "".join(draw(st.permutations(bits)))


def test_f_examples():
    assert f("00011") == "01011"
    assert f("01011") == "01010"
    assert kappa("00011") == 4


def test_f_is_a_bijection_with_inverse():
    for n in range(1, 5):
        vs = middle_levels(n)
        images = {f(x) for x in vs}
        assert images == set(vs)
        for x in vs:
            assert f_inv(f(x)) == x
            assert f(f_inv(x)) == x


def test_f_flips_one_bit_across_levels():
    for x in middle_levels(4):
        y = f(x)
        assert sum(a != b for a, b in zip(x, y)) == 1


def test_kappa_is_twice_lambda_and_invariant():
    for n in range(1, 6):
        for x in middle_levels(n):
            k = kappa(x)
            assert k == 2 * trees.lambda_of(dyck_align(x).word)
            assert kappa(rotate(x, 1)) == k
            assert kappa(f(x)) == k


def test_flip_sequence_of_00011():
    a = flip_seq("00011")
    assert a.shift == 2
    assert a.drive("00011")[:-1] == list(periodic_path("00011").vertices)
    assert str(a) == "2534"


def test_flip_sequence_conjugates_under_rotation():
    for n in range(1, 5):
        for x in middle_levels(n):
            a, b = flip_seq(x), flip_seq(rotate(x, 1))
            assert b == a.add(1)


def test_rev_is_an_involution():
    for n in range(1, 6):
        for w in trees.plane_tree_words(n):
            a = flip_seq("0" + w)
            assert a.rev().rev() == a
            x1 = "0" + w
            # the reversed sequence drives the same necklaces backwards
            end = a.drive(x1)[-1]
            back = a.rev().drive(rotate(end, a.shift))
            assert back[-1] == rotate(x1, a.shift) or necklace(back[-1]) == necklace(x1)


def test_mov_keeps_the_shift_and_walks_the_path():
    a = flip_seq("0000111")
    x1 = "0000111"
    b = a
    z = x1
    for k in range(len(a)):
        z = flip(z, b.entries[0])
        b = b.mov()
        assert b.shift == a.shift
        assert measure_shift(b.entries, z).shift == a.shift
    # one full round later the walk starts at rotate(x1, -shift)
    assert b == a.add(-a.shift)
    assert z == rotate(x1, -a.shift)


def test_add_zero_is_identity():
    a = flip_seq("00011")
    assert a.add(0) == a


def test_cycle_factor_counts():
    assert len(cycle_factor(2)) == 1
    orbit_counts = {1: 1, 2: 1, 3: 2, 4: 3, 5: 6, 6: 14, 7: 34}
    for n, want in orbit_counts.items():
        cf = cycle_factor(n)
        assert len(cf) == want
        covered = [k for c in cf.values() for k in c.necklaces]
        assert len(covered) == len(set(covered))
        if n <= 5:
            assert set(covered) == {necklace(x) for x in middle_levels(n)}


def test_shift_between_rejects_other_necklaces():
    with pytest.raises(ValueError):
        shift_between("00011", "00101")


@given(vertex())
@settings(max_examples=200)
def test_f_properties(x):
    y = f(x)
    assert f_inv(y) == x
    assert y.count("1") != x.count("1")
    assert f(rotate(x, 3)) == rotate(y, 3)


@given(vertex(hi=8))
def test_periodic_path_closes_in_the_start_necklace(x):
    p = periodic_path(x)
    seq = p.flips
    verts = seq.drive(x)
    assert verts[0] == rotate(verts[-1], seq.shift)
    assert len({necklace(v) for v in verts[:-1]}) == len(seq) == kappa(x)


@given(st.lists(st.integers(1, 9), min_size=1, max_size=20), st.integers(0, 8), st.integers(0, 8))
def test_flipsequence_algebra(entries, s, i):
    a = FlipSequence(tuple(entries), 9, s)
    assert a.add(i).add(-i) == a
    assert a.rev().rev() == a
    assert a.scale(1) == a


def test_alignment_offset_law():
    # observed: one f step keeps the offset, two steps advance it by one
    for n in range(1, 6):
        m = 2 * n + 1
        for x in middle_levels(n):
            if x.count("1") != n:
                continue
            l0 = dyck_align(x).shift
            assert dyck_align(f(x)).shift == l0
            z = x
            for i in range(1, 4):
                z = f(f(z))
                assert dyck_align(z).shift == (l0 + i) % m
