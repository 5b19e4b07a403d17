import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from starflip.bits import (
    Bitstring,
    deficiency,
    dyck_align,
    flip,
    flip_position,
    is_dyck,
    least_rotation,
    necklace,
    rotate,
    split_first,
    split_last,
)

from conftest import middle_levels

words = st.text(alphabet="01", min_size=1, max_size=40)


def middle_vertex(draw_n=st.integers(1, 12)):
    @st.composite
    def build(draw):
        n = draw(draw_n)
        ones = draw(st.sampled_from([n, n + 1]))
        bits = ["1"] * ones + ["0"] * (2 * n + 1 - ones)
        return "".join(draw(st.permutations(bits)))

    return build()


@pytest.mark.parametrize("i, want", [(1, "01100"), (0, "11000"), (5, "11000"), (-1, "10001")])
def test_rotate_examples(i, want):
    assert rotate("11000", i) == want


def test_necklace_class_of_11000():
    orbit = {rotate("11000", i) for i in range(5)}
    assert orbit == {"11000", "01100", "00110", "00011", "10001"}
    assert {rotate("01100", i) for i in range(5)} == orbit
    assert {rotate("00000", i) for i in range(5)} == {"00000"}


@pytest.mark.parametrize("w, d", [("01", 0), ("0", 1), ("111", -3)])
def test_deficiency(w, d):
    assert deficiency(w) == d


@pytest.mark.parametrize("w, ok", [("01", True), ("001011", True), ("10", False), ("0", False), ("", True)])
def test_is_dyck(w, ok):
    assert is_dyck(w) == ok


@pytest.mark.parametrize(
    "x, side, shift, word",
    [("00011", "A", 0, "0011"), ("11000", "A", 3, "0011"), ("01011", "B", 0, "0101")],
)
def test_dyck_align_examples(x, side, shift, word):
    assert dyck_align(x) == (side, shift, word)


@pytest.mark.parametrize("w, uv", [("01", ("", "")), ("0011", ("", "01")), ("0101", ("01", ""))])
def test_split_last(w, uv):
    assert split_last(w) == uv


def test_split_first_reads_leftmost_block():
    assert split_first("0101") == ("", "01")
    assert split_first("001101") == ("01", "01")


def test_alignment_by_full_scan():
    # the O(n) alignment must agree with trying every rotation
    for n in range(1, 6):
        for x in middle_levels(n):
            side, shift, word = dyck_align(x)
            z = rotate(x, shift)
            hits = [i for i in range(len(x)) if (rotate(x, i)[0] == "0" and is_dyck(rotate(x, i)[1:]))
                    or (rotate(x, i)[-1] == "1" and is_dyck(rotate(x, i)[:-1]))]
            assert hits == [shift]
            assert z == ("0" + word if side == "A" else word + "1")


@given(words, st.integers(-50, 50))
def test_rotate_inverse(x, i):
    assert rotate(rotate(x, i), -i) == x
    assert len(rotate(x, i)) == len(x)


@given(words)
def test_least_rotation_is_minimum(x):
    k = least_rotation(x)
    assert x[k:] + x[:k] == min(x[i:] + x[:i] for i in range(len(x)))


@given(words, st.integers(0, 40))
def test_necklace_is_rotation_invariant(x, i):
    assert necklace(rotate(x, i)) == necklace(x)


@given(middle_vertex())
def test_alignment_properties(x):
    side, shift, word = dyck_align(x)
    assert 0 <= shift < len(x)
    assert is_dyck(word)
    z = rotate(x, shift)
    assert z == ("0" + word if side == "A" else word + "1")
    assert side == ("A" if x.count("1") == len(x) // 2 else "B")


@given(middle_vertex(), st.data())
def test_flip_position_roundtrip(x, data):
    p = data.draw(st.integers(1, len(x)))
    y = flip(x, p)
    assert flip_position(x, y) == p
    assert flip(y, p) == x


def test_flip_position_rejects_non_neighbours():
    with pytest.raises(ValueError):
        flip_position("0011", "1100")


def test_bitstring_wrapper():
    b = Bitstring("11000")
    assert str(b.rotate(1)) == "01100"
    assert str(b.necklace()) == "00011"
    assert b.deficiency() == 1
    assert len(b) == 5
    with pytest.raises(ValueError):
        Bitstring("0120")


def test_exhaustive_weights_small():
    for n in range(1, 4):
        for bits in itertools.product("01", repeat=2 * n + 1):
            x = "".join(bits)
            if x.count("1") in (n, n + 1):
                assert dyck_align(x).side in "AB"
