import pytest
from hypothesis import given
from hypothesis import strategies as st

from starflip import trees
from starflip.bits import is_dyck
from starflip.trees import (
    Q_WORDS,
    Tree,
    canonical_plane,
    canonical_word,
    centroid_and_potential,
    dyck_words,
    gluing_parts,
    lambda_of,
    leaf_flags,
    plane_tree_words,
    pull,
    pullable,
    push,
    pushable,
    q_pattern,
    rho,
    rho_inv,
    rho_orbit,
    root_for_pull,
    root_for_push,
    special_trees,
    subtrees_at,
)

from conftest import bfs_potentials


@st.composite
def dyck(draw, lo=1, hi=12):
    n = draw(st.integers(lo, hi))
    steps = []
    opened = height = 0
    while len(steps) < 2 * n:
        can_open = opened < n
        can_close = height > 0
        if can_open and (not can_close or draw(st.booleans())):
            steps.append("0")
            opened += 1
            height += 1
        else:
            steps.append("1")
            height -= 1
    return "".join(steps)


def test_rho_examples():
    assert rho("0011") == "0101"
    assert rho("01") == "01"
    assert rho_inv("0101") == "0011"


@pytest.mark.parametrize("w, lam", [("01", 1), ("0011", 2), ("001011", 2)])
def test_lambda_examples(w, lam):
    assert lambda_of(w) == lam


def test_canonical_examples():
    assert canonical_word("0101") == "0011"
    assert canonical_word("01") == "01"
    w = "001011"
    assert canonical_plane(rho(rho(rho(w)))) == canonical_plane(w)


def test_centroid_examples():
    assert centroid_and_potential("0011") == ([1], 2)
    cs, phi = centroid_and_potential("01")
    assert len(cs) == 2 and phi == 1
    assert centroid_and_potential("00101011") == ([1], 4)


def test_pull_push_examples():
    assert pull("001011") == "001101"
    assert pull("010011") == "010101"
    assert gluing_parts("001011") == ("", "01")
    assert gluing_parts("010011") == ("01", "")
    with pytest.raises(ValueError):
        pull("01")


def test_named_trees():
    named = special_trees(5)
    assert named["q4"] == "00101011"
    assert trees.star(4) == "00101011"
    assert named["d"] == "0101001011"
    assert named["q9"] == "0010101011"
    assert named["d'"] == rho(rho(named["d"]))


def test_q_patterns():
    assert q_pattern("01") == (0, 0)
    assert q_pattern("000111") == (1, 1)
    assert q_pattern("00001111") == (2, 1)
    assert q_pattern("0" + Q_WORDS[5] + "1") == (1, 5)
    assert q_pattern("0101") is None


def test_push_undoes_pull_exhaustively():
    for n in range(2, 7):
        for x in dyck_words(n):
            if pullable(x):
                y = pull(x)
                assert pushable(y) and push(y) == x


def test_dyck_and_plane_tree_counts():
    catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430]
    plane = [1, 1, 1, 2, 3, 6, 14, 34, 95]
    for n in range(1, 9):
        assert len(dyck_words(n)) == catalan[n]
        assert len(plane_tree_words(n)) == plane[n]
        # orbit sizes add up to the Catalan number
        assert sum(lambda_of(w) for w in plane_tree_words(n)) == catalan[n]


def test_centroids_match_brute_force():
    for n in range(1, 8):
        for w in dyck_words(n):
            pots = bfs_potentials(w)
            cs, phi = centroid_and_potential(w)
            assert phi == min(pots)
            assert sorted(cs) == [v for v, p in enumerate(pots) if p == phi]


def test_star_subtrees_are_single_edges():
    t = Tree(trees.star(3))
    c = t.centroids()[0][0]
    assert subtrees_at(t, c) == ["01", "01", "01"]


def test_dumbbell_has_one_nonleaf_subtree():
    t = Tree(trees.dumbbell(5))
    for c in t.centroids()[0]:
        subs = subtrees_at(t, c)
        assert sorted(subs) == sorted([trees.star(3), "01", "01"])


def test_subtrees_reassemble_rerooted_word():
    for n in range(1, 7):
        for w in dyck_words(n):
            t = Tree(w)
            for c in range(t.size):
                if t.degree(c) == 0:
                    continue
                b = t.nbrs[c][-1]
                subs = subtrees_at(t, c, b)
                # reading right to left restores T rooted at c with rightmost child b
                assert "".join(reversed(subs)) == t.rooted_at(c, b)


def test_thin_leaf():
    t = Tree("000111")  # path of length 3; the bottom leaf hangs off a degree-2 vertex
    cs, _ = t.centroids()
    leaf = 3
    ctx = leaf_flags(t, cs[0], leaf)
    assert ctx.thin


def test_rightmost_leaf_is_pullable_to_centroid():
    for n in range(4, 8):
        for w in plane_tree_words(n):
            if w == canonical_word(trees.star(n)):
                continue
            t = Tree(w)
            cs, _ = t.centroids()
            c = cs[0]
            for b in t.nbrs[c]:
                if t.is_leaf(b):
                    continue
                a = t.leaves_beyond(c, b)[-1]
                ctx = leaf_flags(t, c, a)
                if ctx.distance >= 2:
                    assert ctx.pullable_to
                    x = root_for_pull(t, c, a)
                    assert pullable(x)


def test_moves_towards_centroid_lower_potential():
    for n in range(4, 7):
        for w in plane_tree_words(n):
            t = Tree(w)
            c = t.centroids()[0][0]
            phi = t.centroids()[1]
            for a in range(t.size):
                if not t.is_leaf(a) or a == c:
                    continue
                ctx = leaf_flags(t, c, a)
                if ctx.pullable_to:
                    x = root_for_pull(t, c, a)
                    assert canonical_word(x) == w
                    assert centroid_and_potential(pull(x))[1] == phi - 1
                if ctx.pushable_to:
                    y = root_for_push(t, c, a)
                    assert canonical_word(y) == w
                    assert centroid_and_potential(push(y))[1] == phi - 1


@given(dyck())
def test_rho_inverse_property(w):
    assert rho_inv(rho(w)) == w
    assert rho(rho_inv(w)) == w
    assert is_dyck(rho(w))


@given(dyck())
def test_lambda_divides_twice_edges(w):
    n = len(w) // 2
    orbit = rho_orbit(w)
    assert (2 * n) % len(orbit) == 0
    assert canonical_word(w) == min(orbit)


@given(dyck(hi=30))
def test_tree_roundtrip(w):
    t = Tree(w)
    assert t.rooted_at(0, t.nbrs[0][-1]) == w
    assert t.edges == len(w) // 2


@given(dyck(hi=25))
def test_linear_centroids_agree_with_bfs(w):
    pots = bfs_potentials(w)
    cs, phi = centroid_and_potential(w)
    assert phi == min(pots)
    assert len(cs) == pots.count(phi)


@given(dyck(lo=2, hi=20))
def test_rooted_at_each_edge_is_in_orbit(w):
    t = Tree(w)
    orbit = set(rho_orbit(w))
    for v in range(t.size):
        for u in t.nbrs[v]:
            assert t.rooted_at(v, u) in orbit
