import pytest

from starflip import spanning, trees
from starflip.spanning import (
    Q0,
    Q1,
    Q2,
    Q4,
    SelectionOracle,
    Selection,
    StarTree,
    build_H,
    build_T,
    check_subtree_choice,
    select_gluing_pair,
)
from starflip.trees import canonical_word, pull, push

from conftest import bfs_potentials

PT = {4: 3, 5: 6, 6: 14, 7: 34, 8: 95}


def _connected_spanning(nodes, arcs):
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for a in arcs:
        ra, rb = find(a.source), find(a.target)
        if ra == rb:
            return False
        parent[ra] = rb
    return len({find(v) for v in nodes}) == 1


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_T_is_a_spanning_tree(n):
    g, sels = build_T(n)
    assert len(g.nodes) == PT[n]
    assert len(g.arcs) == PT[n] - 1 == len(sels)
    assert _connected_spanning(g.nodes, g.arcs)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_T_arcs_are_H_arcs(n):
    h = build_H(n)
    g, _ = build_T(n)
    h_pairs = {(a.x, a.y) for a in h.arcs}
    for a in g.arcs:
        assert (a.x, a.y) in h_pairs
        assert a.source == canonical_word(a.x) and a.target == canonical_word(a.y)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_arcs_change_potential_by_one(n):
    g, _ = build_T(n)
    for a in g.arcs:
        assert abs(min(bfs_potentials(a.x)) - min(bfs_potentials(a.y))) == 1


def test_H_has_a_loop_at_n4():
    h = build_H(4)
    loops = [a for a in h.arcs if a.source == a.target]
    assert loops and loops[0].source == canonical_word("01001101")


def test_star_has_no_selection():
    with pytest.raises(StarTree):
        select_gluing_pair(trees.star(4))
    assert SelectionOracle(4).selection(trees.star(4)) is None


@pytest.mark.parametrize("n", [5, 7, 9])
def test_dumbbell_rule(n):
    s = select_gluing_pair(trees.dumbbell(n))
    assert s.rule == "D"
    assert canonical_word(s.y) == canonical_word(trees.dumbbell_rotated(n))
    assert s.x == push(s.y)
    assert min(bfs_potentials(s.x)) == min(bfs_potentials(s.y)) - 1
    if n == 5:
        assert canonical_word(s.x) == canonical_word(trees.footed_star(5))


def test_every_nonstar_tree_except_dumbbell_uses_subtree_rules():
    _, sels = build_T(5)
    rules = {w: s.rule for w, s in sels.items()}
    assert rules.pop(canonical_word(trees.dumbbell(5))) == "D"
    assert all(r != "D" for r in rules.values())


def test_selected_pairs_are_gluing_pairs():
    for n in range(4, 8):
        _, sels = build_T(n)
        for w, s in sels.items():
            assert pull(s.x) == s.y
            assert w in (canonical_word(s.x), canonical_word(s.y))


@pytest.mark.parametrize("n", [5, 6, 7])
def test_subtree_guarantees_hold(n):
    _, sels = build_T(n)
    assert check_subtree_choice(sels) == []


def test_subtree_guarantee_detector():
    fake = Selection("w", "x", "y", "q137", 0, (Q2, Q1), 1, 0, "i")
    assert check_subtree_choice({"w": fake}) == ["w"]
    fine = Selection("w", "x", "y", "q137", 0, (Q0, Q1), 1, 0, "i")
    assert check_subtree_choice({"w": fine}) == []


def test_t2_conditions():
    assert spanning._t2_unique([Q0, Q1]) == (1, "i")
    assert spanning._t2_unique([Q2, Q0]) == (0, "ii")
    assert spanning._t2_unique([Q4, Q4, "00010111"]) == (2, "iii")
    assert spanning._t2_unique([Q1, Q1, Q1]) == (0, "iv")


def test_least_cyclic_order():
    ts = ["0011", "01", "001011"]
    r = spanning._least_cyclic_order(ts)
    rotations = [ts[k:] + ts[:k] for k in range(3)]
    assert ts[r:] + ts[:r] == min(rotations, key=lambda z: "".join("." + s for s in z))


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_oracle_matches_global_selection(n):
    _, sels = build_T(n)
    xs = {s.x for s in sels.values()}
    ys = {s.y for s in sels.values()}
    oracle = SelectionOracle(n, cache_size=8)
    for w in trees.dyck_words(n):
        assert oracle.in_x(w) == (w in xs)
        assert oracle.in_y(w) == (w in ys)


def test_selection_is_independent_of_the_root():
    for n in (5, 6):
        for w in trees.plane_tree_words(n):
            if w == canonical_word(trees.star(n)):
                continue
            base = select_gluing_pair(w)
            for z in trees.rho_orbit(w):
                s = select_gluing_pair(z)
                assert (s.x, s.y) == (base.x, base.y)


def test_exports():
    g, _ = build_T(5)
    dot = g.to_dot("T")
    assert dot.startswith("digraph T {") and dot.count("->") == PT[5] - 1
    assert g.to_csv().count("\n") == PT[5]


def test_range_checks():
    with pytest.raises(ValueError):
        build_T(3)
    with pytest.raises(ValueError):
        SelectionOracle(3)


def test_no_nesting_or_interleaving_n7():
    from starflip.verifier import check_gluing_cycles

    assert all(c.passed for c in check_gluing_cycles(7))
