import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from combstat import objects as ob


# ------------------------------------------------------------- counting

def test_counts_match_known_sequences():
    assert [ob.count_family("binary", n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert [ob.count_family("plane", n) for n in range(5)] == [1, 1, 2, 5, 14]
    assert [ob.count_family("dyck", n) for n in range(5)] == [1, 1, 2, 5, 14]
    assert [ob.count_family("schroeder", k) for k in range(1, 7)] == [1, 1, 3, 11, 45, 197]
    assert [ob.count_family("noncrossing", n) for n in range(5)] == [1, 1, 3, 12, 55]
    assert [ob.count_family("increasing", n) for n in range(5)] == [1, 1, 2, 6, 24]
    assert [ob.count_family("triangulation", n) for n in range(5)] == [1, 1, 2, 5, 14]
    assert [ob.count_family("dissection", n) for n in range(4)] == [1, 1, 3, 11]


def test_budget_guard():
    with pytest.raises(ValueError):
        ob.enumerate_family("binary", 12)
    assert ob.count_family("binary", 12, budget=12) == 208012
    with pytest.raises(ValueError):
        ob.enumerate_family("nope", 3)
    with pytest.raises(ValueError):
        ob.enumerate_family("schroeder", 0)


def test_objects_are_distinct():
    for family, n in [("binary", 5), ("plane", 5), ("dyck", 5),
                      ("schroeder", 5), ("noncrossing", 4),
                      ("triangulation", 4), ("dissection", 3)]:
        objs = list(ob.enumerate_family(family, n))
        assert len(set(objs)) == len(objs)


# ----------------------------------------------------------- statistics

def test_binary_leaf_depth_n3():
    counts, total = ob.distribution("binary", "leaf-depth", 3, 0)
    assert total == 5
    assert dict(counts) == {1: 2, 2: 2, 3: 1}
    assert ob.average("binary", "leaf-depth", 3, 0) == Fraction(9, 5)


def test_binary_abscissa_n3():
    vals = sorted(
        ob.statistic_vector("binary", "leaf-abscissa", t)[0]
        for t in ob.binary_trees(3)
    )
    assert vals == [-3, -2, -2, -1, -1]
    assert ob.average("binary", "leaf-abscissa", 3, 0) == Fraction(-9, 5)


def test_binary_figure_tree():
    t = ob.binary_from_text("(((..)((..).)).)")
    assert ob.binary_leaf_abscissas(t) == [-3, -1, -2, 0, 1, 1]
    assert ob.binary_leaf_depths(t) == [3, 3, 4, 4, 3, 1]
    assert ob.binary_to_text(t) == "(((..)((..).)).)"


def test_dyck_heights():
    assert ob.dyck_vertex_heights("UUDUDD") == [0, 1, 2, 1, 2, 1, 0]
    assert ob.dyck_upstep_heights("UUDUDD") == [1, 2, 2]
    assert ob.dyck_downstep_heights("UUDUDD") == [2, 2, 1]
    assert ob.dyck_vertex_heights("") == [0]


def test_dyck_distributions_n3():
    counts, total = ob.distribution("dyck", "upstep-height", 3, 2)
    assert (dict(counts), total) == ({1: 2, 2: 3}, 5)
    counts, total = ob.distribution("dyck", "vertex-height", 3, 3)
    assert (dict(counts), total) == ({1: 4, 3: 1}, 5)
    # walk statistics are 1-based in r
    with pytest.raises(ValueError):
        ob.distribution("dyck", "upstep-height", 3, 0)
    with pytest.raises(ValueError):
        ob.distribution("dyck", "upstep-height", 3, 4)


def test_plane_statistics_n3():
    counts, total = ob.distribution("plane", "leaf-depth", 3, 1, k=2)
    assert (dict(counts), total) == ({1: 1, 2: 2}, 3)
    counts, total = ob.distribution("plane", "node-depth", 3, 2)
    assert (dict(counts), total) == ({1: 2, 2: 3}, 5)
    # root is preorder position 0 at depth 0 in every tree
    counts, total = ob.distribution("plane", "node-depth", 3, 0)
    assert dict(counts) == {0: 5}


def test_plane_figure_codec():
    t = ((), ((),), ((), ()))
    assert ob.plane_to_text(t) == "(()(())(()()))"
    assert ob.plane_from_text("(()(())(()()))") == t
    assert ob.plane_leaf_count(t) == 4
    assert ob.plane_node_depths_preorder(t) == [0, 1, 1, 2, 1, 2, 2]


def test_schroeder_leaf_depths():
    counts, total = ob.distribution("schroeder", "leaf-depth", 3, 0)
    assert total == 3
    assert ob.average("schroeder", "leaf-depth", 3, 0) == Fraction(4, 3)
    for t in ob.schroeder_trees(5):
        assert all(len(node) != 1 for node in _subtrees(t))


def _subtrees(t):
    yield t
    for c in t:
        yield from _subtrees(c)


def test_noncrossing_distributions():
    counts, total = ob.distribution("noncrossing", "node-depth", 2, 1)
    assert (dict(counts), total) == ({1: 2, 2: 1}, 3)
    counts, total = ob.distribution("noncrossing", "node-depth", 3, 1)
    assert (dict(counts), total) == ({1: 7, 2: 4, 3: 1}, 12)
    counts, total = ob.distribution("noncrossing", "node-depth", 3, 0)
    assert dict(counts) == {0: 12}


def _is_spanning_noncrossing(edges, n):
    if len(edges) != n:
        return False
    for d1, d2 in itertools.combinations(edges, 2):
        if ob._crossing(d1, d2):
            return False
    seen = {0}
    frontier = [0]
    adj = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    while frontier:
        v = frontier.pop()
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == n + 1


def test_noncrossing_against_spanning_tree_filter():
    # independent check of the interval decomposition, small n
    for n in range(1, 5):
        chords = list(itertools.combinations(range(n + 1), 2))
        brute = {
            frozenset(sub)
            for sub in itertools.combinations(chords, n)
            if _is_spanning_noncrossing(sub, n)
        }
        assert set(ob.noncrossing_trees(n)) == brute


def test_increasing_statistics_n3():
    counts, total = ob.distribution("increasing", "leaf-depth", 3, 0)
    assert (dict(counts), total) == ({1: 2, 2: 3, 3: 1}, 6)
    assert ob.average("increasing", "leaf-depth", 3, 0) == Fraction(11, 6)
    counts, total = ob.distribution("increasing", "internal-depth", 3, 0)
    assert (dict(counts), total) == ({0: 2, 1: 3, 2: 1}, 6)
    assert ob.average("increasing", "internal-depth", 3, 0) == Fraction(5, 6)


def test_increasing_perm_roundtrip_figure():
    perm = (7, 8, 2, 3, 6, 1, 5, 4)
    t = ob.perm_to_increasing(perm)
    assert ob.increasing_to_perm(t) == perm
    assert ob.permutation_to_text(perm) == "78236154"
    assert ob.permutation_from_text("78236154") == perm
    assert ob.permutation_from_text("10,2,1,3") == (10, 2, 1, 3)
    # labels increase on every root-to-leaf path
    def check(node, floor):
        if node is None:
            return
        assert node[0] > floor
        check(node[1], node[0])
        check(node[2], node[0])
    check(t, 0)


def test_triangulation_separating_counts():
    counts, total = ob.distribution("triangulation", "separating-diagonals", 3, 0)
    assert (dict(counts), total) == ({0: 2, 1: 2, 2: 1}, 5)
    for sub in ob.triangulations(4):
        assert len(sub.diagonals) == 3  # n-1 diagonals always


def test_dissection_enumeration():
    subs = list(ob.dissections(2))
    assert {s.diagonals for s in subs} == {
        frozenset(),
        frozenset({(0, 2)}),
        frozenset({(1, 3)}),
    }


def test_separating_count_is_statistic_vector():
    sub = ob.PolygonSubdivision(3, frozenset({(0, 3), (1, 3)}), "triangulation")
    assert ob.statistic_vector(
        "triangulation", "separating-diagonals", sub
    ) == [1, 2, 2, 0]


def test_unknown_statistic():
    with pytest.raises(ValueError):
        ob.statistic_vector("binary", "node-depth", None)


def test_size_zero_objects():
    assert list(ob.enumerate_family("binary", 0)) == [None]
    assert ob.statistic_vector("binary", "leaf-depth", None) == [0]
    assert list(ob.enumerate_family("dyck", 0)) == [""]
    assert ob.dyck_upstep_heights("") == []
    assert list(ob.enumerate_family("increasing", 0)) == [None]
    assert list(ob.enumerate_family("noncrossing", 0)) == [frozenset()]


# ----------------------------------------------------------- text round
# trips on arbitrary members of each family

@settings(max_examples=60)
@given(st.integers(0, 6), st.randoms())
def test_binary_text_roundtrip(n, rng):
    trees = list(ob.binary_trees(n))
    t = rng.choice(trees)
    assert ob.binary_from_text(ob.binary_to_text(t)) == t


@settings(max_examples=60)
@given(st.integers(0, 6), st.randoms())
def test_dyck_text_roundtrip(n, rng):
    w = rng.choice(list(ob.dyck_paths(n)))
    assert ob.dyck_from_text(w) == w


def test_dyck_text_rejects_bad_walks():
    for bad in ("UDX", "DU", "UUD", "UDD"):
        with pytest.raises(ValueError):
            ob.dyck_from_text(bad)


def test_pairs_codec():
    e = frozenset({(0, 2), (0, 1)})
    assert ob.pairs_to_text(e) == "0-1,0-2"
    assert ob.pairs_from_text("0-1,0-2") == e
    assert ob.pairs_from_text("") == frozenset()


def test_subdivision_from_text_validation():
    sub = ob.subdivision_from_text("1-3,1-4", 3, "triangulation")
    assert sub.diagonals == frozenset({(1, 3), (1, 4)})
    with pytest.raises(ValueError):
        ob.subdivision_from_text("0-2,1-3", 3, "dissection")  # crossing
    with pytest.raises(ValueError):
        ob.subdivision_from_text("0-1", 3, "dissection")  # a side
    with pytest.raises(ValueError):
        ob.subdivision_from_text("0-4", 3, "dissection")  # the root side
    with pytest.raises(ValueError):
        ob.subdivision_from_text("1-3", 3, "triangulation")  # too few
