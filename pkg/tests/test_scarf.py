import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covres import _bits
from covres.betti import betti_hochster
from covres.complex import SimplicialComplex, clique_complex
from covres.errors import InvalidArgument, ResourceLimit
from covres.graph import (
    all_graphs,
    complement,
    complete_bipartite,
    cycle_graph,
    is_chordal,
    is_complete_bipartite,
    parse_edge_list,
    path_graph,
    random_graph,
)
from covres.ideal import SquarefreeMonomialIdeal, cover_ideal
from covres.scarf import (
    _scarf_graph_check,
    all_leaf_orders,
    example_a_criterion,
    has_scarf_resolution,
    intersection_multiset,
    is_gorenstein,
    is_sensitive,
    leaf_order,
    lemma_a_star_membership,
    make_leaf_order,
    scarf_complex,
    star_equals_branch_intersections,
    verify_gorenstein,
    verify_scarf_theorem,
)
from covres.homology import QQ
from oracles import brute_scarf_faces

PATH3 = SimplicialComplex(4, [[1, 2], [2, 3], [3, 4]])
STAR3 = SimplicialComplex(4, [[1, 2], [1, 3], [1, 4]])
EXAMPLE = [[1, 2, 3], [2, 3, 4], [3, 5], [4, 6]]
TTREE_COMPLEMENT = """n 5
1 3
1 4
1 5
2 4
2 5
4 5
"""


def brute_is_leaf_order(facets):
    """Each F_i (i > 1) has some G in the prefix with H ∩ F_i ⊆ G ∩ F_i for every earlier H."""
    sets = [frozenset(f) for f in facets]
    for i in range(1, len(sets)):
        f = sets[i]
        prefix = sets[:i]
        if not any(all(h & f <= g & f for h in prefix) for g in prefix):
            return False
    return True


def brute_leaf_orders(c):
    return sorted(p for p in itertools.permutations(c.facets) if brute_is_leaf_order(p))


def test_leaf_order_of_path_complex():
    lo = leaf_order(PATH3)
    assert lo.facets == [(1, 2), (2, 3), (3, 4)]
    assert lo.branches[1:] == (frozenset({0}), frozenset({1}))


def test_leaf_order_fails_on_square():
    assert leaf_order(clique_complex(cycle_graph(4))) is None
    assert all_leaf_orders(clique_complex(cycle_graph(4))) == []


def test_leaf_order_edge_cases():
    assert len(leaf_order(SimplicialComplex(3, [[1, 2, 3]]))) == 1
    assert len(all_leaf_orders(SimplicialComplex(3, [[1, 2, 3]]))) == 1
    with pytest.raises(InvalidArgument):
        leaf_order(SimplicialComplex.void(3))


def test_leaf_order_counts():
    # [DERIVED] permutation check: the path complex has 4 leaf orders
    # (only {1,2},{3,4} first and then {2,3} fails, in either order)
    orders = [tuple(o.facets) for o in all_leaf_orders(PATH3)]
    assert sorted(orders) == brute_leaf_orders(PATH3)
    assert len(orders) == 4
    assert len(all_leaf_orders(STAR3)) == 6


def test_leaf_order_cap():
    c = SimplicialComplex(10, [[i] for i in range(1, 11)])
    with pytest.raises(ResourceLimit):
        all_leaf_orders(c)


@given(st.integers(2, 7), st.floats(0.2, 0.9), st.integers(0, 10**6))
@settings(max_examples=80, deadline=None)
def test_leaf_orders_match_brute_force(n, p, seed):
    g = random_graph(n, p, random.Random(seed))
    c = clique_complex(g)
    if len(c.masks) > 6:
        return
    got = sorted(tuple(o.facets) for o in all_leaf_orders(c))
    assert got == brute_leaf_orders(c)
    # Dirac: a leaf order exists iff the graph is chordal
    assert (leaf_order(c) is not None) == is_chordal(g)
    lo = leaf_order(c)
    if lo is not None:
        assert brute_is_leaf_order(lo.facets)
        assert sorted(lo.facets) == sorted(c.facets)


def test_multiset_literal():
    # [PAPER] worked example of the intersection multiset
    m = intersection_multiset(EXAMPLE)
    assert m.literal() == "{{2,3},{4},{3}^3,∅^6}"
    assert m.unique_literal() == "{{2,3},{4}}"
    assert m.size == 11


def test_multiset_small():
    m = intersection_multiset([[1, 2], [3, 4]])
    assert m.as_dict() == {(): 1} and m.unique_sets() == [()]
    m = intersection_multiset([[1, 2], [2, 3], [3, 4]])
    assert m.as_dict() == {(2,): 1, (3,): 1, (): 2}
    assert m.unique_sets() == [(2,), (3,)]
    with pytest.raises(ResourceLimit):
        intersection_multiset([[1]])


@given(st.lists(st.frozensets(st.integers(1, 6), min_size=1), min_size=2, max_size=6))
def test_multiset_brute_force(facets):
    m = intersection_multiset([sorted(f) for f in facets])
    want = {}
    for r in range(2, len(facets) + 1):
        for c in itertools.combinations(facets, r):
            key = tuple(sorted(frozenset.intersection(*c)))
            want[key] = want.get(key, 0) + 1
    assert m.as_dict() == want
    assert set(m.unique_sets()) == {k for k, v in want.items() if v == 1}


def test_sensitivity_examples():
    assert is_sensitive(make_leaf_order([_bits.to_mask(f) for f in PATH3.facets]))
    # the third star facet has both earlier facets as branches, and {1} repeats
    s = is_sensitive(leaf_order(STAR3))
    assert not s
    assert s.ambiguous_positions == (2,) and s.comparable_pairs == ((1, 2),)


def test_lemma_a_on_example():
    c = SimplicialComplex(6, EXAMPLE)
    orders = all_leaf_orders(c)
    assert orders
    for o in orders:
        assert lemma_a_star_membership(o)


@given(st.lists(st.frozensets(st.integers(1, 6), min_size=1, max_size=4),
                min_size=3, max_size=3, unique=True))
@settings(max_examples=300)
def test_three_facet_criterion(sets):
    masks = [_bits.to_mask(s) for s in sets]
    if any(a != b and a & b == a for a in masks for b in masks):
        return
    if masks[0] & masks[1] & masks[2]:
        return
    for perm in itertools.permutations(masks):
        lo = make_leaf_order(perm)
        if lo is None:
            continue
        assert bool(is_sensitive(lo)) == example_a_criterion(*perm)


def test_scarf_complex_small():
    s = scarf_complex(SquarefreeMonomialIdeal(2, [[1], [2]]))
    assert s.faces == ((0,), (1,), (0, 1))
    j = cover_ideal(path_graph(4))  # gens (1,3), (2,3), (2,4)
    s = scarf_complex(j)
    pairs = [f for f in s.faces if len(f) == 2]
    # [DERIVED] {g13, g24} shares its lcm x1x2x3x4 with the full triple
    assert pairs == [(0, 1), (1, 2)]
    assert s.fvector == (3, 2)


@given(st.lists(st.frozensets(st.integers(1, 7), min_size=1), min_size=1, max_size=8))
@settings(max_examples=200, deadline=None)
def test_scarf_downward_closed_and_brute(gens):
    i = SquarefreeMonomialIdeal(7, [sorted(g) for g in gens])
    s = scarf_complex(i)
    faces = set(s.faces)
    assert list(s.faces) == brute_scarf_faces([frozenset(g) for g in i.gens])
    for f in faces:
        for r in range(1, len(f)):
            assert all(sub in faces for sub in itertools.combinations(f, r))
    assert all((k,) in faces for k in range(len(i)))


def test_scarf_cap():
    i = SquarefreeMonomialIdeal(21, [[v] for v in range(1, 22)])
    with pytest.raises(ResourceLimit):
        scarf_complex(i)


def test_has_scarf_resolution_examples():
    j = cover_ideal(path_graph(4))
    assert has_scarf_resolution(j, betti_hochster(j))
    i = SquarefreeMonomialIdeal(2, [[1], [2]])
    assert has_scarf_resolution(i, betti_hochster(i))
    # complement of a non-path tree
    g = parse_edge_list(TTREE_COMPLEMENT)
    j = cover_ideal(g)
    assert not has_scarf_resolution(j, betti_hochster(j))
    assert not is_sensitive(leaf_order(clique_complex(complement(g))))
    k23 = cover_ideal(complete_bipartite(2, 3))
    assert len(k23) == 2 and has_scarf_resolution(k23, betti_hochster(k23))


def test_has_scarf_resolution_rejects_wrong_table():
    j = cover_ideal(path_graph(4))
    other = betti_hochster(cover_ideal(cycle_graph(5)))
    with pytest.raises(InvalidArgument):
        has_scarf_resolution(j, other)


def test_gorenstein_examples():
    assert is_gorenstein(complete_bipartite(2, 3))
    assert is_gorenstein(complete_bipartite(1, 1))
    assert not is_gorenstein(path_graph(4))
    assert not is_gorenstein(cycle_graph(5))


def test_scarf_sweep_small():
    assert verify_scarf_theorem(5).passed
    with pytest.raises(ResourceLimit):
        verify_scarf_theorem(8)


def test_gorenstein_sweep_small():
    assert verify_gorenstein(5).passed


def test_scarf_sample_n7():
    rng = random.Random(2024)
    checked = 0
    while checked < 60:
        g = random_graph(7, rng.uniform(0.5, 0.9), rng)
        if g.has_isolated_vertex or not is_chordal(complement(g)):
            continue
        checked += 1
        assert _scarf_graph_check(g, QQ) == []


def test_sensitivity_consistent_across_orders_n5():
    for g in all_graphs(5):
        if g.has_isolated_vertex or not is_chordal(complement(g)):
            continue
        c = clique_complex(complement(g))
        verdicts = {bool(is_sensitive(o)) for o in all_leaf_orders(c)}
        assert len(verdicts) == 1
        for o in all_leaf_orders(c):
            assert bool(is_sensitive(o)) == star_equals_branch_intersections(o)


def test_gorenstein_predicate_n4():
    for g in all_graphs(4):
        if not g.has_isolated_vertex:
            assert is_gorenstein(g) == is_complete_bipartite(g)


@pytest.mark.slow
def test_scarf_sweep_n7():
    assert verify_scarf_theorem(7).passed
