import itertools
import warnings
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covres.complex import (
    DegenerateDualWarning,
    SimplicialComplex,
    alexander_dual,
    clique_complex,
    deletion,
    faces,
    fh_vectors,
    h_from_f,
    link,
    minimal_nonface_masks,
    path_facet_predicate,
    pure_skeleton,
    pure_skeleton_nonfacet,
    restriction,
    second_h_closed_form,
    star,
    top_h_closed_form,
)
from covres.errors import InvalidArgument, NotAFace, UndefinedFH
from covres.graph import complement, cycle_graph, path_graph
from covres.homology import family_complex
from oracles import all_faces


@st.composite
def complexes(draw, n_max=7):
    n = draw(st.integers(1, n_max))
    verts = list(range(1, n + 1))
    facets = draw(st.lists(st.lists(st.sampled_from(verts), unique=True, max_size=n),
                           min_size=1, max_size=6))
    return SimplicialComplex(n, facets)


def brute_dual(c):
    full = frozenset(range(1, c.ambient + 1))
    fs = all_faces(c.facets)
    return {full - s for s in map(frozenset, itertools.chain.from_iterable(
        itertools.combinations(sorted(full), r) for r in range(c.ambient + 1))) if s not in fs}


def test_basic_shapes():
    assert SimplicialComplex.void(3).dim == -2
    assert SimplicialComplex.irrelevant(3).dim == -1
    assert SimplicialComplex.simplex(3).dim == 2
    c = SimplicialComplex(4, [[1, 2], [1, 2, 3], [4]])
    assert c.facets == [(4,), (1, 2, 3)]
    assert (1, 3) in c and (1, 4) not in c


def test_faces_of_path_complement():
    # [DERIVED] independent 3-sets of P6: {1,3,5},{1,3,6},{1,4,6},{2,4,6}
    c = clique_complex(complement(path_graph(6)))
    assert faces(c, 3) == [(1, 3, 5), (1, 3, 6), (1, 4, 6), (2, 4, 6)]


def test_nonfacet_skeleton_of_path_complement():
    # [DERIVED] the 2-subsets of 1..6 independent in P6 that are not facets: all but {2,5}
    c = family_complex("path", 6)
    sk = pure_skeleton_nonfacet(c, 1)
    assert len(sk.facets) == 9
    assert (2, 5) not in sk
    assert pure_skeleton(c, 1).facets.__len__() == 10


def test_dual_small():
    # [DERIVED] the minimal non-faces are {3}; its complement {1,2} is the only facet
    c = SimplicialComplex(3, [[1, 2]])
    assert alexander_dual(c).facets == [(1, 2)]


def test_dual_of_simplex_warns():
    with pytest.warns(DegenerateDualWarning):
        d = alexander_dual(SimplicialComplex.simplex(3))
    assert d.is_void


@given(complexes())
@settings(max_examples=150, deadline=None)
def test_dual_matches_brute_force(c):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateDualWarning)
        d = alexander_dual(c)
    assert {frozenset(f) for f in all_faces(d.facets)} == brute_dual(c)


@given(complexes())
@settings(max_examples=150, deadline=None)
def test_dual_is_an_involution(c):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateDualWarning)
        d = alexander_dual(c)
        if d.is_void:
            return
        assert alexander_dual(d) == c


@given(complexes())
@settings(max_examples=100, deadline=None)
def test_minimal_nonfaces(c):
    fs = all_faces(c.facets)
    for m in minimal_nonface_masks(c):
        s = frozenset(v for v in range(1, c.ambient + 1) if m >> (v - 1) & 1)
        assert s not in fs
        assert all(s - {v} in fs for v in s)


def test_link_in_cycle_complex():
    c = family_complex("cycle", 5)
    assert link(c, [1]).facets == [(3,), (4,)]
    with pytest.raises(NotAFace):
        link(c, [1, 2])
    with pytest.raises(NotAFace):
        star(c, [1, 2])


@given(complexes())
@settings(max_examples=100, deadline=None)
def test_link_star_deletion_against_faces(c):
    fs = all_faces(c.facets)
    for f in list(fs)[:4]:
        lk = all_faces(link(c, f).facets)
        assert lk == {g for g in fs if not g & f and g | f in fs}
        st_ = all_faces(star(c, f).facets)
        assert st_ == {g for g in fs if g | f in fs}
        if f:
            dl = all_faces(deletion(c, f).facets)
            assert dl == {g for g in fs if not f <= g}


@given(complexes())
@settings(max_examples=100, deadline=None)
def test_restriction(c):
    w = [v for v in range(1, c.ambient + 1) if v % 2 == 1]
    r = restriction(c, w)
    assert r.embedding == tuple(w)
    back = {frozenset(r.embedding[v - 1] for v in f) for f in all_faces(r.facets)}
    assert back == {f for f in all_faces(c.facets) if f <= set(w)}


def test_restriction_outside_ambient():
    with pytest.raises(InvalidArgument):
        restriction(SimplicialComplex(3, [[1, 2]]), [4])


@given(complexes())
@settings(max_examples=150, deadline=None)
def test_f_counts_and_euler(c):
    fs = all_faces(c.facets)
    f = c.f_counts()
    assert sum(f) == len(fs)
    for k, v in enumerate(f):
        assert v == sum(1 for s in fs if len(s) == k)
    assert c.reduced_euler_characteristic() == sum((-1) ** (k - 1) * v for k, v in enumerate(f))


@given(complexes())
@settings(max_examples=150, deadline=None)
def test_h_vector_inverts(c):
    fh = fh_vectors(c)
    d = fh.d
    # h(1) counts the top-dimensional faces
    assert sum(fh.h) == c.f_counts()[-1]
    # f_{i-1} = sum_k C(d-k, i-k) h_k
    fe = [1] + list(fh.f)
    for i in range(d + 1):
        assert fe[i] == sum(comb(d - k, i - k) * fh.h[k] for k in range(i + 1))


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=9))
def test_h_closed_forms(f):
    d = len(f) - 1
    h = h_from_f(f, d)
    assert h[d] == top_h_closed_form(f, d)
    if d >= 1:
        assert h[d - 1] == second_h_closed_form(f, d)


def test_fh_void_undefined():
    with pytest.raises(UndefinedFH):
        fh_vectors(SimplicialComplex.void(2))


def test_path_facet_predicate_matches_independence_complex():
    for n in range(2, 11):
        facets = set(family_complex("path", n).facets)
        verts = range(1, n + 1)
        for r in range(1, n + 1):
            for f in itertools.combinations(verts, r):
                assert path_facet_predicate(n, f) == (f in facets), (n, f)


def test_cycle_complex_is_independence_complex():
    c = family_complex("cycle", 7)
    assert c == clique_complex(complement(cycle_graph(7)))
    assert all(len(f) <= 3 for f in c.facets)


def test_json_round_trip():
    c = SimplicialComplex(5, [[1, 2, 3], [3, 4], [5]])
    assert SimplicialComplex.from_dict(c.to_dict()) == c
    assert '"facets"' in c.to_json()
