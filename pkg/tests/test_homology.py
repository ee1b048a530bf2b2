import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covres.complex import SimplicialComplex
from covres.errors import InvalidArgument, ResourceLimit
from covres.homology import (
    GF2,
    GF3,
    QQ,
    FieldSpec,
    boundary_matrix,
    family_complex,
    homology_shift_check,
    reduced_homology,
    sparse_rank,
)
from oracles import brute_reduced_homology, dense_rank
from test_complex import complexes


def as_dict(profile):
    return {k - 1: d for k, d in enumerate(profile.dims)}


def test_field_parse():
    assert FieldSpec.parse("rational") == QQ
    assert FieldSpec.parse("Q") == QQ
    assert FieldSpec.parse("2") == GF2
    assert str(GF3) == "GF(3)"
    with pytest.raises(InvalidArgument):
        FieldSpec.parse("4")
    with pytest.raises(InvalidArgument):
        FieldSpec.parse("reals")


def test_known_profiles():
    # [DERIVED] two isolated points, three points, and the pentagon
    assert reduced_homology(family_complex("path", 3)).h(0) == 1
    assert reduced_homology(family_complex("cycle", 3)).h(0) == 2
    p = reduced_homology(family_complex("cycle", 5))
    assert p.h(1) == 1 and p.h(0) == 0


def test_void_and_irrelevant():
    v = reduced_homology(SimplicialComplex.void(2))
    assert v.void and v.is_zero
    irr = reduced_homology(SimplicialComplex.irrelevant(2))
    assert irr.h(-1) == 1


def test_simplex_is_acyclic():
    assert reduced_homology(SimplicialComplex.simplex(5)).is_zero


def test_projective_plane_torsion():
    # six-vertex triangulation of RP^2: H_1 = Z/2, so GF(2) sees extra classes
    rp2 = [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
           [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6]]
    c = SimplicialComplex(6, rp2)
    assert reduced_homology(c, QQ).is_zero
    g2 = reduced_homology(c, GF2)
    assert g2.h(1) == 1 and g2.h(2) == 1
    assert reduced_homology(c, GF3).is_zero


@given(complexes())
@settings(max_examples=150, deadline=None)
def test_homology_matches_dense_oracle(c):
    for field in (QQ, GF2, GF3):
        got = {i: d for i, d in as_dict(reduced_homology(c, field)).items() if d}
        want = {i: d for i, d in brute_reduced_homology(c.facets, field.p).items() if d}
        assert got == want


@given(complexes())
@settings(max_examples=100, deadline=None)
def test_euler_characteristic(c):
    assert reduced_homology(c).euler() == c.reduced_euler_characteristic()


@given(complexes())
@settings(max_examples=100, deadline=None)
def test_boundary_squares_to_zero(c):
    top = c.dim + 1
    for i in range(1, top):
        a = boundary_matrix(c, i)
        b = boundary_matrix(c, i + 1)
        if not a or not b or not b[0]:
            continue
        for r in range(len(a)):
            for col in range(len(b[0])):
                assert sum(a[r][k] * b[k][col] for k in range(len(b))) == 0


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=6))
def test_sparse_rank_matches_dense(rows):
    cols = [{r: rows[r][j] for r in range(len(rows)) if rows[r][j]} for j in range(4)]
    for p in (0, 2, 3, 7):
        assert sparse_rank(cols, FieldSpec(p)) == dense_rank(rows, p)


def test_sparse_rank_limit():
    cols = [{r: 1 for r in range(1001)} for _ in range(1000)]
    with pytest.raises(ResourceLimit):
        sparse_rank(cols)


def test_shift_small():
    assert homology_shift_check("path", 5)
    assert homology_shift_check("cycle", 6, GF2)
    with pytest.raises(InvalidArgument):
        homology_shift_check("cycle", 5)


def test_fields_agree_on_families():
    for family in ("path", "cycle"):
        for n in range(3, 10):
            c = family_complex(family, n)
            assert reduced_homology(c, QQ) == reduced_homology(c, GF2) == reduced_homology(c, GF3)
