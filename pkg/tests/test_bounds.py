import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minksum.bounds import (
    BoundReport,
    bineighborly_cap,
    hF_recurrence_holds,
    hF_upper,
    hF_upper_high,
    mink3_facet_bounds,
    mink3_vertex_bounds,
    minksum_max_faces,
    structural_identity_check,
    trivial_bound_r2,
)
from minksum.cayley import CayleyComplex, h_of_F
from minksum.vectors import GVector, HVector, binom, f_to_h, g_from_h
from minksum.witness import even_witness, odd_witness
from minksum.polytope import f_vector


def test_minksum_examples():
    assert minksum_max_faces(2, 5, 5, 1) == 10
    assert [minksum_max_faces(3, 4, 4, k) for k in (1, 2, 3)] == [16, 32, 18]
    assert minksum_max_faces(4, 6, 6, 1) == 36


def test_minksum_range_errors():
    for args in ((1, 3, 3, 1), (3, 3, 4, 1), (3, 4, 4, 0), (3, 4, 4, 4)):
        with pytest.raises(ValueError):
            minksum_max_faces(*args)


def test_mink3_examples():
    assert mink3_vertex_bounds(4, 4) == (16, 32, 18)
    assert mink3_vertex_bounds(5, 4) == (20, 41, 23)
    assert mink3_facet_bounds(4, 4) == (16, 32, 18)
    assert mink3_facet_bounds(5, 5) == (36, 70, 36)
    assert mink3_facet_bounds(4, 5)[0] == 24
    with pytest.raises(ValueError):
        mink3_vertex_bounds(3, 4)
    with pytest.raises(ValueError):
        mink3_facet_bounds(4, 3)


def test_small_caps():
    assert bineighborly_cap(5, 9, 1) == 0
    assert bineighborly_cap(2, 2, 2) == 4
    assert bineighborly_cap(7, 7, 3) == 294
    assert trivial_bound_r2(4, 4, 1) == 48
    assert trivial_bound_r2(6, 7, 0) == 42
    assert hF_upper(3, 4, 4, 0) == -1
    assert hF_upper(3, 4, 4, 2) == 10
    assert hF_upper(4, 6, 6, 1) == 5
    assert hF_upper_high(3, 4, 4, 0) == 1
    assert hF_upper_high(3, 4, 4, 1) == 4
    assert hF_upper_high(5, 7, 7, 2) == 36
    with pytest.raises(ValueError):
        hF_upper(3, 4, 4, 5)


@given(st.integers(3, 12), st.integers(3, 12))
def test_planar_sums(n1, n2):
    assert minksum_max_faces(2, n1, n2, 1) == minksum_max_faces(2, n1, n2, 2) == n1 + n2


@given(st.integers(4, 12), st.integers(4, 12))
def test_three_dim_agrees_with_closed_form(n1, n2):
    assert tuple(minksum_max_faces(3, n1, n2, k) for k in (1, 2, 3)) == mink3_vertex_bounds(n1, n2)


@given(st.integers(3, 7), st.integers(0, 6), st.integers(0, 6))
def test_vertex_bound_is_product(d, a, b):
    n1, n2 = d + 1 + a, d + 1 + b
    assert minksum_max_faces(d, n1, n2, 1) == n1 * n2


@given(st.integers(2, 15), st.integers(2, 15), st.integers(0, 10))
def test_vandermonde_convolution(n1, n2, k):
    assert trivial_bound_r2(n1, n2, k) == bineighborly_cap(n1, n2, k + 2)


def _vectors(cx):
    d = cx.d
    fP1, fP2 = cx.f_boundary(1), cx.f_boundary(2)
    hP1, hP2 = f_to_h(fP1, d), f_to_h(fP2, d)
    from minksum.cayley import _f_of_complex

    K, K1, K2 = cx.K_complexes
    hK, hK1, hK2 = (f_to_h(_f_of_complex(x, d), d + 1) for x in (K, K1, K2))
    hQ = f_to_h(f_vector(cx.Q), d + 1)
    return hQ, h_of_F(cx), hP1, hP2, hK, hK1, hK2, g_from_h(hP1, True), g_from_h(hP2, True)


@pytest.fixture(scope="module")
def d3_witness():
    P1, P2, _ = odd_witness(3, 4, 4)
    return CayleyComplex.build(P1, P2)


@pytest.fixture(scope="module")
def d4_cyclic():
    return CayleyComplex.build(*even_witness(4, 6, 6))


@pytest.mark.parametrize("name", ["d3_witness", "d4_cyclic"])
def test_structural_identities(name, request):
    cx = request.getfixturevalue(name)
    vecs = _vectors(cx)
    assert structural_identity_check(*vecs)
    hF = vecs[1]
    corrupted = HVector(tuple(v + (1 if i == 1 else 0) for i, v in enumerate(hF.entries)))
    assert not structural_identity_check(vecs[0], corrupted, *vecs[2:])


@pytest.mark.parametrize("name", ["d3_witness", "d4_cyclic"])
def test_recurrence_and_caps(name, request):
    cx = request.getfixturevalue(name)
    d, n1, n2 = cx.d, cx.n1, cx.n2
    _, hF, _, _, _, _, _, g1, g2 = _vectors(cx)
    assert hF_recurrence_holds(hF, g1, g2, n1, n2, d)
    m = (d + 1) // 2
    for k in range(d + 2):
        assert hF[k] <= hF_upper(d, n1, n2, k)
        assert hF[d + 1 - k] <= hF_upper_high(d, n1, n2, k)
    # both witnesses are m-bineighborly, so the low cap is attained through m
    assert all(hF[k] == hF_upper(d, n1, n2, k) for k in range(m + 1))


def test_recurrence_negative_control():
    d, n1, n2 = 3, 4, 4
    g = GVector((1, 0, 0, 0, -1))
    bad = HVector((-1, 50, 0, 0, 1))
    assert not hF_recurrence_holds(bad, g, g, n1, n2, d)
    with pytest.raises(ValueError):
        hF_recurrence_holds(bad, GVector((1, 0)), g, n1, n2, d)


def test_report_formats():
    rep = BoundReport.build(3, 4, 4, [16, 32, 18])
    assert rep.all_equal
    js = json.loads(rep.dumps())
    assert js["rows"][0] == {"face_dim": 0, "k": 1, "bound": 16, "attained": 16, "equal": True}
    assert js["vertex_based_3d"] == [16, 32, 18]
    assert "face dim (k-1)" in rep.to_table()
    assert rep.to_csv().splitlines()[1] == "0,1,16,16,True"
    with pytest.raises(ValueError):
        BoundReport.build(3, 4, 4, [17, 32, 18])


def test_binom_of_cap_matches_h0():
    for d in range(2, 8):
        for n1 in range(d + 1, d + 5):
            assert hF_upper(d, n1, n1 + 1, 0) == -1
            assert hF_upper(d, n1, n1, 1) == binom(2 * n1 - d - 1, 1) - 2 * binom(n1 - d - 1, 1)
