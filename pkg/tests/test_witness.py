import json
from fractions import Fraction

import pytest

from minksum.bounds import minksum_max_faces
from minksum.cayley import CayleyComplex
from minksum.neighborly import is_k_bineighborly
from minksum.polytope import convex_hull
from minksum.witness import (
    F_V,
    WitnessParams,
    certify,
    even_witness,
    find_tau,
    find_zeta,
    hU_determinant,
    hyperplane_matrix,
    lifted_vertices,
    moment_curve_point,
    moment_like_curves,
    odd_witness,
    witness,
)


def test_curves():
    assert moment_curve_point(2, 4) == (2, 4, 8, 16)
    g1, g2 = moment_like_curves(2, Fraction(1, 4), 3)
    assert g1 == (2, 2, 4, 0)
    assert g2 == (2, 2, 4, 1)
    g1, g2 = moment_like_curves(3, 0, 5)
    assert g1 == (3, 0, 9, 27, 81, 0) and g2 == (0, 3, 9, 27, 81, 1)
    for bad in ((0, 0, 3), (1, -1, 3), (1, 0, 1)):
        with pytest.raises(ValueError):
            moment_like_curves(*bad)


def test_params_validation():
    for args in ((4, 5, 5), (3, 3, 4), (1, 4, 4)):
        with pytest.raises(ValueError):
            WitnessParams.create(*args)
    with pytest.raises(ValueError):
        WitnessParams.create(3, 4, 4, alpha=[1, 2, 3])
    with pytest.raises(ValueError):
        WitnessParams.create(3, 4, 4, alpha=[1, 2, "5/2", 4])  # gap not above epsilon
    with pytest.raises(ValueError):
        WitnessParams.create(3, 4, 4, epsilon=0)
    p = WitnessParams.create(5, 7, 7)
    assert p.m == 3 and p.subset_count == 294 and p.determinant_count == 294 * 11


def test_subset_validation():
    p = WitnessParams.create(3, 4, 4)
    probe = (1, 2, 3, 4)
    for U in ((0, 1), (4, 5), (0,), (0, 9)):
        with pytest.raises(ValueError):
            hyperplane_matrix(p, U, probe, 1)
    with pytest.raises(ValueError):
        hyperplane_matrix(p, (0, 4), (1, 2), 1)
    with pytest.raises(ValueError):
        hU_determinant(p, (0, 4), probe)


def test_probe_on_column_gives_zero():
    p = WitnessParams.create(3, 4, 4)
    tau = Fraction(1, 3)
    U = (1, 6)
    assert hU_determinant(p, U, p.vertex(1, tau), tau) == 0
    assert F_V(p, U, p.vertex(6, tau, Fraction(1, 5)), Fraction(1, 5), tau) == 0


def test_FV_at_zero_is_HU():
    p = WitnessParams.create(5, 6, 6)
    tau = Fraction(1, 4)
    U = (0, 3, 8)
    probe = p.vertex(10, tau)
    assert F_V(p, U, probe, 0, tau) == hU_determinant(p, U, probe, tau)


def test_large_tau_breaks_certificate():
    # at tau = 1 the d=5 curves interleave badly and some determinant is non-positive
    p = WitnessParams.create(5, 7, 7)
    cert = certify(p, 1, stop_early=False)
    assert not cert.passed and cert.min_determinant <= 0
    assert cert.determinants == p.determinant_count


def test_certified_tau_and_halving():
    p = find_tau(WitnessParams.create(5, 7, 7))
    assert p.tau_star == Fraction(1, 8)
    assert p.tau_certificate.passed and p.tau_certificate.determinants == p.determinant_count
    assert certify(p, p.tau_star / 2).passed
    with pytest.raises(ValueError):
        find_zeta(WitnessParams.create(3, 4, 4))


@pytest.mark.parametrize("d,n1,n2", [(3, 4, 4), (3, 5, 4), (3, 6, 5)])
def test_odd_witness_three_dim(d, n1, n2):
    P1, P2, p = odd_witness(d, n1, n2)
    assert p.tau_certificate.passed and p.zeta_certificate.passed
    cx = CayleyComplex.build(P1, P2)
    assert is_k_bineighborly(cx.lattice_P, cx.partition, 2)
    assert list(cx.f_sum().proper()) == [minksum_max_faces(d, n1, n2, k) for k in range(1, d + 1)]
    js = json.loads(p.dumps())
    assert js["tau_star"] == "1" and js["zeta_certificate"]["passed"]


@pytest.mark.parametrize("d,n1,n2", [(2, 3, 5), (4, 5, 6)])
def test_even_witness(d, n1, n2):
    P1, P2 = even_witness(d, n1, n2)
    sumf = CayleyComplex.build(P1, P2).f_sum().proper()
    assert list(sumf) == [minksum_max_faces(d, n1, n2, k) for k in range(1, d + 1)]
    with pytest.raises(ValueError):
        even_witness(3, 4, 4)
    with pytest.raises(ValueError):
        even_witness(d, d, d + 1)


def test_dispatch():
    assert witness(2, 3, 3)[2] is None
    assert witness(3, 4, 4)[2].d == 3


@pytest.mark.parametrize("d,n1,n2", [(3, 4, 4), (5, 6, 6)])
def test_projection_round_trip(d, n1, n2):
    P1, P2, p = odd_witness(d, n1, n2)
    V1, V2 = lifted_vertices(p)
    cx = CayleyComplex.build(P1, P2)
    assert cx.points == V1 + V2
    assert cx.lattice_P.canonical() == convex_hull(V1 + V2).canonical()


def test_halved_zeta_recertifies():
    _, _, p = odd_witness(3, 5, 4)
    assert certify(p, p.tau_star, p.zeta_star / 2).passed
    assert certify(p, p.tau_star / 2, p.zeta_star).passed
