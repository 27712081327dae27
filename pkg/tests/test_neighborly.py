import itertools

import pytest

from minksum.cayley import CayleyComplex
from minksum.neighborly import (
    bineighborly_counterexample,
    is_k_bineighborly,
    is_k_neighborly,
    lemma8_check,
    lemma9_check,
    neighborliness_report,
)
from minksum.polytope import VPolytope, convex_hull
from minksum.witness import even_witness, odd_witness
from conftest import random_pairs


def moment(d, ts):
    return [tuple(t**i for i in range(1, d + 1)) for t in ts]


def test_neighborly_examples():
    c48 = convex_hull(moment(4, range(1, 9)))
    assert is_k_neighborly(c48, 2)
    assert not is_k_neighborly(c48, 3)
    cube = convex_hull(list(itertools.product([0, 1], repeat=3)))
    assert not is_k_neighborly(cube, 2)
    assert is_k_neighborly(cube, 1)
    with pytest.raises(ValueError):
        is_k_neighborly(cube, 0)


def test_bineighborly_examples():
    cx = CayleyComplex.build(*even_witness(4, 6, 6))
    assert is_k_bineighborly(cx.lattice_P, cx.partition, 2)
    tri = [(0, 0), (1, 0), (0, 1)]
    prism = CayleyComplex.build(VPolytope.from_points(tri), VPolytope.from_points(tri))
    assert not is_k_bineighborly(prism.lattice_P, prism.partition, 2)
    assert is_k_bineighborly(prism.lattice_P, prism.partition, 1)
    cex = bineighborly_counterexample(prism.lattice_P, prism.partition, 2)
    assert len(cex) == 2


def test_partition_validation():
    cx = CayleyComplex.build(*even_witness(2, 3, 3))
    lat = cx.lattice_P
    for bad in (((), tuple(range(6))), ((0, 1, 2), (2, 3, 4, 5)), ((0, 1), (3, 4, 5))):
        with pytest.raises(ValueError):
            is_k_bineighborly(lat, bad, 2)


def test_neighborly_consequences_on_witnesses():
    for P1, P2 in (even_witness(4, 6, 6), odd_witness(5, 7, 7)[:2]):
        cx = CayleyComplex.build(P1, P2)
        lat, part = cx.lattice_P, cx.partition
        d = cx.d
        for k in range(2, d + 3):
            assert lemma8_check(lat, part, k)
        for k in range(1, d + 2):
            assert lemma9_check(lat, part, k)
    cx = CayleyComplex.build(*even_witness(4, 6, 6))
    assert is_k_bineighborly(cx.lattice_P, cx.partition, 2)
    assert is_k_neighborly(cx.lattice_P, 2)


def test_downward_closure_and_consequences_on_random_corpus():
    for P1, P2 in random_pairs(15, seed=11):
        cx = CayleyComplex.build(P1, P2)
        lat, part = cx.lattice_P, cx.partition
        flags = [is_k_bineighborly(lat, part, k) for k in range(1, cx.d + 3)]
        # once false, stays false
        assert flags == sorted(flags, reverse=True)
        assert all(lemma8_check(lat, part, k) for k in range(2, cx.d + 3))
        assert all(lemma9_check(lat, part, k) for k in range(1, cx.d + 2))


def test_report():
    cx = CayleyComplex.build(*even_witness(4, 6, 6))
    rep = neighborliness_report(cx.lattice_P, cx.partition)
    assert rep.max_k_neighborly == 2
    assert rep.max_k_bineighborly >= 2
    assert rep.neighborly_counterexample is not None
    js = rep.to_json()
    assert js["max_k_neighborly"] == 2 and isinstance(js["neighborly_counterexample"], list)
