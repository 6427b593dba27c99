"""Counting formulas: component counts, masses, loci, with brute oracles."""

import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from krstrata.strata_counts import (
    GemType,
    MassParams,
    ParahoricType,
    almost_ordinary_components,
    connected_component_count,
    fermat_point_count,
    frobenius_graph_count,
    gem_to_chain_type,
    lambda_counts,
    sigma_sets,
    sp_order,
    supersingular_summary,
    type_index_sets,
)


def compositions_up_to(g):
    # all tuples of positive integers with sum <= g
    out = []
    for total in range(1, g + 1):
        for r in range(1, total + 1):
            for cuts in itertools.combinations(range(1, total), r - 1):
                parts = []
                prev = 0
                for c in list(cuts) + [total]:
                    parts.append(c - prev)
                    prev = c
                out.append(tuple(parts))
    return out


def test_parahoric_validation():
    with pytest.raises(ValueError):
        ParahoricType((0, 1), 2)
    with pytest.raises(ValueError):
        ParahoricType((2, 1), 2)  # sum exceeds genus
    with pytest.raises(ValueError):
        ParahoricType((), 2)
    pt = ParahoricType((1, 2), 4)
    assert [pt.h(i) for i in range(3)] == [0, 1, 3]


def test_gem_validation():
    with pytest.raises(ValueError):
        GemType((1,), (2,))  # tau above m
    with pytest.raises(ValueError):
        GemType((1, 0), (0,))


def test_index_set_examples():
    assert [len(s) for s in type_index_sets(ParahoricType((1, 1), 2))] == [0, 2, 2]
    assert [len(s) for s in type_index_sets(ParahoricType((1,), 2))] == [2, 1]
    assert len(type_index_sets(ParahoricType((3,), 3))[0]) == 0


def test_almost_ordinary_examples():
    assert almost_ordinary_components(ParahoricType((1, 1), 2)) == 4
    assert almost_ordinary_components(ParahoricType((2,), 3)) == 5
    assert almost_ordinary_components(ParahoricType((2,), 2)) == 2
    with pytest.raises(ValueError):
        almost_ordinary_components(ParahoricType((1,), 1))


def test_closed_form_sweep():
    # enumeration vs closed form for every block tuple with sum <= g <= 5
    for g in range(2, 6):
        for k in compositions_up_to(g):
            pt = ParahoricType(k, g)
            total = sum(len(s) for s in type_index_sets(pt))
            eps = 1 if sum(k) < g else 0
            closed = Fraction(1)
            for a in k:
                closed *= a + 1
            closed *= eps + sum(Fraction(a, a + 1) for a in k)
            assert almost_ordinary_components(pt) == total == closed


@pytest.mark.parametrize("g", [2, 3, 4, 5, 6])
def test_iwahori_specialization(g):
    pt = ParahoricType((1,) * g, g)
    assert almost_ordinary_components(pt) == g * 2 ** (g - 1)


def test_sigma_set_examples():
    pt = ParahoricType((1, 1), 2)
    for f, expected in ((0, 1), (1, 4), (2, 4)):
        sigma0, sigma = sigma_sets(pt, f)
        assert len(sigma) == expected
        assert len(sigma) == sum(
            math.prod(a + 1 for a in m) for m in sigma0
        )
    assert len(sigma_sets(ParahoricType((1,), 3), 2)[1]) == 3
    with pytest.raises(ValueError):
        sigma_sets(pt, 3)


def test_connected_component_examples():
    assert connected_component_count(ParahoricType((1, 1), 2), 1) == 4
    # p-rank 0 stratum is connected for every type
    for g in (2, 3, 4):
        for k in compositions_up_to(g):
            assert connected_component_count(ParahoricType(k, g), 0) == 1


def test_sigma_matches_admissible_grading_g2():
    # observed coincidence with the Iwahori p-rank strata at genus 2
    from krstrata.admissible import p_rank_strata

    strata = p_rank_strata(2)
    pt = ParahoricType((1, 1), 2)
    assert connected_component_count(pt, 1) == len(strata[1]) == 4
    assert connected_component_count(pt, 2) == len(strata[2]) == 4


def test_gem_to_chain_type_examples():
    pt = ParahoricType((1, 1), 2)
    assert gem_to_chain_type(GemType((1, 1), (0, 0)), pt, 2) == ()
    assert gem_to_chain_type(GemType((0, 1), (0, 0)), pt, 1) == (1,)
    assert gem_to_chain_type(
        GemType((0,), (0,)), ParahoricType((2,), 2), 0
    ) == (2,)
    with pytest.raises(ValueError):
        gem_to_chain_type(GemType((1, 1), (0, 0)), pt, 0)  # sum m > f


def test_gem_chain_types_always_valid():
    for g in (2, 3, 4):
        for k in compositions_up_to(g):
            pt = ParahoricType(k, g)
            for f in range(g + 1):
                _, sigma = sigma_sets(pt, f)
                for gem in sigma:
                    chain = gem_to_chain_type(gem, pt, f)
                    assert sum(chain) <= g
                    assert all(part > 0 for part in chain)


def brute_sl2_order(N):
    count = 0
    for a, b, c, d in itertools.product(range(N), repeat=4):
        if (a * d - b * c) % N == 1:
            count += 1
    return count


def brute_sp4_order(N):
    # columns satisfying the symplectic relations, vectorized
    j = np.zeros((4, 4), dtype=np.int64)
    j[0, 3] = j[1, 2] = 1
    j[2, 1] = j[3, 0] = -1
    vecs = np.array(
        list(itertools.product(range(N), repeat=4)), dtype=np.int64
    )
    pair = (vecs @ j @ vecs.T) % N
    target = {
        (0, 1): j[0, 1] % N,
        (0, 2): j[0, 2] % N,
        (0, 3): j[0, 3] % N,
        (1, 2): j[1, 2] % N,
        (1, 3): j[1, 3] % N,
        (2, 3): j[2, 3] % N,
    }
    masks = {
        key: (pair == val).astype(np.int64) for key, val in target.items()
    }
    return int(
        np.einsum(
            "ij,ik,il,jk,jl,kl->",
            masks[(0, 1)],
            masks[(0, 2)],
            masks[(0, 3)],
            masks[(1, 2)],
            masks[(1, 3)],
            masks[(2, 3)],
            optimize=True,
        )
    )


def test_sp_order_against_brute_force():
    assert sp_order(1, 4) == brute_sl2_order(4) == 48
    assert sp_order(2, 2) == brute_sp4_order(2) == 720
    assert sp_order(2, 3) == brute_sp4_order(3) == 51840


def test_sp_order_edge_cases():
    assert sp_order(3, 1) == 1
    assert sp_order(1, 2) == 6
    with pytest.raises(ValueError):
        sp_order(2, 0)


def test_sp_order_multiplicative():
    for a, b in ((3, 4), (2, 9), (5, 8)):
        assert sp_order(2, a * b) == sp_order(2, a) * sp_order(2, b)


def test_mass_params_validation():
    with pytest.raises(ValueError):
        MassParams(4, 3)  # not prime
    with pytest.raises(ValueError):
        MassParams(3, 9)  # p divides N
    with pytest.raises(ValueError):
        MassParams(2, 2)  # level too small


def test_lambda_counts_pinned():
    assert lambda_counts(MassParams(2, 3)) == (27, 45)
    assert lambda_counts(MassParams(3, 4)) == (1024, 2560)


def test_mass_integrality_sweep():
    for p in (2, 3, 5, 7):
        for N in range(3, 21):
            if math.gcd(p, N) != 1:
                continue
            lam, lam211 = lambda_counts(MassParams(p, N))
            assert lam > 0 and lam211 > 0


def test_supersingular_summary_pinned():
    summary = supersingular_summary(MassParams(2, 3))
    assert summary["components"] == 72
    assert summary["singular_points"] == 135
    per = summary["per_stratum"]
    assert per["tau"] == 135
    assert per["s1tau"] == 45
    assert per["s0s2tau"] == per["s0tau"] == per["s2tau"] == 27
    for name in ("s0s1tau", "s1s2tau", "s2s1tau", "s1s0tau"):
        assert per[name] == 1
    for name in ("s0s1s0tau", "s1s0s2tau", "s2s1s2tau", "s0s2s1tau"):
        assert per[name] == "external"
    assert len(per) == 13


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_fermat_points(p):
    assert fermat_point_count(p) == p + 1


@pytest.mark.parametrize("p,e", [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1), (5, 2)])
def test_frobenius_graph(p, e):
    assert frobenius_graph_count(p, e) == p ** e + 1


def test_loci_validation():
    with pytest.raises(ValueError):
        fermat_point_count(4)
    with pytest.raises(ValueError):
        frobenius_graph_count(2, 3)
