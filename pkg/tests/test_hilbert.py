import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from numsgps import (
    HilbertFunction,
    NotMember,
    NotStabilized,
    NumericalSemigroup,
    apery_table,
    construct_asd,
    decrease_levels,
    element_order,
    fixture_semigroup,
    hilbert_by_set_construction,
    hilbert_function,
    hilbert_through_stabilization,
    layer_sets,
)

from conftest import brute_hilbert, brute_orders, random_semigroup


def test_element_order_known_values():
    S = construct_asd(4).semigroup
    assert element_order(S, 0) == 0
    assert element_order(S, 66) == 2
    assert element_order(S, 99) == 3
    assert element_order(S, 132) == 4
    with pytest.raises(NotMember):
        element_order(S, 63)


def test_orders_match_brute_dp(rng):
    for _ in range(25):
        S = random_semigroup(rng)
        bound = S.conductor + 3 * S.multiplicity
        want = brute_orders(S.min_gens, bound)
        for s, o in want.items():
            assert element_order(S, s) == o


def test_apery_two_three():
    ap = apery_table(NumericalSemigroup.from_generators([2, 3]))
    assert ap.elements == (0, 3)
    assert ap.strata == {1: (3,)}


def test_apery_construction_strata():
    ap4 = apery_table(construct_asd(4).semigroup)
    assert ap4.stratum(2) == (66, 71, 76)
    assert ap4.stratum(3) == (99,)
    assert ap4.stratum(4) == (132,)
    assert ap4.max_order == 4

    ap5 = apery_table(construct_asd(5).semigroup)
    assert ap5.stratum(2) == (106, 116, 126)
    assert ap5.stratum(3) == (159,)
    assert ap5.stratum(4) == (212,)
    assert ap5.stratum(5) == (265,)


def test_apery_residues_and_count(rng):
    for _ in range(20):
        S = random_semigroup(rng)
        ap = apery_table(S)
        e = S.multiplicity
        assert len(ap.elements) == e
        assert sorted(a % e for a in ap.elements) == list(range(e))
        assert sum(len(v) for v in ap.strata.values()) == e - 1
        for a in ap.elements:
            assert S.contains(a) and not S.contains(a - e)


def test_hilbert_two_three_brute():
    S = NumericalSemigroup.from_generators([2, 3])
    H = hilbert_function(S, 6)
    assert list(H.values) == brute_hilbert([2, 3], 6) == [1, 2, 2, 2, 2, 2, 2]
    assert H.stable_from == 1


def test_hilbert_construction_values():
    H4 = hilbert_function(construct_asd(4).semigroup, 10)
    assert H4.values == (1, 27, 27, 27, 26, 27, 29, 30, 31, 32, 32)
    assert H4.stable_from == 9
    H5 = hilbert_function(construct_asd(5).semigroup, 7)
    assert H5.values == (1, 38, 38, 38, 38, 37, 44, 44)
    assert H5.stable_from == 6


def test_hilbert_matches_brute_sumsets(rng):
    for _ in range(12):
        S = random_semigroup(rng, max_mult=7)
        H = hilbert_function(S, 6)
        assert list(H.values) == brute_hilbert(S.min_gens, 6)


def test_decrease_levels():
    assert decrease_levels(hilbert_function(construct_asd(4).semigroup, 10)) == (4,)
    assert decrease_levels(hilbert_function(NumericalSemigroup.from_generators([2, 3]), 4)) == ()
    H_i = hilbert_through_stabilization(fixture_semigroup("ex2_13_i"), 4)
    assert decrease_levels(H_i) == (2,)


def test_decrease_levels_requires_stabilization():
    H = HilbertFunction(values=(1, 5, 4), stable_from=None)
    with pytest.raises(NotStabilized):
        decrease_levels(H)


def test_value_at_extends_only_when_stable():
    H = hilbert_function(NumericalSemigroup.from_generators([3, 4]), 4)
    assert H.value_at(40) == 3
    with pytest.raises(NotStabilized):
        HilbertFunction(values=(1, 2), stable_from=None).value_at(5)


def test_hilbert_rejects_small_hmax():
    with pytest.raises(ValueError):
        hilbert_function(NumericalSemigroup.from_generators([2, 3]), 0)


def test_layer_sets_construction():
    S = construct_asd(4).semigroup
    layers = layer_sets(S, 4)
    assert layers.c_sets[2] == (66, 71, 76)
    # shifted top layer: {(l+1)n1, l n1 + n2, ..., (l+1)n2} with n1=33, n2=38
    d4_shifted = tuple(sorted(s + 32 for s in layers.d_sets[4]))
    assert d4_shifted == (165, 170, 175, 180, 185, 190)
    assert len(layers.d_sets[4]) == 6


def test_layer_sets_can_be_empty():
    layers = layer_sets(NumericalSemigroup.from_generators([2, 3]), 3)
    assert layers.c_sets[2] == () and layers.d_sets[2] == ()


def test_layer_sets_refinement_partitions(rng):
    for _ in range(15):
        S = random_semigroup(rng)
        layers = layer_sets(S, 5)
        for k in range(2, 6):
            refined = layers.d_refined[k]
            combined = [s for t in refined for s in refined[t]]
            assert sorted(combined) == list(layers.d_sets[k])
            assert all(t > k for t in refined)


def test_hilbert_difference_identity(rng):
    # H(k-1) - H(k) = |D_k| - |C_k|
    cases = [random_semigroup(rng) for _ in range(15)]
    cases.append(construct_asd(4).semigroup)
    cases.append(fixture_semigroup("ex3_9_nonproper"))
    for S in cases:
        H = hilbert_function(S, 7)
        layers = layer_sets(S, 7)
        for k in range(2, 8):
            assert H.values[k - 1] - H.values[k] == len(layers.d_sets[k]) - len(layers.c_sets[k])


def test_construction_c_and_d_shape():
    # C_h = {h*n1, (h-1)*n1 + n2, ..., h*n2} of size h+1 for 2 <= h <= ell
    for ell in (4, 5, 6):
        data = construct_asd(ell)
        layers = layer_sets(data.semigroup, ell)
        for h in range(2, ell + 1):
            want = tuple(sorted((h - j) * data.n1 + j * data.n2 for j in range(h + 1)))
            assert layers.c_sets[h] == want
            assert len(layers.c_sets[h]) == h + 1
        assert len(layers.d_sets[ell]) == ell + 2


def test_set_construction_oracle_agrees(rng):
    for _ in range(15):
        S = random_semigroup(rng)
        H = hilbert_function(S, 8)
        assert list(H.values) == hilbert_by_set_construction(S, 8)


@given(st.lists(st.integers(min_value=2, max_value=20), min_size=1, max_size=4))
@settings(max_examples=40, deadline=None)
def test_hilbert_shape_properties(gens):
    assume(math.gcd(*gens) == 1)
    S = NumericalSemigroup.from_generators(gens)
    H = hilbert_through_stabilization(S, 4)
    assert H.values[0] == 1
    assert all(1 <= v <= S.multiplicity for v in H.values[1:]) or S.multiplicity == 1
    assert H.stable_value == S.multiplicity
    assert H.values[1] == S.embedding_dimension or S.conductor == 0
    levels = decrease_levels(H)
    assert all(H.values[h - 1] > H.values[h] for h in levels)
