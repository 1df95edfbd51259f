import random

import pytest
from hypothesis import given, settings, strategies as st

from arthur_packets.characters import S_character
from arthur_packets.compgroup import component_group
from arthur_packets.groups import orthogonal, quasi_split_form, symplectic, unitary
from arthur_packets.levi import superpacket_distribution
from arthur_packets.packets import (
    GOOD,
    WEAKLY_FAIR,
    OutsideRegime,
    add_block,
    base_packet,
    build_packet,
    fold_packet,
    index_set,
    multi_sign,
    multi_sign_alt,
    multiplicity_one_check,
    stable_sum,
    vanishing_filter,
)
from arthur_packets.params import (
    ArthurParameter,
    UnsupportedInput,
    V,
    W,
    decomposition_from_blocks,
    is_regular,
)
from arthur_packets.randgen import discrete_decomposition, random_good_decomposition, random_group


def test_index_sets():
    assert index_set([(9, 2), (6, 1)], symplectic(3)) == [(i, j) for i in range(3) for j in range(2)]
    assert index_set([(3, 1), (1, 1)], orthogonal(3, 2)) == [(0, 1), (1, 0)]
    assert index_set([], orthogonal(3, 2)) == [()]


def test_vanishing_filter():
    assert vanishing_filter((0, 2), [(9, 2), (9, 2)])
    assert not vanishing_filter((0, 1), [(9, 2), (9, 2)])
    assert vanishing_filter((0, 1), [(9, 2), (6, 2)])


def test_multi_sign():
    assert multi_sign((1, 0), [(9, 2), (6, 1)], 3) == (1, 1)
    for i in range(3):
        assert multi_sign((i,), [(5, 2)], 4) == (S_character(i, 2, 4).evaluate(-1),)


def test_multi_sign_alt():
    assert multi_sign_alt((0,), [(3, 1)]) == (-1,)
    assert multi_sign_alt((1,), [(3, 1)]) == (1,)
    # a_r even, i_r = a_r / 2, even prefix: parity of i_r + a_r(a_r + 1)/2
    assert multi_sign_alt((1, 1), [(9, 2), (5, 2)]) == ((-1) ** (1 + 3), (-1) ** (1 + 3))


def test_sp4_discrete_packet():
    psi = ArthurParameter(symplectic(2), (V(0, 4), V(0, 2), W(0, 0)))
    P = build_packet(psi)
    assert len(P) == 4 == superpacket_distribution(symplectic(2))[symplectic(2)]
    assert sorted(d.i_vector for d in P.data()) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    # one datum under each character of the discrete part
    signs = sorted(d.sign for d in P.data())
    assert signs == sorted({s for s in signs})
    assert all(d.range == GOOD for d in P.data())


def test_so32_discrete_packet():
    psi = ArthurParameter(orthogonal(3, 2), (V(0, 3), V(0, 1)))
    P = build_packet(psi)
    assert len(P) == 2
    assert {d.i_vector for d in P.data()} == {(1, 0), (0, 1)}
    assert {d.base_form for d in P.data()} == {orthogonal(1, 0)}
    assert P.epsilon_psi == "triv"


def test_sp6_packet_with_size_two_block():
    psi = ArthurParameter(symplectic(3), (V(0, 9, 2), V(0, 6), W(0, 1)))
    P = build_packet(psi)
    assert len(P) == 6
    assert P.epsilon_psi == "sgn"
    assert P.base_unipotent == ((0, 1),)
    assert {d.block_characters for d in P.data()} == {(4, 3)}
    assert multiplicity_one_check(P).status == "pass"


def test_unipotent_only():
    d = decomposition_from_blocks(symplectic(2), [], [(0, 3), (1, 1), (0, 1)])
    P = build_packet(d)
    assert len(P) == len(component_group(d).characters())
    assert all(x.i_vector == () for x in P.data())


def test_add_block_on_sp2():
    d = decomposition_from_blocks(symplectic(1), [(4, 1)], [(0, 1)])
    tail = d.tail(1)
    base = {symplectic(0): base_packet(symplectic(0), tail, tail.bp_u, "triv")}
    P = add_block(base, (4, 1), symplectic(1), tail)
    assert [x.i_vector for x in P.data()] == [(0,), (1,)]
    assert {x.i_vector: x.sign for x in P.data()} == {(0,): (1,), (1,): (-1,)}


def test_add_block_rejects_small_gap():
    d = decomposition_from_blocks(symplectic(3), [(4, 2), (4, 1)], [(0, 1)])
    with pytest.raises(OutsideRegime):
        add_block({}, (4, 2), symplectic(3), d.tail(1))


def test_empty_packet():
    psi = ArthurParameter(orthogonal(1, 3), (V(0, 3, 2),))
    P = build_packet(psi)
    assert len(P) == 0
    assert multiplicity_one_check(P).status == "pass"


def test_unsupported_inputs():
    with pytest.raises(UnsupportedInput):
        build_packet(ArthurParameter(symplectic(2), (W(1, 0), W(-1, 0), W(0, 0, 3))))


def test_stable_sum():
    psi = ArthurParameter(symplectic(2), (V(0, 4), V(0, 2), W(0, 0)))
    P = build_packet(psi)
    assert all(coeff == 1 for _, coeff in stable_sum(P))
    z1 = P.component_group.generator("z1")
    for d, coeff in stable_sum(P, z1):
        assert coeff == d.eta_values[0]


def test_stable_sum_factorizes():
    d = decomposition_from_blocks(symplectic(4), [(9, 2), (4, 1)], [(0, 1), (1, 1)])
    P = build_packet(d)
    A = P.component_group
    s = A.s_psi().bits
    for x, coeff in stable_sum(P):
        block_part = 1
        for value, bit in zip(x.sign, s):
            block_part *= value if bit else 1
        base_part = 1
        for value, bit in zip(x.base_eta, s[len(x.sign):]):
            base_part *= value if bit else 1
        assert coeff == block_part * base_part


def test_irregular_packet_is_flagged():
    d = decomposition_from_blocks(symplectic(3), [(5, 2), (4, 1)], [(0, 1)])
    assert not is_regular(d)
    P = build_packet(d)
    assert {x.range for x in P.data()} == {WEAKLY_FAIR}
    report = multiplicity_one_check(P)
    assert report.status == "pass-with-caveat" and report.caveat


def _random(seed, **kw):
    rng = random.Random(seed)
    G = random_group(rng, 8)
    return G, random_good_decomposition(rng, G, **kw)


@settings(max_examples=150)
@given(st.integers(0, 10**6))
def test_data_sit_under_matching_characters(seed):
    G, d = _random(seed, max_blocks=3, max_a=2, repeat_prob=0.4)
    P = build_packet(d, G)
    A = P.component_group
    for eta, ds in P.entries:
        assert A.respects_relations(eta)
        for x in ds:
            assert x.eta_values == eta.values
            assert x.degree >= 0
            assert not x.vanished


@settings(max_examples=100)
@given(st.integers(0, 10**6))
def test_fold_equals_build(seed):
    G, d = _random(seed, max_blocks=4, max_a=2, regular=True)
    assert build_packet(d, G) == fold_packet(d, G)


@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_discrete_signs_are_a_bijection(n, rng):
    G = symplectic(n)
    P = build_packet(discrete_decomposition(G, rng), G)
    signs = [x.sign for x in P.data()]
    assert len(set(signs)) == len(signs) == 2**n


@given(st.integers(1, 7), st.sampled_from(["B", "CD"]), st.sampled_from(["d", "qd"]))
def test_discrete_counts(n, family, alpha):
    qs = quasi_split_form(family, n, alpha if family == "CD" else None)
    dist = superpacket_distribution(qs)
    for G, count in dist.items():
        from arthur_packets.groups import has_discrete_series

        if has_discrete_series(qs):
            assert len(build_packet(discrete_decomposition(G), G)) == count
