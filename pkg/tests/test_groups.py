import pytest
from hypothesis import given, strategies as st

from arthur_packets import oracles
from arthur_packets.groups import (
    derive_even_so_type,
    good_parity_class,
    has_discrete_series,
    inner_forms,
    kottwitz_sign,
    orthogonal,
    q_invariant,
    quasi_split_form,
    quasi_split_inner_form,
    same_family_forms,
    standard_rep_dim,
    symplectic,
    unitary,
)


def test_standard_dims():
    assert standard_rep_dim(symplectic(3)) == 7
    assert standard_rep_dim(orthogonal(3, 2)) == 4
    assert standard_rep_dim(orthogonal(4, 4)) == 8


def test_parity_classes():
    assert good_parity_class(orthogonal(3, 2)) == 1
    assert good_parity_class(symplectic(2)) == 0
    assert good_parity_class(orthogonal(2, 2)) == 0


@pytest.mark.parametrize(
    "G, q",
    [(unitary(2, 1), 2), (unitary(3, 0), 0), (symplectic(1), 1), (orthogonal(3, 0), 0), (orthogonal(2, 1), 1)],
)
def test_q_values(G, q):
    assert q_invariant(G) == q


def test_q_of_odd_orthogonal_is_halved():
    # SO(3,3): dim G/K = 9, rank G - rank K = 1
    assert q_invariant(orthogonal(3, 3)) == 4


def test_q_of_product():
    assert q_invariant([unitary(1, 1), symplectic(2)]) == 1 + 3


def test_kottwitz_signs():
    assert kottwitz_sign(orthogonal(3, 0)) == -1
    assert kottwitz_sign(unitary(2, 0)) == -1
    assert kottwitz_sign(orthogonal(2, 1)) == 1
    assert kottwitz_sign(symplectic(4)) == 1


def test_even_types():
    assert derive_even_so_type(3, 3) == "d"
    assert derive_even_so_type(2, 4) == "qd"
    assert derive_even_so_type(4, 0) == "d"
    assert orthogonal(2, 2).alpha == "d"


def test_descriptors():
    G = orthogonal(3, 2)
    assert (G.family, G.rank, G.signature) == ("B", 2, (3, 2))
    assert orthogonal(2, 3) != G
    assert str(symplectic(3)) == "Sp(6)"
    assert str(unitary(1, 2)) == "U(1,2)"


def test_quasi_split():
    assert quasi_split_form("B", 2) == orthogonal(3, 2)
    assert quasi_split_form("CD", 3, "qd") == orthogonal(2, 4)
    assert orthogonal(2, 4).quasi_split
    assert not orthogonal(5, 0).quasi_split
    assert quasi_split_inner_form(orthogonal(5, 0)) == orthogonal(3, 2)


def test_discrete_series_split():
    assert has_discrete_series(quasi_split_form("CD", 2, "d"))
    assert not has_discrete_series(quasi_split_form("CD", 3, "d"))
    assert has_discrete_series(quasi_split_form("CD", 3, "qd"))


def test_inner_forms_of_so5():
    assert inner_forms(orthogonal(3, 2)) == [orthogonal(1, 4), orthogonal(3, 2), orthogonal(5, 0)]


def test_rejects_bad_signature():
    with pytest.raises(ValueError):
        orthogonal(-1, 3)


@given(st.sampled_from(["A", "B", "CD", "U"]), st.integers(1, 10))
def test_q_matches_compact_subgroup_oracle(family, n):
    for G in same_family_forms(family, n):
        assert q_invariant(G) == oracles.q_oracle(G)


@given(st.sampled_from(["A", "B", "CD", "U"]), st.integers(1, 8))
def test_kottwitz_parity(family, n):
    for G in same_family_forms(family, n):
        qs = quasi_split_inner_form(G)
        same = (q_invariant(G) - q_invariant(qs)) % 2 == 0
        assert (kottwitz_sign(G) == 1) == same


@given(st.integers(0, 12), st.integers(0, 12))
def test_type_under_signature_shifts(p, q):
    if (p + q) % 2 == 0 and p >= 2:
        assert derive_even_so_type(p - 2, q + 2) == derive_even_so_type(p, q)
        assert derive_even_so_type(p - 1, q + 1) != derive_even_so_type(p, q)
