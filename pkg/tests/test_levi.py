import pytest
from hypothesis import given, strategies as st

from arthur_packets import oracles
from arthur_packets.groups import (
    has_discrete_series,
    inner_forms,
    orthogonal,
    quasi_split_form,
    quasi_split_inner_form,
    same_family_forms,
    symplectic,
    unitary,
)
from arthur_packets.levi import (
    c_levi_representatives,
    distinguished_index,
    induction_degree,
    inner_form_class,
    levi_signature_of,
    superpacket_distribution,
    t_star,
)


def test_t_star():
    assert t_star(2) == (1, -1)
    assert t_star(3) == (-1, 1, -1)
    assert all(t_star(n)[-1] == -1 for n in range(1, 9))


def test_inner_form_class():
    so5 = orthogonal(3, 2)
    assert inner_form_class(so5, (1, 1)) == orthogonal(3, 2)
    assert inner_form_class(so5, t_star(2)) == orthogonal(5, 0)
    assert inner_form_class(symplectic(3), (1, -1, 1)) == symplectic(3)


def test_superpackets():
    assert superpacket_distribution(symplectic(2)) == {symplectic(2): 4}
    assert superpacket_distribution(orthogonal(3, 2)) == {
        orthogonal(1, 4): 1,
        orthogonal(3, 2): 2,
        orthogonal(5, 0): 1,
    }


def test_no_discrete_series_uses_shorter_vectors():
    G = quasi_split_form("CD", 3, "d")
    dist = superpacket_distribution(G)
    assert sum(dist.values()) == 4
    assert set(dist) == {orthogonal(1, 5), orthogonal(3, 3), orthogonal(5, 1)}


def test_c_levi_representatives():
    reps = c_levi_representatives(symplectic(3), 2)
    assert [str(L) for L in reps] == ["U(0,2)xSp(2)", "U(1,1)xSp(2)", "U(2,0)xSp(2)"]
    reps = c_levi_representatives(orthogonal(3, 2), 1)
    assert [str(L) for L in reps] == ["U(0,1)xSO(3,0)", "U(1,0)xSO(1,2)"]
    reps = c_levi_representatives(orthogonal(2, 1), 1)
    assert [str(L) for L in reps] == ["U(1,0)xSO(0,1)"]


def test_c_levi_rejects():
    with pytest.raises(ValueError):
        c_levi_representatives(symplectic(2), 3)
    with pytest.raises(ValueError):
        c_levi_representatives(unitary(2, 1), 1)


def test_distinguished_index():
    assert distinguished_index(2, 5) == 1
    assert distinguished_index(3, 5) == 1
    assert distinguished_index(3, 6) == 2


def test_levi_signature():
    n, c = 4, 2
    sig, rest = levi_signature_of((1,) * n, c, n)
    assert sig == (1, 1) and rest == (1, 1)
    assert levi_signature_of((1, 1, 1), 0, 3)[0] == (0, 0)
    # n - c odd swaps the counts
    plain = levi_signature_of((1, 1, 1), 1, 3)[0]
    assert plain == (0, 1)


def test_induction_degrees():
    L = c_levi_representatives(symplectic(1), 1)[1]
    assert str(L) == "U(1,0)xSp(0)"
    assert induction_degree(symplectic(1), L) == 0
    G = orthogonal(2, 1)
    assert induction_degree(G, c_levi_representatives(G, 1)[0]) == 0
    assert induction_degree(G, [unitary(0, 0), G]) == 0


@given(st.sampled_from(["A", "B", "CD"]), st.integers(1, 9))
def test_distribution_sums(family, n):
    for G in same_family_forms(family, n):
        qs = quasi_split_inner_form(G)
        dist = superpacket_distribution(qs)
        m = n if has_discrete_series(qs) else n - 1
        assert sum(dist.values()) == 2**m
        assert dist == oracles.binomial_distribution(qs)


@given(st.sampled_from(["A", "B", "CD"]), st.integers(1, 8), st.data())
def test_representatives(family, n, data):
    G = data.draw(st.sampled_from(same_family_forms(family, n)))
    c = data.draw(st.integers(0, n))
    reps = c_levi_representatives(G, c)
    if family != "A":
        expected = [i for i in range(c + 1) if 2 * i <= G.p and 2 * (c - i) <= G.q]
        assert [L.i for L in reps] == expected
    for L in reps:
        assert induction_degree(G, L) >= 0


@given(st.sampled_from(["A", "B", "CD"]), st.integers(1, 9), st.data())
def test_distinguished_index_is_the_trivial_sign_vector(family, n, data):
    alpha = data.draw(st.sampled_from(["d", "qd"])) if family == "CD" else None
    qs = quasi_split_form(family, n, alpha)
    if not has_discrete_series(qs):
        return
    c = data.draw(st.integers(0, n))
    t = (1,) * n
    G = inner_form_class(qs, t)
    i = distinguished_index(c, n)
    sig, _ = levi_signature_of(t, c, n)
    # the representative label counts +1 entries before the unitary swap
    assert (sig if (n - c) % 2 == 0 else sig[::-1]) == (i, c - i)
    assert i in [L.i for L in c_levi_representatives(G, c)]


@given(st.sampled_from(["A", "B", "CD"]), st.integers(1, 7), st.data())
def test_representatives_match_torus_oracle(family, n, data):
    G = data.draw(st.sampled_from(same_family_forms(family, n)))
    qs = quasi_split_inner_form(G)
    if has_discrete_series(qs) and G in inner_forms(qs):
        c = data.draw(st.integers(0, n))
        assert oracles.c_levi_oracle(G, c) == oracles.c_levi_keys(c_levi_representatives(G, c))
