from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from arthur_packets.groups import orthogonal, symplectic, unitary
from arthur_packets.rootdata import (
    RootSystem,
    all_roots,
    dim_complex,
    positive_roots,
    rho,
    rho_v_bruteforce,
    rho_v_closed,
    root_count,
)


def test_c2_positive_roots():
    assert set(positive_roots("C", 2)) == {(1, -1), (1, 1), (2, 0), (0, 2)}


def test_small_systems():
    assert positive_roots("B", 1) == [(1,)]
    assert set(positive_roots("D", 2)) == {(1, -1), (1, 1)}
    assert positive_roots("D", 1) == []
    assert positive_roots("C", 0) == []


@pytest.mark.parametrize(
    "family, rank, expected",
    [("C", 3, (3, 2, 1)), ("B", 2, (F(3, 2), F(1, 2))), ("D", 3, (2, 1, 0)), ("Agl", 3, (1, 0, -1))],
)
def test_rho_values(family, rank, expected):
    assert rho(family, rank) == tuple(F(x) for x in expected)


def test_rho_v_closed_values():
    assert rho_v_closed("A", 4, 2) == (F(7, 2), F(7, 2), 0, 0)
    assert rho_v_closed("B", 2, 1) == (F(3, 2), 0)
    assert rho_v_closed("A", 5, 0) == (0,) * 5


def test_rho_v_rejects_bad_c():
    with pytest.raises(ValueError):
        rho_v_closed("A", 2, 3)
    with pytest.raises(ValueError):
        rho_v_closed("E", 2, 1)


def test_dimensions():
    assert dim_complex(symplectic(3)) == 21
    assert dim_complex(orthogonal(3, 2)) == 10
    assert dim_complex(unitary(1, 1)) == 4
    assert dim_complex([unitary(1, 1), symplectic(1)]) == 7


def test_unknown_family():
    with pytest.raises(ValueError):
        positive_roots("E", 2)
    with pytest.raises(ValueError):
        RootSystem("G", 2)


@given(st.sampled_from(["B", "C", "D", "Agl"]), st.integers(0, 7))
def test_root_count_matches_enumeration(family, rank):
    roots = all_roots(family, rank)
    assert len(roots) == root_count(family, rank)
    assert len(set(roots)) == len(roots)


@given(st.sampled_from(["B", "C", "D"]), st.integers(1, 8))
def test_rho_decreasing(family, rank):
    r = rho(family, rank)
    pairs = list(zip(r, r[1:]))
    if family == "D":
        assert all(x >= y for x, y in pairs)
    else:
        assert all(x > y for x, y in pairs)


@given(st.sampled_from(["A", "B", "CD"]), st.integers(1, 12), st.data())
def test_rho_v_closed_matches_bruteforce(case, n, data):
    c = data.draw(st.integers(0, n))
    assert rho_v_closed(case, n, c) == rho_v_bruteforce(case, n, c)
