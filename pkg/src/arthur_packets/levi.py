"""Order-two elements of the fundamental torus and the c-Levi subgroups.

A sign vector ``t`` selects the pure inner form ``G_t``; which form it is
depends on the number of +1 entries of ``t * t_star``.  Even orthogonal
groups without discrete series use sign vectors of length n-1 (the
anisotropic part), the remaining hyperbolic plane contributing SO(1,1).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .groups import (
    GroupDescriptor,
    has_discrete_series,
    orthogonal,
    q_invariant,
    symplectic,
    unitary,
)
from .rootdata import dim_complex

SignVector = tuple[int, ...]


def t_star(n: int) -> SignVector:
    return tuple((-1) ** (n - j + 1) for j in range(1, n + 1))


def torus_rank(G: GroupDescriptor) -> int:
    """Length of the sign vectors parametrising the superpacket of G."""
    return G.rank if has_discrete_series(G) else G.rank - 1


def _plus_count(t: Sequence[int]) -> int:
    m = len(t)
    return sum(1 for x, y in zip(t, t_star(m)) if x * y == 1)


def inner_form_class(G: GroupDescriptor, t: Sequence[int]) -> GroupDescriptor:
    m = torus_rank(G)
    if len(t) != m:
        raise ValueError(f"sign vector of length {len(t)}, expected {m}")
    if any(x not in (1, -1) for x in t):
        raise ValueError("sign vector entries must be +-1")
    n1 = _plus_count(t)
    n_1 = m - n1
    if G.family == "A":
        return symplectic(G.rank)
    if G.family == "B":
        return orthogonal(2 * n1 + 1, 2 * n_1)
    if G.family == "U":
        return unitary(n1, n_1)
    if has_discrete_series(G):
        return orthogonal(2 * n1, 2 * n_1)
    return orthogonal(2 * n1 + 1, 2 * n_1 + 1)


def sign_vectors(m: int):
    return product((1, -1), repeat=m)


def superpacket_distribution(G: GroupDescriptor) -> dict[GroupDescriptor, int]:
    counts = Counter(inner_form_class(G, t) for t in sign_vectors(torus_rank(G)))
    return dict(sorted(counts.items(), key=lambda kv: (kv[0].p or 0)))


@dataclass(frozen=True)
class LeviDescriptor:
    """``U(i, c-i) x G'`` inside G."""

    unitary: GroupDescriptor
    classical: GroupDescriptor
    i: int

    @property
    def c(self) -> int:
        return self.unitary.rank

    @property
    def factors(self) -> tuple[GroupDescriptor, ...]:
        return (self.unitary, self.classical)

    def __str__(self) -> str:
        return f"{self.unitary}x{self.classical}"


def c_levi_representatives(G: GroupDescriptor, c: int) -> list[LeviDescriptor]:
    """Classes of c-Levi subgroups U(i,c-i) x G'_i, sorted by i."""
    n = G.rank
    if not 0 <= c <= n:
        raise ValueError("need 0 <= c <= n")
    out = []
    if G.family == "A":
        for i in range(c + 1):
            out.append(LeviDescriptor(unitary(i, c - i), symplectic(n - c), i))
        return out
    if G.family not in ("B", "CD"):
        raise ValueError("c-Levi subgroups are only modelled for Sp and SO")
    for i in range(c + 1):
        p2, q2 = G.p - 2 * i, G.q - 2 * (c - i)
        if p2 >= 0 and q2 >= 0:
            out.append(LeviDescriptor(unitary(i, c - i), orthogonal(p2, q2), i))
    return out


def distinguished_index(c: int, n: int) -> int:
    if not 0 <= c <= n:
        raise ValueError("need 0 <= c <= n")
    if c % 2 == 0:
        return c // 2
    return (c - 1) // 2 if (n - c) % 2 == 0 else (c + 1) // 2


def levi_signature_of(t: Sequence[int], c: int, n: int) -> tuple[tuple[int, int], SignVector]:
    """Unitary signature of L_t and the sign vector left for the classical factor.

    The unitary counts are swapped when n - c is odd.
    """
    if len(t) != n:
        raise ValueError("sign vector length must be n")
    if not 0 <= c <= n:
        raise ValueError("need 0 <= c <= n")
    prod_ = [x * y for x, y in zip(t, t_star(n))]
    plus = sum(1 for x in prod_[:c] if x == 1)
    minus = c - plus
    sig = (minus, plus) if (n - c) % 2 else (plus, minus)
    return sig, tuple(t[c:])


def induction_degree(G: GroupDescriptor, L) -> int:
    """Half the codimension minus the drop in q."""
    diff = dim_complex(G) - dim_complex(L)
    if diff % 2:
        raise ValueError("codimension must be even")
    d = diff // 2 - (q_invariant(G) - q_invariant(L))
    if d < 0:
        raise ValueError(f"negative induction degree {d}: {L} is not a c-Levi of {G}")
    return d
