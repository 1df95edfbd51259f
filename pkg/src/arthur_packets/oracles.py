"""Independent recomputations used to cross-check the closed forms.

Each oracle gets to the answer by a different route than the library code:
explicit maximal compact subgroups, exhaustive enumeration with filters, or
direct substitution into the defining formulas.
"""

from __future__ import annotations

from itertools import product
from math import comb

from .groups import (
    GroupDescriptor,
    has_discrete_series,
    orthogonal,
    quasi_split_form,
    symplectic,
)
from .levi import inner_form_class, levi_signature_of, sign_vectors, t_star, torus_rank


def _so_dim(m: int) -> int:
    return m * (m - 1) // 2


def maximal_compact(G: GroupDescriptor) -> tuple[int, int]:
    """(dimension, rank) of a maximal compact subgroup."""
    if G.family == "A":
        return G.rank * G.rank, G.rank
    if G.family == "U":
        return G.p * G.p + G.q * G.q, G.p + G.q
    return _so_dim(G.p) + _so_dim(G.q), G.p // 2 + G.q // 2


def real_dim(G: GroupDescriptor) -> int:
    if G.family == "A":
        return G.rank * (2 * G.rank + 1)
    if G.family == "U":
        return (G.p + G.q) ** 2
    return _so_dim(G.p + G.q)


def q_oracle(G: GroupDescriptor) -> int:
    """Half of dim G/K minus the split rank of the fundamental Cartan."""
    dim_k, rank_k = maximal_compact(G)
    return (real_dim(G) - dim_k - (G.rank - rank_k)) // 2


def binomial_distribution(G: GroupDescriptor) -> dict[GroupDescriptor, int]:
    """Number of sign vectors landing on each inner form, by counting."""
    m = torus_rank(G)
    out = {}
    for k in range(m + 1):
        if G.family == "A":
            form = symplectic(G.rank)
        elif G.family == "B":
            form = orthogonal(2 * k + 1, 2 * (m - k))
        elif has_discrete_series(G):
            form = orthogonal(2 * k, 2 * (m - k))
        else:
            form = orthogonal(2 * k + 1, 2 * (m - k) + 1)
        out[form] = out.get(form, 0) + comb(m, k)
    return out


# --- endoscopy ---------------------------------------------------------------------

_SIGN = {"d": 1, "qd": -1}


def _dual_kind(h: tuple) -> tuple[str, int]:
    """Standard representation of the dual group: (kind, dimension)."""
    family, rank, _ = h
    if family == "A":
        return "O", 2 * rank + 1
    if family == "B":
        return "Sp", 2 * rank
    return "O", 2 * rank


def _candidates(n: int) -> list[tuple]:
    out = []
    for rank in range(n + 1):
        out.append(("A", rank, None))
        out.append(("B", rank, None))
        for alpha in ("d", "qd"):
            out.append(("CD", rank, alpha))
    return out


def _elliptic(h: tuple) -> bool:
    family, rank, alpha = h
    if family != "CD":
        return True
    if rank == 0:
        return alpha == "d"
    # the split SO(2) is a torus with a split factor
    return not (rank == 1 and alpha == "d")


def endoscopic_bruteforce(G: GroupDescriptor) -> set:
    """Unordered pairs H1 x H2 whose dual embeds as a block-diagonal
    elliptic subgroup of the dual of G, up to swapping the factors."""
    n = G.rank
    target_kind, target_dim = _dual_kind((G.family, n, None))
    found = set()
    for h1, h2 in product(_candidates(n), repeat=2):
        if h1[1] + h2[1] != n or not (_elliptic(h1) and _elliptic(h2)):
            continue
        k1, d1 = _dual_kind(h1)
        k2, d2 = _dual_kind(h2)
        if k1 != target_kind or k2 != target_kind or d1 + d2 != target_dim:
            continue
        if G.family == "CD" and _SIGN[h1[2]] * _SIGN[h2[2]] != _SIGN[G.alpha]:
            continue
        if G.family == "B" and (h1[0], h2[0]) != ("B", "B"):
            continue
        if G.family == "A" and sorted((h1[0], h2[0])) != ["A", "CD"]:
            continue
        found.add(frozenset([h1, h2]) if h1 != h2 else frozenset([h1]))
    return found


def endoscopic_keys(data) -> set:
    out = set()
    for d in data:
        keys = [(h.family, h.rank, h.alpha) for h in (d.h1, d.h2)]
        out.add(frozenset(keys))
    return out


# --- c-Levi subgroups through the order-two torus ------------------------------------


def c_levi_oracle(G: GroupDescriptor, c: int) -> set[tuple[tuple[int, int], GroupDescriptor]]:
    """(unordered unitary signature, G') for each L_t, t in T[2] selecting G.

    The classical factor is read off the sign vector left after the first c
    coordinates; U(a,b) and U(b,a) are the same group, so the signature is
    sorted.
    """
    n = G.rank
    qs = quasi_split_form(G.family, n, G.alpha) if G.family == "CD" else quasi_split_form(G.family, n)
    if not has_discrete_series(qs):
        raise ValueError("the order-two torus model needs discrete series")
    out = set()
    for t in sign_vectors(n):
        if inner_form_class(qs, t) != G:
            continue
        sig, rest = levi_signature_of(t, c, n)
        m = len(rest)
        plus = sum(1 for x, y in zip(rest, t_star(m)) if x * y == 1)
        if G.family == "A":
            classical = symplectic(m)
        elif G.family == "B":
            classical = orthogonal(2 * plus + 1, 2 * (m - plus))
        else:
            classical = orthogonal(2 * plus, 2 * (m - plus))
        out.add((tuple(sorted(sig)), classical))
    return out


def c_levi_keys(levis) -> set[tuple[tuple[int, int], GroupDescriptor]]:
    return {(tuple(sorted((L.i, L.c - L.i))), L.classical) for L in levis}


# --- signs ---------------------------------------------------------------------------


def S_at_sd_substitution(i: int, c: int, n: int) -> int:
    """(-1)^{exponent} when c is even, +1 when c is odd, from the exponent formula."""
    exponent = i + c * (c - 1) // 2 + (n - c) * c
    sd = (-1) ** (c + 1)
    return (-1) ** exponent if sd == -1 else 1
