"""Classical root systems in standard coordinates.

Roots are integer vectors; half-sums are exact ``Fraction`` vectors.  The
families are ``"B"``, ``"C"``, ``"D"`` and ``"Agl"`` (the gl-type system of a
unitary factor, roots ``e_i - e_j``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

FAMILIES = ("B", "C", "D", "Agl")

# group family -> root-system family
_ROOT_FAMILY = {"A": "C", "B": "B", "CD": "D", "U": "Agl"}

Vector = tuple[int, ...]


def _unit(rank: int, i: int, coeff: int = 1) -> list[int]:
    v = [0] * rank
    v[i] = coeff
    return v


def positive_roots(family: str, rank: int) -> list[Vector]:
    """Canonical positive system, in a fixed lexicographic order.

    ``e_i - e_j`` and ``e_i + e_j`` for ``i < j`` come first, then the
    long roots ``2e_i`` (C) or the short roots ``e_i`` (B).  ``D_1`` and
    rank 0 give the empty system.
    """
    if family not in FAMILIES:
        raise ValueError(f"unsupported family {family!r}")
    if rank < 0:
        raise ValueError("rank must be nonnegative")
    roots: list[Vector] = []
    for i in range(rank):
        for j in range(i + 1, rank):
            minus = _unit(rank, i)
            minus[j] = -1
            roots.append(tuple(minus))
            if family != "Agl":
                plus = _unit(rank, i)
                plus[j] = 1
                roots.append(tuple(plus))
    if family == "C":
        roots.extend(tuple(_unit(rank, i, 2)) for i in range(rank))
    elif family == "B":
        roots.extend(tuple(_unit(rank, i)) for i in range(rank))
    return roots


def all_roots(family: str, rank: int) -> list[Vector]:
    pos = positive_roots(family, rank)
    return pos + [tuple(-x for x in r) for r in pos]


def rho(family: str, rank: int) -> tuple[Fraction, ...]:
    """Half-sum of the positive roots."""
    total = [Fraction(0)] * rank
    for r in positive_roots(family, rank):
        for k, x in enumerate(r):
            total[k] += x
    return tuple(x / 2 for x in total)


def root_count(family: str, rank: int) -> int:
    """Classical closed form for the number of roots."""
    n = rank
    if family == "C" or family == "B":
        return 2 * n * n
    if family == "D":
        return 2 * n * (n - 1)
    return n * (n - 1)


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unsupported family {self.family!r}")
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")

    def positive_roots(self) -> list[Vector]:
        return positive_roots(self.family, self.rank)

    def roots(self) -> list[Vector]:
        return all_roots(self.family, self.rank)

    def rho(self) -> tuple[Fraction, ...]:
        return rho(self.family, self.rank)


def root_family(group_family: str) -> str:
    """Root-system family attached to a group family (A, B, CD, U)."""
    try:
        return _ROOT_FAMILY[group_family]
    except KeyError:
        raise ValueError(f"unknown group family {group_family!r}") from None


def rho_v_closed(case: str, n: int, c: int) -> tuple[Fraction, ...]:
    """Closed form of rho_G - rho_L for the c-Levi ``U_c x G'``."""
    if not 0 <= c <= n:
        raise ValueError("need 0 <= c <= n")
    if case == "A":
        const = n - Fraction(c - 1, 2)
    elif case == "B":
        const = n - Fraction(c, 2)
    elif case == "CD":
        const = n - 1 - Fraction(c - 1, 2)
    else:
        raise ValueError(f"unknown case {case!r}")
    return tuple([const] * c + [Fraction(0)] * (n - c))


def rho_v_bruteforce(case: str, n: int, c: int) -> tuple[Fraction, ...]:
    """rho_G minus the concatenated rho of the gl_c block and of G'."""
    fam = root_family(case)
    levi = rho("Agl", c) + rho(fam, n - c)
    return tuple(g - l for g, l in zip(rho(fam, n), levi))


def _dim_single(d) -> int:
    fam, n = d.family, d.rank
    if fam == "A":
        return n * (2 * n + 1)
    if fam == "B":
        m = 2 * n + 1
        return m * (m - 1) // 2
    if fam == "CD":
        m = 2 * n
        return m * (m - 1) // 2
    if fam == "U":
        return n * n
    raise ValueError(f"unknown family {fam!r}")


def dim_complex(descriptor) -> int:
    """Complex dimension of a group descriptor or of a product of them.

    Anything with a ``factors`` attribute (or a plain sequence) is treated as
    a product and the dimensions add up.
    """
    if hasattr(descriptor, "family"):
        return _dim_single(descriptor)
    factors = getattr(descriptor, "factors", descriptor)
    if not isinstance(factors, Sequence):
        raise TypeError("expected a group descriptor or a product of them")
    return sum(dim_complex(f) for f in factors)
