"""Descriptors for real classical groups and their pure inner forms.

Families: ``A`` (Sp(2n)), ``B`` (SO(p,q), p+q = 2n+1), ``CD`` (SO(p,q),
p+q = 2n) and ``U`` (U(p,q), p+q = n).  Rank 0 is allowed so that the
trivial groups Sp(0), SO(1,0), SO(0,0) can serve as base forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .rootdata import dim_complex

FAMILIES = ("A", "B", "CD", "U")


def derive_even_so_type(p: int, q: int) -> str:
    """Split type of SO(p,q), p+q even: ``d`` if p = q mod 4, else ``qd``."""
    if (p + q) % 2:
        raise ValueError("p + q must be even")
    return "d" if (p - q) % 4 == 0 else "qd"


def flip_type(alpha: str) -> str:
    return "qd" if alpha == "d" else "d"


@dataclass(frozen=True, order=True)
class GroupDescriptor:
    family: str
    rank: int
    p: Optional[int] = None
    q: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if self.family == "A":
            if self.p is not None or self.q is not None:
                raise ValueError("Sp(2n) carries no signature")
            return
        if self.p is None or self.q is None or self.p < 0 or self.q < 0:
            raise ValueError("signature must be a pair of nonnegative integers")
        expected = {"B": 2 * self.rank + 1, "CD": 2 * self.rank, "U": self.rank}
        if self.p + self.q != expected[self.family]:
            raise ValueError(f"signature ({self.p},{self.q}) does not fit {self.family}{self.rank}")

    @property
    def signature(self) -> Optional[tuple[int, int]]:
        return None if self.family == "A" else (self.p, self.q)

    @property
    def alpha(self) -> Optional[str]:
        if self.family != "CD":
            return None
        return derive_even_so_type(self.p, self.q)

    @property
    def quasi_split(self) -> bool:
        if self.family == "A":
            return True
        gap = abs(self.p - self.q)
        if self.family == "CD":
            # SO(n,n) is split, SO(n-1,n+1) is the quasi-split qd form
            return gap <= 2
        return gap <= 1

    @property
    def is_orthogonal(self) -> bool:
        return self.family in ("B", "CD")

    @property
    def factors(self) -> tuple["GroupDescriptor", ...]:
        return (self,)

    def __str__(self) -> str:
        if self.family == "A":
            return f"Sp({2 * self.rank})"
        name = "U" if self.family == "U" else "SO"
        return f"{name}({self.p},{self.q})"


def symplectic(n: int) -> GroupDescriptor:
    return GroupDescriptor("A", n)


def orthogonal(p: int, q: int) -> GroupDescriptor:
    if (p + q) % 2:
        return GroupDescriptor("B", (p + q - 1) // 2, p, q)
    return GroupDescriptor("CD", (p + q) // 2, p, q)


def unitary(p: int, q: int) -> GroupDescriptor:
    return GroupDescriptor("U", p + q, p, q)


def quasi_split_form(family: str, n: int, alpha: Optional[str] = None) -> GroupDescriptor:
    """The quasi-split representative used as base point of the inner-form classes.

    B: the class with p odd; CD: SO(n,n) for ``d`` and SO(n-1,n+1) for ``qd``.
    """
    if family == "A":
        return symplectic(n)
    if family == "B":
        return orthogonal(n + 1, n) if n % 2 == 0 else orthogonal(n, n + 1)
    if family == "CD":
        alpha = alpha or "d"
        if alpha == "d":
            return orthogonal(n, n)
        if n == 0:
            raise ValueError("SO_0 has no qd form")
        return orthogonal(n - 1, n + 1)
    if family == "U":
        return unitary(n // 2, n - n // 2)
    raise ValueError(f"unknown family {family!r}")


def quasi_split_inner_form(G: GroupDescriptor) -> GroupDescriptor:
    if G.family == "CD":
        return quasi_split_form("CD", G.rank, G.alpha)
    return quasi_split_form(G.family, G.rank)


def has_discrete_series(G: GroupDescriptor) -> bool:
    """False exactly for SO^d_{2n} with n odd and SO^qd_{2n} with n even."""
    if G.family != "CD":
        return True
    odd = G.rank % 2 == 1
    return (G.alpha == "d") != odd


def standard_rep_dim(G: GroupDescriptor) -> int:
    if G.family == "U":
        raise ValueError("no standard representation for unitary groups")
    return 2 * G.rank + 1 if G.family == "A" else 2 * G.rank


def good_parity_class(G: GroupDescriptor) -> int:
    if G.family == "U":
        raise ValueError("parity class undefined for unitary groups")
    return 1 if G.family == "B" else 0


def _factors(G) -> tuple[GroupDescriptor, ...]:
    if isinstance(G, GroupDescriptor):
        return (G,)
    return tuple(getattr(G, "factors", G))


def q_invariant(G) -> int:
    """Half the dimension of the symmetric space minus half the split rank
    of a fundamental Cartan.  Products add."""
    total = 0
    for f in _factors(G):
        if f.family == "A":
            total += f.rank * (f.rank + 1) // 2
        elif f.family == "U":
            total += f.p * f.q
        else:
            # both p and q odd: the fundamental Cartan has one split line
            total += (f.p * f.q) // 2
    return total


def kottwitz_sign(G) -> int:
    sign = 1
    for f in _factors(G):
        if (q_invariant(f) - q_invariant(quasi_split_inner_form(f))) % 2:
            sign = -sign
    return sign


def inner_forms(G: GroupDescriptor) -> list[GroupDescriptor]:
    """All pure inner-form classes reached from G, in increasing p."""
    n = G.rank
    if G.family == "A":
        return [symplectic(n)]
    if G.family == "U":
        return [unitary(k, n - k) for k in range(n + 1)]
    if G.family == "B":
        return [orthogonal(2 * k + 1, 2 * (n - k)) for k in range(n + 1)]
    if has_discrete_series(G):
        return [orthogonal(2 * k, 2 * (n - k)) for k in range(n + 1)]
    return [orthogonal(2 * k + 1, 2 * (n - 1 - k) + 1) for k in range(n)]


def same_family_forms(family: str, n: int) -> list[GroupDescriptor]:
    """Every signature of the given family and rank (all classes, both split types)."""
    if family == "A":
        return [symplectic(n)]
    if family == "U":
        return [unitary(k, n - k) for k in range(n + 1)]
    total = 2 * n + 1 if family == "B" else 2 * n
    return [orthogonal(k, total - k) for k in range(total + 1)]


def product_dim(factors: Iterable[GroupDescriptor]) -> int:
    return sum(dim_complex(f) for f in factors)
