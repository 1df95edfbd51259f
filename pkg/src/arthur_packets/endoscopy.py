"""Elliptic endoscopic data of the quasi-split classical groups.

A datum is a pair ``H1 x H2`` of quasi-split groups together with the
eigenvalue ``x_d`` of the order-two element ``x`` on the first factor.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .characters import S_character
from .groups import (
    GroupDescriptor,
    flip_type,
    quasi_split_form,
    symplectic,
    unitary,
)


def _so_even(b: int, alpha: str) -> GroupDescriptor:
    return quasi_split_form("CD", b, alpha)


def _so_odd(b: int) -> GroupDescriptor:
    return quasi_split_form("B", b)


def _factor_key(h: GroupDescriptor):
    return (h.family, h.rank, h.alpha or "")


@dataclass(frozen=True)
class EndoscopicDatum:
    h1: GroupDescriptor
    h2: GroupDescriptor
    x_d: int = 1
    canonical: bool = True
    # Std_G restricted to H is Std_H1 (x) sgn + Std_H2 in the Sp x SO^qd case
    sgn_twist_h1: bool = False

    def swapped(self) -> "EndoscopicDatum":
        return replace(
            self,
            h1=self.h2,
            h2=self.h1,
            x_d=-self.x_d,
            canonical=not self.canonical if self.h1 != self.h2 else self.canonical,
            sgn_twist_h1=False,
        )

    @property
    def shape(self) -> tuple[str, str]:
        return factor_kind(self.h1), factor_kind(self.h2)

    def __str__(self) -> str:
        return f"{_name(self.h1)}x{_name(self.h2)}"


def factor_kind(h: GroupDescriptor) -> str:
    if h.family == "A":
        return "Sp"
    if h.family == "B":
        return "SO"
    return f"SO^{h.alpha}"


def _name(h: GroupDescriptor) -> str:
    if h.family == "A":
        return f"Sp{2 * h.rank}"
    if h.family == "B":
        return f"SO{2 * h.rank + 1}"
    return f"SO{2 * h.rank}^{h.alpha}"


def _ordered_pair(h1: GroupDescriptor, h2: GroupDescriptor) -> EndoscopicDatum:
    """Unordered pair, stored in the lexicographically smaller ordering."""
    if _factor_key(h2) < _factor_key(h1):
        h1, h2 = h2, h1
    return EndoscopicDatum(h1, h2)


def elliptic_endoscopic_data(G: GroupDescriptor) -> list[EndoscopicDatum]:
    if not G.quasi_split:
        raise ValueError(f"{G} is not quasi-split")
    n = G.rank
    out: list[EndoscopicDatum] = []
    if G.family == "A":
        for a in range(n, -1, -1):
            b = n - a
            for alpha in ("d", "qd"):
                if b == 0 and alpha != "d":
                    continue
                if (b, alpha) == (1, "d"):
                    continue
                out.append(EndoscopicDatum(symplectic(a), _so_even(b, alpha), sgn_twist_h1=alpha == "qd"))
        return out
    if G.family == "B":
        for b in range(n // 2 + 1):
            out.append(_ordered_pair(_so_odd(b), _so_odd(n - b)))
        return out
    if G.family == "CD":
        alpha = G.alpha
        seen = set()
        for a in range(n + 1):
            b = n - a
            for beta in ("d", "qd"):
                gamma = beta if alpha == "d" else flip_type(beta)
                if (a == 0 and beta != "d") or (b == 0 and gamma != "d"):
                    continue
                if (a, beta) == (1, "d") or (b, gamma) == (1, "d"):
                    continue
                datum = _ordered_pair(_so_even(a, beta), _so_even(b, gamma))
                if (datum.h1, datum.h2) not in seen:
                    seen.add((datum.h1, datum.h2))
                    out.append(datum)
        return out
    raise ValueError(f"no endoscopic data for family {G.family}")


def endoscopic_group_family(G: GroupDescriptor) -> str:
    return G.family


@dataclass(frozen=True)
class EndoscopicLevi:
    """``U_c x H1' x H2`` inside H and the matching ``U_c x G'`` inside G."""

    case: str
    c: int
    unitary: GroupDescriptor
    h1_prime: GroupDescriptor
    h2: GroupDescriptor
    g_prime: GroupDescriptor
    x_d: int

    @property
    def levi_h(self) -> tuple[GroupDescriptor, ...]:
        return (self.unitary, self.h1_prime, self.h2)

    @property
    def levi_g(self) -> tuple[GroupDescriptor, ...]:
        return (self.unitary, self.g_prime)


def _alpha_c(alpha: str, c: int) -> str:
    return flip_type(alpha) if c % 2 else alpha


def _even_factor(rank: int, alpha: str) -> GroupDescriptor:
    if rank == 0 and alpha != "d":
        raise ValueError("the unitary factor does not fit in this even orthogonal group")
    return _so_even(rank, alpha)


def c_levi_of_endoscopic(case: str, datum: EndoscopicDatum, c: int) -> EndoscopicLevi:
    """The maximal c-Levi ``U_c x H1' x H2`` with U_c inside the first factor.

    Case A2 takes an ``Sp x SO`` datum and moves the orthogonal factor first,
    which changes the eigenvalue x_d.
    """
    if c < 0:
        raise ValueError("c must be nonnegative")
    h1, h2, x_d = datum.h1, datum.h2, datum.x_d
    if case == "A2" and h1.family == "A":
        h1, h2, x_d = h2, h1, -x_d
    kinds = (h1.family, h2.family)
    expected = {"A1": ("A", "CD"), "A2": ("CD", "A"), "B": ("B", "B"), "CD": ("CD", "CD")}
    if case not in expected:
        raise ValueError(f"unknown case {case!r}")
    if kinds != expected[case]:
        raise ValueError(f"datum {datum} does not match case {case}")
    if c > h1.rank:
        raise ValueError(f"c = {c} exceeds the rank of {h1}")
    n = h1.rank + h2.rank
    u = unitary(c // 2, c - c // 2)
    if case == "A1":
        h1p, gp = symplectic(h1.rank - c), symplectic(n - c)
    elif case == "A2":
        h1p, gp = _even_factor(h1.rank - c, _alpha_c(h1.alpha, c)), symplectic(n - c)
    elif case == "B":
        h1p, gp = _so_odd(h1.rank - c), _so_odd(n - c)
    else:
        alpha = h1.alpha if h2.alpha == "d" else flip_type(h1.alpha)
        h1p = _even_factor(h1.rank - c, _alpha_c(h1.alpha, c))
        gp = _even_factor(n - c, _alpha_c(alpha, c))
    return EndoscopicLevi(case, c, u, h1p, h2, gp, x_d)


def transfer_sign(i: int, c: int, n: int, x_d: int) -> int:
    return S_character(i, c, n).evaluate(x_d)


TRIV, SGN = "triv", "sgn"

_SP_ODD = {
    ("Sp", "SO^d"): (TRIV, SGN),
    ("SO^d", "Sp"): (SGN, SGN),
    ("Sp", "SO^qd"): (TRIV, SGN),
    ("SO^qd", "Sp"): (SGN, SGN),
}


def twist_table(family: str, shape: tuple[str, str], c: int) -> tuple[str, str]:
    """Twists carried by the parameters of H1' and H2 after removing U_c.

    ``shape`` is a pair of factor kinds: ``"Sp"``, ``"SO"``, ``"SO^d"`` or
    ``"SO^qd"``; ``c`` may be an integer or a parity.
    """
    shape = tuple(shape)
    if family in ("B", "CD"):
        allowed = {("SO", "SO")} if family == "B" else {
            (x, y) for x in ("SO^d", "SO^qd") for y in ("SO^d", "SO^qd")
        }
        if shape not in allowed:
            raise ValueError(f"unrecognized shape {shape} for family {family}")
        return TRIV, TRIV
    if family != "A":
        raise ValueError(f"unknown family {family!r}")
    if shape not in _SP_ODD:
        raise ValueError(f"unrecognized shape {shape} for Sp")
    if c % 2 == 0:
        return TRIV, TRIV
    return _SP_ODD[shape]


def twist_cases() -> list[tuple[str, tuple[str, str], int]]:
    """Every (family, shape, c parity) the table covers."""
    cases = [("B", ("SO", "SO"), p) for p in (0, 1)]
    cases += [
        ("CD", (x, y), p) for x in ("SO^d", "SO^qd") for y in ("SO^d", "SO^qd") for p in (0, 1)
    ]
    cases += [("A", shape, p) for shape in _SP_ODD for p in (0, 1)]
    return cases


def datum_case(datum: EndoscopicDatum) -> Optional[str]:
    fam = (datum.h1.family, datum.h2.family)
    return {("A", "CD"): "A1", ("CD", "A"): "A2", ("B", "B"): "B", ("CD", "CD"): "CD"}.get(fam)
