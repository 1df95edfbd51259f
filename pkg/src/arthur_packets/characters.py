"""Sign, torsion and normalisation characters.

Sign characters of Z/2 are stored as exponent parities.  Standard labels
record just what the twists act on: a Cartan shape, one exact parameter per
coordinate, and a sign flag for each split line.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Sequence

from .rootdata import all_roots, rho_v_closed


@dataclass(frozen=True)
class SignCharacter:
    exponent: int

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % 2)

    @property
    def trivial(self) -> bool:
        return self.exponent == 0

    def evaluate(self, x: int) -> int:
        """Value at the element x of {+1, -1}."""
        if x not in (1, -1):
            raise ValueError("argument must be +1 or -1")
        return -1 if (x == -1 and self.exponent) else 1

    def __mul__(self, other: "SignCharacter") -> "SignCharacter":
        return SignCharacter(self.exponent + other.exponent)

    def __str__(self) -> str:
        return "triv" if self.trivial else "sgn"


def _check_range(i: int, c: int, n: int) -> None:
    if not 0 <= i <= c <= n:
        raise ValueError("need 0 <= i <= c <= n")


def S_character(i: int, c: int, n: int) -> SignCharacter:
    _check_range(i, c, n)
    return SignCharacter(i + c * (c - 1) // 2 + (n - c) * c)


def S_eval_at_sd(i: int, c: int, n: int) -> int:
    """Closed form for S_i evaluated at s_d = (-1)^(c+1)."""
    _check_range(i, c, n)
    tri = c * (c - 1) // 2 if (n - c) % 2 == 0 else c * (c + 1) // 2
    return (-1) ** ((i * (c - i) + tri * (c + 1)) % 2)


def epsilon_U_differential(case: str, a: int, b: int, c: int) -> int:
    """Constant differential of the unitary correction; b, except a+1 in case A2."""
    if case in ("A1", "B", "CD"):
        if c > a:
            raise ValueError("c exceeds the rank of H1")
        return b
    if case == "A2":
        if c > b:
            raise ValueError("c exceeds the rank of H1")
        return a + 1
    raise ValueError(f"unknown case {case!r}")


def xi_u_differential(family: str, n: int, c: int) -> int:
    if not 0 <= c <= n:
        raise ValueError("need 0 <= c <= n")
    if family == "A":
        return n - (c - 1) // 2
    if family == "B":
        return n - c // 2
    if family == "CD":
        return n - 1 - (c - 1) // 2
    raise ValueError(f"unknown family {family!r}")


def xi_block_differential(i: int, a: int, t: int) -> int:
    if not 0 <= i <= a or t < 1:
        raise ValueError("need 0 <= i <= a and t >= 1")
    return t // 2


# --- torsion of the real parabolic -------------------------------------------

Shape = tuple[int, int, int, int, int]


def _check_shape(family: str, shape: Sequence[int]) -> Shape:
    if family not in ("A", "B", "CD"):
        raise ValueError(f"unknown family {family!r}")
    if len(shape) != 5 or any(x < 0 for x in shape):
        raise ValueError("shape is five nonnegative integers (r1, m1, r2, m2, s2)")
    return tuple(shape)


def _layout(shape: Shape):
    """Coordinate roles: ('circle', k), ('pair', k, other), ('split', k)."""
    r1, m1, r2, m2, s2 = shape
    roles = []
    pos = 0

    def circles(count):
        nonlocal pos
        for _ in range(count):
            roles.append(("circle", pos))
            pos += 1

    def pairs(count):
        nonlocal pos
        for _ in range(count):
            roles.append(("pair", pos, pos + 1))
            roles.append(("pair", pos + 1, pos))
            pos += 2

    circles(r1)
    pairs(m1)
    circles(r2)
    pairs(m2)
    split = list(range(pos, pos + s2))
    for k in split:
        roles.append(("split", k))
    return roles, split


def _sigma(roles, v: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(v)
    for role in roles:
        k = role[1]
        if role[0] == "circle":
            out[k] = -v[k]
        elif role[0] == "split":
            out[k] = v[k]
        else:
            # sigma(e_a) = -e_b on a complex pair
            out[role[2]] = -v[k]
    return tuple(out)


_GROUP_TO_ROOTS = {"A": "C", "B": "B", "CD": "D"}


def torsion_bruteforce(family: str, shape: Sequence[int], base: int = 7) -> tuple[int, ...]:
    """Sign of the half-sum of roots of n outside n_L on each split line.

    n is the nilradical of the real parabolic attached to the split part of
    the Cartan; the entry for a split coordinate is 1 when the character is
    sgn there.  Complex and compact factors are connected and contribute
    nothing.
    """
    shape = _check_shape(family, shape)
    r1, m1, r2, m2, s2 = shape
    c = r1 + 2 * m1
    n = c + r2 + 2 * m2 + s2
    roles, split = _layout(shape)
    rfam = _GROUP_TO_ROOTS[family]

    # a generic element of the split part: split lines and e_a - e_b on pairs
    H = [0] * n
    weight = 1
    for role in roles:
        if role[0] == "split":
            H[role[1]] = weight
            weight *= base
        elif role[0] == "pair" and role[1] < role[2]:
            H[role[1]], H[role[2]] = weight, -weight
            weight *= base

    def in_levi(root) -> bool:
        support = [k for k, x in enumerate(root) if x]
        if all(k < c for k in support):
            return sum(root) == 0
        return all(k >= c for k in support)

    nil = []
    for root in all_roots(rfam, n):
        real = [Fraction(x + y, 2) for x, y in zip(root, _sigma(roles, root))]
        pairing = sum(x * h for x, h in zip(real, H))
        if pairing > 0 and not in_levi(root):
            nil.append(root)
        elif pairing == 0 and any(real):
            raise RuntimeError("split element is not generic")
    half = [Fraction(sum(r[k] for r in nil), 2) for k in range(n)]
    out = []
    for k in split:
        if half[k].denominator != 1:
            raise RuntimeError("half-integral exponent on a split line")
        out.append(int(half[k]) % 2)
    return tuple(out)


def torsion_closed(shape: Sequence[int]) -> tuple[int, ...]:
    """sgn^c on every split line."""
    r1, m1, _, _, s2 = shape
    c = r1 + 2 * m1
    return (c % 2,) * s2


def cartan_shapes(max_rank: int, family: str = "A"):
    """Every shape (r1, m1, r2, m2, s2) of total rank at most max_rank."""
    for total in range(max_rank + 1):
        for r1 in range(total + 1):
            for m1 in range((total - r1) // 2 + 1):
                rest = total - r1 - 2 * m1
                for r2 in range(rest + 1):
                    for m2 in range((rest - r2) // 2 + 1):
                        yield (r1, m1, r2, m2, rest - r2 - 2 * m2)


# --- standard labels ------------------------------------------------------------


@dataclass(frozen=True)
class StandardLabel:
    r1: int
    m1: int
    r2: int
    m2: int
    s2: int
    params: tuple[Fraction, ...] = ()
    flags: tuple[int, ...] = ()
    continuous: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if min(self.r1, self.m1, self.r2, self.m2, self.s2) < 0:
            raise ValueError("shape entries must be nonnegative")
        object.__setattr__(self, "params", tuple(Fraction(x) for x in self.params))
        object.__setattr__(self, "continuous", tuple(Fraction(x) for x in self.continuous))
        flags = tuple(int(f) for f in self.flags) if self.flags else (0,) * self.s2
        if len(flags) != self.s2 or any(f not in (0, 1) for f in flags):
            raise ValueError("one 0/1 flag per split line is required")
        object.__setattr__(self, "flags", flags)
        if self.params and len(self.params) != self.rank:
            raise ValueError("one parameter per coordinate is required")

    @property
    def unitary_rank(self) -> int:
        return self.r1 + 2 * self.m1

    @property
    def classical_rank(self) -> int:
        return self.r2 + 2 * self.m2 + self.s2

    @property
    def rank(self) -> int:
        return self.unitary_rank + self.classical_rank

    @property
    def shape(self) -> Shape:
        return (self.r1, self.m1, self.r2, self.m2, self.s2)

    def flip_flags(self) -> "StandardLabel":
        return replace(self, flags=tuple(1 - f for f in self.flags))


def epsilon2_label(label: StandardLabel, c: int) -> StandardLabel:
    return label.flip_flags() if c % 2 else label


def epsilon_tilde1_label(label: StandardLabel, h1_family: str, c: int) -> StandardLabel:
    if h1_family in ("B", "CD") and c % 2:
        return label.flip_flags()
    if h1_family not in ("A", "B", "CD"):
        raise ValueError(f"unknown family {h1_family!r}")
    return label


def induce_label(label: StandardLabel, family: str, n: int, c: Optional[int] = None) -> StandardLabel:
    """Label of the module induced from the c-Levi to the rank-n group.

    Unitary parameters move by rho_G - rho_L, split flags pick up sgn^c, and
    the shapes merge into a single Cartan of G.
    """
    if c is None:
        c = label.unitary_rank
    if label.unitary_rank != c or label.rank != n:
        raise ValueError("label shape does not match the c-Levi of the rank-n group")
    shift = rho_v_closed(family, n, c)
    params = tuple(x + y for x, y in zip(label.params, shift)) if label.params else ()
    flags = tuple((f + c) % 2 for f in label.flags)
    return StandardLabel(
        0, 0, label.r1 + label.r2, label.m1 + label.m2, label.s2, params, flags, label.continuous
    )
