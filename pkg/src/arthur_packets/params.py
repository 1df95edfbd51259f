"""Arthur parameters composed with the standard representation.

A parameter is a self-dual multiset of summands ``W(s,eps) x R[a]`` and
``V(s,t) x R[a]``.  Here ``W(s,eps)`` is the character ``sgn^eps |.|^s`` of
the Weil group of R and ``V(s,t)`` the two-dimensional representation with
infinitesimal character ``((s+t)/2, (s-t)/2)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .groups import GroupDescriptor, good_parity_class, standard_rep_dim, symplectic


class InvalidParameter(ValueError):
    """Raised when a parameter fails validation."""


class UnsupportedInput(ValueError):
    """Raised for inputs outside the supported families or regimes."""


@dataclass(frozen=True, order=True)
class GaussianRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def __add__(self, other):
        other = as_gaussian(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_gaussian(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __truediv__(self, k):
        return GaussianRational(self.re / k, self.im / k)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_positive_half(self) -> bool:
        """The half-plane picked for the rho part of a dual pair."""
        return self.im > 0 or (self.im == 0 and self.re > 0)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        im = "" if abs(self.im) == 1 else str(abs(self.im))
        if self.re == 0:
            return f"{'-' if self.im < 0 else ''}{im}i"
        return f"{self.re}{'-' if self.im < 0 else '+'}{im}i"


def as_gaussian(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, complex):
        raise TypeError("floating complex numbers are not accepted")
    return GaussianRational(Fraction(x), Fraction(0))


ZERO = GaussianRational()


@dataclass(frozen=True)
class Summand:
    kind: str
    s: GaussianRational
    a: int
    eps: Optional[int] = None
    t: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "s", as_gaussian(self.s))
        if self.kind not in ("W", "V"):
            raise InvalidParameter(f"unknown summand kind {self.kind!r}")
        if not isinstance(self.a, int) or self.a < 1:
            raise InvalidParameter("R[a] needs a >= 1")
        if self.kind == "W":
            if self.eps not in (0, 1) or self.t is not None:
                raise InvalidParameter("W(s,eps) needs eps in {0,1}")
        else:
            if self.eps is not None or not isinstance(self.t, int):
                raise InvalidParameter("V(s,t) needs an integer t")
            if self.t < 1:
                raise InvalidParameter("V(s,t) needs t >= 1")

    @property
    def dim(self) -> int:
        return self.a if self.kind == "W" else 2 * self.a

    @property
    def label(self) -> int:
        """eps for W, t for V."""
        return self.eps if self.kind == "W" else self.t

    def dual(self) -> "Summand":
        return Summand(self.kind, -self.s, self.a, self.eps, self.t)

    def with_s(self, s) -> "Summand":
        return Summand(self.kind, as_gaussian(s), self.a, self.eps, self.t)

    def sort_key(self):
        return (self.kind, self.s.re, self.s.im, self.label, self.a)

    def __str__(self) -> str:
        return f"{self.kind}({self.s},{self.label})xR[{self.a}]"


def W(s, eps: int, a: int = 1) -> Summand:
    return Summand("W", as_gaussian(s), a, eps=eps)


def V(s, t: int, a: int = 1) -> Summand:
    return Summand("V", as_gaussian(s), a, t=t)


def _canonical(summands: Iterable[Summand]) -> tuple[Summand, ...]:
    return tuple(sorted(summands, key=Summand.sort_key))


@dataclass(frozen=True)
class ArthurParameter:
    group: GroupDescriptor
    summands: tuple[Summand, ...]

    def __post_init__(self):
        object.__setattr__(self, "summands", _canonical(self.summands))

    @property
    def dim(self) -> int:
        return sum(x.dim for x in self.summands)


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violation: Optional[Violation] = None


def good_parity(summand: Summand, G: GroupDescriptor) -> bool:
    if not summand.s.is_zero():
        raise ValueError("parity is only defined for s = 0")
    if summand.kind == "W":
        value = summand.a - 1
    else:
        value = summand.t + summand.a - 1
    return value % 2 == good_parity_class(G)


def validate(psi: ArthurParameter) -> ValidationReport:
    G = psi.group
    if G.family == "U":
        return ValidationReport(False, Violation("unsupported", "unitary groups carry no standard parameter"))
    counts = Counter(psi.summands)
    for x, m in counts.items():
        if counts.get(x.dual(), 0) != m:
            return ValidationReport(False, Violation("self-duality", f"{x} has no matching dual summand"))
    for x, m in counts.items():
        if x.s.is_zero() and not good_parity(x, G) and m % 2:
            return ValidationReport(
                False, Violation("parity-multiplicity", f"{x} has bad parity and odd multiplicity {m}")
            )
    N = standard_rep_dim(G)
    if psi.dim != N:
        return ValidationReport(False, Violation("dimension", f"total dimension {psi.dim}, expected {N}"))
    return ValidationReport(True)


def ensure_valid(psi: ArthurParameter) -> None:
    report = validate(psi)
    if not report.ok:
        v = report.violation
        if v.kind == "unsupported":
            raise UnsupportedInput(v.message)
        raise InvalidParameter(f"{v.kind}: {v.message}")


Block = tuple[int, int]


def sort_blocks(blocks: Iterable[Block]) -> tuple[Block, ...]:
    """Order of discrete blocks: t decreasing, then a decreasing."""
    return tuple(sorted(blocks, key=lambda b: (-b[0], -b[1])))


def sort_unipotent(items: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Unipotent summands as (eps, a'), a' decreasing then eps."""
    return tuple(sorted(items, key=lambda u: (-u[1], u[0])))


@dataclass(frozen=True)
class ParityDecomposition:
    group: GroupDescriptor
    mp: tuple[Summand, ...] = ()
    mp_rho: tuple[Summand, ...] = ()
    bp_u: tuple[tuple[int, int], ...] = ()
    bp_disc: tuple[Block, ...] = ()

    @property
    def blocks(self) -> tuple[Block, ...]:
        return self.bp_disc

    @property
    def good(self) -> bool:
        return not self.mp

    def summands(self) -> tuple[Summand, ...]:
        """Recombine the three parts into a canonical multiset."""
        out = list(self.mp)
        out += [W(0, eps, a) for eps, a in self.bp_u]
        out += [V(0, t, a) for t, a in self.bp_disc]
        return _canonical(out)

    def tail(self, r: int) -> "ParityDecomposition":
        """Drop the first r discrete blocks."""
        return ParityDecomposition(self.group, self.mp, self.mp_rho, self.bp_u, self.bp_disc[r:])


def decompose(psi: ArthurParameter) -> ParityDecomposition:
    ensure_valid(psi)
    G = psi.group
    mp, bp_u, bp_disc = [], [], []
    for x in psi.summands:
        if x.s.is_zero() and good_parity(x, G):
            if x.kind == "W":
                bp_u.append((x.eps, x.a))
            else:
                bp_disc.append((x.t, x.a))
        else:
            mp.append(x)
    rho_part = [x for x in mp if x.s.is_positive_half()]
    zero = Counter(x for x in mp if x.s.is_zero())
    for x in sorted(zero, key=Summand.sort_key):
        rho_part += [x] * (zero[x] // 2)
    return ParityDecomposition(
        G, _canonical(mp), _canonical(rho_part), sort_unipotent(bp_u), sort_blocks(bp_disc)
    )


def decomposition_from_blocks(
    G: GroupDescriptor, blocks: Sequence[Block], unipotent: Sequence[tuple[int, int]] = ()
) -> ParityDecomposition:
    """Good-parity decomposition built directly from blocks (t,a) and (eps,a')."""
    for t, a in blocks:
        if t < 1 or a < 1:
            raise InvalidParameter("blocks need t >= 1 and a >= 1")
    return ParityDecomposition(G, (), (), sort_unipotent(unipotent), sort_blocks(blocks))


def langlands_summands(x: Summand) -> list[Summand]:
    """Restriction of ``x`` along w -> diag(|w|^{1/2}, |w|^{-1/2}).

    On ``V`` the s slot is doubled, so the shift is ``a-1-2j``; on ``W``
    the character moves by ``|.|^{(a-1)/2 - j}``.
    """
    out = []
    for j in range(x.a):
        if x.kind == "V":
            shift = Fraction(x.a - 1 - 2 * j)
        else:
            shift = Fraction(x.a - 1 - 2 * j, 2)
        out.append(Summand(x.kind, x.s + shift, 1, x.eps, x.t))
    return out


def _summands_of(obj) -> tuple[Summand, ...]:
    if isinstance(obj, ArthurParameter):
        return obj.summands
    if isinstance(obj, ParityDecomposition):
        return obj.summands()
    return tuple(obj)


def langlands_parameter(psi) -> tuple[Summand, ...]:
    out: list[Summand] = []
    for x in _summands_of(psi):
        out += langlands_summands(x)
    return _canonical(out)


def _entries(x: Summand) -> list[GaussianRational]:
    if x.kind == "W":
        return [x.s]
    t = Fraction(x.t)
    return [(x.s + t) / 2, (x.s - t) / 2]


def infinitesimal_character(psi) -> list[GaussianRational]:
    """Multiset of entries, sorted for reproducibility."""
    out: list[GaussianRational] = []
    for y in langlands_parameter(psi):
        out += _entries(y)
    return sorted(out)


def is_regular(decomp: ParityDecomposition) -> bool:
    blocks = decomp.bp_disc
    for (t1, a1), (t2, a2) in zip(blocks, blocks[1:]):
        if not t1 - a1 + 1 > t2 + a2 - 1:
            return False
    if blocks:
        t, a = blocks[-1]
        bound = max((ap - 1 for _, ap in decomp.bp_u), default=0)
        if not t - a + 1 > bound:
            return False
    return True


def dominance_gap_ok(block: Block, rest) -> bool:
    """Strict gap between the block and the real parts of ``rest``.

    ``rest`` is a parameter, a decomposition or a plain summand sequence.
    """
    t, c = block
    gap = Fraction(t - (c - 1), 2)
    return all(gap > abs(z.re) for z in infinitesimal_character(rest))


def epsilon_twist(decomp: ParityDecomposition, G: Optional[GroupDescriptor] = None):
    """Return (eps_psi, G') where eps_psi is ``"triv"`` or ``"sgn"``.

    Orthogonal groups never twist; the orthogonal G' is the quasi-split form
    of rank n - sum(a_r), with the even split type exchanged when that sum
    is odd.
    """
    from .groups import flip_type, quasi_split_form

    G = G or decomp.group
    c = sum(a for _, a in decomp.bp_disc)
    rank = G.rank - c
    if rank < 0:
        raise InvalidParameter("blocks exceed the rank")
    if G.family == "A":
        f = sum(1 for t, _ in decomp.bp_disc if t % 2 == 0)
        return ("sgn" if f % 2 else "triv"), symplectic(rank)
    if G.family == "B":
        return "triv", quasi_split_form("B", rank)
    if G.family == "CD":
        alpha = G.alpha if c % 2 == 0 else flip_type(G.alpha)
        if rank == 0:
            alpha = "d"
        return "triv", quasi_split_form("CD", rank, alpha)
    raise UnsupportedInput("unitary groups are not supported")


def twisted_unipotent(decomp: ParityDecomposition, eps_psi: str) -> tuple[tuple[int, int], ...]:
    """Unipotent part tensored by eps_psi, kept in the order of ``decomp.bp_u``
    so that generators keep their names."""
    if eps_psi == "triv":
        return decomp.bp_u
    return tuple((1 - e, a) for e, a in decomp.bp_u)
