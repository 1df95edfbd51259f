"""Arthur packets of good-parity parameters as cohomological-induction data.

Each member is an ``InductionDatum``: an index vector choosing a c-Levi
``U(i_r, a_r - i_r)`` for every discrete block, the unitary characters on
those factors, and an opaque unipotent label on the remaining classical
group.  Members are sorted under the characters of the component group.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Mapping, Optional, Sequence

from .characters import S_character, xi_block_differential
from .compgroup import CgCharacter, CgElement, ComponentGroup, component_group
from .groups import (
    GroupDescriptor,
    orthogonal,
    q_invariant,
    same_family_forms,
    symplectic,
    unitary,
)
from .levi import c_levi_representatives, induction_degree
from .params import (
    ArthurParameter,
    Block,
    ParityDecomposition,
    UnsupportedInput,
    decompose,
    dominance_gap_ok,
    epsilon_twist,
    is_regular,
    twisted_unipotent,
)
from .rootdata import dim_complex

GOOD, WEAKLY_FAIR = "good", "weaklyFair"

# (base form, twisted unipotent part, character of its component group) -> labels
BaseTable = Callable[[GroupDescriptor, tuple, CgCharacter], Sequence[str]]


def _signs_text(values: Sequence[int]) -> str:
    return "".join("+" if v == 1 else "-" for v in values)


def _unipotent_text(unip) -> str:
    if not unip:
        return "0"
    return "+".join(f"W(0,{e})xR[{a}]" for e, a in unip)


def default_base_table(form: GroupDescriptor, unip: tuple, eta: CgCharacter) -> list[str]:
    """One opaque label per (form, character); a rank-0 form only carries the
    trivial character."""
    if form.rank == 0 and any(v == -1 for v in eta.values):
        return []
    return [f"unip[{_unipotent_text(unip)}; {form}; {_signs_text(eta.values) or 'triv'}]"]


@dataclass(frozen=True)
class InductionDatum:
    i_vector: tuple[int, ...]
    blocks: tuple[Block, ...]
    levi: tuple[GroupDescriptor, ...]
    block_characters: tuple[int, ...]
    base_form: GroupDescriptor
    base_eta: tuple[int, ...]
    base_label: str
    sign: tuple[int, ...]
    degree: int
    range: str
    vanished: bool = False

    @property
    def eta_values(self) -> tuple[int, ...]:
        return self.sign + self.base_eta


@dataclass(frozen=True)
class PacketTable:
    group: GroupDescriptor
    decomposition: ParityDecomposition
    component_group: ComponentGroup
    entries: tuple[tuple[CgCharacter, tuple[InductionDatum, ...]], ...]
    regular: bool
    epsilon_psi: str
    base_unipotent: tuple[tuple[int, int], ...] = ()

    def data(self) -> list[InductionDatum]:
        return [d for _, ds in self.entries for d in ds]

    def data_for(self, eta: CgCharacter) -> tuple[InductionDatum, ...]:
        for e, ds in self.entries:
            if e == eta:
                return ds
        raise KeyError(eta)

    def __len__(self) -> int:
        return sum(len(ds) for _, ds in self.entries)


# --- index set and signs --------------------------------------------------------


def base_form(G: GroupDescriptor, blocks: Sequence[Block], ivec: Sequence[int]) -> Optional[GroupDescriptor]:
    """Classical factor left after removing the unitary blocks, or None if some
    intermediate signature would go negative."""
    c = sum(a for _, a in blocks)
    if G.family == "A":
        return symplectic(G.rank - c)
    if G.family not in ("B", "CD"):
        raise UnsupportedInput("packets are only built for Sp and SO")
    p, q = G.p, G.q
    for (_, a), i in zip(blocks, ivec):
        p, q = p - 2 * i, q - 2 * (a - i)
        if p < 0 or q < 0:
            return None
    return orthogonal(p, q)


def index_set(blocks: Sequence[Block], G: GroupDescriptor) -> list[tuple[int, ...]]:
    out = []
    for ivec in product(*(range(a + 1) for _, a in blocks)):
        if base_form(G, blocks, ivec) is not None:
            out.append(ivec)
    return out


def vanishing_filter(ivec: Sequence[int], blocks: Sequence[Block]) -> bool:
    for r in range(len(blocks) - 1):
        if blocks[r] == blocks[r + 1] and ivec[r] != blocks[r + 1][1] - ivec[r + 1]:
            return False
    return True


def multi_sign(ivec: Sequence[int], blocks: Sequence[Block], n: int) -> tuple[int, ...]:
    """Value of S_i-bar on each z_r."""
    out, used = [], 0
    for (_, a), i in zip(blocks, ivec):
        out.append(S_character(i, a, n - used).evaluate(-1))
        used += a
    return tuple(out)


def multi_sign_alt(ivec: Sequence[int], blocks: Sequence[Block]) -> tuple[int, ...]:
    """Alternative normalisation of the block signs."""
    out, before = [], 0
    for (_, a), i in zip(blocks, ivec):
        e = i * (before + 1) + (a - i) * before + a * (a + 1) // 2
        out.append(-1 if e % 2 else 1)
        before += a
    return tuple(out)


def _levi_factors(blocks, ivec) -> tuple[GroupDescriptor, ...]:
    return tuple(unitary(i, a - i) for (_, a), i in zip(blocks, ivec))


def chain_degree(G: GroupDescriptor, blocks, ivec, form: GroupDescriptor) -> int:
    L = _levi_factors(blocks, ivec) + (form,)
    d = (dim_complex(G) - dim_complex(L)) // 2 - (q_invariant(G) - q_invariant(L))
    if d < 0:
        raise ValueError("negative induction degree")
    return d


# --- assembly ---------------------------------------------------------------------


def _prepare(psi, G: Optional[GroupDescriptor]) -> tuple[ParityDecomposition, GroupDescriptor]:
    decomp = psi if isinstance(psi, ParityDecomposition) else decompose(psi)
    G = G or decomp.group
    if G.family not in ("A", "B", "CD"):
        raise UnsupportedInput("packets are only built for Sp and SO")
    if (G.family, G.rank) != (decomp.group.family, decomp.group.rank):
        raise ValueError(f"parameter is for {decomp.group}, not a form of {G}")
    if decomp.mp:
        raise UnsupportedInput("parameter has a part of bad parity or with s != 0")
    return ParityDecomposition(G, (), (), decomp.bp_u, decomp.bp_disc), G


def _group_by_eta(A: ComponentGroup, data: list[InductionDatum]):
    buckets: dict[tuple[int, ...], list[InductionDatum]] = {}
    for d in data:
        buckets.setdefault(d.eta_values, []).append(d)
    entries = []
    for eta in A.characters():
        entries.append((eta, tuple(buckets.pop(eta.values, ()))))
    if buckets:
        raise AssertionError("some data do not sit under a character of A(psi)")
    return tuple(entries)


def build_packet(psi, G: Optional[GroupDescriptor] = None, base_table: Optional[BaseTable] = None) -> PacketTable:
    decomp, G = _prepare(psi, G)
    base_table = base_table or default_base_table
    blocks = decomp.bp_disc
    eps, _ = epsilon_twist(decomp, G)
    unip = twisted_unipotent(decomp, eps)
    A = component_group(decomp)
    A_base = A.restrict(range(len(blocks), len(A.generators)))
    regular = is_regular(decomp)
    rng = GOOD if regular else WEAKLY_FAIR
    data = []
    for ivec in index_set(blocks, G):
        if not vanishing_filter(ivec, blocks):
            continue
        form = base_form(G, blocks, ivec)
        sign = multi_sign(ivec, blocks, G.rank)
        degree = chain_degree(G, blocks, ivec, form)
        for eta in A_base.characters():
            for label in base_table(form, unip, eta):
                data.append(
                    InductionDatum(
                        ivec,
                        blocks,
                        _levi_factors(blocks, ivec),
                        tuple(xi_block_differential(i, a, t) for (t, a), i in zip(blocks, ivec)),
                        form,
                        eta.values,
                        label,
                        sign,
                        degree,
                        rng,
                    )
                )
    return PacketTable(G, decomp, A, _group_by_eta(A, data), regular, eps, unip)


def base_packet(
    form: GroupDescriptor, decomp: ParityDecomposition, unip, eps: str, base_table: Optional[BaseTable] = None
) -> PacketTable:
    """Packet of the purely unipotent part on ``form`` (no discrete blocks)."""
    base_table = base_table or default_base_table
    d = ParityDecomposition(form, (), (), decomp.bp_u, ())
    A = component_group(d)
    data = [
        InductionDatum((), (), (), (), form, eta.values, label, (), 0, GOOD)
        for eta in A.characters()
        for label in base_table(form, unip, eta)
    ]
    return PacketTable(form, d, A, _group_by_eta(A, data), True, eps, unip)


class OutsideRegime(ValueError):
    """The dominance gap needed to add a block fails."""


def add_block(
    inner: Mapping[GroupDescriptor, PacketTable],
    block: Block,
    G: GroupDescriptor,
    tail: ParityDecomposition,
) -> PacketTable:
    """Add one discrete block (t, c) in front of the parameter ``tail``.

    ``inner`` maps each classical form of rank n - c to the packet of the
    tail on that form.
    """
    t, c = block
    if not dominance_gap_ok(block, tail.summands()):
        raise OutsideRegime(f"block {block} is not dominant over the remaining parameter")
    decomp = ParityDecomposition(G, (), (), tail.bp_u, (block,) + tail.bp_disc)
    A = component_group(decomp)
    eps, _ = epsilon_twist(decomp, G)
    regular = is_regular(decomp)
    rng = GOOD if regular else WEAKLY_FAIR
    data = []
    for L in c_levi_representatives(G, c):
        sign = S_character(L.i, c, G.rank).evaluate(-1)
        step = induction_degree(G, L)
        for _, ds in inner[L.classical].entries:
            for d in ds:
                data.append(
                    InductionDatum(
                        (L.i,) + d.i_vector,
                        (block,) + d.blocks,
                        (L.unitary,) + d.levi,
                        (xi_block_differential(L.i, c, t),) + d.block_characters,
                        d.base_form,
                        d.base_eta,
                        d.base_label,
                        (sign,) + d.sign,
                        step + d.degree,
                        rng,
                    )
                )
    data.sort(key=lambda d: d.i_vector)
    unip = next(iter(inner.values())).base_unipotent if inner else tail.bp_u
    return PacketTable(G, decomp, A, _group_by_eta(A, data), regular, eps, unip)


def fold_packet(psi, G: Optional[GroupDescriptor] = None, base_table: Optional[BaseTable] = None) -> PacketTable:
    """The packet obtained by adding the blocks one at a time, last block first."""
    decomp, G = _prepare(psi, G)
    blocks = decomp.bp_disc
    eps, _ = epsilon_twist(decomp, G)
    unip = twisted_unipotent(decomp, eps)
    rank = G.rank - sum(a for _, a in blocks)
    tail = decomp.tail(len(blocks))
    tables = {
        F: base_packet(F, tail, unip, eps, base_table) for F in same_family_forms(G.family, rank)
    }
    for r in range(len(blocks) - 1, -1, -1):
        rank += blocks[r][1]
        tail = decomp.tail(r + 1)
        tables = {F: add_block(tables, blocks[r], F, tail) for F in same_family_forms(G.family, rank)}
    return tables[G]


# --- consumers ----------------------------------------------------------------------


def stable_sum(packet: PacketTable, x: Optional[CgElement] = None):
    """Each datum with the coefficient eta(s_psi x) of its character."""
    A = packet.component_group
    s = A.s_psi()
    if x is not None:
        s = A.multiply(s, x)
    out = []
    for eta, ds in packet.entries:
        coeff = eta(s)
        out.extend((d, coeff) for d in ds)
    return out


@dataclass(frozen=True)
class MultiplicityReport:
    status: str
    violations: tuple[str, ...] = ()
    caveat: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def multiplicity_one_check(packet: PacketTable) -> MultiplicityReport:
    violations = []
    owner: dict[tuple, tuple[int, ...]] = {}
    for eta, ds in packet.entries:
        keys = [(d.i_vector, d.base_form, d.base_label) for d in ds]
        if len(set(keys)) != len(keys):
            violations.append(f"repeated datum under {eta.values}")
        for d in ds:
            key = (d.i_vector, d.base_label)
            if key in owner and owner[key] != eta.values:
                violations.append(f"{key} occurs under {owner[key]} and {eta.values}")
            owner.setdefault(key, eta.values)
    if violations:
        return MultiplicityReport("fail", tuple(violations))
    if packet.regular:
        return MultiplicityReport("pass")
    return MultiplicityReport(
        "pass-with-caveat", (), "multiplicity one is only guaranteed for regular parameters"
    )
