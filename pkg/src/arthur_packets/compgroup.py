"""The component group A(psi) as a presented elementary abelian 2-group.

There is one generator per discrete block (``z1..zR``) and one per unipotent
summand (``u1..uM``).  Each relation identifies two adjacent generators
attached to identical summands, so the quotient is described by the classes
of identified generators.  Elements are F2 vectors over the generators,
characters are +-1 vectors constant on classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

from .params import ParityDecomposition


@dataclass(frozen=True)
class CgElement:
    bits: tuple[int, ...]

    def __mul__(self, other: "CgElement") -> "CgElement":
        return CgElement(tuple(x ^ y for x, y in zip(self.bits, other.bits)))


@dataclass(frozen=True)
class CgCharacter:
    values: tuple[int, ...]

    def __call__(self, x: CgElement) -> int:
        sign = 1
        for v, b in zip(self.values, x.bits):
            if b:
                sign *= v
        return sign

    def __mul__(self, other: "CgCharacter") -> "CgCharacter":
        return CgCharacter(tuple(x * y for x, y in zip(self.values, other.values)))

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(0 if v == 1 else 1 for v in self.values)


@dataclass(frozen=True)
class ComponentGroup:
    generators: tuple[str, ...]
    relations: tuple[tuple[int, int], ...]
    # SL2 dimension attached to each generator, used for s_psi
    dims: tuple[int, ...] = ()

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        parent = list(range(len(self.generators)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i, j in self.relations:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
        groups: dict[int, list[int]] = {}
        for i in range(len(self.generators)):
            groups.setdefault(find(i), []).append(i)
        return tuple(tuple(v) for _, v in sorted(groups.items()))

    @property
    def rank(self) -> int:
        return len(self.classes)

    @property
    def order(self) -> int:
        return 2 ** self.rank

    def index(self, name: str) -> int:
        return self.generators.index(name)

    def element(self, bits: Sequence[int]) -> CgElement:
        if len(bits) != len(self.generators):
            raise ValueError("wrong number of coordinates")
        return self.reduce(CgElement(tuple(int(b) & 1 for b in bits)))

    def generator(self, name: str) -> CgElement:
        bits = [0] * len(self.generators)
        bits[self.index(name)] = 1
        return self.reduce(CgElement(tuple(bits)))

    def identity(self) -> CgElement:
        return CgElement((0,) * len(self.generators))

    def reduce(self, x: CgElement) -> CgElement:
        """Canonical representative: each class parity sits on its first member."""
        bits = [0] * len(self.generators)
        for cls in self.classes:
            bits[cls[0]] = sum(x.bits[i] for i in cls) % 2
        return CgElement(tuple(bits))

    def equal(self, x: CgElement, y: CgElement) -> bool:
        return self.reduce(x) == self.reduce(y)

    def multiply(self, x: CgElement, y: CgElement) -> CgElement:
        return self.reduce(x * y)

    def elements(self) -> list[CgElement]:
        out = []
        classes = self.classes
        for choice in product((0, 1), repeat=len(classes)):
            bits = [0] * len(self.generators)
            for cls, b in zip(classes, choice):
                bits[cls[0]] = b
            out.append(CgElement(tuple(bits)))
        return out

    def characters(self) -> list[CgCharacter]:
        """All characters, lexicographic on the generator values (+1 before -1)."""
        out = []
        classes = self.classes
        for choice in product((0, 1), repeat=len(classes)):
            values = [1] * len(self.generators)
            for cls, b in zip(classes, choice):
                for i in cls:
                    values[i] = -1 if b else 1
            out.append(CgCharacter(tuple(values)))
        return out

    def character(self, values: Sequence[int]) -> CgCharacter:
        eta = CgCharacter(tuple(values))
        if not self.respects_relations(eta):
            raise ValueError("values do not respect the relations")
        return eta

    def respects_relations(self, eta: CgCharacter) -> bool:
        return len(eta.values) == len(self.generators) and all(
            eta.values[i] == eta.values[j] for i, j in self.relations
        )

    def s_psi(self) -> CgElement:
        """Image of the central -1 of SL2: nontrivial on generators with even a."""
        return self.reduce(CgElement(tuple(1 if a % 2 == 0 else 0 for a in self.dims)))

    def restrict(self, keep: Sequence[int]) -> "ComponentGroup":
        """Subgroup on the generators ``keep`` (relations among them retained)."""
        pos = {g: k for k, g in enumerate(keep)}
        rels = tuple((pos[i], pos[j]) for i, j in self.relations if i in pos and j in pos)
        return ComponentGroup(
            tuple(self.generators[g] for g in keep), rels, tuple(self.dims[g] for g in keep)
        )


def component_group(decomp: ParityDecomposition) -> ComponentGroup:
    blocks, unip = decomp.bp_disc, decomp.bp_u
    names = tuple(f"z{r + 1}" for r in range(len(blocks))) + tuple(
        f"u{m + 1}" for m in range(len(unip))
    )
    rels = [(r, r + 1) for r in range(len(blocks) - 1) if blocks[r] == blocks[r + 1]]
    off = len(blocks)
    rels += [(off + m, off + m + 1) for m in range(len(unip) - 1) if unip[m] == unip[m + 1]]
    dims = tuple(a for _, a in blocks) + tuple(a for _, a in unip)
    return ComponentGroup(names, tuple(rels), dims)


def s_element(decomp: ParityDecomposition) -> CgElement:
    return component_group(decomp).s_psi()


@dataclass(frozen=True)
class FirstBlockSplit:
    """A(psi) = Z/2<z1> x A', with coordinates split accordingly."""

    group: ComponentGroup
    generator: str
    remainder: ComponentGroup

    def split_element(self, x: CgElement) -> tuple[int, CgElement]:
        x = self.group.reduce(x)
        return x.bits[0], CgElement(x.bits[1:])

    def split_character(self, eta: CgCharacter) -> tuple[int, CgCharacter]:
        return eta.values[0], CgCharacter(eta.values[1:])

    def join_character(self, eta_d: int, eta_rest: CgCharacter) -> CgCharacter:
        return CgCharacter((eta_d,) + eta_rest.values)


def split_first_block(A: ComponentGroup, blocks: Sequence = ()) -> FirstBlockSplit:
    """Split off the first discrete generator as a direct Z/2 factor.

    Fails when the first generator is identified with another one.
    """
    if not A.generators or not A.generators[0].startswith("z"):
        raise ValueError("no discrete block to split off")
    if any(0 in rel for rel in A.relations):
        raise ValueError("first block is identified with the next one, the split is not direct")
    if len(blocks) >= 2 and blocks[0] == blocks[1]:
        raise ValueError("first two blocks coincide, the split is not direct")
    rest = A.restrict(range(1, len(A.generators)))
    return FirstBlockSplit(A, A.generators[0], rest)


def pairing_matrix(A: ComponentGroup) -> list[list[int]]:
    return [[eta(x) for x in A.elements()] for eta in A.characters()]


def iter_products(A: ComponentGroup) -> Iterator[tuple[CgElement, CgElement, CgElement]]:
    for x in A.elements():
        for y in A.elements():
            yield x, y, A.multiply(x, y)
