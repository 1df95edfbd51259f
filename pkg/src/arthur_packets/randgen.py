"""Random groups and parameters for the property suites.

Every generator takes a ``random.Random`` so runs are reproducible from a
seed.  Generated parameters are valid by construction.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .groups import (
    GroupDescriptor,
    good_parity_class,
    has_discrete_series,
    same_family_forms,
    standard_rep_dim,
)
from .params import (
    ArthurParameter,
    Block,
    ParityDecomposition,
    Summand,
    V,
    W,
    decomposition_from_blocks,
)

CLASSICAL = ("A", "B", "CD")


def random_group(rng: random.Random, max_rank: int, families=CLASSICAL) -> GroupDescriptor:
    family = rng.choice(families)
    n = rng.randint(1, max_rank)
    return rng.choice(same_family_forms(family, n))


def _random_s(rng: random.Random):
    from .params import GaussianRational

    re = Fraction(rng.randint(-6, 6), rng.choice((1, 2, 3)))
    im = Fraction(rng.randint(-4, 4), rng.choice((1, 2)))
    if re == 0 and im == 0:
        re = Fraction(1, 2)
    return GaussianRational(re, im)


def _parity_t(rng: random.Random, parity: int, lo: int = 1, hi: int = 12) -> int:
    t = rng.randint(lo, hi)
    if t % 2 != parity:
        t += 1
    return t


def random_parameter(rng: random.Random, G: GroupDescriptor, allow_mp: bool = True, max_a: int = 3) -> ArthurParameter:
    """A valid parameter of G, possibly with summands outside good parity."""
    cls = good_parity_class(G)
    remaining = standard_rep_dim(G)
    out: list[Summand] = []
    while remaining > 0:
        kinds = ["gW", "gV"]
        if allow_mp:
            kinds += ["pair", "bad"]
        kind = rng.choice(kinds)
        if kind == "gW":
            a = rng.randint(1, max_a)
            if (a - 1) % 2 != cls:
                a += 1
            if a <= remaining:
                out.append(W(0, rng.randint(0, 1), a))
                remaining -= a
        elif kind == "gV":
            a = rng.randint(1, max_a)
            if 2 * a <= remaining:
                out.append(V(0, _parity_t(rng, (cls - a + 1) % 2), a))
                remaining -= 2 * a
        elif kind == "pair":
            a = rng.randint(1, max_a)
            x = (
                W(_random_s(rng), rng.randint(0, 1), a)
                if rng.random() < 0.5
                else V(_random_s(rng), rng.randint(1, 8), a)
            )
            if 2 * x.dim <= remaining:
                out += [x, x.dual()]
                remaining -= 2 * x.dim
        else:
            a = rng.randint(1, max_a)
            x = (
                W(0, rng.randint(0, 1), a)
                if (a - 1) % 2 != cls
                else V(0, _parity_t(rng, (cls - a) % 2), a)
            )
            if 2 * x.dim <= remaining:
                out += [x, x]
                remaining -= 2 * x.dim
        if remaining in (1, 2) and rng.random() < 0.5:
            # the smallest good summand always fits the parity of what is left
            a = 2 if cls == 1 else 1
            if a <= remaining:
                out.append(W(0, rng.randint(0, 1), a))
                remaining -= a
    return ArthurParameter(G, tuple(out))


def _unipotent_fill(rng: random.Random, G: GroupDescriptor, dim: int, max_a: int) -> list[tuple[int, int]]:
    cls = good_parity_class(G)
    smallest = 2 if cls == 1 else 1
    out = []
    while dim > 0:
        a = rng.randint(1, max_a)
        if (a - 1) % 2 != cls:
            a += 1
        if a > dim:
            a = smallest
        out.append((rng.randint(0, 1), a))
        dim -= a
    return out


def random_good_decomposition(
    rng: random.Random,
    G: GroupDescriptor,
    max_blocks: int = 4,
    max_a: int = 2,
    repeat_prob: float = 0.0,
    regular: bool = False,
    max_unip_a: int = 3,
) -> ParityDecomposition:
    """Good-parity decomposition of a parameter of G.

    With ``regular`` the t values are pushed apart so that every dominance
    gap holds; with ``repeat_prob`` a block is duplicated now and then.
    """
    n = G.rank
    cls = good_parity_class(G)
    sizes: list[int] = []
    budget = n
    for _ in range(rng.randint(0, max_blocks)):
        a = rng.randint(1, max_a)
        if a > budget:
            break
        sizes.append(a)
        budget -= a
        if sizes and rng.random() < repeat_prob and a <= budget and len(sizes) < max_blocks:
            sizes.append(a)
            budget -= a
    unip_dim = standard_rep_dim(G) - 2 * sum(sizes)
    unip = _unipotent_fill(rng, G, unip_dim, max_unip_a)
    if regular:
        bound = max((a - 1 for _, a in unip), default=0)
        blocks: list[Block] = []
        for a in reversed(sizes):
            lo = bound + a + rng.randint(0, 2)
            t = lo if (lo + a - 1) % 2 == cls else lo + 1
            blocks.append((t, a))
            bound = t + a - 1
    else:
        blocks = []
        for k, a in enumerate(sizes):
            if k and rng.random() < repeat_prob and a == sizes[k - 1]:
                blocks.append(blocks[-1])
            else:
                blocks.append((_parity_t(rng, (cls - a + 1) % 2, 1, 9), a))
    return decomposition_from_blocks(G, blocks, unip)


def discrete_decomposition(G: GroupDescriptor, rng: random.Random | None = None) -> ParityDecomposition:
    """All blocks of size one with distinct t and the smallest unipotent rest.

    On a group with discrete series this is a discrete series parameter.
    """
    cls = good_parity_class(G)
    n = G.rank
    count = n if has_discrete_series(G) else n - 1
    start = 2 if cls == 0 else 1
    ts = [start + 2 * k for k in range(count)]
    if rng is not None:
        shift = 0
        for k in range(count):
            shift += 2 * rng.randint(0, 1)
            ts[k] += shift
    unip_dim = standard_rep_dim(G) - 2 * count
    unip = [(0, 1)] * unip_dim if cls == 0 else []
    if G.family == "CD" and unip_dim == 2:
        unip = [(0, 1), (1, 1)]
    if cls == 1 and unip_dim:
        unip = [(0, 2)]
    return decomposition_from_blocks(G, [(t, 1) for t in ts], unip)
