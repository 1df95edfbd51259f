"""Invariant and oracle checks, shared by the test suite and ``cli check``.

Every check returns a ``CheckResult`` listing its violations; an empty list
means the check passed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from . import oracles
from .characters import S_character, S_eval_at_sd, cartan_shapes, torsion_bruteforce, torsion_closed
from .compgroup import component_group, pairing_matrix, split_first_block
from .dsl import parse_param, render_param
from .endoscopy import elliptic_endoscopic_data, twist_cases, twist_table
from .groups import (
    has_discrete_series,
    inner_forms,
    q_invariant,
    quasi_split_form,
    quasi_split_inner_form,
    same_family_forms,
    symplectic,
)
from .levi import c_levi_representatives, superpacket_distribution
from .packets import (
    GOOD,
    WEAKLY_FAIR,
    build_packet,
    fold_packet,
    index_set,
    multi_sign,
    multiplicity_one_check,
    vanishing_filter,
)
from .params import is_regular
from .randgen import (
    discrete_decomposition,
    random_good_decomposition,
    random_group,
    random_parameter,
)
from .rootdata import rho_v_bruteforce, rho_v_closed

FAMILIES = ("A", "B", "CD")


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, message: str) -> None:
        self.violations.append(message)


def _timed(fn: Callable[..., CheckResult]):
    def wrapper(*args, **kwargs) -> CheckResult:
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        result.seconds = time.perf_counter() - start
        return result

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def rho_shift(max_n: int = 12) -> CheckResult:
    res = CheckResult("rho-shift")
    for case in FAMILIES:
        for n in range(1, max_n + 1):
            for c in range(1, n + 1):
                res.checked += 1
                if rho_v_closed(case, n, c) != rho_v_bruteforce(case, n, c):
                    res.fail(f"{case} n={n} c={c}")
    return res


@_timed
def torsion(max_rank: int = 6) -> CheckResult:
    res = CheckResult("torsion")
    for family in FAMILIES:
        for shape in cartan_shapes(max_rank):
            res.checked += 1
            if torsion_bruteforce(family, shape) != torsion_closed(shape):
                res.fail(f"{family} {shape}")
    return res


@_timed
def sign_consistency(max_n: int = 25) -> CheckResult:
    res = CheckResult("sign-consistency")
    for n in range(max_n + 1):
        for c in range(n + 1):
            sd = (-1) ** (c + 1)
            for i in range(c + 1):
                res.checked += 1
                value = S_eval_at_sd(i, c, n)
                if value != S_character(i, c, n).evaluate(sd) or value != oracles.S_at_sd_substitution(i, c, n):
                    res.fail(f"i={i} c={c} n={n}")
    return res


@_timed
def q_invariants(max_n: int = 10) -> CheckResult:
    res = CheckResult("q-invariant")
    for family in FAMILIES + ("U",):
        for n in range(1, max_n + 1):
            for G in same_family_forms(family, n):
                res.checked += 1
                if q_invariant(G) != oracles.q_oracle(G):
                    res.fail(f"{G}: {q_invariant(G)} != {oracles.q_oracle(G)}")
    return res


def _discrete_forms(max_n: int):
    """Every SO(p,q) with discrete series, rank 1..max_n."""
    for n in range(1, max_n + 1):
        yield from inner_forms(quasi_split_form("B", n))
        for alpha in ("d", "qd"):
            qs = quasi_split_form("CD", n, alpha)
            if has_discrete_series(qs):
                yield from inner_forms(qs)


@_timed
def packet_counts(max_sp: int = 8, max_so: int = 10) -> CheckResult:
    res = CheckResult("packet-counts")
    for n in range(1, max_sp + 1):
        G = symplectic(n)
        total = len(build_packet(discrete_decomposition(G), G))
        res.checked += 1
        if total != 2**n or superpacket_distribution(G) != {G: 2**n}:
            res.fail(f"{G}: {total} data, expected {2 ** n}")
    for G in _discrete_forms(max_so):
        qs = quasi_split_inner_form(G)
        dist = superpacket_distribution(qs)
        res.checked += 1
        if dist != oracles.binomial_distribution(qs):
            res.fail(f"{qs}: enumerated distribution differs from the binomial one")
        total = len(build_packet(discrete_decomposition(G), G))
        if total != dist.get(G, 0):
            res.fail(f"{G}: {total} data, expected {dist.get(G, 0)}")
    return res


def _has_repeat(decomp) -> bool:
    b = decomp.bp_disc
    return any(b[r] == b[r + 1] for r in range(len(b) - 1))


@_timed
def descent(count: int = 1000, seed: int = 0, max_rank: int = 8) -> CheckResult:
    res = CheckResult("descent")
    rng = random.Random(seed)
    while res.checked < count:
        G = random_group(rng, max_rank)
        decomp = random_good_decomposition(rng, G, max_blocks=4, max_a=3, repeat_prob=0.7)
        if not _has_repeat(decomp):
            continue
        res.checked += 1
        blocks = decomp.bp_disc
        A = component_group(decomp)
        for ivec in index_set(blocks, G):
            if not vanishing_filter(ivec, blocks):
                continue
            signs = multi_sign(ivec, blocks, G.rank)
            for i, j in A.relations:
                if i < len(blocks) and signs[i] != signs[j]:
                    res.fail(f"{G} {blocks} {ivec}: z{i + 1}z{j + 1} -> -1")
    return res


@_timed
def recursion(count: int = 150, seed: int = 0, max_rank: int = 10) -> CheckResult:
    res = CheckResult("recursion")
    rng = random.Random(seed)
    while res.checked < count:
        G = random_group(rng, max_rank)
        decomp = random_good_decomposition(rng, G, max_blocks=4, max_a=3, regular=True)
        res.checked += 1
        if build_packet(decomp, G) != fold_packet(decomp, G):
            res.fail(f"{G} {decomp.bp_disc} {decomp.bp_u}")
    return res


@_timed
def endoscopy(max_n: int = 10) -> CheckResult:
    res = CheckResult("endoscopy")
    for n in range(1, max_n + 1):
        groups = [quasi_split_form("A", n), quasi_split_form("B", n)]
        groups += [quasi_split_form("CD", n, a) for a in ("d", "qd")]
        for G in groups:
            res.checked += 1
            data = elliptic_endoscopic_data(G)
            keys = oracles.endoscopic_keys(data)
            if len(keys) != len(data):
                res.fail(f"{G}: duplicate data")
            if keys != oracles.endoscopic_bruteforce(G):
                res.fail(f"{G}: enumeration differs from brute force")
    return res


@_timed
def component_groups(count: int = 500, seed: int = 0, max_rank: int = 8) -> CheckResult:
    res = CheckResult("component-group")
    rng = random.Random(seed)
    for _ in range(count):
        G = random_group(rng, max_rank)
        decomp = random_good_decomposition(rng, G, max_blocks=4, max_a=3, repeat_prob=0.4)
        A = component_group(decomp)
        res.checked += 1
        chars = A.characters()
        if len(chars) != 2**A.rank or len(set(chars)) != len(chars):
            res.fail(f"{decomp}: {len(chars)} characters for rank {A.rank}")
        if not all(A.respects_relations(eta) for eta in chars):
            res.fail(f"{decomp}: character not constant on a relation")
        M = pairing_matrix(A)
        size = len(M)
        for r1 in range(size):
            for r2 in range(size):
                dot = sum(x * y for x, y in zip(M[r1], M[r2]))
                if dot != (size if r1 == r2 else 0):
                    res.fail(f"{decomp}: pairing is degenerate")
                    break
        blocks = decomp.bp_disc
        if blocks and (len(blocks) == 1 or blocks[0] != blocks[1]):
            split = split_first_block(A, blocks)
            for eta in chars:
                eta_d, eta_rest = split.split_character(eta)
                if split.join_character(eta_d, eta_rest) != eta:
                    res.fail(f"{decomp}: split and join disagree")
                for x in A.elements():
                    x_d, x_rest = split.split_element(x)
                    expected = (eta_d if x_d else 1) * eta_rest(x_rest)
                    if eta(x) != expected:
                        res.fail(f"{decomp}: eta(x) does not factor")
    return res


@_timed
def multiplicity_one(count: int = 300, seed: int = 0, max_rank: int = 7) -> CheckResult:
    res = CheckResult("multiplicity-one")
    rng = random.Random(seed)
    for k in range(count):
        G = random_group(rng, max_rank)
        decomp = random_good_decomposition(
            rng, G, max_blocks=3, max_a=2, repeat_prob=0.3, regular=k % 2 == 0
        )
        packet = build_packet(decomp, G)
        report = multiplicity_one_check(packet)
        res.checked += 1
        regular = is_regular(decomp)
        ranges = {d.range for d in packet.data()}
        if regular and (report.status != "pass" or ranges - {GOOD}):
            res.fail(f"{G} {decomp.bp_disc}: regular packet classified {report.status}")
        if not regular and (report.status != "pass-with-caveat" or ranges - {WEAKLY_FAIR}):
            res.fail(f"{G} {decomp.bp_disc}: irregular packet classified {report.status}")
    return res


_TWISTS = {
    ("Sp", "SO^d"): ("triv", "sgn"),
    ("SO^d", "Sp"): ("sgn", "sgn"),
    ("Sp", "SO^qd"): ("triv", "sgn"),
    ("SO^qd", "Sp"): ("sgn", "sgn"),
}


@_timed
def twists() -> CheckResult:
    res = CheckResult("twist-table")
    for family, shape, c in twist_cases():
        res.checked += 1
        got = twist_table(family, shape, c)
        if family != "A" or c % 2 == 0:
            expected = ("triv", "triv")
        else:
            expected = _TWISTS[shape]
        if got != expected:
            res.fail(f"{family} {shape} c={c}: {got}")
    return res


@_timed
def round_trip(count: int = 1000, seed: int = 0, max_rank: int = 8) -> CheckResult:
    res = CheckResult("round-trip")
    rng = random.Random(seed)
    for _ in range(count):
        G = random_group(rng, max_rank)
        psi = random_parameter(rng, G)
        text = render_param(psi)
        res.checked += 1
        back = parse_param(text, G)
        if back != psi or render_param(back) != text:
            res.fail(text)
    return res


@_timed
def c_levis(max_n: int = 7) -> CheckResult:
    res = CheckResult("c-levi")
    for n in range(1, max_n + 1):
        for family in FAMILIES:
            for G in same_family_forms(family, n):
                qs = quasi_split_inner_form(G)
                if not has_discrete_series(qs) or G not in inner_forms(qs):
                    continue
                for c in range(n + 1):
                    res.checked += 1
                    if oracles.c_levi_oracle(G, c) != oracles.c_levi_keys(c_levi_representatives(G, c)):
                        res.fail(f"{G} c={c}")
    return res


def run_all(max_rank: int = 8, seed: int = 0) -> list[CheckResult]:
    return [
        rho_shift(max(max_rank, 1)),
        torsion(min(max_rank, 6)),
        sign_consistency(max(max_rank, 1)),
        q_invariants(max_rank),
        packet_counts(max_rank, max_rank),
        descent(200, seed, max_rank),
        recursion(50, seed, max_rank),
        endoscopy(max_rank),
        component_groups(200, seed, max_rank),
        multiplicity_one(100, seed, max_rank),
        twists(),
        round_trip(300, seed, max_rank),
        c_levis(min(max_rank, 7)),
    ]
