"""Plain-data views of the library objects, for JSON and text output.

Dictionaries are built in a fixed key order and every list is in a canonical
order, so ``dumps`` is byte-stable.  Rationals are written as ``"p/q"``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .compgroup import CgCharacter, ComponentGroup, component_group
from .dsl import render_param
from .endoscopy import EndoscopicDatum
from .levi import LeviDescriptor
from .packets import PacketTable
from .params import ParityDecomposition


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True, default=_fallback) + "\n"


def _fallback(x):
    if isinstance(x, Fraction):
        return str(x)
    return str(x)


def _character(A: ComponentGroup, eta: CgCharacter) -> dict[str, int]:
    return dict(zip(A.generators, eta.values))


def component_group_data(A: ComponentGroup) -> dict:
    return {
        "generators": list(A.generators),
        "relations": [[A.generators[i], A.generators[j]] for i, j in A.relations],
    }


def _s_psi(A: ComponentGroup) -> dict[str, int]:
    return dict(zip(A.generators, A.s_psi().bits))


def packet_data(packet: PacketTable, parameter: str) -> dict:
    A = packet.component_group
    base_gens = A.generators[len(packet.decomposition.bp_disc):]
    entries = []
    for eta, ds in packet.entries:
        entries.append(
            {
                "eta": _character(A, eta),
                "data": [
                    {
                        "i_vector": list(d.i_vector),
                        "levi": [str(f) for f in d.levi] + [str(d.base_form)],
                        "block_characters": list(d.block_characters),
                        "base_form": str(d.base_form),
                        "base_eta": dict(zip(base_gens, d.base_eta)),
                        "base_label": d.base_label,
                        "degree": d.degree,
                        "range": d.range,
                    }
                    for d in ds
                ],
            }
        )
    return {
        "group": str(packet.group),
        "parameter": parameter,
        "epsilon_psi": packet.epsilon_psi,
        "regular": packet.regular,
        "component_group": component_group_data(A),
        "s_psi": _s_psi(A),
        "entries": entries,
    }


def compgroup_data(decomp: ParityDecomposition, parameter: str) -> dict:
    A = component_group(decomp)
    return {
        "group": str(decomp.group),
        "parameter": parameter,
        **component_group_data(A),
        "rank": A.rank,
        "s_psi": _s_psi(A),
        "characters": [_character(A, eta) for eta in A.characters()],
    }


def decomposition_data(decomp: ParityDecomposition, regular: bool) -> dict:
    return {
        "group": str(decomp.group),
        "mp": render_param(decomp.mp),
        "mp_rho": render_param(decomp.mp_rho),
        "bp_u": [{"eps": e, "a": a} for e, a in decomp.bp_u],
        "bp_disc": [{"t": t, "a": a} for t, a in decomp.bp_disc],
        "good_parity": decomp.good,
        "regular": regular,
    }


def endoscopic_data(G, data: list[EndoscopicDatum]) -> dict:
    return {
        "group": str(G),
        "data": [
            {
                "name": str(d),
                "h1": str(d.h1),
                "h2": str(d.h2),
                "x_d": d.x_d,
                "sgn_twist_h1": d.sgn_twist_h1,
            }
            for d in data
        ],
    }


def levi_data(L: LeviDescriptor, degree: int, sign: int) -> dict:
    return {
        "i": L.i,
        "levi": str(L),
        "unitary": str(L.unitary),
        "classical": str(L.classical),
        "degree": degree,
        "S_sign": sign,
    }


# --- aligned text ---------------------------------------------------------------------


def table(rows: list[list[str]], header: list[str]) -> str:
    cells = [header] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    lines = ["  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _signs(values) -> str:
    return "".join("+" if v == 1 else "-" for v in values) or "."


def packet_text(packet: PacketTable, parameter: str) -> str:
    head = (
        f"{packet.group}  {parameter}\n"
        f"epsilon_psi={packet.epsilon_psi}  regular={packet.regular}  "
        f"generators={','.join(packet.component_group.generators) or '-'}\n\n"
    )
    rows = [
        [
            _signs(eta.values),
            ",".join(map(str, d.i_vector)) or "-",
            " x ".join(str(f) for f in d.levi + (d.base_form,)),
            ",".join(map(str, d.block_characters)) or "-",
            _signs(d.base_eta),
            str(d.degree),
            d.range,
        ]
        for eta, ds in packet.entries
        for d in ds
    ]
    return head + table(rows, ["eta", "i", "levi", "xi", "eta'", "deg", "range"])
