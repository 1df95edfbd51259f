"""Command line front end.

Exit codes: 0 success, 1 parse error, 2 invalid parameter, 3 unsupported
input, 4 failed check.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import checks, render
from .dsl import ParseError, parse_group, parse_param, render_param
from .endoscopy import elliptic_endoscopic_data
from .levi import c_levi_representatives, induction_degree, superpacket_distribution
from .packets import build_packet
from .params import InvalidParameter, UnsupportedInput, decompose, is_regular
from .characters import S_character

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_UNSUPPORTED, EXIT_CHECK = 0, 1, 2, 3, 4


def _parameter(args):
    G = parse_group(args.group)
    psi = parse_param(args.param, G)
    return G, psi


def cmd_packet(args) -> tuple[dict, str]:
    G, psi = _parameter(args)
    packet = build_packet(psi, G)
    text = render_param(psi)
    return render.packet_data(packet, text), render.packet_text(packet, text)


def cmd_compgroup(args) -> tuple[dict, str]:
    G, psi = _parameter(args)
    decomp = decompose(psi)
    data = render.compgroup_data(decomp, render_param(psi))
    rows = [[",".join(f"{k}={v:+d}" for k, v in eta.items()) or "trivial"] for eta in data["characters"]]
    head = f"{G}  rank {data['rank']}  generators {','.join(data['generators']) or '-'}\n\n"
    return data, head + render.table(rows, ["character"])


def cmd_decompose(args) -> tuple[dict, str]:
    _, psi = _parameter(args)
    decomp = decompose(psi)
    data = render.decomposition_data(decomp, decomp.good and is_regular(decomp))
    rows = [[k, str(v)] for k, v in data.items()]
    return data, render.table(rows, ["part", "value"])


def cmd_endoscopy(args) -> tuple[dict, str]:
    G = parse_group(args.group)
    if G.family == "U":
        raise UnsupportedInput("endoscopic data are only listed for Sp and SO")
    if not G.quasi_split:
        raise UnsupportedInput(f"{G} is not quasi-split")
    data = elliptic_endoscopic_data(G)
    out = render.endoscopic_data(G, data)
    rows = [[d["name"], d["h1"], d["h2"], str(d["x_d"]), str(d["sgn_twist_h1"])] for d in out["data"]]
    return out, render.table(rows, ["datum", "H1", "H2", "x_d", "sgn twist"])


def cmd_levi(args) -> tuple[dict, str]:
    G = parse_group(args.group)
    if G.family not in ("A", "B", "CD"):
        raise UnsupportedInput("c-Levi subgroups are only listed for Sp and SO")
    cs = [args.c] if args.c is not None else list(range(G.rank + 1))
    if any(not 0 <= c <= G.rank for c in cs):
        raise InvalidParameter(f"c must lie between 0 and {G.rank}")
    levis = []
    rows = []
    for c in cs:
        reps = []
        for L in c_levi_representatives(G, c):
            sign = S_character(L.i, c, G.rank).evaluate(-1)
            entry = render.levi_data(L, induction_degree(G, L), sign)
            reps.append(entry)
            rows.append([str(c), str(L.i), entry["levi"], str(entry["degree"]), f"{sign:+d}"])
        levis.append({"c": c, "representatives": reps})
    data = {
        "group": str(G),
        "levis": levis,
        "superpacket": {str(F): k for F, k in superpacket_distribution(G).items()},
    }
    return data, render.table(rows, ["c", "i", "levi", "degree", "S_i(-1)"])


def cmd_check(args) -> tuple[dict, str]:
    results = checks.run_all(args.max_rank, args.seed)
    data = {
        "max_rank": args.max_rank,
        "seed": args.seed,
        "passed": all(r.ok for r in results),
        "checks": [
            {"name": r.name, "checked": r.checked, "ok": r.ok, "violations": r.violations[:10]}
            for r in results
        ],
    }
    rows = [[r.name, str(r.checked), "ok" if r.ok else f"FAIL ({len(r.violations)})"] for r in results]
    return data, render.table(rows, ["check", "cases", "status"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arthur-packets",
        description="Arthur packets of real classical groups as cohomologically induced data.",
    )
    parser.add_argument("--format", choices=("json", "pretty"), default="json")
    parser.add_argument("--pretty", action="store_true", help="same as --format pretty")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_param(p):
        p.add_argument("--group", required=True, help='e.g. "Sp(6)", "SO(3,2)"')
        p.add_argument("--param", required=True, help='e.g. "V(0,3)xR[1] + V(0,1)xR[1]"')
        return p

    with_param(sub.add_parser("packet", help="the packet of a good-parity parameter")).set_defaults(run=cmd_packet)
    with_param(sub.add_parser("compgroup", help="component group and its characters")).set_defaults(run=cmd_compgroup)
    with_param(sub.add_parser("decompose", help="split a parameter by parity")).set_defaults(run=cmd_decompose)
    p = sub.add_parser("endoscopy", help="elliptic endoscopic data of a quasi-split group")
    p.add_argument("--group", required=True)
    p.set_defaults(run=cmd_endoscopy)
    p = sub.add_parser("levi", help="c-Levi representatives and the superpacket distribution")
    p.add_argument("--group", required=True)
    p.add_argument("--c", type=int)
    p.set_defaults(run=cmd_levi)
    p = sub.add_parser("check", help="run the invariant and oracle suite")
    p.add_argument("--max-rank", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_check)
    for name in ("packet", "compgroup", "decompose", "endoscopy", "levi", "check"):
        sub.choices[name].add_argument("--format", choices=("json", "pretty"), default=argparse.SUPPRESS)
        sub.choices[name].add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    pretty = args.pretty or args.format == "pretty"
    try:
        data, text = args.run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnsupportedInput as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except InvalidParameter as exc:
        print(f"invalid parameter: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(text if pretty else render.dumps(data))
    if args.command == "check" and not data["passed"]:
        return EXIT_CHECK
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
