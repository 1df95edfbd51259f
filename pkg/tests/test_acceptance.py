"""Acceptance suite: one test per criterion, with the stated bounds.

Each test records a PASS/FAIL line; the lines are printed as they are
recorded and again in the terminal summary (see conftest.py).
"""

import json
import random
import subprocess
import sys

from arthur_packets import checks
from arthur_packets.cli import main
from arthur_packets.dsl import render_param
from arthur_packets.groups import symplectic
from arthur_packets.randgen import random_group, random_parameter

RESULTS: dict[int, str] = {}


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail})"
    RESULTS[number] = line
    print(line)


def _check(number, title, result, limit=None):
    ok = result.ok and (limit is None or result.seconds < limit)
    detail = f"{result.checked} cases, {len(result.violations)} violations, {result.seconds:.2f} s"
    if limit is not None:
        detail += f" < {limit} s"
    record(number, title, ok, detail)
    assert result.ok, result.violations[:5]
    if limit is not None:
        assert result.seconds < limit


def test_criterion_01_rho_shift():
    _check(1, "rho shift, 1 <= c <= n <= 12", checks.rho_shift(12), limit=1.0)


def test_criterion_02_torsion():
    _check(2, "torsion on real Cartan factors, rank <= 6", checks.torsion(6), limit=30.0)


def test_criterion_03_sign_consistency():
    _check(3, "S_i at s_d, n <= 25", checks.sign_consistency(25), limit=1.0)


def test_criterion_04_packet_counts():
    _check(4, "packet counts, Sp n <= 8 and SO n <= 10", checks.packet_counts(8, 10))


def test_criterion_05_descent():
    result = checks.descent(1000, seed=0, max_rank=8)
    assert result.checked >= 1000
    _check(5, "descent on repeated blocks", result)


def test_criterion_06_recursion():
    _check(6, "build equals fold, R <= 4, rank <= 10", checks.recursion(800, seed=0, max_rank=10), limit=10.0)


def test_criterion_07_endoscopy():
    _check(7, "elliptic endoscopic data, n <= 10", checks.endoscopy(10))


def test_criterion_08_component_groups():
    _check(8, "component group algebra", checks.component_groups(500, seed=0))


def test_criterion_09_multiplicity_one():
    _check(9, "multiplicity one classification", checks.multiplicity_one(300, seed=0))


def test_criterion_10_twists():
    _check(10, "twist table", checks.twists())


def _cli(args):
    proc = subprocess.run([sys.executable, "-m", "arthur_packets"] + args, capture_output=True)
    return proc.returncode, proc.stdout


def test_criterion_11_cli():
    problems = []
    trip = checks.round_trip(1000, seed=0)
    problems += trip.violations

    rng = random.Random(11)
    stable = 0
    for _ in range(5):
        G = random_group(rng, 5)
        args = ["packet", "--group", str(G), "--param", render_param(random_parameter(rng, G, allow_mp=False))]
        first, second = _cli(args), _cli(args)
        if first != second or first[0] != 0:
            problems.append(f"unstable or failing output for {args}")
        else:
            json.loads(first[1])
            stable += 1

    expected = {
        1: ["packet", "--group", "Sp(6)", "--param", "V(0,9)xR[2] +"],
        2: ["packet", "--group", "Sp(2)", "--param", "W(0,0)xR[2]"],
        3: ["packet", "--group", "U(2,1)", "--param", "W(0,0)xR[3]"],
    }
    for code, args in expected.items():
        got = _cli(args)[0]
        if got != code:
            problems.append(f"exit {got} instead of {code} for {args}")
    assert main(["levi", "--group", str(symplectic(2))]) == 0

    record(
        11,
        "CLI round trip, stable JSON, exit codes",
        not problems,
        f"{trip.checked} round trips, {stable} stable outputs, {len(problems)} problems",
    )
    assert not problems, problems[:5]
