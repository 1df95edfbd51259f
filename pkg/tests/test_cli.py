import json
import subprocess
import sys

import pytest

from arthur_packets.cli import main

SO32 = ["packet", "--group", "SO(3,2)", "--param", "V(0,3)xR[1]+V(0,1)xR[1]"]


def _run(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_packet_json(capsys):
    code, out, _ = _run(SO32, capsys)
    assert code == 0
    data = json.loads(out)
    assert list(data) == [
        "group", "parameter", "epsilon_psi", "regular", "component_group", "s_psi", "entries",
    ]
    assert sum(len(e["data"]) for e in data["entries"]) == 2
    datum = next(d for e in data["entries"] for d in e["data"])
    assert set(datum) >= {"i_vector", "levi", "block_characters", "base_form", "base_eta", "degree", "range"}


def test_json_is_byte_stable(capsys):
    first = _run(SO32, capsys)[1]
    second = _run(SO32, capsys)[1]
    assert first == second


def test_pretty(capsys):
    code, out, _ = _run(["--pretty"] + SO32, capsys)
    assert code == 0 and "U(1,0) x U(0,1) x SO(1,0)" in out
    code, out2, _ = _run(SO32 + ["--format", "pretty"], capsys)
    assert out2 == out


@pytest.mark.parametrize(
    "args, code",
    [
        (["packet", "--group", "Sp(6)", "--param", "V(0,9)xR[2] +"], 1),
        (["packet", "--group", "Sp(5)", "--param", "W(0,0)xR[1]"], 1),
        (["packet", "--group", "Sp(2)", "--param", "W(0,0)xR[2]"], 2),
        (["packet", "--group", "Sp(2)", "--param", "V(0,0)xR[1]+W(0,0)xR[1]"], 2),
        (["packet", "--group", "U(1,1)", "--param", "W(0,0)xR[2]"], 3),
        (["packet", "--group", "Sp(4)", "--param", "W(1,0)xR[1]+W(-1,0)xR[1]+W(0,0)xR[3]"], 3),
        (["endoscopy", "--group", "SO(5,0)"], 3),
        (["levi", "--group", "Sp(4)", "--c", "3"], 2),
    ],
)
def test_exit_codes(args, code, capsys):
    got, out, err = _run(args, capsys)
    assert got == code
    assert out == "" and err


def test_parse_error_mentions_position(capsys):
    _, _, err = _run(["packet", "--group", "Sp(6)", "--param", "V(0,9)xR[2] +"], capsys)
    assert "position 13" in err


def test_other_commands(capsys):
    code, out, _ = _run(["compgroup", "--group", "Sp(4)", "--param", "V(0,4)xR[1]+V(0,2)xR[1]+W(0,0)xR[1]"], capsys)
    assert code == 0 and json.loads(out)["rank"] == 3
    code, out, _ = _run(["endoscopy", "--group", "Sp(4)"], capsys)
    assert [d["name"] for d in json.loads(out)["data"]] == ["Sp4xSO0^d", "Sp2xSO2^qd", "Sp0xSO4^d", "Sp0xSO4^qd"]
    code, out, _ = _run(["levi", "--group", "SO(3,2)", "--c", "1"], capsys)
    data = json.loads(out)
    assert [r["levi"] for r in data["levis"][0]["representatives"]] == ["U(0,1)xSO(3,0)", "U(1,0)xSO(1,2)"]
    assert data["superpacket"] == {"SO(1,4)": 1, "SO(3,2)": 2, "SO(5,0)": 1}
    code, out, _ = _run(["decompose", "--group", "Sp(4)", "--param", "W(1/2,0)xR[1]+W(-1/2,0)xR[1]+V(0,2)xR[1]+W(0,0)xR[1]"], capsys)
    data = json.loads(out)
    assert data["mp_rho"] == "W(1/2,0)xR[1]" and data["bp_disc"] == [{"t": 2, "a": 1}]


def test_check_command(capsys):
    code, out, _ = _run(["check", "--max-rank", "4", "--seed", "3"], capsys)
    data = json.loads(out)
    assert code == 0 and data["passed"]


def test_module_entry_point():
    run = lambda: subprocess.run(
        [sys.executable, "-m", "arthur_packets"] + SO32, capture_output=True, check=True
    ).stdout
    assert run() == run()
