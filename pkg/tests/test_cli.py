import io
import json
import subprocess
import sys

import pytest

from hurwitz_braid.cli import main

STD3 = '{"n": 3, "conjugator": [], "indices": [1, 2, 1, 2, 1, 2]}'
CONJ1 = '{"n": 3, "conjugator": [1], "indices": [1, 2, 1, 2, 1, 2]}'


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_nf(capsys):
    code, out, _ = run(["nf", "--n", "3", "1 2 1"], capsys)
    assert code == 0
    assert "delta_power: 1" in out and "factors: 0" in out
    code, out, _ = run(["nf", "--n", "3", ""], capsys)
    assert code == 0 and "delta_power: 0" in out and "factors: 0" in out


def test_nf_parse_error(capsys):
    code, _, err = run(["nf", "--n", "3", "5"], capsys)
    assert code == 2 and "'5'" in err


@pytest.mark.parametrize(
    "n, w1, w2, expected",
    [("4", "1 3", "3 1", "equal"), ("3", "1", "2", "not-equal"), ("3", "1 2 1", "2 1 2", "equal")],
)
def test_eq(capsys, n, w1, w2, expected):
    code, out, _ = run(["eq", "--n", n, w1, w2], capsys)
    assert out.strip() == expected
    assert code == (0 if expected == "equal" else 1)


def test_certify_main_trivial(capsys):
    code, out, _ = run(["certify", "main", STD3, STD3], capsys)
    assert code == 0 and json.loads(out) == {"source_length": 6, "moves": []}


def test_certify_one_conj_then_verify(capsys, monkeypatch):
    code, out, _ = run(["certify", "one-conj", "--n", "3", "--j", "1"], capsys)
    assert code == 0
    code, vout, _ = run(["verify", STD3, CONJ1, "-"], capsys, stdin=out, monkeypatch=monkeypatch)
    assert code == 0 and vout.strip() == "ok"


def test_certify_same_frame_not_full_twist(capsys):
    bad = '{"n": 3, "conjugator": [], "indices": [1, 1, 1, 2, 1, 2]}'
    code, _, _ = run(["certify", "same-frame", STD3, bad], capsys)
    assert code == 3


def test_certify_conj_and_budget(capsys, tmp_path):
    code, out, _ = run(["certify", "conj", "--n", "4", "--word", "-2"], capsys)
    assert code == 0 and json.loads(out)["source_length"] == 12
    a = '{"n": 5, "indices": ' + json.dumps(list(range(1, 5)) * 5) + "}"
    b = '{"n": 5, "indices": ' + json.dumps([1, 2, 4, 3] * 5) + "}"
    code, _, err = run(["certify", "same-frame", a, b, "--method", "bfs", "--max-states", "10"], capsys)
    assert code == 4 and "budget" in err


def test_verify_truncated_certificate(capsys, tmp_path):
    code, out, _ = run(["certify", "one-conj", "--n", "3", "--j", "1"], capsys)
    cert = json.loads(out)
    cert["moves"] = cert["moves"][:-1]
    path = tmp_path / "cert.json"
    path.write_text(json.dumps(cert))
    code, vout, _ = run(["verify", STD3, CONJ1, str(path)], capsys)
    assert code == 1 and vout.startswith("fail: first differing entry")


def test_verify_length_mismatch(capsys):
    short = '{"n": 3, "entries": [[1], [2]]}'
    code, _, _ = run(["verify", STD3, short, '{"source_length": 6, "moves": []}'], capsys)
    assert code == 2


def test_verify_accepts_explicit_entries(capsys):
    f = '{"n": 3, "entries": [[1], [2], [1]]}'
    g = '{"n": 3, "entries": [[2], [1], [2]]}'
    cert = '{"source_length": 3, "moves": [{"k": 2, "dir": "fwd"}, {"k": 1, "dir": "fwd"}]}'
    code, out, _ = run(["verify", f, g, cert], capsys)
    assert code == 0 and out.strip() == "ok"


def test_orbit(capsys):
    f = '{"n": 3, "entries": [[1], [2], [1]]}'
    g = '{"n": 3, "entries": [[2], [1], [2]]}'
    code, out, _ = run(["orbit", f, f], capsys)
    assert code == 0 and json.loads(out)["moves"] == []
    code, out, _ = run(["orbit", f, g, "--max-depth", "2"], capsys)
    assert code == 0 and len(json.loads(out)["moves"]) == 2
    code, _, _ = run(["orbit", f, g, "--max-states", "1"], capsys)
    assert code == 4
    code, out, _ = run(["orbit", f, g, "--max-depth", "1"], capsys)
    assert code == 1 and out.strip() == "not-found"


def test_bad_json_is_input_error(capsys):
    code, _, err = run(["verify", "{nope", STD3, "{}"], capsys)
    assert code == 2 and "invalid JSON" in err


def test_output_is_deterministic(capsys):
    a = '{"n": 4, "conjugator": [1, -3], "indices": ' + json.dumps([1, 2, 3] * 4) + "}"
    b = '{"n": 4, "conjugator": [2, 2], "indices": ' + json.dumps([3, 2, 1] * 4) + "}"
    outs = []
    for _ in range(2):
        code, out, _ = run(["certify", "main", a, b], capsys)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hurwitz_braid", "eq", "--n", "3", "1 2 1", "2 1 2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "equal\n"
