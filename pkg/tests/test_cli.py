import json
import subprocess
import sys
from pathlib import Path

import pytest

from uniform_turan.catalog import f7star_hat, wheel
from uniform_turan.cli import main, run
from uniform_turan.constructions import random_construction
from uniform_turan.golden import f7star_hat_certificate
from uniform_turan.palette import PaletteCertificate, PropertyKind, solve, verify
from uniform_turan.palette.classify import classify
from uniform_turan.reduced import embeds, planted_reduced

GOLDEN = Path(__file__).parent / "golden"

# argv -> golden file holding the expected output minus elapsed_ms
CASES = {
    "check_spades_f7star_hat": ["check", "--property", "spades", "--graph", "name:f7star_hat"],
    "check_clubs_wheel4": ["check", "--property", "clubs", "--graph", "name:wheel:4"],
    "classify_wheel5": ["classify", "--graph", "name:wheel:5"],
    "construct_random_12_3": ["construct", "random", "--n", "12", "--seed", "3"],
    "catalog_names": ["catalog"],
}


def invoke(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, json.loads(out), err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_outputs(name, capsys):
    code, doc, _ = invoke(CASES[name], capsys)
    doc.pop("elapsed_ms")
    expected = json.loads((GOLDEN / f"{name}.json").read_text())
    assert doc == expected
    assert code == {"SAT": 0, "UNSAT": 1, "ok": 0}[doc["status"]]


def test_check_exit_codes(capsys):
    code, doc, _ = invoke(["check", "--property", "spades", "--graph", "name:f7star_hat"], capsys)
    assert (code, doc["status"], doc["schema"]) == (0, "SAT", 1)
    assert verify(f7star_hat(), PaletteCertificate.from_dict(doc["payload"]["certificate"]))
    code, doc, _ = invoke(["check", "--property", "clubs", "--graph", "name:wheel:4"], capsys)
    assert (code, doc["status"]) == (1, "UNSAT")


def test_verify_accept_and_tampered_reject(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(f7star_hat_certificate().to_json())
    code, doc, _ = invoke(["verify", "--graph", "name:f7star_hat", "--certificate", str(good)], capsys)
    assert (code, doc["status"]) == (0, "accept")

    data = json.loads(good.read_text())
    for item in data["coloring"]:
        if item["pair"] == [0, 3]:  # pair {a, d}
            item["color"] = "blue"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, doc, _ = invoke(["verify", "--graph", "name:f7star_hat", "--certificate", str(bad)], capsys)
    assert (code, doc["status"]) == (1, "reject")
    assert [0, 2, 3] in doc["payload"]["violations"]


def test_malformed_json_reports_position(tmp_path, capsys):
    bad = tmp_path / "cert.json"
    bad.write_text('{"kind": "spades",\n  "ordering": [0, 1,, 2]}')
    code, doc, err = invoke(["verify", "--graph", "name:single_edge", "--certificate", str(bad)], capsys)
    assert code == 2 and doc["status"] == "error"
    assert doc["payload"]["line"] == 2 and doc["payload"]["column"] > 1
    assert "line 2" in err


def test_usage_errors(capsys):
    for argv in (["bogus"], [], ["check", "--graph", "name:wheel:4"],
                 ["check", "--property", "hearts", "--graph", "name:wheel:4"],
                 ["check", "--property", "clubs", "--graph", "name:nosuch"]):
        code, doc, err = invoke(argv, capsys)
        assert code == 2 and doc["status"] == "error" and err


def test_invalid_certificate_is_a_usage_error(tmp_path, capsys):
    cert = tmp_path / "c.json"
    cert.write_text(json.dumps({"kind": "clubs", "ordering": [0, 1, 2], "istar": None, "coloring": []}))
    code, doc, _ = invoke(["verify", "--graph", "name:single_edge", "--certificate", str(cert)], capsys)
    assert code == 2


def test_guard_and_timeout_exit_3(capsys):
    code, doc, _ = invoke(["check", "--property", "clubs", "--graph", "name:edgeless:11"], capsys)
    assert (code, doc["status"]) == (3, "guard")
    code, doc, _ = invoke(["check", "--property", "clubs", "--graph", "name:wheel:8", "--timeout-ms", "1"], capsys)
    assert (code, doc["status"]) == (3, "timeout")


def test_graph_file_input(tmp_path, capsys):
    g = tmp_path / "g.json"
    g.write_text(wheel(5).to_json())
    code, doc, _ = invoke(["check", "--property", "vanishing", "--graph", str(g)], capsys)
    assert code == 0


def test_payloads_equal_library_output():
    F = wheel(6)
    assert run(["check", "--property", "spades", "--graph", "name:wheel:6"]).payload == \
        solve(F, PropertyKind.SPADES).to_dict()
    assert run(["classify", "--graph", "name:wheel:6"]).payload == classify(F).to_dict()
    assert run(["construct", "random", "--n", "20", "--seed", "5"]).payload == \
        random_construction(20, 5).to_dict()


def test_construct_reduced_and_embed(tmp_path, capsys):
    A, _ = planted_reduced(wheel(4), 5, 3, seed=2)
    path = tmp_path / "a.json"
    path.write_text(A.to_json())
    code, doc, _ = invoke(["embed", "--reduced", str(path), "--target", "name:k4minus"], capsys)
    assert code == 0 and doc["payload"] == embeds(A, wheel(4)).to_dict()

    out = tmp_path / "r.json"
    code, doc, _ = invoke(["construct", "reduced", "--indices", "4", "--class-size", "2",
                           "--edge-prob", "0", "--seed", "1", "--out", str(out)], capsys)
    assert code == 0 and json.loads(out.read_text()) == doc["payload"]
    code, doc, _ = invoke(["embed", "--reduced", str(out), "--target", "name:single_edge"], capsys)
    assert (code, doc["status"], doc["payload"]) == (1, "absent", None)


def test_seed_determines_randomized_output():
    a = run(["construct", "reduced", "--seed", "7"]).payload
    assert a == run(["construct", "reduced", "--seed", "7"]).payload
    assert a != run(["construct", "reduced", "--seed", "8"]).payload


def test_audit_command(capsys):
    code, doc, _ = invoke(["audit", "--graph", "random:40:1", "--sizes", "10,20", "--samples", "5",
                           "--mu", "0.05"], capsys)
    assert code == 0 and doc["status"] == "pass" and doc["payload"]["pass"] is True
    code, doc, _ = invoke(["audit", "--graph", "name:edgeless:30", "--sizes", "30", "--samples", "1",
                           "--mu", "0.0001"], capsys)
    assert code == 1 and doc["status"] == "fail"


def test_threads_env_fallback(monkeypatch):
    monkeypatch.setenv("TURAN_THREADS", "2")
    res = run(["check", "--property", "clubs", "--graph", "name:wheel:6"])
    assert res.status == "UNSAT"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "uniform_turan", "check", "--property", "vanishing",
                           "--graph", "name:wheel:5"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "SAT"
