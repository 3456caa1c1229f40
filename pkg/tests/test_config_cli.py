"""Config loading, strict validation, and the command-line front end."""

import json
import subprocess
import sys

import pytest

from k3acm import ConfigError, WorkbenchError
from k3acm.cli import main
from k3acm.config import (config_from_json, config_to_json, data_path,
                          dump_config, load_config, loads_config,
                          shipped_config_names, shipped_quartic_names)

BASE = {
    "rank": 2,
    "gram": [[4, 1], [1, -2]],
    "labels": ["h", "B"],
    "ample": [1, 0],
    "k3": True,
    "assumptions": [],
}


def _doc(**overrides):
    doc = {k: json.loads(json.dumps(v)) for k, v in BASE.items()}
    doc.update(overrides)
    return doc


# ---- config files ---------------------------------------------------------------


def test_shipped_configs_round_trip():
    names = shipped_config_names()
    assert len(names) == 8
    assert shipped_quartic_names() == tuple(n for n in names
                                            if n.startswith("quartic_"))
    assert len(shipped_quartic_names()) == 7
    for name in names:
        lat, assumps = load_config(data_path(name))
        lat2, assumps2 = loads_config(dump_config(lat, assumps))
        assert lat2 == lat
        assert assumps2 == assumps


def test_shipped_configs_have_expected_shapes():
    lat, assumps = load_config(data_path("delpezzo_cover.json"))
    assert lat.rank == 8
    assert lat.signature() == (1, 7)
    assert len(assumps) == 4
    lat, assumps = load_config(data_path("quartic_b2_4.json"))
    assert (lat.gram[1][1], lat.gram[0][1]) == (4, 6)
    assert len(assumps) == 2
    for name in shipped_quartic_names():
        lat, _ = load_config(data_path(name))
        assert lat.rank == 2
        assert lat.gram[0][0] == 4
        assert lat.k3 is True
        assert lat.signature() == (1, 1)


def test_data_path_rejects_unknown_names():
    with pytest.raises(ConfigError) as err:
        data_path("no_such_config.json")
    assert "quartic_b2_4.json" in str(err.value)


def test_config_validation_rejects_bad_documents():
    bad = [
        _doc(extra="?"),
        {k: v for k, v in _doc().items() if k != "k3"},
        _doc(rank=True),
        _doc(rank=0),
        _doc(gram=[[4, 1]]),
        _doc(gram=[[4, 1], [1, "x"]]),
        _doc(labels=["h"]),
        _doc(labels=["h", 2]),
        _doc(ample=[1, 0, 0]),
        _doc(ample=[1, True]),
        _doc(k3=1),
        _doc(assumptions={}),
        _doc(assumptions=["?"]),
        _doc(assumptions=[{"subject": [0, 1]}]),
        _doc(assumptions=[{"subject": [0, 1], "kind": "Sparkly"}]),
        _doc(assumptions=[{"subject": [0], "kind": "Empty"}]),
        _doc(assumptions=[{"subject": [0, 1], "kind": "Empty", "note": 3}]),
        _doc(assumptions=[{"subject": [0, 1], "kind": "Empty", "why": ""}]),
        "not even an object",
    ]
    for doc in bad:
        with pytest.raises(ConfigError):
            config_from_json(doc)


def test_unknown_kind_message_lists_the_alternatives():
    with pytest.raises(ConfigError) as err:
        config_from_json(_doc(assumptions=[{"subject": [0, 1],
                                            "kind": "Sparkly"}]))
    assert "Effective" in str(err.value)
    assert "EllipticPencil" in str(err.value)


def test_lattice_level_errors_still_surface():
    # the document is well-formed JSON; the gram itself is wrong
    with pytest.raises(WorkbenchError):
        config_from_json(_doc(gram=[[4, 1], [2, -2]]))


def test_loads_and_load_error_paths(tmp_path):
    with pytest.raises(ConfigError):
        loads_config("{ truncated")
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.json")
    target = tmp_path / "cfg.json"
    target.write_text(json.dumps(_doc()))
    lat, assumps = load_config(target)
    assert lat.rank == 2
    assert assumps == ()


def test_config_to_json_round_trips_assumptions():
    lat, assumps = load_config(data_path("quartic_b2_4.json"))
    doc = config_to_json(lat, assumps)
    lat2, assumps2 = config_from_json(json.loads(json.dumps(doc)))
    assert (lat2, assumps2) == (lat, assumps)
    kinds = [a.kind.value for a in assumps2]
    assert kinds == ["Empty", "Empty"]


# ---- command line ---------------------------------------------------------------


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_lattice_info(capsys):
    cfg = str(data_path("quartic_b2neg2_bh1.json"))
    code, out, err = _run(capsys, "lattice-info", "-c", cfg)
    assert code == 0
    assert "rank: 2" in out
    assert "signature: (1, 1)" in out
    code, out, _ = _run(capsys, "lattice-info", "-c", cfg, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["gram"] == [[4, 1], [1, -2]]
    assert payload["signature"] == [1, 1]
    assert payload["even"] is True


def test_cli_classify_not_acm_first_line(capsys, tmp_path):
    cfg = tmp_path / "wide.json"
    cfg.write_text(json.dumps(_doc(gram=[[4, 5], [5, -2]])))
    code, out, err = _run(capsys, "classify", "-c", str(cfg),
                          "--class", "0,1")
    assert code == 0
    assert out.splitlines()[0] == "NotAcm"


def test_cli_classify_shipped_and_json(capsys):
    cfg = str(data_path("quartic_b2neg2_bh1.json"))
    code, out, _ = _run(capsys, "classify", "-c", cfg, "--class", "0,1")
    assert code == 0
    assert out.splitlines()[0] == "Acm"
    code, out, _ = _run(capsys, "classify", "-c", cfg, "--class", "0,1",
                        "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"class": [0, 1], "status": "Acm", "case": "a",
                       "missing": []}


def test_cli_classify_ulrich_assumptions_come_from_the_file(capsys):
    cfg = str(data_path("quartic_b2_4.json"))
    code, out, _ = _run(capsys, "classify", "-c", cfg, "--class", "0,1")
    assert code == 0
    assert out.splitlines()[0] == "AcmUlrich"


def test_cli_classify_bad_class_argument(capsys):
    cfg = str(data_path("quartic_b2neg2_bh1.json"))
    code, _, err = _run(capsys, "classify", "-c", cfg, "--class", "0,x")
    assert code == 2
    assert "error:" in err
    code, _, err = _run(capsys, "classify", "-c", cfg, "--class", "0,1,2")
    assert code == 2


def test_cli_companions(capsys):
    cfg = str(data_path("quartic_b2neg2_bh1.json"))
    code, out, _ = _run(capsys, "companions", "-c", cfg, "--class", "0,1",
                        "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["companions"] == [
        {"class": [0, -1], "rule": "dual-acm-not-initialized"},
        {"class": [1, -1], "rule": "complement-in-h"},
    ]


def test_cli_enumerate_json_is_exactly_the_solution_set(capsys):
    code, out, _ = _run(capsys, "enumerate", "--preset", "i-a", "--json")
    assert code == 0
    assert json.loads(out) == {"solutions": [[3, -2]]}


def test_cli_enumerate_config_cross_check(capsys):
    good = str(data_path("quartic_b2neg2_bh1.json"))
    code, out, _ = _run(capsys, "enumerate", "--preset", "i-a", "-c", good)
    assert code == 0
    assert "1 solution(s)" in out
    wrong = str(data_path("quartic_b20_bh4.json"))
    code, _, err = _run(capsys, "enumerate", "--preset", "i-a", "-c", wrong)
    assert code == 2
    assert "error:" in err


def test_cli_enumerate_rejects_tiny_box(capsys):
    code, _, err = _run(capsys, "enumerate", "--preset", "i-a", "--box", "4")
    assert code == 2


def test_cli_verify_contradiction(capsys):
    code, out, _ = _run(capsys, "verify", "--script", "case-B2neg2-Bh2")
    assert code == 0
    assert out.rstrip().endswith("CONTRADICTION ESTABLISHED")
    assert "[FAILED]" not in out


def test_cli_verify_json(capsys):
    code, out, _ = _run(capsys, "verify", "--script", "case-B24", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "Success"
    assert payload["tag"] == "case-B24"


def test_cli_verify_against_matching_config(capsys):
    cfg = str(data_path("quartic_b2neg2_bh2.json"))
    code, out, _ = _run(capsys, "verify", "--script", "case-B2neg2-Bh2",
                        "-c", cfg)
    assert code == 0
    assert out.rstrip().endswith("CONTRADICTION ESTABLISHED")


def test_cli_verify_against_mismatched_config_fails(capsys):
    cfg = str(data_path("quartic_b20_bh4.json"))
    code, out, _ = _run(capsys, "verify", "--script", "case-B2neg2-Bh2",
                        "-c", cfg)
    assert code == 1
    assert "VERIFICATION FAILED" in out


def test_cli_verify_unknown_tag(capsys):
    code, _, err = _run(capsys, "verify", "--script", "no-such-tag")
    assert code == 2


def test_cli_destabilize(capsys):
    cfg = str(data_path("quartic_b2neg2_bh3.json"))
    code, out, _ = _run(capsys, "destabilize", "-c", cfg, "--class", "4,-2",
                        "--d", "2", "--mode", "exact")
    assert code == 0
    assert "ALL BRANCHES RESOLVED" in out
    assert "window-infeasible" in out
    code, out, _ = _run(capsys, "destabilize", "-c", cfg, "--class", "4,-2",
                        "--d", "2", "--mode", "exact", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["resolved"] is True
    assert len(payload["records"]) == 5


def test_cli_destabilize_ulrich_config(capsys):
    cfg = str(data_path("quartic_b2_4.json"))
    code, out, _ = _run(capsys, "destabilize", "-c", cfg, "--class", "0,2",
                        "--d", "4", "--mode", "gonality", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["resolved"] is True
    assert [r["outcome"] for r in payload["records"]] == [
        "window-infeasible", "window-infeasible", "window-infeasible",
        "beyond-hodge-cap"]


def test_cli_theorem(capsys):
    code, out, _ = _run(capsys, "theorem")
    assert code == 0
    assert "THEOREM NECESSITY: VERIFIED over 7 configs" in out
    code, out, _ = _run(capsys, "theorem", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "VERIFIED"
    assert len(payload["configs"]) == 7
    assert all(c["status"] == "VERIFIED" for c in payload["configs"])


def test_cli_example_delpezzo(capsys):
    code, out, _ = _run(capsys, "example-delpezzo")
    assert code == 0
    assert "rank 8" in out
    assert "ESTABLISHED" in out
    code, out, _ = _run(capsys, "example-delpezzo", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["rank"] == 8
    assert payload["signature"] == [1, 7]
    assert payload["report"]["status"] == "Success"


def test_cli_bad_input_paths(capsys, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text('{"rank": 2,')
    code, _, err = _run(capsys, "lattice-info", "-c", str(broken))
    assert code == 2
    code, _, err = _run(capsys, "classify", "--class", "0,1")
    assert code == 2  # config required
    code, _, _ = _run(capsys)
    assert code == 2  # argparse usage error, not a traceback
    code, _, _ = _run(capsys, "frobnicate")
    assert code == 2
    code, _, _ = _run(capsys, "--help")
    assert code == 0


def test_cli_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "k3acm.cli",
         "enumerate", "--preset", "i-a", "--json"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"solutions": [[3, -2]]}
