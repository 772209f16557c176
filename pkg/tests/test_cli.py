import json
import subprocess
import sys

import pytest

from bwkit.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, main, parse_scenario, InputError
from bwkit.report import REPORT_DIR_ENV


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_spectrum_reference_ratio(capsys):
    code, rep = run_json(capsys, "spectrum", "--A=-7", "--B=-8")
    assert code == EXIT_OK
    assert rep["status"] == "informational"
    assert rep["results"]["branches"][0] == {"mass2_ratio": "4/3", "multiplicity": 3, "spin": 1, "status": "massive"}


def test_global_flags_before_subcommand(capsys):
    code, out, _ = run(capsys, "--json", "--tolerance", "1e-10", "spectrum", "--A=-7", "--B=-8")
    assert code == EXIT_OK and json.loads(out)["command"] == "spectrum"


def test_human_output_ends_with_status(capsys):
    code, out, _ = run(capsys, "spectrum", "--A=-7", "--B=-8", "--ast")
    assert code == EXIT_OK
    assert out.rstrip().endswith("spectrum: informational")


@pytest.mark.parametrize(
    "argv",
    [
        ["matrices", "--vector"],
        ["polarization", "--p1=3", "--p2=4", "--p3=12", "--mass=84", "--basis=helicity"],
        ["bw1", "system", "--p3=4", "--mass=3"],
        ["bw1", "wth", "--a=1", "--b=1", "--c=2", "--d=1"],
        ["quanta", "spin-half", "--n=3/13,4/13,12/13", "--mass=2"],
        ["quanta", "bivector", "--n=0,0,1"],
        ["quanta", "propagator", "--k=1,2,3", "--E=7", "--mass=3", "--mu=2"],
        ["quanta", "relations", "--p1=-4", "--p2=3", "--mass=12"],
        ["spin2", "dynamics", "--mass=3"],
    ],
    ids=lambda a: " ".join(a[:2]),
)
def test_subcommands_pass(capsys, argv):
    code, rep = run_json(capsys, *argv)
    assert code == EXIT_OK, rep
    assert rep["status"] in ("pass", "informational")


def test_spin2_nullity_and_failing_families(capsys):
    code, rep = run_json(capsys, "spin2", "nullity", "--standard")
    assert code == EXIT_OK
    assert rep["results"]["component_nullity"] == 35
    code, rep = run_json(capsys, "spin2", "families")
    assert code == EXIT_FAIL and rep["status"] == "fail"
    assert not rep["results"]["checks"]["b1:metric"]


@pytest.mark.parametrize(
    "argv",
    [
        ["spectrum", "--A=x", "--B=1"],
        ["spectrum", "--A=1/0", "--B=1"],
        ["polarization", "--p3=1", "--mass=1"],
        ["bw1", "wth", "--a=1", "--b=2", "--c=3", "--d=1"],
        ["quanta", "spin-half", "--n=1,1,1"],
        ["quanta", "propagator", "--k=0,0,0", "--E=3", "--mass=3", "--mu=1"],
        ["spin2", "nullity", "--coeffs=1,2"],
        ["nonsense"],
    ],
)
def test_bad_input_exits_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_INPUT
    assert err


def test_scenarios_key_value_and_json(tmp_path, capsys):
    kv = tmp_path / "ratio.txt"
    kv.write_text("# spectrum\nname = ratio\ntarget = spectrum\nA = -7\nB = -8\nexpect.branches.0.mass2_ratio = 4/3\n")
    js = tmp_path / "wth.json"
    js.write_text(json.dumps({"name": "wth", "target": "bw1 wth", "params": {"a": 1, "b": 1, "c": 2, "d": 1}}))
    code, rep = run_json(capsys, "run", "--scenario", str(kv), "--scenario", str(js))
    assert code == EXIT_OK and rep["status"] == "pass"
    assert list(rep["results"]) == ["ratio", "wth"]
    assert rep["results"]["ratio"]["expectations"] == {"branches.0.mass2_ratio": True}


def test_scenario_expectation_failure_exits_1(tmp_path, capsys):
    kv = tmp_path / "s.txt"
    kv.write_text("target = spectrum\nA = -7\nB = -8\nexpect.branches.0.mass2_ratio = 5/3\n")
    code, rep = run_json(capsys, "run", "--scenario", str(kv))
    assert code == EXIT_FAIL and rep["status"] == "fail"


def test_scenario_errors_carry_positions(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("target = spectrum\nA -7\n")
    code, _, err = run(capsys, "run", "--scenario", str(bad))
    assert code == EXIT_INPUT and "bad.txt:2:" in err
    badj = tmp_path / "bad.json"
    badj.write_text('{"target": "spectrum",\n "params": {\n')
    with pytest.raises(InputError, match=r"bad\.json:3:1"):
        parse_scenario(str(badj))
    missing = tmp_path / "none.txt"
    missing.write_text("A = 1\n")
    code, _, err = run(capsys, "run", "--scenario", str(missing))
    assert code == EXIT_INPUT and "target" in err


def test_report_directory(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv(REPORT_DIR_ENV, str(tmp_path))
    code, out, _ = run(capsys, "spectrum", "--A=-7", "--B=-8", "--json")
    assert (tmp_path / "spectrum.json").read_text() == out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "bwkit.cli", "spectrum", "--A=-7", "--B=-8", "--json"], capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["results"]["branches"][0]["mass2_ratio"] == "4/3"
