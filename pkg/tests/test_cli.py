import json

import pytest
from click.testing import CliRunner

from domdimlab import quivalg as qa
from domdimlab.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def run_json(runner, args, env=None, expect_exit=0):
    result = runner.invoke(main, args, env=env, catch_exceptions=False)
    assert result.exit_code == expect_exit, result.output
    return json.loads(result.stdout) if result.stdout.strip().startswith("{") else None


def test_domdim_family(runner):
    doc = run_json(runner, ["nakayama", "domdim", "--cycle",
                            "--kupisch", "5,6,6,6,6", "--cutoff", "64"])
    assert doc["items"][0]["domdim"] == {"kind": "finite", "value": 8}
    assert doc["failures"] == []


def test_domdim_env_cutoff(runner):
    doc = run_json(runner, ["nakayama", "domdim", "--cycle", "--kupisch", "3,3"],
                   env={"DOMDIMLAB_CUTOFF": "7"})
    assert doc["items"][0]["domdim"] == {"kind": "at_least", "bound": 7}
    assert doc["items"][0]["cutoff"] == 7


def test_ok_command(runner):
    doc = run_json(runner, ["nakayama", "ok", "--k", "1", "--cycle", "--kupisch", "2,2"])
    item = doc["items"][0]
    assert item["o_k"] == 3
    assert len(item["witness"]) == 3


def test_rigid_command_with_omega_specs(runner):
    doc = run_json(runner, [
        "nakayama", "rigid", "--k", "2", "--cycle", "--kupisch", "5,6,6,6,6",
        "--module", "dual-regular", "--module", "omega:4:dual-regular"])
    assert doc["items"][0]["rigid"] is True


def test_ext_command(runner):
    doc = run_json(runner, ["nakayama", "ext", "--cycle", "--kupisch", "3,3",
                            "--module", "0,1", "--degree", "3"])
    dims = [it["dim"] for it in doc["items"]]
    assert dims == [0, 0, 1]


def test_info_line(runner):
    doc = run_json(runner, ["nakayama", "info", "--line", "--kupisch", "2,1"])
    item = doc["items"][0]
    assert item["selfinjective"] is False
    assert item["dimension"] == 3


def test_usage_error_exit_2(runner):
    result = runner.invoke(main, ["nakayama", "domdim", "--cycle", "--kupisch", "2,4"])
    assert result.exit_code == 2
    result = runner.invoke(main, ["verify", "--suite", "unknown"])
    assert result.exit_code == 2
    result = runner.invoke(main, ["nakayama", "domdim", "--kupisch", "3,3"])
    assert result.exit_code == 2  # orientation flag missing


def test_quiver_resolve_fingerprints(runner):
    doc = run_json(runner, ["quiver", "resolve", "--preset", "hopf-a5-f2",
                            "--module", "simple", "--length", "4"])
    assert doc["items"][0]["syzygy_dims"] == [7, 9, 7, 9]
    doc = run_json(runner, ["quiver", "resolve", "--preset", "dihedral8-f2",
                            "--module", "simple", "--length", "4"])
    assert doc["items"][0]["syzygy_dims"][-1] == 17


def test_quiver_ext_command(runner):
    doc = run_json(runner, ["quiver", "ext", "--preset", "hopf-a5-f2",
                            "--module", "simple", "--degree", "2"])
    item = doc["items"][0]
    assert item["hom"] == 1
    assert item["degrees"][0] > 0  # the simple extends itself


def test_quiver_ideal_from_file(runner, tmp_path):
    path = tmp_path / "truncpoly4.json"
    qa.save_algebra(qa.preset("truncated-poly(4,Q)"), str(path))
    doc = run_json(runner, ["quiver", "ideal", "--algebra", str(path),
                            "--generators", "a0*a0"])
    item = doc["items"][0]
    assert item["dim_ext1_X_X"] > 0
    assert item["pass"] is True


def test_quiver_predicates(runner):
    doc = run_json(runner, ["quiver", "predicates", "--preset", "hopf-a5-f2",
                            "--cutoff", "8"])
    item = doc["items"][0]
    assert item["local"] is True
    assert item["selfinjective"] is True


def test_quiver_compile_and_domdim(runner, tmp_path):
    path = tmp_path / "nak.json"
    with open(path, "w") as fh:
        json.dump({"kind": "nakayama", "orientation": "cycle",
                   "kupisch": [2, 3]}, fh)
    doc = run_json(runner, ["quiver", "compile", "--algebra", str(path)])
    assert doc["items"][0]["dimension"] == 5
    doc = run_json(runner, ["quiver", "domdim", "--algebra", str(path),
                            "--cutoff", "16"])
    assert doc["items"][0]["domdim"] == {"kind": "finite", "value": 2}


def test_verify_main_cli(runner):
    doc = run_json(runner, ["nakayama", "verify-main", "--k", "1", "--cycle",
                            "--kupisch", "3,4,4", "--cutoff", "32"])
    assert doc["items"][0]["verdict"] == "holds"


def test_report_determinism(runner, tmp_path):
    args = ["nakayama", "ok", "--k", "1", "--cycle", "--kupisch", "2,3",
            "--report", str(tmp_path / "a.json")]
    runner.invoke(main, args, catch_exceptions=False)
    first = (tmp_path / "a.json").read_bytes()
    args[-1] = str(tmp_path / "b.json")
    runner.invoke(main, args, catch_exceptions=False)
    second = (tmp_path / "b.json").read_bytes()
    assert first == second


def test_csv_format(runner):
    result = runner.invoke(main, ["nakayama", "domdim", "--cycle",
                                  "--kupisch", "2,3", "--format", "csv"],
                           catch_exceptions=False)
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "name,pass"


def test_verify_suite_jobs(runner):
    doc = run_json(runner, ["verify", "--suite", "paper-core", "--jobs", "2"])
    assert doc["failures"] == []
    names = [it["name"] for it in doc["items"]]
    assert names == sorted(names, key=names.index)  # canonical order preserved
