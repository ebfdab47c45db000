import json
import subprocess
import sys

from paulidecomp.cli import main, parse_spec

CLI = [sys.executable, "-m", "paulidecomp.cli"]


def run_cli(*args, env=None):
    return subprocess.run(CLI + list(args), capture_output=True, text=True,
                          env=env)


def test_parse_spec_defaults():
    kind, spec = parse_spec("pauli:p=2,n=1")
    assert kind == "pauli" and (spec.p, spec.m, spec.n) == (2, 1, 1)
    kind, spec = parse_spec("heis:R=gf(3)")
    assert kind == "heis" and spec.carrier.size == 3
    kind, spec = parse_spec("lifted:p=3,m=2,n=1")
    assert kind == "lifted" and spec.q == 9


def test_build_json():
    r = run_cli("build", "pauli:p=2,n=1")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["order"] == 16
    assert doc["center_order"] == 4


def test_build_text_format():
    r = run_cli("build", "d8", "--format", "text")
    assert r.returncode == 0
    assert "order: 8" in r.stdout


def test_parse_error_exit_2():
    assert run_cli("build", "nosuch").returncode == 2
    assert run_cli("build", "pauli:p=2,n=1,bogus=3").returncode == 2
    assert run_cli("build", "pauli:p=4,n=1").returncode == 2
    assert run_cli("verify", "nosuchclaim").returncode == 2


def test_cap_exceeded_exit_3():
    r = run_cli("build", "pauli:p=2,n=2", "--cap-closure", "10")
    assert r.returncode == 3


def test_env_cap_override_flag_wins(monkeypatch):
    import os
    env = dict(os.environ, PAULIDECOMP_CAP_OVERRIDE="10")
    assert run_cli("build", "pauli:p=2,n=1", env=env).returncode == 3
    r = run_cli("build", "pauli:p=2,n=1", "--cap-closure", "4096", env=env)
    assert r.returncode == 0


def test_census_d8():
    r = run_cli("census", "d8")
    assert json.loads(r.stdout)["c_ab"] == 8


def test_decompose_chain():
    r = run_cli("decompose", "pauli:p=2,n=2")
    doc = json.loads(r.stdout)
    assert doc["classification"] == "weak_central"
    assert doc["links"][0]["order"] == 4


def test_lattice_dot_and_figures():
    r = run_cli("lattice", "d8", "--format", "dot")
    assert r.stdout.startswith("digraph")
    r = run_cli("lattice", "d8", "--filter", "paper_figure")
    doc = json.loads(r.stdout)
    assert len(doc["nodes"]) == 10 and len(doc["edges"]) == 15
    r = run_cli("lattice", "q8", "--filter", "paper_figure")
    assert r.returncode == 2


def test_lifted_subcommand():
    r = run_cli("lifted", "p=3,m=2,n=1")
    doc = json.loads(r.stdout)
    assert doc["order"] == 729
    assert doc["kernel_order"] == 3
    assert doc["image_order"] == 243


def test_verify_single_claim():
    r = run_cli("verify", "lemma3.1")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert len(doc) == 1
    entry = doc[0]
    for key in ("claim", "locator", "status", "witness", "wall_time_s"):
        assert key in entry
    assert entry["status"] == "confirmed"


def test_out_flag(tmp_path):
    out = tmp_path / "g.json"
    assert main(["build", "d8", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["order"] == 8


def test_build_deterministic():
    a = run_cli("build", "pauli:p=3,n=1").stdout
    b = run_cli("build", "pauli:p=3,n=1").stdout
    assert a == b


def test_help_documents_grammar():
    r = run_cli("--help")
    assert "spec" in r.stdout.lower()
    for sub in ("build", "decompose", "census", "lattice", "verify", "lifted"):
        assert sub in r.stdout
