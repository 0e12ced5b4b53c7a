"""CLI: exit codes, report shapes, determinism."""

import json
import subprocess
import sys

import pytest

from malg import make_map
from malg.cli import main
from malg.formats import dumps_canonical, map_to_obj, space_to_obj


@pytest.fixture
def phi_file(phi, tmp_path):
    path = tmp_path / "phi.json"
    path.write_text(dumps_canonical(map_to_obj(phi)))
    return str(path)


@pytest.fixture
def psi_file(psi, tmp_path):
    path = tmp_path / "psi.json"
    path.write_text(dumps_canonical(map_to_obj(psi)))
    return str(path)


def run_cli(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_validate_ok(capsys, s1, tmp_path):
    path = tmp_path / "s1.json"
    path.write_text(dumps_canonical(space_to_obj(s1)))
    code, report = run_cli(capsys, ["validate", str(path)])
    assert code == 0 and report["exit_code"] == 0
    entry = report["results"]["files"][0]
    assert entry["kind"] == "space"
    assert entry["sigma_finite"] is True
    assert entry["canonical"] == space_to_obj(s1)
    assert report["violations"] == []
    assert str(path) in report["inputs"]


def test_validate_flags_infinite_space(capsys, tmp_path):
    doc = {"points": ["w"], "atoms": [["w"]], "weights": ["inf"]}
    path = tmp_path / "inf.json"
    path.write_text(json.dumps(doc))
    code, report = run_cli(capsys, ["validate", str(path)])
    assert code == 0
    assert report["results"]["files"][0]["sigma_finite"] is False


def test_validate_partition_overlap(capsys, tmp_path):
    doc = {"points": ["a", "b"], "atoms": [["a"], ["a", "b"]], "weights": ["1", "1"]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, report = run_cli(capsys, ["validate", str(path)])
    assert code == 2
    assert report["results"]["files"][0]["error"] == "PartitionOverlap"


def test_validate_non_measurable_map(capsys, tmp_path):
    doc = {
        "source": {"points": ["r1", "r2"], "atoms": [["r1", "r2"]], "weights": ["1"]},
        "target": {"points": ["q1", "q2"], "atoms": [["q1"], ["q2"]], "weights": ["1", "2"]},
        "fn": {"r1": "q1", "r2": "q2"},
    }
    path = tmp_path / "split.json"
    path.write_text(json.dumps(doc))
    code, report = run_cli(capsys, ["validate", str(path)])
    assert code == 2
    entry = report["results"]["files"][0]
    assert entry["error"] == "NotMeasurable"
    assert "r1" in entry["detail"]


def test_validate_missing_file(capsys, tmp_path):
    code, report = run_cli(capsys, ["validate", str(tmp_path / "nope.json")])
    assert code == 2


def test_classify_phi(capsys, phi_file):
    code, report = run_cli(capsys, ["classify", phi_file])
    assert code == 0
    got = report["results"]["classification"]
    assert got["inp"] is True
    assert got["compression"] == "5/6"
    assert got["degenerate"] is False
    assert "lipschitz" not in got
    assert report["results"]["sigma_finite"] == {"source": True, "target": True}


def test_classify_psi(capsys, psi_file):
    code, report = run_cli(capsys, ["classify", psi_file])
    assert code == 0
    got = report["results"]["classification"]
    assert got["inp"] is False
    assert got["compression"] == "unbounded"


def test_classify_constant_with_metric(capsys, s3_metric, s2_metric, tmp_path):
    const = make_map(s3_metric.base, s2_metric.base, {"r1": "q1", "r2": "q1"})
    path = tmp_path / "const.json"
    path.write_text(dumps_canonical(map_to_obj(const, s3_metric, s2_metric)))
    code, report = run_cli(capsys, ["classify", str(path)])
    assert code == 0
    got = report["results"]["classification"]
    assert got["lipschitz"] == "0"
    assert got["compression"] == "3"
    assert got["bounded_deformation"] is True
    assert got["short"] is True


def test_classify_map_with_path_refs(capsys, phi, tmp_path):
    (tmp_path / "src.json").write_text(dumps_canonical(space_to_obj(phi.source)))
    (tmp_path / "tgt.json").write_text(dumps_canonical(space_to_obj(phi.target)))
    doc = {"source": "src.json", "target": "tgt.json", "fn": dict(phi.point_fn)}
    path = tmp_path / "map.json"
    path.write_text(json.dumps(doc))
    code, report = run_cli(capsys, ["classify", str(path)])
    assert code == 0
    assert report["results"]["classification"]["compression"] == "5/6"
    assert len(report["inputs"]) == 3


def test_theorem_check_single_map(capsys, phi_file):
    code, report = run_cli(capsys, ["theorem-check", phi_file])
    assert code == 0
    rec = report["results"]["instances"][0]
    assert rec["compression"] == rec["lipschitz_fast"] == rec["lipschitz_bruteforce"] == "5/6"
    assert rec["agree"] is True
    assert rec["degenerate"] is False
    assert rec["witness"] == {"pair": [[0], []], "attained_at_empty": True}


def test_theorem_check_trials(capsys):
    code, report = run_cli(capsys, ["theorem-check", "--trials", "25", "--seed", "7"])
    assert code == 0
    assert report["results"]["checked"] == 25
    assert report["results"]["agreements"] == 25
    assert report["violations"] == []


def test_theorem_check_budget_exceeded(capsys, phi_file):
    code, report = run_cli(capsys, ["theorem-check", phi_file, "--budget", "1"])
    assert code == 3
    assert report["results"]["error"]["error"] == "BudgetExceeded"


def test_theorem_check_requires_input():
    with pytest.raises(SystemExit):
        main(["theorem-check"])


def test_theorem_check_mutation_exits_1(capsys, phi_file, monkeypatch):
    # plant a wrong fast path; the report must flag the disagreement with
    # a serialized counterexample and exit 1
    from fractions import Fraction

    import malg.cli as cli
    from malg.maps import CompressionResult

    monkeypatch.setattr(
        cli, "lipschitz_fast", lambda m: CompressionResult.bounded(Fraction(1, 7))
    )
    code, report = run_cli(capsys, ["theorem-check", phi_file])
    assert code == 1
    violation = report["violations"][0]
    assert violation["law"] == "compression-lipschitz-agreement"
    witness = violation["witness"]
    assert witness["lipschitz_fast"] == "1/7"
    assert witness["compression"] == "5/6"
    assert witness["instance"]["fn"]["p1"] == "q1"


def test_validate_reports_per_file(capsys, s1, tmp_path):
    good = tmp_path / "good.json"
    good.write_text(dumps_canonical(space_to_obj(s1)))
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"points": ["a"], "atoms": [[]], "weights": ["1"]}))
    code, report = run_cli(capsys, ["validate", str(bad), str(good)])
    assert code == 2
    entries = report["results"]["files"]
    assert entries[0]["error"] == "PartitionGap"
    assert entries[1]["kind"] == "space"


def test_theorem_check_deterministic_output(tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    argv = ["theorem-check", "--trials", "30", "--seed", "5"]
    assert main(argv + ["--output", str(out1)]) == 0
    assert main(argv + ["--output", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_functor_check_identity_pair(capsys, phi, s1, tmp_path):
    from malg import identity_map

    ident = identity_map(s1)
    f_path = tmp_path / "id.json"
    f_path.write_text(dumps_canonical(map_to_obj(ident)))
    g_path = tmp_path / "phi.json"
    g_path.write_text(dumps_canonical(map_to_obj(phi)))
    code, report = run_cli(capsys, ["functor-check", str(f_path), str(g_path)])
    assert code == 0
    assert report["results"]["submultiplicative"] is True
    assert report["results"]["compression_gf"] == "5/6"
    assert report["violations"] == []


def test_functor_check_non_composable(capsys, phi_file):
    code, report = run_cli(capsys, ["functor-check", phi_file, phi_file])
    assert code == 2
    assert report["results"]["error"] == "SpaceMismatch"


def test_text_format(capsys, phi_file):
    code = main(["classify", phi_file, "--format", "text"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("command: classify\n")
    assert "exit_code: 0" in out
    assert "violations: none" in out


def test_module_entry_point(phi_file):
    proc = subprocess.run(
        [sys.executable, "-m", "malg", "classify", phi_file],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["classification"]["compression"] == "5/6"
