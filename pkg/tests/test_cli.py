import json

import pytest

from subcubic_packing.cli import EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE, main
from subcubic_packing.formats import emit_graph6, emit_multigraph_text


@pytest.fixture
def fig1_file(tmp_path, fig1):
    path = tmp_path / "fig1.mg"
    path.write_text(emit_multigraph_text(fig1))
    return path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_sharpness(capsys):
    code, out = run(capsys, "sharpness")
    assert code == EXIT_OK
    assert len(json.loads(out)["details"]["legs"]) == 2


def test_petersen(capsys):
    code, out = run(capsys, "petersen")
    assert code == EXIT_OK and json.loads(out)["passed"]


def test_solve_unsat_exit(capsys, fig1_file):
    code, out = run(capsys, "solve", "--spec", "1,2^6", "--good", "--in", str(fig1_file))
    assert code == EXIT_NEGATIVE
    assert json.loads(out)["status"] == "UNSAT"


def test_solve_then_verify(capsys, tmp_path, fig1_file):
    code, out = run(capsys, "solve", "--spec", "1,2^7", "--good", "--in", str(fig1_file))
    assert code == EXIT_OK
    solved = tmp_path / "solved.json"
    solved.write_text(out)
    code, out = run(capsys, "verify", "--spec", "1,2^7", "--good", "--coloring", str(solved))
    assert code == EXIT_OK
    assert json.loads(out)["valid"] and json.loads(out)["complete"]


def test_verify_tampered(capsys, tmp_path, fig1_file):
    code, out = run(capsys, "solve", "--spec", "1,2^7", "--good", "--in", str(fig1_file))
    doc = json.loads(out)["document"]
    doc["colors"] = {k: 1 for k in doc["colors"]}
    tampered = tmp_path / "tampered.json"
    tampered.write_text(json.dumps(doc))
    code, out = run(capsys, "verify", "--spec", "1,2^7", "--good", "--coloring", str(tampered))
    assert code == EXIT_NEGATIVE
    assert json.loads(out)["violations"]


def test_solve_graph6_input(capsys, tmp_path, petersen):
    path = tmp_path / "p.g6"
    path.write_text(emit_graph6(petersen) + "\n")
    code, out = run(capsys, "solve", "--spec", "1,2^5", "--good", "--in", str(path), "--format", "g6")
    assert code == EXIT_OK


def test_node_limit_is_negative_not_usage(capsys, fig1_file):
    code, out = run(capsys, "solve", "--spec", "1,2^6", "--good", "--in", str(fig1_file), "--node-limit", "2")
    assert code == EXIT_NEGATIVE
    assert json.loads(out)["status"] == "INCONCLUSIVE"


@pytest.mark.parametrize("argv", [
    ["solve", "--spec", "2,1", "--in", "x"],
    ["solve", "--spec", "1,2^7"],
    ["lemma9", "--max-n", "12"],
    ["enumerate", "--n", "11"],
    ["random", "--n", "1", "--seed", "0"],
    ["cut4", "--mode", "sideways"],
    ["nonsense"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == EXIT_USAGE


def test_bad_input_file(capsys, tmp_path):
    path = tmp_path / "bad.mg"
    path.write_text("mg 2 1\ne 0 0\n")
    assert main(["solve", "--spec", "2", "--in", str(path)]) == EXIT_USAGE
    assert main(["solve", "--spec", "2", "--in", str(tmp_path / "missing")]) == EXIT_USAGE


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "--n", "4")
    assert code == EXIT_OK and len(out.split()) == 6
    code, out = run(capsys, "enumerate", "--n", "5", "--count-only")
    assert json.loads(out)["count"] == 10


def test_random_is_reproducible(capsys):
    _, first = run(capsys, "random", "--n", "9", "--seed", "4", "--parallel-prob", "0.5", "--text")
    _, second = run(capsys, "random", "--n", "9", "--seed", "4", "--parallel-prob", "0.5", "--text")
    assert first == second and first.startswith("mg 9 ")


def test_lemma9_small(capsys):
    code, out = run(capsys, "lemma9", "--max-n", "4")
    assert code == EXIT_OK and json.loads(out)["examined"] == 10


def test_cut4_with_instances(capsys):
    code, out = run(capsys, "cut4", "--mode", "none", "--instances", "2", "--seed", "1")
    assert code == EXIT_OK
    assert [r["passed"] for r in json.loads(out)["reports"]] == [True, True]
