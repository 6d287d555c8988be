import io
import json

import pytest

from cfclab import formats
from cfclab.cli import main
from cfclab.errors import CoverageError, FormatError
from cfclab.families import FamilySpec, generate, random_tree
from cfclab.verify import EdgeColoring


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


def test_edge_list_round_trip():
    t = random_tree(11, 4)
    text = formats.write_tree(t)
    back, rest = formats.read_tree(text)
    assert back == t and rest == []
    canon = formats.write_tree(t, canonical=True)
    again, _ = formats.read_tree(canon)
    assert formats.write_tree(again, canonical=True) == canon
    assert formats.write_tree(again) == canon


def test_comments_and_trailing_coloring():
    text = "# a path\n3 2\n0 1\n\n# middle\n1 2\nk 2\n1 2\n0 1\n"
    t, rest = formats.read_tree(text)
    assert t.edges == ((0, 1), (1, 2))
    assert formats.read_coloring(rest, t.m) == EdgeColoring((1, 2), 2)


def test_format_errors():
    with pytest.raises(FormatError):
        formats.read_tree("")
    with pytest.raises(FormatError):
        formats.read_tree("3 2\n0 1\n")
    with pytest.raises(FormatError):
        formats.read_tree("3 2\n0 x\n1 2\n")
    with pytest.raises(CoverageError):
        formats.read_coloring("k 2\n0 1\n", 2)
    with pytest.raises(FormatError):
        formats.read_coloring("0 1\n0 2\n", 2)


def test_coloring_round_trip():
    c = EdgeColoring((3, 1, 2, 1), 3)
    assert formats.read_coloring(formats.write_coloring(c), 4) == c


def test_gen_decompose_pipeline(cli):
    code, tree_text, _ = cli(["gen", "path", "8"])
    assert code == 0
    code, out, _ = cli(["decompose"], tree_text)
    report = json.loads(out)
    assert code == 0 and report["d"] == 3
    assert sorted(set(report["coloring"])) == [1, 2, 3]
    assert report["rounds"] == [[3], [1, 5], [0, 2, 4, 6]]


def test_gen_certificate_verify(cli):
    code, text, _ = cli(["gen", "Q", "4", "--certificate"])
    assert code == 0
    code, out, _ = cli(["verify"], text)
    assert (code, out) == (0, "VALID\n")


def test_gen_certificate_to_file(cli, tmp_path):
    cert = tmp_path / "r4.col"
    code, text, _ = cli(["gen", "R", "4", "--certificate", str(cert)])
    tree_file = tmp_path / "r4.txt"
    tree_file.write_text(text)
    code, out, _ = cli(["verify", str(tree_file), "--coloring", str(cert)])
    assert code == 0


def test_verify_reports_witness(cli):
    code, out, _ = cli(["verify"], "4 3\n0 1\n1 2\n2 3\n0 1\n1 2\n2 2\n")
    assert (code, out) == (2, "WITNESS 1 3\n")


def test_verify_modes(cli):
    text = "4 3\n0 1\n1 2\n2 3\n0 1\n1 1\n2 2\n"
    assert cli(["verify", "--mode", "ranking"], text)[:2] == (2, "WITNESS 0 1\n")
    assert cli(["verify", "--mode", "odd"], "3 2\n0 1\n1 2\n0 1\n1 1\n")[:2] == (2, "WITNESS 0 2\n")


def test_exact_json_schema(cli):
    _, text, _ = cli(["gen", "complete_binary", "3"])
    code, out, _ = cli(["exact", "cfc"], text)
    report = json.loads(out)
    assert code == 0
    assert set(report) == {"value", "lb", "ub", "closed_form", "nodes", "certificate"}
    assert report["value"] == 4 and len(report["certificate"]) == 6
    for kind, value in (("rank", 4), ("oc", 4)):
        assert json.loads(cli(["exact", kind], text)[1])["value"] == value


def test_exact_budget_exit_code(cli):
    _, text, _ = cli(["gen", "complete_binary", "4"])
    code, out, _ = cli(["exact", "cfc", "--budget", "3"], text)
    assert code == 3 and json.loads(out)["error"] == "budget_exceeded"


def test_budget_from_environment(cli, monkeypatch):
    monkeypatch.setenv("CFCLAB_BUDGET", "3")
    _, text, _ = cli(["gen", "complete_binary", "4"])
    assert cli(["exact", "cfc"], text)[0] == 3
    # flags win over the environment
    assert cli(["exact", "cfc", "--budget", "100000"], text)[0] == 0


def test_critical_and_bounds(cli):
    _, text, _ = cli(["gen", "path", "6"])
    code, out, _ = cli(["critical"], text)
    assert code == 0 and json.loads(out)["critical"] is False
    code, out, _ = cli(["bounds"], "5 5\n0 1\n1 2\n2 3\n3 0\n3 4\n")
    assert json.loads(out) == {"h": 1, "lower": 1, "upper": 2, "resolved": None}


def test_decompose_dot(cli):
    _, text, _ = cli(["gen", "star", "3"])
    code, out, _ = cli(["decompose", "--format", "dot"], text)
    assert code == 0 and out.startswith("graph T {")
    assert out.count(" -- ") == 3
    assert 'color="#1f77b4"' in out


def test_usage_errors(cli):
    code, _, err = cli(["gen", "path"])
    assert code == 1 and "usage" in err
    code, _, err = cli(["gen", "Q", "1"])
    assert code == 1 and "BadParams" in err
    code, _, err = cli(["verify"], "3 3\n0 1\n1 2\n2 0\n")
    assert code == 1 and "CycleDetected" in err
    assert cli([])[0] == 1


def test_gen_deterministic_and_canonical(cli):
    a = cli(["gen", "random", "12", "--seed", "5"])[1]
    b = cli(["gen", "random", "12", "--seed", "5"])[1]
    assert a == b
    canon = cli(["gen", "random", "12", "--seed", "5", "--canonical"])[1]
    t, _ = formats.read_tree(canon)
    assert formats.write_tree(t, canonical=True) == canon
    assert {frozenset(e) for e in t.edges} == {frozenset(e) for e in generate(FamilySpec("random", (12,), 5)).edges}


def test_sweep_command(cli, tmp_path):
    out = tmp_path / "s.jsonl"
    code, summary, _ = cli(["sweep", "--count", "20", "--n-min", "4", "--n-max", "9", "--seed", "7", "--out", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 20 and json.loads(summary)["records"] == 20
    code, _, err = cli(["sweep", "--n-max", "40", "--out", str(out)])
    assert code == 1 and "CFCLAB_MAX_N" in err
