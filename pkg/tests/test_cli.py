import io
import json
import subprocess
import sys

import pytest

from shedlab.cli import EXIT_INTERNAL, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE, run
from shedlab.constructions import gen_Dn, gen_Pm
from shedlab.graph import cycle_graph, delete_vertex
from shedlab.graph6 import parse_graph6, to_graph6

C5 = to_graph6(cycle_graph(5))
C7 = to_graph6(cycle_graph(7))
P2 = to_graph6(gen_Pm(2))
P2_NAMES = json.dumps({str(v): gen_Pm(2).name(v) for v in range(9)})


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_exit_code_values():
    assert (EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_NEGATIVE) == (0, 1, 2, 3)


def test_check_c5_vd(capsys):
    code, out, _ = call(capsys, "check", C5, "--property", "vd")
    assert code == 0 and out.strip() == "vd: yes"


def test_check_all_properties_text_and_json_agree(capsys):
    code, text, _ = call(capsys, "check", C7)
    assert code == 0
    verdicts = dict(line.split(": ") for line in text.strip().splitlines())
    code, js, _ = call(capsys, "check", C7, "--json")
    doc = json.loads(js)
    assert verdicts["wc"] == "yes" and doc["wc"] is True
    assert verdicts["vd"] == "no" and doc["vd"] is False
    assert verdicts["girth"] == "7" and doc["girth"] == 7
    assert verdicts["pc"] == "no" and doc["pc"] is False


def test_check_stdin_and_file(capsys, monkeypatch, tmp_path):
    monkeypatch.setattr(sys, "stdin", io.StringIO(C5 + "\n"))
    code, out, _ = call(capsys, "check", "-", "--property", "wc")
    assert code == 0 and out.strip() == "wc: yes"
    f = tmp_path / "two.g6"
    f.write_text(f"{C5}\n{C7}\n")
    code, out, _ = call(capsys, "check", "--file", str(f), "--property", "vd", "--json")
    assert [d["vd"] for d in json.loads(out)] == [True, False]


def test_shed_p2_with_names(capsys):
    code, out, _ = call(capsys, "shed", P2, "--names", P2_NAMES)
    assert code == EXIT_NEGATIVE and out.strip() == "Shed = {z1,z2}; dominating: no"


def test_shed_exit_codes(capsys):
    code, out, _ = call(capsys, "shed", C5)
    assert code == EXIT_OK and "dominating: yes" in out
    code, _, _ = call(capsys, "shed", C7)
    assert code == EXIT_USAGE
    code, out, _ = call(capsys, "shed", P2, "--json")
    doc = json.loads(out)
    assert code == EXIT_NEGATIVE and doc["dominating"] is False and doc["shed"] == ["6", "7"]


def test_hvector(capsys):
    g = gen_Pm(2)
    y1 = g.label_of("y1")
    h = to_graph6(delete_vertex(g, y1))
    code, out, _ = call(capsys, "hvector", h)
    assert code == EXIT_NEGATIVE and "h: 1 5 5 -1" in out and "counts: 1 8 18 10" in out
    code, out, _ = call(capsys, "hvector", C5, "--json")
    assert code == EXIT_OK and json.loads(out)["h"] == [1, 3, 1]


def test_witness(capsys):
    code, out, _ = call(capsys, "witness", C5)
    assert code == 0 and out.strip().endswith("verified: yes") and out.startswith("Shed(")
    code, out, _ = call(capsys, "witness", P2, "--json", "--names", P2_NAMES)
    doc = json.loads(out)
    assert doc["verified"] is True and "shed" in doc["witness"]
    code, _, _ = call(capsys, "witness", C7)
    assert code == EXIT_USAGE


@pytest.mark.parametrize("argv,expected", [
    (["gen", "pm", "--m", "2"], gen_Pm(2)),
    (["gen", "dn", "--ks", "2,3"], gen_Dn([2, 3])),
    (["gen", "circulant", "--n", "5", "--s", "1"], cycle_graph(5)),
])
def test_gen_families(capsys, argv, expected):
    code, out, _ = call(capsys, *argv)
    assert code == 0 and parse_graph6(out.strip()).adj == expected.adj


def test_gen_names_and_constructions(capsys):
    code, out, _ = call(capsys, "gen", "ln", "--n", "1", "--names")
    g6, names = out.strip().splitlines()
    assert parse_graph6(g6).n == 9 and json.loads(names)["8"] == "w"
    for argv, n in (
        (["gen", "whisker", C5], 10),
        (["gen", "whisker", C5, "--set", "0,1"], 7),
        (["gen", "clique-append", C5, "--ks", "2,2,2,2,3"], 11),
        (["gen", "clique-whisker", C5, "--partition", "0,1;2,3;4"], 8),
        (["gen", "expand", C5, "--s", "2,1,1,1,1"], 6),
        (["gen", "duplicate", C5, "--vertex", "0"], 6),
    ):
        code, out, _ = call(capsys, *argv)
        assert code == 0 and parse_graph6(out.strip()).n == n


def test_census_formats(capsys):
    code, out, _ = call(capsys, "census", "--n", "6", "--jobs", "1")
    assert code == 0
    assert any(line.split() == ["6", "112", "27", "20", "0"] for line in out.splitlines())
    code, out, _ = call(capsys, "census", "--n", "1-5", "--jobs", "1", "--format", "json")
    assert [r["connected"] for r in json.loads(out)["rows"]] == [1, 1, 2, 6, 21]
    code, out, _ = call(capsys, "census", "--n", "4", "--jobs", "2", "--format", "csv")
    assert out.splitlines()[1] == "4,6,3,n/a,2,0"


def test_census_and_failures_from_file(capsys, tmp_path):
    f = tmp_path / "mix.g6"
    f.write_text("\n".join([C5, C7, P2]) + "\n")
    code, out, _ = call(capsys, "census", "--input", str(f), "--jobs", "1", "--format", "json")
    doc = json.loads(out)
    assert doc["failures"] == [P2]
    code, out, _ = call(capsys, "failures", "--input", str(f), "--json")
    assert [r["graph6"] for r in json.loads(out)] == [P2]
    code, out, _ = call(capsys, "failures", "--n", "6")
    assert code == 0 and out.strip().endswith("0 failure(s)")


@pytest.mark.parametrize("argv", [
    ["check", "D?"],
    ["check", "xyz"],
    ["shed", C5, C7],
    ["gen", "pm", "--m", "1"],
    ["gen", "circulant", "--n", "5", "--s", "3"],
    ["gen", "clique-whisker", C5, "--partition", "0,2;1;3;4"],
    ["census"],
    ["census", "--n", "9"],
    ["frobnicate"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == EXIT_USAGE and err


def test_missing_file(capsys, tmp_path):
    code, _, err = call(capsys, "check", "--file", str(tmp_path / "nope.g6"))
    assert code == EXIT_USAGE and "error" in err


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "shedlab", "check", C5, "--property", "vd"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "vd: yes"
    proc = subprocess.run([sys.executable, "-m", "shedlab", "shed", P2, "--names", P2_NAMES],
                          capture_output=True, text=True)
    assert proc.returncode == 3 and proc.stdout.strip() == "Shed = {z1,z2}; dominating: no"
