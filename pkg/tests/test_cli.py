import io
import subprocess
import sys

import pytest

from histlab import cli
from histlab.constructions import antiprism, fragment_f1
from histlab.graph import from_graph6, to_graph6

OCTA = to_graph6(antiprism(3).graph)


def run(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_count(monkeypatch, capsys):
    code, out, err = run(monkeypatch, capsys, ["count"], f"{OCTA}\nBw\n")
    assert code == 0
    assert out == f"{OCTA}\t24\nBw\t0\n"
    assert "2 graph(s)" in err and "total 24" in err


def test_count_stop_after_and_exempt(monkeypatch, capsys):
    _, out, _ = run(monkeypatch, capsys, ["count", "--stop-after", "1", "-q"], OCTA + "\n")
    assert out == f"{OCTA}\t1\n"
    # the path 0-1-2 has a HIST once its middle vertex is exempt
    _, out, _ = run(monkeypatch, capsys, ["count", "--exempt", "1", "-q"], "Bg\n")
    assert out.split("\t")[1].strip() == "1"


def test_classify(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["classify", "-q"], f"Bw\nC]\n{OCTA}\n")
    assert code == 0
    assert out.splitlines() == [
        "Bw\tHIST_CRITICAL\tK1=true",
        "C]\tHIST_FREE\tK1=false",
        f"{OCTA}\tHAS_HIST\tK1=true",
    ]


def test_filter(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["filter", "--predicate", "critical", "-q"],
                       f"Bw\nC]\n{OCTA}\n")
    assert code == 0 and out == "Bw\n"
    _, out, _ = run(monkeypatch, capsys, ["filter", "--predicate", "hist-free", "-q"], f"Bw\nC]\n{OCTA}\n")
    assert out == "Bw\nC]\n"
    _, out, _ = run(monkeypatch, capsys, ["filter", "--min-hists", "25", "-q"], f"{OCTA}\n")
    assert out == ""
    _, out, _ = run(monkeypatch, capsys, ["filter", "--girth-min", "4", "-q"], f"Bw\nC]\n")
    assert out == "C]\n"
    _, out, _ = run(monkeypatch, capsys, ["filter", "-q"], "")
    assert out == ""


def test_unknown_predicate_is_usage_error(monkeypatch, capsys):
    with pytest.raises(SystemExit) as info:
        run(monkeypatch, capsys, ["filter", "--predicate", "nope"], "")
    assert info.value.code == 64


def test_parse_error_exit_code(monkeypatch, capsys):
    code, out, err = run(monkeypatch, capsys, ["count"], "Bw\nB!\n")
    assert code == 2
    assert "line 2" in err and out == ""


def test_make(monkeypatch, capsys):
    _, out, _ = run(monkeypatch, capsys, ["make", "antiprism", "3"])
    assert out == OCTA + "\n"
    _, out, _ = run(monkeypatch, capsys, ["make", "antiprism", "3-5"])
    assert [from_graph6(s).n for s in out.split()] == [6, 8, 10]
    _, out, _ = run(monkeypatch, capsys, ["make", "chain", "f1", "f1"])
    assert from_graph6(out.strip()).n == 14
    _, out, _ = run(monkeypatch, capsys, ["make", "hk", "4"])
    g = from_graph6(out.strip())
    assert g.n == 13 and g.has_edge(0, 3)  # a_1 a_4
    _, out, _ = run(monkeypatch, capsys, ["make", "linegraph"], "C~\n")
    assert from_graph6(out.strip()).n == 6
    _, out, _ = run(monkeypatch, capsys, ["make", "subdivide", "0", "1"], "Bw\n")
    assert from_graph6(out.strip()).is_regular(2)


def test_make_errors(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["make", "antiprism", "2"])
    assert code == 64
    code, _, _ = run(monkeypatch, capsys, ["make", "nosuch"])
    assert code == 64
    code, _, _ = run(monkeypatch, capsys, ["make", "glue", "Bw"])
    assert code == 64


def test_verify_fragment(monkeypatch, capsys):
    f = fragment_f1()
    code, out, _ = run(monkeypatch, capsys, ["verify-fragment", to_graph6(f.graph), "--x", "0", "--y", "1"])
    assert code == 0
    verdicts = [line.split("\t")[1] for line in out.splitlines() if line.startswith("property")]
    assert verdicts == ["PASS"] * 4
    code, out, _ = run(monkeypatch, capsys, ["verify-fragment", "--x", "0", "--y", "2"], "Bg\n")
    assert out.startswith("property1\tFAIL")
    code, _, err = run(monkeypatch, capsys, ["verify-fragment", "Bw", "--x", "0", "--y", "1"])
    assert code == 64 and "adjacent" in err


def test_tables_small_and_ceiling(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["tables", "t4", "--max-order", "8", "-q"])
    assert code == 0
    rows = [line.split() for line in out.splitlines()[3:]]
    assert rows == [["6", "1", "yes"], ["7", "1", "yes"], ["8", "4", "yes"]]
    code, _, err = run(monkeypatch, capsys, ["tables", "t3", "--max-order", "11"])
    assert code == 64 and "10" in err


def test_gen(monkeypatch, capsys):
    _, out, _ = run(monkeypatch, capsys, ["gen", "--order", "5", "--connectivity", "1", "-q"])
    assert len(out.split()) == 21
    code, _, _ = run(monkeypatch, capsys, ["gen", "--order", "12"])
    assert code == 64


def _histlab(args, stdin: str, env=None) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "histlab.cli", *args], input=stdin,
                          capture_output=True, text=True, env=env)


def test_pipeline_and_parallel_determinism(tmp_path):
    made = _histlab(["make", "antiprism", "3-7"], "")
    assert made.returncode == 0
    serial = _histlab(["count", "-q"], made.stdout)
    parallel = _histlab(["count", "-q", "--jobs", "2"], made.stdout)
    again = _histlab(["count", "-q", "--jobs", "2"], made.stdout)
    assert serial.returncode == parallel.returncode == 0
    assert serial.stdout == parallel.stdout == again.stdout
    assert [int(line.split("\t")[1]) for line in serial.stdout.splitlines()] == [
        2 * k * (2 * k - 2) for k in range(3, 8)]
    filtered = _histlab(["filter", "--min-hists", "100", "-q"], made.stdout)
    assert len(filtered.stdout.split()) == 2  # 120 and 168


def test_jobs_environment_default(monkeypatch):
    monkeypatch.setenv("HISTLAB_JOBS", "3")
    assert cli.build_parser().parse_args(["count"]).jobs == 3
    monkeypatch.setenv("HISTLAB_JOBS", "junk")
    assert cli.build_parser().parse_args(["count"]).jobs == 1


def test_run_report_aggregates():
    r = cli.RunReport("classify")
    r.add(1, "Bw", "HIST_CRITICAL")
    r.add(2, "C]", "HIST_FREE")
    r.add(3, "Bw", "HIST_CRITICAL")
    assert r.tallies() == {"HIST_CRITICAL": 2, "HIST_FREE": 1}
    assert sum(r.tallies().values()) == len(r.records)
