"""End-to-end command line behaviour, driven in-process through main()."""

import io
import json
import sys
from types import SimpleNamespace

import pytest

from abelruns.cli import main
from helpers import REF_TEXT, CORRECT_ROWS


REF_ALL_RUNS = """\
1\t2\t0\t0\t3
1\t7\t0\t0\t8
1\t9\t0\t0\t11
2\t0\t1\t1\t7
2\t3\t1\t1\t10
3\t0\t0\t1\t9
3\t0\t2\t2\t9
4\t0\t3\t1\t11
5\t0\t0\t2\t11
"""


@pytest.fixture
def ref_file(tmp_path):
    path = tmp_path / "ref.txt"
    path.write_text(REF_TEXT)
    return str(path)


def fake_stdin(monkeypatch, data: bytes):
    monkeypatch.setattr(sys, "stdin", SimpleNamespace(buffer=io.BytesIO(data)))


def test_find_reference_word(ref_file, capsys):
    assert main(["find", "--period", "a:2,b:2", ref_file]) == 0
    assert capsys.readouterr().out == "0\t3\t1\t11\n"


def test_find_section_one_example(tmp_path, capsys):
    path = tmp_path / "w.txt"
    path.write_text("ababaaa")
    assert main(["find", "--period", "a:1,b:1", str(path)]) == 0
    assert capsys.readouterr().out == "0\t1\t1\t5\n"


def test_find_without_runs_is_silent(tmp_path, capsys):
    path = tmp_path / "w.txt"
    path.write_text("aabb")
    assert main(["find", "--period", "a:1,b:1", str(path)]) == 0
    assert capsys.readouterr().out == ""


def test_find_json_records(ref_file, capsys):
    assert main(["find", "--period", "a:2,b:2", "--json", ref_file]) == 0
    assert json.loads(capsys.readouterr().out) == {"b": 0, "h": 3, "t": 1, "e": 11}


def test_find_reads_stdin(monkeypatch, capsys):
    fake_stdin(monkeypatch, REF_TEXT.encode())
    assert main(["find", "--period", "a:2,b:2", "-"]) == 0
    assert capsys.readouterr().out == "0\t3\t1\t11\n"


def test_find_strips_one_trailing_newline(tmp_path, capsys):
    path = tmp_path / "w.txt"
    path.write_bytes(REF_TEXT.encode() + b"\n")
    assert main(["find", "--period", "a:2,b:2", str(path)]) == 0
    assert capsys.readouterr().out == "0\t3\t1\t11\n"


def test_find_stream_matches_batch(tmp_path, capsys):
    path = tmp_path / "w.txt"
    path.write_bytes(b"abaababaabbb\n")
    assert main(["find", "--period", "a:2,b:2", "--stream", str(path)]) == 0
    streamed = capsys.readouterr().out
    assert main(["find", "--period", "a:2,b:2", str(path)]) == 0
    assert streamed == capsys.readouterr().out == "0\t3\t1\t11\n"


def test_find_stream_from_stdin(monkeypatch, capsys):
    fake_stdin(monkeypatch, b"aaaaaa")
    assert main(["find", "--period", "a:2", "--stream", "-"]) == 0
    assert capsys.readouterr().out == "0\t0\t0\t5\n"


def test_find_oracle_engine_agrees(ref_file, capsys):
    assert main(["find", "--period", "a:2,b:2", "--engine", "oracle", ref_file]) == 0
    assert capsys.readouterr().out == "0\t3\t1\t11\n"


def test_find_handles_symbols_outside_period(tmp_path, capsys):
    path = tmp_path / "w.txt"
    path.write_text("abaxbaab")
    assert main(["find", "--period", "a:1,b:1", str(path)]) == 0
    online = capsys.readouterr().out
    assert main(["find", "--period", "a:1,b:1", "--engine", "oracle", str(path)]) == 0
    assert online == capsys.readouterr().out
    assert all(int(line.split("\t")[3]) < 3 or int(line.split("\t")[0]) > 3
               for line in online.splitlines())


def test_find_trace_lines(ref_file, capsys):
    assert main(["find", "--period", "a:2,b:2", "--trace", ref_file]) == 0
    captured = capsys.readouterr()
    assert captured.err.splitlines() == [
        "# candidate i=8 b=0 h=1 t=3 e=7",
        "# candidate i=11 b=1 h=3 t=3 e=10",
        "# candidate i=12 b=3 h=3 t=2 e=11",
        "# candidate i=12 b=0 h=3 t=1 e=11",
    ]
    assert captured.out == "0\t3\t1\t11\n"


def test_all_runs_reference_word(ref_file, capsys):
    assert main(["all-runs", ref_file]) == 0
    assert capsys.readouterr().out == REF_ALL_RUNS


def test_all_runs_json(tmp_path, capsys):
    path = tmp_path / "w.txt"
    path.write_text("aaaa")
    assert main(["all-runs", "--json", str(path)]) == 0
    records = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert records == [
        {"p": 1, "b": 0, "h": 0, "t": 0, "e": 3},
        {"p": 2, "b": 0, "h": 0, "t": 0, "e": 3},
    ]


def test_all_runs_single_character(tmp_path, capsys):
    path = tmp_path / "w.txt"
    path.write_text("a")
    assert main(["all-runs", str(path)]) == 0
    assert capsys.readouterr().out == ""


def test_all_runs_dump_l_grid(ref_file, capsys):
    assert main(["all-runs", "--dump-L", ref_file]) == 0
    out = capsys.readouterr().out
    grid = [line[4:] for line in out.splitlines() if line.startswith("# L ")]
    assert grid == CORRECT_ROWS


def test_all_runs_oracle_engine_agrees(ref_file, capsys):
    assert main(["all-runs", "--engine", "oracle", ref_file]) == 0
    assert capsys.readouterr().out == REF_ALL_RUNS


def test_all_runs_raw_keeps_newline_symbol(tmp_path, capsys):
    path = tmp_path / "w.txt"
    path.write_bytes(b"a\na\n")
    assert main(["all-runs", str(path)]) == 0
    assert capsys.readouterr().out == ""
    assert main(["all-runs", "--raw", str(path)]) == 0
    assert capsys.readouterr().out == "2\t0\t0\t0\t3\n"


def test_compare_on_file_with_period(ref_file, capsys):
    assert main(["compare", "--period", "a:2,b:2", ref_file]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# ok 1/1")


def test_compare_random_corpus_with_period(capsys):
    assert main(["compare", "--period", "a:2,b:1", "--random", "20",
                 "--sigma", "2", "--length", "48", "--seed", "3"]) == 0
    captured = capsys.readouterr()
    assert captured.err == ""
    assert captured.out.startswith("# ok 20/20")


def test_compare_random_corpus_all_periods(capsys):
    assert main(["compare", "--random", "6", "--sigma", "2",
                 "--length", "32", "--seed", "5"]) == 0
    assert capsys.readouterr().out.startswith("# ok 6/6")


def test_compare_needs_input():
    assert main(["compare"]) == 2


def test_compare_detects_corrupted_engine(ref_file, monkeypatch, capsys):
    monkeypatch.setattr("abelruns.cli.abelian_runs", lambda *a, **k: [])
    assert main(["compare", "--period", "a:2,b:2", ref_file]) == 1
    captured = capsys.readouterr()
    assert "# mismatch" in captured.err
    assert "only-oracle\t0\t3\t1\t11" in captured.out


def test_gen_unary_alphabet(capsys):
    assert main(["gen", "--sigma", "1", "--length", "3", "--seed", "99"]) == 0
    assert capsys.readouterr().out == "aaa"


def test_gen_empty_word(capsys):
    assert main(["gen", "--sigma", "2", "--length", "0", "--seed", "7"]) == 0
    assert capsys.readouterr().out == ""


def test_gen_is_deterministic(capsys):
    assert main(["gen", "--sigma", "3", "--length", "64", "--seed", "11"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "--sigma", "3", "--length", "64", "--seed", "11"]) == 0
    assert capsys.readouterr().out == first
    assert len(first) == 64 and set(first) <= set("abc")


def test_gen_to_file(tmp_path, capsys):
    out = tmp_path / "word.txt"
    assert main(["gen", "--sigma", "2", "--length", "10", "--seed", "4",
                 "-o", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert len(out.read_text()) == 10


def test_gen_rejects_bad_sigma():
    assert main(["gen", "--sigma", "0", "--length", "5"]) == 2
    assert main(["gen", "--sigma", "27", "--length", "5"]) == 2


def test_period_syntax_errors(ref_file):
    assert main(["find", "--period", "a:x", ref_file]) == 2
    assert main(["find", "--period", "a", ref_file]) == 2
    assert main(["find", "--period", "ab:1", ref_file]) == 2
    assert main(["find", "--period", "a:1,a:2", ref_file]) == 2
    assert main(["find", "--period", "a:0,b:0", ref_file]) == 2
    assert main(["find", "--period", "a:-1", ref_file]) == 2


def test_unknown_flag_is_usage_error(ref_file, capsys):
    assert main(["find", "--period", "a:1", "--bogus", ref_file]) == 2
    capsys.readouterr()


def test_missing_file_is_io_error(capsys):
    assert main(["find", "--period", "a:1", "/nonexistent/path.txt"]) == 3
    assert main(["all-runs", "/nonexistent/path.txt"]) == 3
    capsys.readouterr()


def test_bench_tsv_and_state_stability(capsys):
    assert main(["bench", "--period", "a:3,b:3", "--sizes", "2048,4096",
                 "--seed", "7"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "# n\tp\twall_s\twindow_comparisons\tflush_iterations\tstate_bytes\toperations\truns"
    first = lines[1].split("\t")
    second = lines[2].split("\t")
    assert (first[0], second[0]) == ("2048", "4096")
    ratio = int(second[3]) / int(first[3])
    assert 1.6 <= ratio <= 2.4
    assert first[5] == second[5]


def test_bench_flush_work_scales_linearly_in_norm(capsys):
    records = {}
    for flag in ("a:3,b:3", "a:6,b:6"):
        assert main(["bench", "--period", flag, "--sizes", "8192",
                     "--seed", "7", "--json"]) == 0
        records[flag] = json.loads(capsys.readouterr().out)
    assert records["a:6,b:6"]["flush_iterations"] <= 2 * records["a:3,b:3"]["flush_iterations"]


def test_bench_json_on_file(ref_file, capsys):
    assert main(["bench", "--period", "a:2,b:2", ref_file, "--json"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["n"] == 12
    assert rec["p"] == 4
    assert rec["runs"] == 1
    assert rec["operations"] > 0


def test_bench_plot_writes_png(tmp_path, capsys):
    target = tmp_path / "fig.png"
    assert main(["bench", "--period", "a:2,b:1", "--sizes", "256,512",
                 "--plot", str(target)]) == 0
    capsys.readouterr()
    assert target.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_bench_rejects_bad_sizes(capsys):
    assert main(["bench", "--period", "a:1", "--sizes", "10,zap"]) == 2
    assert main(["bench", "--period", "a:1", "--sizes", "0"]) == 2
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()
