import io
import json

import pytest

from dyckzeta.cli import main

from conftest import EXAMPLE_WORD, EXAMPLE_ZETA


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "algorithm,word,image",
    [
        ("sweep", EXAMPLE_WORD, EXAMPLE_ZETA),
        ("area-vector", EXAMPLE_WORD, EXAMPLE_ZETA),
        ("scaffolding-conj", EXAMPLE_WORD, EXAMPLE_ZETA),
        ("scaffolding", "10", "10"),
        ("scaffolding", "110100", "110010"),
    ],
)
def test_map(capsys, algorithm, word, image):
    assert run(capsys, "map", "--algorithm", algorithm, word) == (0, image + "\n", "")


def test_map_preserves_order(capsys):
    code, out, _ = run(capsys, "map", "1010", "1100", "10")
    assert out.splitlines() == ["1100", "1010", "10"]


def test_map_validates_before_work(capsys):
    code, out, err = run(capsys, "map", "1010", "1001")
    assert code == 2 and out == ""
    assert "line 2" in err


def test_map_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("1100\n\n110100\n"))
    assert run(capsys, "map", "--algorithm", "scaffolding")[1] == "1010\n110010\n"


def test_map_file_and_out(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text("10\n1010\n", encoding="utf-8")
    dst = tmp_path / "out.txt"
    assert run(capsys, "map", "--file", str(src), "--out", str(dst))[0] == 0
    assert dst.read_bytes() == b"10\n1100\n"


def test_map_file_parse_error(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text("10\n12\n", encoding="utf-8")
    code, out, err = run(capsys, "map", "--file", str(src))
    assert code == 2 and out == "" and "line 2" in err


def test_stats(capsys):
    assert run(capsys, "stats", "1010", "1100", "10")[1] == "1010,0,1,1\n1100,1,0,0\n10,0,0,0\n"


@pytest.mark.parametrize(
    "n,text", [(1, "1"), (2, "q + t"), (3, "q^3 + q^2*t + q*t^2 + q*t + t^3")]
)
@pytest.mark.parametrize("mode", ["area_bounce", "dinv-area"])
def test_qtcatalan(capsys, n, text, mode):
    assert run(capsys, "qtcatalan", str(n), "--mode", mode)[1] == text + "\n"


def test_qtcatalan_json(capsys):
    out = run(capsys, "qtcatalan", "2", "--format", "json")[1]
    assert json.loads(out) == [{"q": 1, "t": 0, "c": "1"}, {"q": 0, "t": 1, "c": "1"}]


def test_qtcatalan_range(capsys):
    assert run(capsys, "qtcatalan", "15")[0] == 2


def test_trace(capsys):
    code, out, _ = run(capsys, "trace", "10")
    doc = json.loads(out)
    assert code == 0 and len(doc["steps"]) == 2
    doc = json.loads(run(capsys, "trace", EXAMPLE_WORD, "--format", "json")[1])
    assert [s["queue"] for s in doc["steps"]] == [[8], [13, 9, 7, 5, 3], [14, 12, 10, 6, 4, 2], [15, 11, 1], [16]]


def test_trace_variant_flags(capsys):
    code, out, _ = run(capsys, "trace", "110100", "--queue-order", "increasing", "--level-convention", "pre_step")
    doc = json.loads(out)
    assert doc["variant"]["queue_order"] == "increasing"
    assert doc["steps"][0]["queue"] == [2, 4]


def test_trace_invalid(capsys):
    assert run(capsys, "trace", "1001")[0] == 2


def test_trace_variant_failure_is_internal_error(capsys):
    assert run(capsys, "trace", "10", "--no-peak-in-queue")[0] == 1


def test_verify(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "1..8", "--checks", "all", "--workers", "2", "--report-dir", str(tmp_path))
    assert code == 0
    assert "INFO scaffolding-direct" in out
    assert (tmp_path / "summary.csv").exists()
    assert (tmp_path / "classical-equivalence.json").exists()


def test_verify_variant_search(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "3", "--checks", "variant-search", "--report-dir", str(tmp_path))
    assert code == 0
    assert sum(1 for line in out.splitlines() if line.startswith("  n=3 ")) == 16
    doc = json.loads((tmp_path / "variant-search.json").read_text(encoding="utf-8"))
    assert len(doc["details"]["3"]) == 16


def test_verify_report_dir_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("DYCKZETA_REPORT_DIR", str(tmp_path / "env"))
    assert run(capsys, "verify", "2", "--checks", "bijection", "--workers", "1")[0] == 0
    assert (tmp_path / "env" / "bijection.json").exists()


@pytest.mark.parametrize("argv", [["verify", "20"], ["verify", "a..b"], ["verify", "3", "--checks", "nope"]])
def test_verify_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_dataset(capsys):
    assert run(capsys, "dataset", "1", "--format", "tokens")[1] == "bos 1 0 eos\tbos 1 0 eos\n"
    assert run(capsys, "dataset", "2", "--format", "csv")[1] == "1010,1100\n1100,1010\n"
    assert run(capsys, "dataset", "15")[0] == 2


def test_map_round_trips_through_inverse(capsys):
    from dyckzeta import enumerate_dyck, inverse_zeta, parse_word

    words = [str(w) for w in enumerate_dyck(6)]
    out = run(capsys, "map", *words)[1].splitlines()
    table = inverse_zeta(6)
    assert [str(table[parse_word(z)]) for z in out] == words
