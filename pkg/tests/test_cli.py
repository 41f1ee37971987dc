import io
import json

import pytest

from crystaldict.main import run
from crystaldict.services.selfcheck import GOLDEN_EXAMPLE


@pytest.fixture
def golden_file(tmp_path):
    path = tmp_path / "golden.json"
    path.write_text(json.dumps({"segments": GOLDEN_EXAMPLE.to_pairs()}), encoding="utf-8")
    return str(path)


def _stdin(monkeypatch, document):
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(document)))


def test_seg_eps(golden_file, capsys):
    assert run(["seg", "eps", "--i", "7", "--file", golden_file]) == 0
    assert capsys.readouterr().out == '{"eps": 3}\n'


def test_seg_e_repeated_to_null(golden_file, capsys):
    assert run(["seg", "e", "--i", "7", "--reps", "4", "--file", golden_file]) == 0
    assert json.loads(capsys.readouterr().out) == {"null": True}


def test_seg_stats_and_minlambda(golden_file, capsys):
    run(["seg", "stats", "--file", golden_file])
    assert json.loads(capsys.readouterr().out) == {"n": 64, "m": 14}
    run(["seg", "minlambda", "--file", golden_file])
    assert json.loads(capsys.readouterr().out) == {"lambda": [5, 5, 4, 3, 3, 3, 3, 2, 2, -1, -1]}


def test_seg_path_from_stdin(monkeypatch, capsys):
    _stdin(monkeypatch, [[0, 1]])
    assert run(["seg", "path"]) == 0
    assert json.loads(capsys.readouterr().out) == {"path": [1, 0]}


def test_convert_seg2mp(monkeypatch, capsys):
    _stdin(monkeypatch, {"segments": [[0, 0], [0, 0]]})
    assert run(["convert", "seg2mp", "--lambda", "[0, 0]"]) == 0
    assert json.loads(capsys.readouterr().out) == {
        "components": [{"color": 0, "parts": [1]}, {"color": 0, "parts": [1]}]
    }


def test_convert_not_cyclotomic(monkeypatch, capsys):
    _stdin(monkeypatch, {"segments": [[0, 0], [0, 0]]})
    assert run(["convert", "seg2mp", "--lambda", "[0]"]) == 1
    assert json.loads(capsys.readouterr().err)["error"] == "NotCyclotomic"


def test_mp_f(monkeypatch, capsys):
    _stdin(monkeypatch, {"components": [{"color": 0, "parts": []}, {"color": 0, "parts": [1]}]})
    assert run(["mp", "f", "--i", "0"]) == 0
    assert json.loads(capsys.readouterr().out) == {
        "components": [{"color": 0, "parts": [1]}, {"color": 0, "parts": [1]}]
    }


def test_check_kleshchev(monkeypatch, capsys):
    _stdin(monkeypatch, {"components": [{"color": 0, "parts": [1]}, {"color": 0, "parts": []}]})
    assert run(["check", "kleshchev"]) == 0
    assert json.loads(capsys.readouterr().out) == {"kleshchev": False}


def test_char_word_and_mult(monkeypatch, capsys):
    _stdin(monkeypatch, [[0, 1], [0, 1], [1, 1]])
    assert run(["char", "word"]) == 0
    assert json.loads(capsys.readouterr().out) == {"word": [0, 0, 1, 1, 1], "mult": 12}
    _stdin(monkeypatch, [[0, 1], [1, 1]])
    assert run(["char", "mult", "--word", "[0, 1, 1]"]) == 0
    assert json.loads(capsys.readouterr().out) == {"mult": 2}


def test_char_bound_exceeded(monkeypatch, capsys):
    _stdin(monkeypatch, [[0, 2]])
    assert run(["char", "ind", "--bound", "2"]) == 2
    assert json.loads(capsys.readouterr().err)["error"] == "BoundExceeded"


def test_usage_errors(capsys):
    assert run(["seg"]) == 64
    assert json.loads(capsys.readouterr().err)["error"] == "UsageError"
    assert run(["graph", "blambda-mp", "--lambda", "[0]", "--max-n", "2", "--format", "xlsx"]) == 64


def test_missing_flag(golden_file, capsys):
    assert run(["seg", "eps", "--file", golden_file]) == 64
    assert "--i" in json.loads(capsys.readouterr().err)["message"]


def test_malformed_json(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("{not json"))
    assert run(["seg", "stats"]) == 64
    assert json.loads(capsys.readouterr().err)["error"] == "MalformedInput"


def test_invalid_utf8_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_bytes(b'{"segments": [[0, 0]]}\xff')
    assert run(["seg", "stats", "--file", str(path)]) == 64
    diagnostic = json.loads(capsys.readouterr().err)
    assert diagnostic["error"] == "MalformedInput"
    assert "UTF-8" in diagnostic["message"]


def test_invalid_utf8_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(b'{"segments": [[0, 0]]}\xff'), encoding="utf-8"))
    assert run(["seg", "stats"]) == 64
    assert json.loads(capsys.readouterr().err)["error"] == "MalformedInput"


@pytest.mark.parametrize("document", [{"segments": [[True, 1]]}, {"segments": [[0, 1, 2]]}, {"segs": []}])
def test_badly_shaped_documents(monkeypatch, capsys, document):
    _stdin(monkeypatch, document)
    assert run(["seg", "stats"]) == 64
    assert json.loads(capsys.readouterr().err)["error"] == "MalformedInput"


def test_graph_json_and_dot(capsys, tmp_path):
    assert run(["graph", "blambda-mp", "--lambda", "[0]", "--max-n", "2"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert [node["n"] for node in document["nodes"]] == [0, 1, 2, 2]
    out = tmp_path / "binf.dot"
    assert run(["graph", "binf", "--contents", "0..0", "--max-n", "1", "--format", "dot", "--out", str(out)]) == 0
    assert out.read_text(encoding="utf-8").startswith("digraph crystal {")


def test_graph_verify(capsys):
    assert run(["graph", "verify", "--lambda", "[1, 0]", "--max-n", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["ok"] is True


def test_graph_profile(capsys):
    assert run(["graph", "profile", "--of", "blambda-mp", "--lambda", "[0]", "--max-n", "3"]) == 0
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert [row["nodes"] for row in rows] == [1, 1, 2, 3]
