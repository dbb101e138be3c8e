"""JSON interchange round trips and malformed-input handling."""

import io
import json

import pytest

from reslat.algebra import ImpMismatch, MalformedInput
from reslat.io import (
    algebra_from_dict,
    algebra_to_dict,
    dump_algebra,
    dumps_algebra,
    load_algebra,
    loads_algebra,
)


def test_round_trip_preserves_everything(ex5):
    text = dumps_algebra(ex5)
    back = loads_algebra(text)
    assert back == ex5
    assert back.name == ex5.name
    assert back.labels == ex5.labels
    assert back.imp == ex5.imp


def test_dict_shape(godel3):
    d = algebra_to_dict(godel3)
    assert set(d) == {"name", "size", "labels", "join", "mult", "imp"}
    assert d["size"] == 3
    assert d["join"] == [[0, 1, 2], [1, 1, 2], [2, 2, 2]]


def test_dumps_is_valid_json_with_trailing_newline(bool4):
    text = dumps_algebra(bool4)
    assert text.endswith("\n")
    payload = json.loads(text)
    assert payload["size"] == 4


def test_unlabeled_round_trip():
    a = algebra_from_dict(
        {"size": 2, "join": [[0, 1], [1, 1]], "mult": [[0, 0], [0, 1]]}
    )
    d = algebra_to_dict(a)
    assert "name" not in d and "labels" not in d
    assert loads_algebra(json.dumps(d)) == a


def test_rejects_non_object():
    with pytest.raises(MalformedInput):
        algebra_from_dict([1, 2, 3])


def test_rejects_unknown_keys():
    with pytest.raises(MalformedInput, match="unknown keys"):
        algebra_from_dict(
            {"size": 1, "join": [[0]], "mult": [[0]], "extra": True}
        )


@pytest.mark.parametrize("missing", ["size", "join", "mult"])
def test_rejects_missing_required_key(missing):
    d = {"size": 1, "join": [[0]], "mult": [[0]]}
    del d[missing]
    with pytest.raises(MalformedInput, match=missing):
        algebra_from_dict(d)


def test_rejects_non_string_name():
    with pytest.raises(MalformedInput, match="name"):
        algebra_from_dict({"name": 7, "size": 1, "join": [[0]], "mult": [[0]]})


def test_rejects_broken_json_text():
    with pytest.raises(MalformedInput, match="not valid JSON"):
        loads_algebra("{nope")


def test_imp_cross_checked(godel3):
    d = algebra_to_dict(godel3)
    d["imp"] = [[2, 2, 2], [1, 2, 2], [0, 1, 2]]
    with pytest.raises(ImpMismatch):
        algebra_from_dict(d)


def test_file_round_trip(tmp_path, lukasiewicz3):
    path = tmp_path / "luk3.json"
    dump_algebra(lukasiewicz3, str(path))
    assert load_algebra(str(path)) == lukasiewicz3


def test_load_from_stdin(monkeypatch, godel3):
    monkeypatch.setattr("sys.stdin", io.StringIO(dumps_algebra(godel3)))
    assert load_algebra("-") == godel3


def test_dump_to_stdout(capsys, godel3):
    dump_algebra(godel3, "-")
    out = capsys.readouterr().out
    assert loads_algebra(out) == godel3
