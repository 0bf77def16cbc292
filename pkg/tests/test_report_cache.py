import json
import os

import pytest

from constdepth.report import ResultCache, cache_key, flatten, make_report, parse_text, render_text


def sample():
    return make_report("betti", {"ideal": {"nvars": 2, "gens": [[1, 0]]}, "max_power": 5},
                       {"totals": [1, 1], "entries": [{"i": 1, "multidegree": [1, 0], "value": 1}], "empty": []},
                       {"retract": {"U": [1]}}, "rational", 0.5)


def test_report_fields():
    r = sample()
    assert set(r) == {"command", "tool_version", "field", "inputs", "outputs", "certificates", "timing", "cached"}


def test_text_and_json_carry_identical_data():
    r = sample()
    assert parse_text(render_text(r)) == flatten(json.loads(json.dumps(r)))


def test_cache_key_ignores_dict_order():
    assert cache_key("x", {"a": 1, "b": 2}) == cache_key("x", {"b": 2, "a": 1})
    assert cache_key("x", {"a": 1}) != cache_key("y", {"a": 1})


def test_store_and_lookup(tmp_path):
    cache = ResultCache(str(tmp_path))
    cache.store("k", sample())
    assert cache.lookup("k") == sample()
    assert cache.lookup("missing") is None
    assert not [p for p in os.listdir(tmp_path) if p.startswith(".tmp")]


def test_version_change_invalidates(tmp_path):
    ResultCache(str(tmp_path), version="0.0.1").store("k", sample())
    assert ResultCache(str(tmp_path), version="0.0.2").lookup("k") is None


def test_corrupt_entry_ignored_with_warning(tmp_path):
    (tmp_path / "k.json").write_text("{not json")
    with pytest.warns(UserWarning):
        assert ResultCache(str(tmp_path)).lookup("k") is None
    (tmp_path / "j.json").write_text(json.dumps({"key": "other", "report": {}}))
    with pytest.warns(UserWarning):
        assert ResultCache(str(tmp_path)).lookup("j") is None
