"""
实验描述文件管理单元测试
"""
import json

import pytest

from src.config import EXAMPLES_DIR
from src.utils.error_handler import FileIOError, ValidationError
from src.utils.spec_manager import ExperimentSpec, PomsetSpec, SpecOptions, dump_spec, load_spec, parse_spec

BASE = {
    "m": 4,
    "blocks": [2, 1],
    "pomset": {"kind": "chain"},
    "generators": [[1, 1, 2]],
}


def with_changes(**changes):
    data = json.loads(json.dumps(BASE))
    data.update(changes)
    return data


class TestParseSpec:
    """测试实验描述解析"""

    def test_minimal_spec(self):
        spec = parse_spec(BASE)
        assert spec.n == 3
        assert spec.rows == [[1, 1, 2]]
        assert spec.options == SpecOptions()
        assert spec.options.method == "auto"

    def test_json_text(self):
        assert parse_spec(json.dumps(BASE)) == parse_spec(BASE)

    def test_composite_pomset(self):
        spec = parse_spec(with_changes(
            m=3, blocks=[1, 1, 1], generators=[[1, 0, 0]],
            pomset={"kind": "ordinal", "parts": [{"kind": "chain", "points": 2}, {"kind": "antichain", "points": 1}]}))
        assert spec.pomset.point_count() == 3

    def test_relation_pairs(self):
        spec = parse_spec(with_changes(pomset={"kind": "relation", "pairs": [[1, 2]]}))
        assert spec.pomset.pairs == [(1, 2)]

    @pytest.mark.parametrize("changes, fragment", [
        ({"m": 1}, "模数"),
        ({"blocks": []}, "blocks"),
        ({"blocks": [2, 0]}, "块维数"),
        ({"words": [[0, 0, 0]]}, "generators 或 words"),
        ({"generators": [[1, 1]]}, "长度"),
        ({"pomset": {"kind": "chain", "points": 3}}, "基点数"),
        ({"pomset": {"kind": "tree"}}, "pomset 类型"),
        ({"pomset": {"kind": "relation"}}, "pairs"),
        ({"pomset": {"kind": "direct", "parts": [{"kind": "chain", "points": 2}]}}, "parts"),
        ({"pomset": {"kind": "direct", "parts": [{"kind": "chain"}, {"kind": "chain"}]}}, "points"),
        ({"options": {"method": "guess"}}, "method"),
        ({"options": {"trials": -1}}, "探测次数"),
        ({"options": {"budget": 0}}, "穷举预算"),
    ])
    def test_invalid_specs(self, changes, fragment):
        with pytest.raises(ValidationError, match=fragment):
            parse_spec(with_changes(**changes))

    def test_missing_code(self):
        data = dict(BASE)
        del data["generators"]
        with pytest.raises(ValidationError):
            parse_spec(data)

    def test_bad_json(self):
        with pytest.raises(ValidationError, match="JSON"):
            parse_spec("{m: 4")
        with pytest.raises(ValidationError, match="JSON 对象"):
            parse_spec("[1, 2]")


class TestLoadAndDump:
    """测试文件读写"""

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(FileIOError, match="不存在"):
            load_spec(tmp_path / "missing.json")

    @pytest.mark.parametrize("name", ["chain_z4.json", "chain_z5.json", "field_z5.json",
                                      "antichain_z4.json", "ordinal_z3.json"])
    def test_example_files_round_trip(self, name):
        spec = load_spec(EXAMPLES_DIR / name)
        assert parse_spec(dump_spec(spec)) == spec

    def test_dump_is_canonical(self, tmp_path):
        path = tmp_path / "spec.json"
        path.write_text(json.dumps(with_changes(options={"seed": 3})), encoding="utf-8")
        text = dump_spec(load_spec(path))
        data = json.loads(text)
        assert list(data) == sorted(data)
        assert "words" not in data
        assert data["options"]["seed"] == 3
        assert text == dump_spec(parse_spec(text))

    def test_model_types(self):
        spec = parse_spec(BASE)
        assert isinstance(spec, ExperimentSpec)
        assert isinstance(spec.pomset, PomsetSpec)
