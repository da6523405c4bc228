"""
命令行入口单元测试
"""
import json
import logging

import pytest

from src.cli import EXIT_BUDGET, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK, build_parser, execute
from src.config import EXAMPLES_DIR
from src.utils.spec_manager import parse_spec
from src.utils.weight_enumerator import WeightEnumerator


@pytest.fixture(autouse=True)
def restore_logging():
    """命令会重新配置根日志器，测试后恢复"""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    for handler in root.handlers:
        if handler not in handlers:
            handler.close()
    root.handlers[:] = handlers
    root.setLevel(level)


def spec_file(tmp_path, data, name="spec.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = execute(list(argv))
    out = capsys.readouterr().out
    return code, out, out.rstrip("\n").splitlines()[-1]


class TestParser:
    """测试参数解析"""

    def test_spec_is_required(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["verify"])

    def test_unknown_command(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["decode", "--spec", "x.json"])


class TestExecute:
    """测试命令执行与退出码"""

    def test_verify_z4_example(self, capsys):
        code, out, last = run(capsys, "verify", "--spec", str(EXAMPLES_DIR / "chain_z4.json"))
        assert code == EXIT_OK
        assert last == "RESULT: equal"
        assert "W = x^4 + x^2y^2 + 8xy^3 + 6y^4" in out

    def test_verify_field_example_with_corollary(self, capsys):
        code, out, last = run(capsys, "verify", "--spec", str(EXAMPLES_DIR / "field_z5.json"),
                              "--method", "corollary")
        assert code == EXIT_OK
        assert last == "RESULT: equal"
        assert "W = x^4 + 8xy^3 + 16y^4" in out

    def test_enumerate_zero_code(self, capsys, tmp_path):
        path = spec_file(tmp_path, {"m": 4, "blocks": [1, 1], "pomset": {"kind": "chain"}, "generators": [[0, 0]]})
        code, out, last = run(capsys, "enumerate", "--spec", path)
        assert code == EXIT_OK
        assert "A = [1, 0, 0, 0, 0]" in out.splitlines()
        assert last == "RESULT: equal"

    def test_dual(self, capsys):
        code, out, _ = run(capsys, "dual", "--spec", str(EXAMPLES_DIR / "chain_z5.json"))
        assert code == EXIT_OK
        assert "|C^⊥| = 25" in out

    def test_probe(self, capsys, tmp_path):
        path = spec_file(tmp_path, {"m": 4, "blocks": [1, 1], "pomset": {"kind": "chain"}, "generators": [[1, 0]]})
        code, out, last = run(capsys, "probe", "--spec", path, "--trials", "10", "--seed", "5")
        assert code == EXIT_OK
        assert "模式: 采样 trials = 10, seed = 5" in out
        assert last == "RESULT: equal"

    def test_output_is_deterministic(self, capsys):
        args = ("verify", "--spec", str(EXAMPLES_DIR / "ordinal_z3.json"))
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second

    def test_mismatch_exit_code(self, capsys, mocker):
        wrong = WeightEnumerator(4, (1, 0, 1, 7, 7))
        mocker.patch('src.pipeline.step3_identity.chain_dual_enumerator', return_value=wrong)
        code, out, last = run(capsys, "verify", "--spec", str(EXAMPLES_DIR / "chain_z4.json"))
        assert code == EXIT_MISMATCH
        assert last == "RESULT: mismatch"
        assert "首个不同系数: A_3" in out

    def test_budget_exit_code(self, capsys):
        code, out, last = run(capsys, "dual", "--spec", str(EXAMPLES_DIR / "chain_z4.json"), "--budget", "10")
        assert code == EXIT_BUDGET
        assert last == "RESULT: error"
        assert "超出预算" in out

    def test_missing_file(self, capsys, tmp_path):
        code, _, last = run(capsys, "verify", "--spec", str(tmp_path / "nope.json"))
        assert code == EXIT_INVALID
        assert last == "RESULT: error"

    def test_invalid_spec(self, capsys, tmp_path):
        path = spec_file(tmp_path, {"m": 4, "blocks": [1], "pomset": {"kind": "chain"}})
        code, _, last = run(capsys, "enumerate", "--spec", path)
        assert code == EXIT_INVALID
        assert last == "RESULT: error"

    def test_hypothesis_violation(self, capsys):
        code, _, _ = run(capsys, "verify", "--spec", str(EXAMPLES_DIR / "chain_z4.json"), "--method", "corollary")
        assert code == EXIT_INVALID

    @pytest.mark.parametrize("flag, value", [("--budget", "0"), ("--trials", "-1")])
    def test_invalid_flags(self, capsys, flag, value):
        code, _, _ = run(capsys, "probe", "--spec", str(EXAMPLES_DIR / "chain_z4.json"), flag, value)
        assert code == EXIT_INVALID

    def test_dump_spec_round_trip(self, capsys):
        path = EXAMPLES_DIR / "ordinal_z3.json"
        code = execute(["verify", "--spec", str(path), "--dump-spec", "--seed", "4"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        spec = parse_spec(out)
        assert spec.options.seed == 4
        assert spec.pomset.kind == "ordinal"
        assert "RESULT" not in out

    def test_log_file(self, capsys, tmp_path):
        log_file = tmp_path / "run.log"
        run(capsys, "enumerate", "--spec", str(EXAMPLES_DIR / "chain_z4.json"), "--log-file", str(log_file),
            "--log-level", "debug")
        assert log_file.exists()
        assert "结构构建完成" in log_file.read_text(encoding="utf-8")

    def test_unwritable_log_file(self, capsys, tmp_path):
        log_file = tmp_path / "missing_dir" / "run.log"
        code, out, last = run(capsys, "enumerate", "--spec", str(EXAMPLES_DIR / "chain_z4.json"),
                              "--log-file", str(log_file))
        assert code == EXIT_INVALID
        assert last == "RESULT: error"
        assert "无法打开日志文件" in out
