"""
命令行入口 - pomset-codes <enumerate|dual|verify|probe> --spec FILE [选项]

报告写到 stdout，最后一行为 RESULT: equal|mismatch|error；日志写到 stderr。
退出码: 0 全部一致；1 不一致或计算错误；2 输入/配置/文件错误；3 超出穷举预算
"""
import argparse
import logging
import sys
from typing import List, Optional

from .main import PomsetCodesProcessor, setup_logging
from .pipeline.step4_report import EQUAL, render_error
from .utils.error_handler import (BudgetExceededError, ConfigurationError, FileIOError,
                                  PomsetCodesException, ValidationError, error_handler)
from .utils.spec_manager import METHODS, dump_spec, load_spec

logger = logging.getLogger(__name__)

COMMANDS = ("enumerate", "dual", "verify", "probe")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='pomset-codes',
        description='pomset 块度量下 Z_m 线性码的重量枚举与 MacWilliams 型恒等式校验',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
使用示例:
  # 码自身的重量枚举
  pomset-codes enumerate --spec data/examples/chain_z4.json

  # 恒等式与穷举对照
  pomset-codes verify --spec data/examples/field_z5.json --method corollary

  # 可容许性探测
  pomset-codes probe --spec data/examples/antichain_z4.json --trials 100 --seed 7
        """
    )
    parser.add_argument('command', choices=COMMANDS, help='要执行的命令')
    parser.add_argument('--spec', required=True, help='实验描述 JSON 文件')
    parser.add_argument('--method', choices=METHODS, help='verify 使用的恒等式（缺省取实验描述，默认 auto）')
    parser.add_argument('--trials', type=int, help='probe 采样次数')
    parser.add_argument('--seed', type=int, help='probe 随机种子')
    parser.add_argument('--budget', type=int, help='Z_m^n 穷举上限')
    parser.add_argument('--exhaustive', action='store_true', help='probe 穷举所有由至多 n 个生成元张成的码')
    parser.add_argument('--dump-spec', action='store_true', help='输出规范化的实验描述后退出')
    parser.add_argument('--log-level', help='日志级别（覆盖配置）')
    parser.add_argument('--log-file', help='日志文件（覆盖配置）')
    return parser


def _exit_code_for(error: PomsetCodesException) -> int:
    if isinstance(error, BudgetExceededError):
        return EXIT_BUDGET
    if isinstance(error, (ValidationError, ConfigurationError, FileIOError)):
        return EXIT_INVALID
    return EXIT_MISMATCH


def _merged_options(spec, args):
    """命令行参数覆盖实验描述中的 options"""
    updates = {key: value for key, value in (
        ("method", args.method), ("trials", args.trials), ("seed", args.seed), ("budget", args.budget),
    ) if value is not None}
    if args.exhaustive:
        updates["exhaustive"] = True
    options = spec.options.model_copy(update=updates)
    return spec.model_copy(update={"options": options})


def execute(argv: Optional[List[str]] = None) -> int:
    """
    执行一条命令

    Args:
        argv: 命令行参数（不含程序名），缺省取 sys.argv

    Returns:
        退出码
    """
    args = build_parser().parse_args(argv)

    try:
        setup_logging(args.log_level, args.log_file)
        if args.budget is not None and args.budget <= 0:
            raise ValidationError('穷举预算必须大于0', field="budget")
        if args.trials is not None and args.trials < 0:
            raise ValidationError('探测次数不能为负数', field="trials")
        spec = _merged_options(load_spec(args.spec), args)
        if args.dump_spec:
            sys.stdout.write(dump_spec(spec) + "\n")
            return EXIT_OK
        processor = PomsetCodesProcessor(spec)
        outcome = processor.run(args.command)
    except PomsetCodesException as e:
        error_handler.handle_error(e, context=args.command)
        sys.stdout.write(render_error(args.command, str(e)).render())
        return _exit_code_for(e)

    sys.stdout.write(outcome.render())
    return EXIT_OK if outcome.verdict == EQUAL else EXIT_MISMATCH


def main():
    sys.exit(execute())
