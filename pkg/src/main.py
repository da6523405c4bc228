"""
主程序 - pomset 块码工具的处理流水线（结构构建 → 穷举枚举 → 恒等式计算 → 报告）
"""
import logging
import sys
from pathlib import Path
from typing import Optional, Union

from .config import config_manager
from .pipeline.step1_structure import ExperimentInstance, run_step1_structure
from .pipeline.step2_enumeration import run_step2_enumeration
from .pipeline.step3_identity import run_step3_identity
from .pipeline.step4_report import CommandOutcome, run_step4_report
from .utils.error_handler import FileIOError
from .utils.probe import macwilliams_probe
from .utils.spec_manager import ExperimentSpec, load_spec

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger(__name__)


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None):
    """
    配置日志：stderr 输出（stdout 只留给报告），可选 UTF-8 日志文件

    Args:
        level: 日志级别，缺省取配置
        log_file: 日志文件路径，缺省取配置
    """
    level = (level or config_manager.settings.log_level).upper()
    log_file = log_file or config_manager.settings.log_file
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        try:
            handlers.append(logging.FileHandler(log_file, encoding='utf-8'))
        except OSError as e:
            raise FileIOError(f"无法打开日志文件: {e}", file_path=str(log_file)) from e
    logging.basicConfig(level=getattr(logging, level, logging.INFO), format=LOG_FORMAT,
                        handlers=handlers, force=True)


class PomsetCodesProcessor:
    """pomset 块码处理器"""

    def __init__(self, spec: Union[ExperimentSpec, str, Path], budget: Optional[int] = None):
        """
        初始化处理器

        Args:
            spec: 实验描述或其文件路径
            budget: Z_m^n 穷举上限，缺省依次取实验描述选项和全局配置
        """
        self.spec = spec if isinstance(spec, ExperimentSpec) else load_spec(spec)
        self.budget = budget if budget is not None else self.spec.options.budget
        self.instance: ExperimentInstance = run_step1_structure(self.spec)

    def enumerate(self) -> CommandOutcome:
        logger.info("📊 枚举码的重量分布")
        enumeration = run_step2_enumeration(self.instance, include_dual=False, budget=self.budget)
        return run_step4_report("enumerate", self.instance, enumeration=enumeration)

    def dual(self) -> CommandOutcome:
        logger.info("🔁 穷举对偶码")
        enumeration = run_step2_enumeration(self.instance, budget=self.budget)
        return run_step4_report("dual", self.instance, enumeration=enumeration)

    def verify(self, method: Optional[str] = None) -> CommandOutcome:
        """恒等式路径与穷举路径逐系数比较"""
        method = method or self.spec.options.method
        logger.info(f"🔍 校验恒等式 (method={method})")
        enumeration = run_step2_enumeration(self.instance, budget=self.budget)
        identity = run_step3_identity(self.instance, method=method, budget=self.budget)
        return run_step4_report("verify", self.instance, enumeration=enumeration, identity=identity)

    def probe(self, trials: Optional[int] = None, seed: Optional[int] = None,
              exhaustive: Optional[bool] = None) -> CommandOutcome:
        options = self.spec.options
        trials = trials if trials is not None else options.trials
        seed = seed if seed is not None else options.seed
        exhaustive = exhaustive if exhaustive is not None else options.exhaustive
        logger.info(f"🧪 可容许性探测 (trials={trials}, seed={seed}, exhaustive={exhaustive})")
        report = macwilliams_probe(self.instance.pomset, self.instance.structure, trials=trials,
                                   seed=seed, exhaustive=exhaustive, budget=self.budget)
        return run_step4_report("probe", self.instance, probe=report)

    def run(self, command: str, **kwargs) -> CommandOutcome:
        handlers = {
            "enumerate": self.enumerate,
            "dual": self.dual,
            "verify": self.verify,
            "probe": self.probe,
        }
        return handlers[command](**kwargs)
