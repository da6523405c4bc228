"""
Step 4: 报告生成 - 比较恒等式结果与穷举结果，渲染文本报告（最后一行为 RESULT: equal|mismatch|error）
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from ..utils.error_handler import ValidationError
from ..utils.probe import ProbeReport
from ..utils.weight_enumerator import WeightEnumerator
from .step1_structure import ExperimentInstance
from .step2_enumeration import EnumerationResult
from .step3_identity import IdentityResult

logger = logging.getLogger(__name__)

EQUAL = "equal"
MISMATCH = "mismatch"
ERROR = "error"


@dataclass(frozen=True)
class IdentityReport:
    """恒等式路径与穷举路径的比较结果"""
    method: str
    identity: WeightEnumerator
    brute_force: WeightEnumerator
    first_difference: Optional[int]

    @property
    def verdict(self) -> str:
        return EQUAL if self.first_difference is None else MISMATCH


@dataclass
class CommandOutcome:
    """一条命令的输出文本与结论"""
    command: str
    verdict: str
    lines: List[str] = field(default_factory=list)

    def render(self) -> str:
        return "\n".join(self.lines + [f"RESULT: {self.verdict}"]) + "\n"


def build_identity_report(identity: IdentityResult, enumeration: EnumerationResult) -> IdentityReport:
    brute = enumeration.dual_enumerator
    report = IdentityReport(method=identity.method, identity=identity.enumerator, brute_force=brute,
                            first_difference=identity.enumerator.first_difference(brute))
    if report.verdict == MISMATCH:
        logger.warning(f"恒等式与穷举结果不一致，首个不同系数 A_{report.first_difference}")
    return report


def _summary_lines(command: str, instance: ExperimentInstance) -> List[str]:
    structure = instance.structure
    return [
        f"命令: {command}",
        f"m = {structure.m}, π = {list(structure.dims)}, n = {structure.n}, s = {structure.s}",
        f"pomset: {instance.describe_pomset()}",
        f"|C| = {instance.code.size}",
    ]


def _enumerator_lines(label: str, enumerator: WeightEnumerator) -> List[str]:
    return [f"{label}:", f"A = {list(enumerator.coeffs)}", f"W = {enumerator.to_polynomial()}"]


def render_enumeration(instance: ExperimentInstance, enumeration: EnumerationResult) -> CommandOutcome:
    enumerator = enumeration.code_enumerator
    verdict = EQUAL if enumerator.size == instance.code.size else MISMATCH
    lines = _summary_lines("enumerate", instance) + _enumerator_lines("W(C; P)", enumerator)
    return CommandOutcome("enumerate", verdict, lines)


def render_dual(instance: ExperimentInstance, enumeration: EnumerationResult) -> CommandOutcome:
    structure = instance.structure
    dual = enumeration.dual
    verdict = EQUAL if instance.code.size * dual.size == structure.m ** structure.n else MISMATCH
    lines = _summary_lines("dual", instance)
    lines.append(f"|C^⊥| = {dual.size}")
    lines.append("C^⊥ = " + str(dual))
    lines += _enumerator_lines("W(C^⊥; P̃)", enumeration.dual_enumerator)
    return CommandOutcome("dual", verdict, lines)


def render_identity(instance: ExperimentInstance, report: IdentityReport) -> CommandOutcome:
    lines = _summary_lines("verify", instance)
    lines.append(f"方法: {report.method}")
    lines += _enumerator_lines("恒等式", report.identity)
    lines += _enumerator_lines("穷举", report.brute_force)
    if report.first_difference is not None:
        index = report.first_difference
        identity_value = report.identity.coeffs[index] if index < len(report.identity.coeffs) else None
        brute_value = report.brute_force.coeffs[index] if index < len(report.brute_force.coeffs) else None
        lines.append(f"首个不同系数: A_{index} (恒等式 {identity_value}, 穷举 {brute_value})")
    return CommandOutcome("verify", report.verdict, lines)


def render_probe(instance: ExperimentInstance, probe: ProbeReport) -> CommandOutcome:
    lines = _summary_lines("probe", instance)
    mode = "穷举" if probe.exhaustive else f"采样 trials = {probe.trials}, seed = {probe.seed}"
    lines.append(f"模式: {mode}")
    lines.append(f"分层 pomset: {'是' if probe.is_hierarchical else '否'}")
    lines.append(f"检查生成元组: {probe.codes_examined}, 不同的码: {probe.distinct_codes}, "
                 f"不同的枚举: {probe.distinct_enumerators}")
    lines += probe.notes
    witness = probe.witness
    if witness is None:
        lines.append("反例: none")
        return CommandOutcome("probe", EQUAL, lines)
    lines.append("反例:")
    lines.append(f"  C1 = {witness.first}")
    lines.append(f"  C2 = {witness.second}")
    lines.append(f"  W(C1; P) = W(C2; P) = {witness.enumerator.to_polynomial()}")
    lines.append(f"  W(C1^⊥; P̃) = {witness.first_dual.to_polynomial()}")
    lines.append(f"  W(C2^⊥; P̃) = {witness.second_dual.to_polynomial()}")
    return CommandOutcome("probe", MISMATCH, lines)


def render_error(command: str, message: str) -> CommandOutcome:
    return CommandOutcome(command, ERROR, [f"命令: {command}", f"错误: {message}"])


def run_step4_report(command: str, instance: ExperimentInstance,
                     enumeration: Optional[EnumerationResult] = None,
                     identity: Optional[IdentityResult] = None,
                     probe: Optional[ProbeReport] = None) -> CommandOutcome:
    """
    运行Step 4: 报告生成

    Args:
        command: enumerate / dual / verify / probe
        instance: Step 1 的结果
        enumeration: Step 2 的结果
        identity: Step 3 的结果（verify 需要）
        probe: 探测结果（probe 需要）

    Returns:
        CommandOutcome
    """
    if command == "enumerate":
        outcome = render_enumeration(instance, enumeration)
    elif command == "dual":
        outcome = render_dual(instance, enumeration)
    elif command == "verify":
        outcome = render_identity(instance, build_identity_report(identity, enumeration))
    elif command == "probe":
        outcome = render_probe(instance, probe)
    else:
        raise ValidationError(f"未知命令: {command}", field="command")
    logger.info(f"{command} 完成: {outcome.verdict}")
    return outcome
