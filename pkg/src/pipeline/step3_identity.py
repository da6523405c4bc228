"""
Step 3: 恒等式计算 - 按 pomset 描述选择链恒等式、素数域推论、和恒等式或 Fourier 校验计算对偶枚举
"""
import logging
from dataclasses import dataclass
from typing import List, Optional

from ..utils.block_space import BlockStructure
from ..utils.error_handler import ValidationError
from ..utils.field_corollary import field_dim2_dual_enumerator, is_prime
from ..utils.fourier import fourier_dual_enumerator
from ..utils.linear_code import LinearCode
from ..utils.macwilliams import chain_dual_enumerator
from ..utils.pomset import CHAIN, Pomset
from ..utils.spec_manager import COMPOSITE_KINDS, PomsetSpec
from ..utils.sum_identities import SumPart, split_code, sum_dual_enumerator
from ..utils.weight_enumerator import WeightEnumerator
from .step1_structure import ExperimentInstance, build_pomset

logger = logging.getLogger(__name__)

THEOREM = "theorem"
COROLLARY = "corollary"
SUM = "sum"
FOURIER = "fourier"
AUTO = "auto"


@dataclass(frozen=True)
class IdentityResult:
    method: str
    enumerator: WeightEnumerator


def _corollary_applies(structure: BlockStructure) -> bool:
    return structure.m != 2 and is_prime(structure.m) and all(d == 2 for d in structure.dims)


def resolve_method(pomset_spec: PomsetSpec, requested: str = AUTO,
                   structure: Optional[BlockStructure] = None) -> str:
    """
    auto: 链 → theorem（m 为奇素数且块维数全为 2 时 → corollary），直和/序数和 → sum，其余 → fourier
    """
    if requested != AUTO:
        return requested
    if pomset_spec.kind == CHAIN:
        if structure is not None and _corollary_applies(structure):
            return COROLLARY
        return THEOREM
    if pomset_spec.kind in COMPOSITE_KINDS:
        return SUM
    return FOURIER


class IdentityCalculator:
    """恒等式计算器"""

    def __init__(self, budget: Optional[int] = None):
        self.budget = budget

    def compute(self, pomset_spec: PomsetSpec, pomset: Pomset, code: LinearCode,
                structure: BlockStructure, method: str) -> WeightEnumerator:
        if method == THEOREM:
            return chain_dual_enumerator(code, pomset, structure)
        if method == COROLLARY:
            return field_dim2_dual_enumerator(code, pomset, structure)
        if method == FOURIER:
            return fourier_dual_enumerator(code, pomset, structure, budget=self.budget)
        if method == SUM:
            return self._compute_sum(pomset_spec, code, structure)
        raise ValidationError(f"未知的计算方法: {method}", field="method")

    def _compute_sum(self, pomset_spec: PomsetSpec, code: LinearCode, structure: BlockStructure) -> WeightEnumerator:
        """把码按分量拆成直和，各分量递归选择方法，再用和恒等式合成"""
        if pomset_spec.kind not in COMPOSITE_KINDS:
            raise ValidationError(f"sum 方法要求 pomset 为直和或序数和，当前为 {pomset_spec.kind}", field="method")
        point_counts = [part.point_count() for part in pomset_spec.parts]
        pieces = split_code(code, point_counts)
        parts: List[SumPart] = []
        first = 1
        for part_spec, piece, count in zip(pomset_spec.parts, pieces, point_counts):
            sub_structure = structure.sub_structure(first, first + count - 1)
            sub_pomset = build_pomset(part_spec, structure.m)
            method = resolve_method(part_spec, structure=sub_structure)
            enumerator = self.compute(part_spec, sub_pomset, piece, sub_structure, method)
            logger.debug(f"分量 {part_spec.kind}[{count}] 采用 {method}: A = {list(enumerator.coeffs)}")
            parts.append(SumPart(enumerator, piece.size, sub_structure.n, sub_structure.s, structure.m))
            first += count
        return sum_dual_enumerator(parts, pomset_spec.kind, structure.m)


def run_step3_identity(instance: ExperimentInstance, method: str = AUTO,
                       budget: Optional[int] = None) -> IdentityResult:
    """
    运行Step 3: 恒等式计算

    Args:
        instance: Step 1 的结果
        method: auto / theorem / corollary / sum / fourier
        budget: Fourier 校验的穷举上限

    Returns:
        IdentityResult
    """
    resolved = resolve_method(instance.spec.pomset, method, instance.structure)
    calculator = IdentityCalculator(budget=budget)
    enumerator = calculator.compute(instance.spec.pomset, instance.pomset, instance.code,
                                    instance.structure, resolved)
    logger.info(f"恒等式计算完成 ({resolved}): A = {list(enumerator.coeffs)}")
    return IdentityResult(method=resolved, enumerator=enumerator)
