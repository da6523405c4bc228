"""
Step 2: 穷举枚举 - 码自身的重量枚举，以及对偶码在对偶 pomset 下的重量枚举
"""
import logging
from dataclasses import dataclass
from typing import Optional

from ..utils.linear_code import LinearCode, dual_code, weight_enumerator
from ..utils.pomset import dual_pomset
from ..utils.weight_enumerator import WeightEnumerator
from .step1_structure import ExperimentInstance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnumerationResult:
    code_enumerator: WeightEnumerator
    dual: Optional[LinearCode] = None
    dual_enumerator: Optional[WeightEnumerator] = None


def run_step2_enumeration(instance: ExperimentInstance, include_dual: bool = True,
                          budget: Optional[int] = None) -> EnumerationResult:
    """
    运行Step 2: 穷举枚举

    Args:
        instance: Step 1 的结果
        include_dual: 是否穷举对偶码
        budget: Z_m^n 穷举上限，缺省取配置

    Returns:
        EnumerationResult
    """
    enumerator = weight_enumerator(instance.code, instance.pomset, instance.structure)
    logger.info(f"码的重量枚举: A = {list(enumerator.coeffs)}")
    if not include_dual:
        return EnumerationResult(code_enumerator=enumerator)

    dual = dual_code(instance.code, budget)
    dual_enumerator = weight_enumerator(dual, dual_pomset(instance.pomset), instance.structure)
    logger.info(f"对偶码穷举完成: |C^⊥|={dual.size}, A = {list(dual_enumerator.coeffs)}")
    return EnumerationResult(code_enumerator=enumerator, dual=dual, dual_enumerator=dual_enumerator)
