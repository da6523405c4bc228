"""
Step 1: 结构构建 - 由实验描述构建块结构、pomset 与线性码
"""
import logging
from dataclasses import dataclass
from typing import List, Optional

from ..utils.block_space import BlockStructure, CodeVector
from ..utils.error_handler import ValidationError
from ..utils.linear_code import LinearCode, code_from_words, span_code
from ..utils.pomset import CHAIN, ANTICHAIN, Pomset, combine_pomsets, make_pomset, make_pomset_from_pairs
from ..utils.spec_manager import COMPOSITE_KINDS, RELATION, ExperimentSpec, PomsetSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExperimentInstance:
    """一次实验的全部数学对象"""
    spec: ExperimentSpec
    structure: BlockStructure
    pomset: Pomset
    code: LinearCode

    def describe_pomset(self) -> str:
        return describe_pomset_spec(self.spec.pomset, len(self.spec.blocks))


def describe_pomset_spec(pomset_spec: PomsetSpec, default_points: Optional[int] = None) -> str:
    """例如 ordinal(chain[2], antichain[1])"""
    if pomset_spec.kind in COMPOSITE_KINDS:
        inner = ", ".join(describe_pomset_spec(part) for part in pomset_spec.parts)
        return f"{pomset_spec.kind}({inner})"
    return f"{pomset_spec.kind}[{pomset_spec.point_count(default_points)}]"


def build_pomset(pomset_spec: PomsetSpec, m: int, default_points: Optional[int] = None) -> Pomset:
    """递归构建 pomset；组合按 parts 顺序左结合"""
    if pomset_spec.kind in COMPOSITE_KINDS:
        parts = [build_pomset(part, m) for part in pomset_spec.parts]
        result = parts[0]
        for part in parts[1:]:
            result = combine_pomsets(result, part, pomset_spec.kind)
        return result
    points = pomset_spec.point_count(default_points)
    if pomset_spec.kind == RELATION:
        return make_pomset_from_pairs(points, m, pomset_spec.pairs)
    if pomset_spec.kind in (CHAIN, ANTICHAIN):
        return make_pomset(points, m, pomset_spec.kind)
    raise ValidationError(f"未知的 pomset 类型: {pomset_spec.kind}", field="kind")


def build_code(spec: ExperimentSpec, structure: BlockStructure) -> LinearCode:
    vectors: List[CodeVector] = [CodeVector.of(row, spec.m) for row in spec.rows]
    if spec.generators is not None:
        return span_code(vectors, structure)
    return code_from_words(vectors, structure)


def run_step1_structure(spec: ExperimentSpec) -> ExperimentInstance:
    """
    运行Step 1: 结构构建

    Args:
        spec: 已校验的实验描述

    Returns:
        ExperimentInstance
    """
    structure = BlockStructure(spec.m, tuple(spec.blocks))
    pomset = build_pomset(spec.pomset, spec.m, default_points=len(spec.blocks))
    code = build_code(spec, structure)
    instance = ExperimentInstance(spec=spec, structure=structure, pomset=pomset, code=code)
    logger.info(f"结构构建完成: m={spec.m}, π={list(spec.blocks)}, n={structure.n}, "
                f"pomset={instance.describe_pomset()}, |C|={code.size}")
    return instance
