"""
直和与序数和 pomset 上的对偶枚举恒等式

直和: W = W_1 · W_2
序数和 P1 + P2（对偶为 P̃2 + P̃1）:
    W = x^{s1⌊m/2⌋}·W_2 + (m^{n2}/|C_2|)·y^{s2⌊m/2⌋}·(W_1 − x^{s1⌊m/2⌋})
多个分量时从右向左折叠，例如 P1 + (P2 + P3)
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from .error_handler import ValidationError
from .linear_code import LinearCode, project_code
from .pomset import DIRECT, ORDINAL
from .weight_enumerator import WeightEnumerator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SumPart:
    """一个分量：C_i^⊥ 在 P̃_i 下的枚举、|C_i|、坐标长度 n_i、基点数 s_i"""
    enumerator: WeightEnumerator
    code_size: int
    length: int
    points: int
    m: Optional[int] = None


def _validate_parts(parts: Sequence[SumPart], mode: str, m: int):
    if mode not in (DIRECT, ORDINAL):
        raise ValidationError(f"未知的组合方式: {mode}", field="mode")
    if len(parts) < 2:
        raise ValidationError(f"和恒等式至少需要 2 个分量，当前 {len(parts)} 个", field="parts")
    h = m // 2
    for index, part in enumerate(parts, start=1):
        if part.m is not None and part.m != m:
            raise ValidationError(f"第 {index} 个分量的模数 {part.m} 与 m = {m} 不一致", field="m")
        if part.enumerator.degree != part.points * h:
            raise ValidationError(
                f"第 {index} 个分量的枚举次数 {part.enumerator.degree} 与 s_i⌊m/2⌋ = {part.points * h} 不符",
                field="parts")
        if part.code_size < 1:
            raise ValidationError(f"第 {index} 个分量的码字数必须为正", field="parts")


def _ordinal_pair(first: SumPart, second: SumPart, m: int) -> SumPart:
    h = m // 2
    below = WeightEnumerator.monomial(first.points * h)
    dual_second_size = Fraction(m ** second.length, second.code_size)
    lifted = (first.enumerator - below).times_y(second.points * h).scaled(dual_second_size)
    combined = second.enumerator.times_x(first.points * h) + lifted
    return SumPart(combined, first.code_size * second.code_size,
                   first.length + second.length, first.points + second.points, m)


def _direct_pair(first: SumPart, second: SumPart, m: int) -> SumPart:
    return SumPart(first.enumerator * second.enumerator, first.code_size * second.code_size,
                   first.length + second.length, first.points + second.points, m)


def sum_dual_enumerator(parts: Sequence[SumPart], mode: str, m: int) -> WeightEnumerator:
    _validate_parts(parts, mode, m)
    combine = _ordinal_pair if mode == ORDINAL else _direct_pair
    acc = parts[-1]
    for part in reversed(parts[:-1]):
        acc = combine(part, acc, m)
    logger.debug(f"{mode} 和恒等式: {len(parts)} 个分量, W={acc.enumerator.coeffs}")
    return acc.enumerator


def split_code(code: LinearCode, point_counts: Sequence[int]) -> List[LinearCode]:
    """
    按连续块区间把 C 投影为各分量 C_i，并要求 C = C_1 ⊕ … ⊕ C_λ

    C 总包含于各投影的直和，因此 |C| = Π|C_i| 即等价于直和分解
    """
    if sum(point_counts) != code.structure.s or any(c < 1 for c in point_counts):
        raise ValidationError(
            f"分量基点数 {list(point_counts)} 与块数 {code.structure.s} 不符", field="parts")
    pieces: List[LinearCode] = []
    first = 1
    for count in point_counts:
        pieces.append(project_code(code, first, first + count - 1))
        first += count
    product = 1
    for piece in pieces:
        product *= piece.size
    if product != code.size:
        raise ValidationError(
            f"码不是各分量投影的直和: |C| = {code.size}，投影之积 = {product}", field="code")
    return pieces
