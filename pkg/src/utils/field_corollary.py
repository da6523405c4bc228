"""
素数 m、所有块维数为 2 时的链对偶枚举

C_i' 中的码字按第 i 块的规范代表元 (1, ±t) 或 (0, 1) 分为三类，
每个规范代表元代表其非零数乘轨道；各类分别以 (2m−4j)、(−4j)、(m−4j) 计入系数
"""
import logging
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .block_space import BlockStructure, CodeVector, lee_weight
from .cyclotomic import CycloNum, as_integer
from .error_handler import ComputationError, ValidationError
from .linear_code import LinearCode, chain_strata
from .macwilliams import block_character_term, check_chain_hypotheses
from .pomset import Pomset
from .weight_enumerator import WeightEnumerator

logger = logging.getLogger(__name__)

CLASS_ONE = 1
CLASS_TWO = 2
CLASS_THREE = 3


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def _check_field(m: int):
    if not is_prime(m):
        raise ValidationError(f"m = {m} 不是素数，Z_m 不是域", field="m")
    if m == 2:
        raise ValidationError("m = 2 时 j = m/2 落入偶数分支，分类公式不适用", field="m")


def _check_j(j: int, m: int):
    if not 1 <= j <= m // 2:
        raise ValidationError(f"j = {j} 超出范围 [1, {m // 2}]", field="j")


def orbit_class_value(block: Sequence[int], j: int, m: int) -> int:
    """
    数乘轨道上的精确求和 Σ_{r=1}^{m−1} Z_ij^{r·block}

    结果必为 2m−4j、−4j 或 m−4j 之一
    """
    _check_field(m)
    _check_j(j, m)
    if len(block) != 2 or not any(x % m for x in block):
        raise ValidationError(f"块 {list(block)} 必须是非零的二维块", field="block")
    total = CycloNum.zero(m)
    for r in range(1, m):
        total = total + block_character_term(tuple((r * x) % m for x in block), j, m)
    return as_integer(total)


def class_from_orbit_value(value: int, j: int, m: int) -> int:
    mapping = {2 * m - 4 * j: CLASS_ONE, -4 * j: CLASS_TWO, m - 4 * j: CLASS_THREE}
    if value not in mapping:
        raise ComputationError(
            f"轨道和 {value} 不属于 {{2m−4j, −4j, m−4j}} (m={m}, j={j})", step="orbit_class_value")
    return mapping[value]


def _divides(t: int, j: int) -> bool:
    return j % t == 0


def _has_annihilator(t: int, j: int, m: int) -> bool:
    """存在 a ∈ [−j, j] 使 a·t + j ≡ 0 (mod m)"""
    return any((a * t + j) % m == 0 for a in range(-j, j + 1))


def printed_rule_class(t: int, j: int, m: int) -> int:
    """按分类条件的文字区间（精确有理数比较）给出类别，t ∈ [1, (m−1)/2]"""
    _check_field(m)
    _check_j(j, m)
    if not 1 <= t <= (m - 1) // 2:
        raise ValidationError(f"t = {t} 超出范围 [1, {(m - 1) // 2}]", field="t")
    if j == 1:
        return CLASS_THREE if t == 1 else CLASS_TWO

    divisible = _divides(t, j)
    annihilated = _has_annihilator(t, j, m)
    joined = divisible or annihilated
    isolated = not divisible and not annihilated
    F = Fraction

    def near_multiple(l: int) -> bool:
        return F(l * m + 1, j) - 1 <= t <= F(l * m - 1, j) + 1

    if j % 2 == 0:
        if joined and any(near_multiple(l) for l in range(1, j // 2)):
            return CLASS_ONE
        if joined and F(j * m + 2, 2 * j) - 1 <= t <= F(m - 1, 2):
            return CLASS_ONE
        if 1 <= t <= F(m + 1, j) - 1 and not divisible:
            return CLASS_TWO
        if isolated and any(F(l * m - 1, j) + 1 < t < F((l + 1) * m + 1, j) - 1 for l in range(1, j // 2)):
            return CLASS_TWO
        return CLASS_THREE

    if joined and any(near_multiple(l) for l in range(1, (j - 1) // 2 + 1)):
        return CLASS_ONE
    if 1 <= t < F(m + 1, j) - 1 and not divisible:
        return CLASS_TWO
    if isolated and any(F(l * m - 1, j) + 1 <= t <= F((l + 1) * m + 1, j) - 1
                        for l in range(1, (j - 3) // 2 + 1)):
        return CLASS_TWO
    if isolated and F((j - 1) * m - 2, 2 * j) + 1 < t <= F(m - 1, 2):
        return CLASS_TWO
    return CLASS_THREE


def classify_block_dim2(t: int, j: int, m: int) -> int:
    """
    规范块 (1, ±t) 的类别

    以轨道精确求和为准；文字区间给出的类别与之不符时记录警告
    """
    oracle = class_from_orbit_value(orbit_class_value((1, t), j, m), j, m)
    printed = printed_rule_class(t, j, m)
    if printed != oracle:
        logger.warning(f"分类边界不一致: m={m}, j={j}, t={t}, 区间规则={printed}, 轨道求和={oracle}，采用轨道结果")
    return oracle


def _normalized_block(block: Tuple[int, ...]) -> Optional[Tuple[int, int]]:
    """块的首个非零分量为 1 时返回该块，否则返回 None"""
    first = next((x for x in block if x), 0)
    return (block[0], block[1]) if first == 1 else None


def corollary_class_sets(code: LinearCode, i: int, j: int) -> Dict[int, FrozenSet[CodeVector]]:
    """
    C_ij^1、C_ij^2、C_ij^3：C_i' 中第 i 块为规范代表元的码字按类别分组

    (1, 0) 与 (0, 1) 归入第三类
    """
    structure = code.structure
    m = structure.m
    _check_field(m)
    _check_j(j, m)
    _, top = chain_strata(code, i)
    groups: Dict[int, Set[CodeVector]] = {CLASS_ONE: set(), CLASS_TWO: set(), CLASS_THREE: set()}
    for u in top:
        normalized = _normalized_block(structure.block(u, i))
        if normalized is None:
            continue
        first, second = normalized
        if first == 0 or second == 0:
            groups[CLASS_THREE].add(u)
        else:
            groups[classify_block_dim2(lee_weight(second, m), j, m)].add(u)
    return {k: frozenset(v) for k, v in groups.items()}


def check_corollary_hypotheses(code: LinearCode, pomset: Pomset, structure: BlockStructure):
    check_chain_hypotheses(code, pomset, structure)
    _check_field(structure.m)
    if any(d != 2 for d in structure.dims):
        raise ValidationError(f"所有块维数必须为 2: {list(structure.dims)}", field="dims")


def field_dim2_dual_enumerator(code: LinearCode, pomset: Pomset, structure: BlockStructure) -> WeightEnumerator:
    """
    重量 (s−i)⌊m/2⌋ + j 的系数为
      (2m^{2(s−i)}/|C|)·[4j|C_i| + (2m−4j)|C_ij^1| − 4j|C_ij^2| + (m−4j)|C_ij^3|]
    """
    check_corollary_hypotheses(code, pomset, structure)
    m, s, h = structure.m, structure.s, structure.half
    values: List[Fraction] = [Fraction(0)] * (structure.degree + 1)
    values[0] = Fraction(1)
    for i in range(1, s + 1):
        lower, _ = chain_strata(code, i)
        scale = Fraction(2 * m ** (2 * (s - i)), code.size)
        for j in range(1, h + 1):
            sets = corollary_class_sets(code, i, j)
            bracket = (4 * j * lower.size
                       + (2 * m - 4 * j) * len(sets[CLASS_ONE])
                       - 4 * j * len(sets[CLASS_TWO])
                       + (m - 4 * j) * len(sets[CLASS_THREE]))
            values[(s - i) * h + j] = scale * bracket
    return WeightEnumerator.from_values(structure.degree, values)
