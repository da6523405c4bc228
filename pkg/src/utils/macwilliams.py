"""
链 pomset 的 MacWilliams 型恒等式

只用码 C 本身的数据（分层 C_i、C_i' 与精确分圆域特征和）计算对偶码在对偶链下的重量枚举，
奇数 m 与偶数 m 分别处理；另附 π ≡ 1 时按 Lee 重量分层的直接写法，供交叉校验
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Sequence

from .block_space import BlockStructure, CodeVector, lee_weight
from .cyclotomic import CycloNum, as_integer, cos_value, kernel_sum
from .error_handler import ValidationError
from .linear_code import LinearCode, chain_strata
from .pomset import CHAIN, Pomset, make_pomset
from .weight_enumerator import WeightEnumerator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainCoefficients:
    """β_ij = ((2j+1)^k − (2j−1)^k)/2，γ_i = m^k − (m−1)^k，k = π(i)"""
    beta: int
    gamma: int


def _check_j(j: int, m: int):
    if not 1 <= j <= m // 2:
        raise ValidationError(f"j = {j} 超出范围 [1, {m // 2}]", field="j")


def chain_coefficients(j: int, k: int, m: int) -> ChainCoefficients:
    _check_j(j, m)
    if k < 1:
        raise ValidationError(f"块维数必须为正: {k}", field="k")
    beta = ((2 * j + 1) ** k - (2 * j - 1) ** k) // 2
    gamma = m ** k - (m - 1) ** k
    return ChainCoefficients(beta=beta, gamma=gamma)


def block_character_term(block: Sequence[int], j: int, m: int) -> CycloNum:
    """
    单个块对 LW^j 的贡献

    一般情形: Σ_a cos(2π u_a j/m) · Π_{b<a} K(u_b, j−1) · Π_{b>a} K(u_b, j)
    m 为偶数且 j = m/2: Σ_a (−1)^{u_a} · Π_{b<a} K(u_b, m/2−1) · Π_{b>a} (K(u_b, m/2−1) + (−1)^{u_b})
    其中 K(u, j) = Σ_{t=-j}^{j} ω^{ut}
    """
    _check_j(j, m)
    top = m % 2 == 0 and j == m // 2
    total = CycloNum.zero(m)
    for a, ua in enumerate(block):
        if top:
            term = CycloNum.rational(m, (-1) ** ua)
        else:
            term = cos_value(m, ua * j)
        for b, ub in enumerate(block):
            if b < a:
                term = term * kernel_sum(ub, j - 1, m)
            elif b > a:
                factor = kernel_sum(ub, j - 1, m) + (-1) ** ub if top else kernel_sum(ub, j, m)
                term = term * factor
        total = total + term
    return total


def _check_stratum_vector(u: CodeVector, i: int, structure: BlockStructure):
    blocks = structure.blocks(u)
    if not any(blocks[i - 1]):
        raise ValidationError(f"码字 {u} 的第 {i} 块为零，不属于 C_{i}'", field="stratum")
    if any(any(block) for block in blocks[i:]):
        raise ValidationError(f"码字 {u} 在第 {i} 块之后仍有非零块，不属于 C_{i}'", field="stratum")


def lw_term(stratum: Iterable[CodeVector], i: int, j: int, structure: BlockStructure) -> CycloNum:
    """LW^j_{C_i'}：对分层中每个码字的第 i 块求 block_character_term 之和"""
    m = structure.m
    _check_j(j, m)
    total = CycloNum.zero(m)
    for u in stratum:
        _check_stratum_vector(u, i, structure)
        total = total + block_character_term(structure.block(u, i), j, m)
    return total


def check_chain_hypotheses(code: LinearCode, pomset: Pomset, structure: BlockStructure):
    """链恒等式的前提：pomset 恰为与块结构匹配的链，码的块结构一致"""
    if code.structure != structure:
        raise ValidationError("码的块结构与给定块结构不一致", field="structure")
    if pomset.size != structure.s or pomset.m != structure.m:
        raise ValidationError(
            f"pomset (s={pomset.size}, m={pomset.m}) 与块结构 (s={structure.s}, m={structure.m}) 不匹配",
            field="structure")
    if pomset != make_pomset(structure.s, structure.m, CHAIN):
        raise ValidationError("链恒等式要求 pomset 为链 1 < 2 < … < s", field="pomset")


def chain_dual_enumerator(code: LinearCode, pomset: Pomset, structure: BlockStructure) -> WeightEnumerator:
    """
    对偶码在对偶链下的重量枚举（只用 C 的数据）

    重量 (s−i)⌊m/2⌋ + j 的系数为 m^{π(i+1)+…+π(s)} / |C| 乘以
      2β_ij|C_i| + 2LW^j        （m 为奇数，或 j < m/2）
      γ_i|C_i| + LW^{m/2}       （m 为偶数且 j = m/2）
    每个系数都经 as_integer 提取，非整数即视为计算错误
    """
    check_chain_hypotheses(code, pomset, structure)
    m, s, h = structure.m, structure.s, structure.half
    values: List[int] = [0] * (structure.degree + 1)
    values[0] = 1
    for i in range(1, s + 1):
        lower, top = chain_strata(code, i)
        scale = Fraction(m ** structure.tail_length(i), code.size)
        k = structure.dims[i - 1]
        for j in range(1, h + 1):
            coefficients = chain_coefficients(j, k, m)
            lw = lw_term(top, i, j, structure)
            if m % 2 == 0 and j == m // 2:
                aggregate = lw + coefficients.gamma * lower.size
            else:
                aggregate = lw * 2 + 2 * coefficients.beta * lower.size
            values[(s - i) * h + j] = as_integer(aggregate * scale)
    result = WeightEnumerator(structure.degree, tuple(values))
    logger.debug(f"链恒等式: |C|={code.size}, W={result.coeffs}")
    return result


def _lee_strata(top: FrozenSet[CodeVector], i: int, structure: BlockStructure) -> Dict[int, int]:
    """|C'_il|：C_i' 中第 i 块 Lee 重量为 l 的码字数"""
    counts: Dict[int, int] = {}
    for u in top:
        l = lee_weight(structure.block(u, i)[0], structure.m)
        counts[l] = counts.get(l, 0) + 1
    return counts


def unit_block_dual_enumerator(code: LinearCode, pomset: Pomset, structure: BlockStructure) -> WeightEnumerator:
    """
    π ≡ 1 时的对偶枚举，按 Lee 重量分层直接写出

    m 奇: (2m^{s−i}/|C|)(|C_i| + Σ_l cos(2πlj/m)|C'_il|)
    m 偶: (m^{s−i}/|C|)(2|C_i| + 2Σ_l cos(2πlj/m)|C'_il|)，j = m/2 时为 (m^{s−i}/|C|)(|C_i| + Σ_l (−1)^l|C'_il|)
    """
    check_chain_hypotheses(code, pomset, structure)
    if any(d != 1 for d in structure.dims):
        raise ValidationError("单位块公式要求所有块维数为 1", field="dims")
    m, s, h = structure.m, structure.s, structure.half
    values: List[int] = [0] * (structure.degree + 1)
    values[0] = 1
    for i in range(1, s + 1):
        lower, top = chain_strata(code, i)
        strata = _lee_strata(top, i, structure)
        scale = Fraction(m ** (s - i), code.size)
        for j in range(1, h + 1):
            if m % 2 == 0 and j == h:
                aggregate = CycloNum.rational(m, lower.size + sum((-1) ** l * c for l, c in strata.items()))
            else:
                cosine_sum = CycloNum.zero(m)
                for l, c in strata.items():
                    cosine_sum = cosine_sum + cos_value(m, l * j) * c
                aggregate = (cosine_sum + lower.size) * 2
            values[(s - i) * h + j] = as_integer(aggregate * scale)
    return WeightEnumerator(structure.degree, tuple(values))

