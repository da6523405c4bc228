"""
线性码工具 - 生成元张成、对偶码穷举扫描、重量枚举以及链分层 C_i / C_i'
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

import numpy as np

from ..config import resolve_budget, resolve_chunk_size
from .block_space import BlockStructure, CodeVector, pomset_block_weights
from .error_handler import ValidationError, check_budget
from .pomset import Pomset
from .weight_enumerator import WeightEnumerator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearCode:
    """以显式码字集合存储的 Z_m 线性码"""
    structure: BlockStructure
    words: FrozenSet[CodeVector]

    def __post_init__(self):
        for u in self.words:
            self.structure.check_vector(u)

    @property
    def m(self) -> int:
        return self.structure.m

    @property
    def n(self) -> int:
        return self.structure.n

    @property
    def size(self) -> int:
        return len(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, u: CodeVector) -> bool:
        return u in self.words

    def __iter__(self) -> Iterator[CodeVector]:
        return iter(self.sorted_words())

    def sorted_words(self) -> List[CodeVector]:
        return sorted(self.words)

    def as_array(self) -> np.ndarray:
        """码字矩阵，形状 (|C|, n)，按字典序排列"""
        if not self.words:
            return np.zeros((0, self.n), dtype=np.int64)
        return np.array([u.entries for u in self.sorted_words()], dtype=np.int64)

    def __str__(self) -> str:
        return "{" + ", ".join(str(u) for u in self.sorted_words()) + "}"


def vectors_from_array(array: np.ndarray, m: int) -> List[CodeVector]:
    return [CodeVector(tuple(int(x) for x in row), m) for row in array]


def span_code(generators: Iterable[CodeVector], structure: BlockStructure) -> LinearCode:
    """
    生成元张成的子模

    逐个生成元做闭包：{w + c·g : w ∈ 当前集合, c ∈ Z_m}
    """
    m = structure.m
    words: Set[CodeVector] = {CodeVector.zero(structure.n, m)}
    for g in generators:
        structure.check_vector(g)
        multiples = [g.scale(c) for c in range(m)]
        words = {w + gc for w in words for gc in multiples}
    logger.debug(f"张成码: n={structure.n}, m={m}, |C|={len(words)}")
    return LinearCode(structure, frozenset(words))


def code_from_words(words: Iterable[CodeVector], structure: BlockStructure) -> LinearCode:
    """由显式码字列表构造线性码，要求集合确为子模"""
    code = LinearCode(structure, frozenset(words))
    if not is_linear(code):
        raise ValidationError("给定码字集合不是 Z_m 子模（缺少零向量或不封闭）", field="words")
    return code


def is_linear(code: LinearCode) -> bool:
    """子模检验：含零向量，对加法封闭（对加法封闭即蕴含对 Z_m 数乘封闭）"""
    if CodeVector.zero(code.n, code.m) not in code.words:
        return False
    return all(u + v in code.words for u in code.words for v in code.words)


def zero_code(structure: BlockStructure) -> LinearCode:
    return LinearCode(structure, frozenset([CodeVector.zero(structure.n, structure.m)]))


def space_size(structure: BlockStructure) -> int:
    return structure.m ** structure.n


def _index_powers(structure: BlockStructure) -> np.ndarray:
    """m 进制位权，第一个坐标为最高位"""
    m, n = structure.m, structure.n
    return np.array([m ** (n - 1 - k) for k in range(n)], dtype=np.int64)


def space_chunks(structure: BlockStructure, budget: Optional[int] = None,
                 chunk_size: Optional[int] = None) -> Iterator[np.ndarray]:
    """
    分块枚举 Z_m^n，每块形状 (rows, n)

    索引按 m 进制展开，第一个坐标为最高位
    """
    budget = resolve_budget(budget)
    chunk_size = resolve_chunk_size(chunk_size)
    total = space_size(structure)
    check_budget(total, budget, what=f"Z_{structure.m}^{structure.n} 穷举")
    m = structure.m
    powers = _index_powers(structure)
    for start in range(0, total, chunk_size):
        index = np.arange(start, min(start + chunk_size, total), dtype=np.int64)
        yield (index[:, None] // powers[None, :]) % m


def full_space(structure: BlockStructure, budget: Optional[int] = None) -> LinearCode:
    words: List[CodeVector] = []
    for chunk in space_chunks(structure, budget):
        words.extend(vectors_from_array(chunk, structure.m))
    return LinearCode(structure, frozenset(words))


def generating_set(code: LinearCode) -> List[CodeVector]:
    """
    贪心挑出一组生成元：按字典序遍历码字，只保留使张成变大的码字

    每加入一个生成元张成至少翻倍，故生成元个数不超过 log2|C|
    """
    structure = code.structure
    m, n = structure.m, structure.n
    powers = _index_powers(structure)
    span = np.zeros((1, n), dtype=np.int64)
    span_index = {0}
    generators: List[CodeVector] = []
    for u in code.sorted_words():
        if len(span_index) >= code.size:
            break
        row = np.array(u.entries, dtype=np.int64)
        if int(row @ powers) in span_index:
            continue
        generators.append(u)
        multiples = (np.arange(m, dtype=np.int64)[:, None] * row[None, :]) % m
        combined = ((span[:, None, :] + multiples[None, :, :]) % m).reshape(-1, n)
        index, first = np.unique(combined @ powers, return_index=True)
        span = combined[first]
        span_index = set(index.tolist())
    logger.debug(f"生成元: |C|={code.size}, 共 {len(generators)} 个")
    return generators


def dual_code(code: LinearCode, budget: Optional[int] = None,
              chunk_size: Optional[int] = None) -> LinearCode:
    """C^⊥ = {v : c·v ≡ 0 (mod m), ∀c ∈ C}，对 Z_m^n 分块穷举扫描，只与生成元做内积"""
    m = code.m
    check_budget(space_size(code.structure), resolve_budget(budget), what=f"Z_{m}^{code.n} 穷举")
    generators = generating_set(code)
    words_array = np.array([g.entries for g in generators], dtype=np.int64).reshape(len(generators), code.n)
    dual_words: List[CodeVector] = []
    for chunk in space_chunks(code.structure, budget, chunk_size):
        inner = (chunk @ words_array.T) % m
        orthogonal = chunk[~inner.any(axis=1)]
        dual_words.extend(vectors_from_array(orthogonal, m))
    logger.debug(f"对偶码: |C|={code.size}, |C^⊥|={len(dual_words)}")
    return LinearCode(code.structure, frozenset(dual_words))


def _check_structure(code: LinearCode, structure: BlockStructure):
    if code.structure != structure:
        raise ValidationError(
            f"码的块结构 {code.structure} 与给定块结构 {structure} 不一致", field="structure")


def weight_enumerator(code: LinearCode, pomset: Pomset, structure: BlockStructure) -> WeightEnumerator:
    """W(x, y) = Σ_{u∈C} x^{D-w(u)} y^{w(u)}"""
    _check_structure(code, structure)
    weights = pomset_block_weights(code.as_array(), pomset, structure)
    counts = np.bincount(weights, minlength=structure.degree + 1)
    return WeightEnumerator(structure.degree, tuple(int(c) for c in counts))


def _blocks_zero(u: CodeVector, structure: BlockStructure, first: int) -> bool:
    """块 first..s 是否全为零"""
    if first > structure.s:
        return True
    start, _ = structure.block_range(first)
    return not any(u.entries[start:])


def chain_strata(code: LinearCode, i: int) -> Tuple[LinearCode, FrozenSet[CodeVector]]:
    """
    链分层

    C_i: 块 i..s 全为零的码字（线性子码）
    C_i': 块 i 非零、块 i+1..s 全为零的码字
    """
    structure = code.structure
    if not 1 <= i <= structure.s:
        raise ValidationError(f"块编号 {i} 超出范围 [1, {structure.s}]", field="i")
    lower = frozenset(u for u in code.words if _blocks_zero(u, structure, i))
    top = frozenset(u for u in code.words
                    if _blocks_zero(u, structure, i + 1) and not _blocks_zero(u, structure, i))
    return LinearCode(structure, lower), top


def direct_sum_codes(first: LinearCode, second: LinearCode) -> LinearCode:
    """C1 ⊕ C2：坐标拼接"""
    structure = first.structure.concat(second.structure)
    words = frozenset(CodeVector(u.entries + v.entries, structure.m)
                      for u in first.words for v in second.words)
    return LinearCode(structure, words)


def project_code(code: LinearCode, first_block: int, last_block: int) -> LinearCode:
    """码在块 first_block..last_block 上的投影"""
    structure = code.structure
    sub = structure.sub_structure(first_block, last_block)
    start, _ = structure.block_range(first_block)
    _, stop = structure.block_range(last_block)
    words = frozenset(CodeVector(u.entries[start:stop], structure.m) for u in code.words)
    return LinearCode(sub, words)
