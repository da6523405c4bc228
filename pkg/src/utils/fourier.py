"""
Fourier 变换校验 - 对任意 pomset 计算
    (1/|C|) Σ_{u∈C} Σ_{v∈Z_m^n} ω^{u·v} x^{D−w(v)} y^{w(v)}
其中 w 为对偶 pomset 下的重量，不依赖任何闭式恒等式
"""
import logging
from fractions import Fraction
from typing import List, Optional

import numpy as np

from ..config import resolve_chunk_size
from .block_space import BlockStructure, pomset_block_weights
from .cyclotomic import CycloNum, as_integer
from .error_handler import ValidationError
from .linear_code import LinearCode, space_chunks
from .pomset import Pomset, dual_pomset
from .weight_enumerator import WeightEnumerator

logger = logging.getLogger(__name__)


def fourier_dual_enumerator(code: LinearCode, pomset: Pomset, structure: BlockStructure,
                            budget: Optional[int] = None, chunk_size: Optional[int] = None) -> WeightEnumerator:
    """
    按 (重量, 指数 u·v mod m) 统计直方图，再把每个重量上的 Σ count·ω^e 精确求值
    """
    if code.structure != structure:
        raise ValidationError("码的块结构与给定块结构不一致", field="structure")
    m, degree = structure.m, structure.degree
    dual = dual_pomset(pomset)
    words = code.as_array()
    chunk_size = resolve_chunk_size(chunk_size)
    histogram = np.zeros((degree + 1) * m, dtype=np.int64)
    scanned = 0
    for chunk in space_chunks(structure, budget, chunk_size):
        weights = pomset_block_weights(chunk, dual, structure)
        # 每次内积矩阵不超过 chunk_size 个元素
        step = max(1, chunk_size // chunk.shape[0])
        for start in range(0, words.shape[0], step):
            exponents = (chunk @ words[start:start + step].T) % m
            index = weights[:, None] * m + exponents
            histogram += np.bincount(index.ravel(), minlength=(degree + 1) * m)
        scanned += chunk.shape[0]
    logger.debug(f"Fourier 扫描: {scanned} 个向量, |C|={code.size}")

    inverse = Fraction(1, code.size)
    histogram = histogram.reshape(degree + 1, m)
    values: List[int] = []
    for w in range(degree + 1):
        total = CycloNum.from_powers(m, [int(c) for c in histogram[w]])
        values.append(as_integer(total * inverse))
    return WeightEnumerator(degree, tuple(values))
