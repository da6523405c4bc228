"""
测试公共夹具：三个算例、随机实例生成与穷举对照
"""
import random
from typing import List, Sequence

import pytest

from src.utils.block_space import BlockStructure, CodeVector
from src.utils.linear_code import LinearCode, dual_code, span_code, weight_enumerator
from src.utils.pomset import CHAIN, Pomset, dual_pomset, make_pomset
from src.utils.weight_enumerator import WeightEnumerator

# 穷举对照的 m^n 上限，保证整套测试在分钟级完成
SPACE_LIMIT = 3125


def vec(digits, m: int) -> CodeVector:
    """'112' 或 [1, 1, 2] 形式的向量"""
    if isinstance(digits, str):
        digits = [int(c) for c in digits]
    return CodeVector.of(digits, m)


def brute_force_dual(code: LinearCode, pomset: Pomset, structure: BlockStructure) -> WeightEnumerator:
    """对偶码在对偶 pomset 下的穷举重量枚举"""
    return weight_enumerator(dual_code(code), dual_pomset(pomset), structure)


def random_code(rng: random.Random, structure: BlockStructure, max_generators: int = 2) -> LinearCode:
    """随机生成元张成的码，|C| ≤ m^max_generators"""
    m, n = structure.m, structure.n
    count = rng.randint(0, max_generators)
    generators = [CodeVector(tuple(rng.randrange(m) for _ in range(n)), m) for _ in range(count)]
    return span_code(generators, structure)


def random_dims(rng: random.Random, m: int, max_points: int = 3, max_dim: int = 2) -> List[int]:
    """块维数 π(i) ∈ [1, max_dim]，且 m^n 不超过 SPACE_LIMIT"""
    while True:
        s = rng.randint(1, max_points)
        dims = [rng.randint(1, max_dim) for _ in range(s)]
        if m ** sum(dims) <= SPACE_LIMIT:
            return dims


def chain_instance(rng: random.Random, moduli: Sequence[int] = (3, 4, 5, 6, 7)):
    m = rng.choice(list(moduli))
    structure = BlockStructure(m, tuple(random_dims(rng, m)))
    pomset = make_pomset(structure.s, m, CHAIN)
    return structure, pomset, random_code(rng, structure)


@pytest.fixture
def rng():
    return random.Random(20240617)


@pytest.fixture
def z4_example():
    """Z_4, π = (2,1)，C = ⟨112⟩"""
    structure = BlockStructure(4, (2, 1))
    pomset = make_pomset(2, 4, CHAIN)
    code = span_code([vec("112", 4)], structure)
    return structure, pomset, code


@pytest.fixture
def z5_example():
    """Z_5, π = (1,2)，C = ⟨132⟩"""
    structure = BlockStructure(5, (1, 2))
    pomset = make_pomset(2, 5, CHAIN)
    code = span_code([vec("132", 5)], structure)
    return structure, pomset, code


@pytest.fixture
def field_example():
    """Z_5, π = (2,2)，生成矩阵 [[1,0,1,1],[0,1,2,0]]"""
    structure = BlockStructure(5, (2, 2))
    pomset = make_pomset(2, 5, CHAIN)
    code = span_code([vec("1011", 5), vec("0120", 5)], structure)
    return structure, pomset, code
