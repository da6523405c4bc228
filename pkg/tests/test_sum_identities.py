"""
直和与序数和恒等式单元测试
"""
import random
from functools import reduce

import pytest

from src.utils.block_space import BlockStructure
from src.utils.error_handler import ValidationError
from src.utils.linear_code import direct_sum_codes, full_space, span_code, zero_code
from src.utils.pomset import ANTICHAIN, CHAIN, DIRECT, ORDINAL, combine_pomsets, make_pomset
from src.utils.sum_identities import SumPart, split_code, sum_dual_enumerator
from src.utils.weight_enumerator import WeightEnumerator
from tests.conftest import SPACE_LIMIT, brute_force_dual, random_code, vec


def random_parts(rng: random.Random, count: int):
    """count 个共享模数的随机分量 (结构, pomset, 码)"""
    while True:
        m = rng.choice([2, 3, 4, 5])
        parts = []
        for _ in range(count):
            s = rng.randint(1, 2)
            structure = BlockStructure(m, tuple(rng.randint(1, 2) for _ in range(s)))
            pomset = make_pomset(s, m, rng.choice([CHAIN, ANTICHAIN]))
            parts.append((structure, pomset, random_code(rng, structure, max_generators=1)))
        if m ** sum(p[0].n for p in parts) <= SPACE_LIMIT:
            return m, parts


def as_sum_part(structure, pomset, code):
    return SumPart(brute_force_dual(code, pomset, structure), code.size, structure.n, structure.s, structure.m)


def combined(parts, mode):
    structure = reduce(lambda a, b: a.concat(b), [p[0] for p in parts])
    pomset = reduce(lambda a, b: combine_pomsets(a, b, mode), [p[1] for p in parts])
    code = reduce(direct_sum_codes, [p[2] for p in parts])
    return code, pomset, structure


class TestSumDualEnumerator:
    """测试和恒等式"""

    @pytest.mark.parametrize("mode", [DIRECT, ORDINAL])
    def test_random_pairs(self, rng, mode):
        for _ in range(30):
            m, parts = random_parts(rng, 2)
            identity = sum_dual_enumerator([as_sum_part(*p) for p in parts], mode, m)
            assert identity == brute_force_dual(*combined(parts, mode))

    @pytest.mark.parametrize("mode", [DIRECT, ORDINAL])
    def test_random_triples(self, rng, mode):
        for _ in range(10):
            m, parts = random_parts(rng, 3)
            identity = sum_dual_enumerator([as_sum_part(*p) for p in parts], mode, m)
            assert identity == brute_force_dual(*combined(parts, mode))

    def test_direct_with_full_space_second_part(self, z4_example):
        structure, pomset, code = z4_example
        second = BlockStructure(4, (1,))
        second_pomset = make_pomset(1, 4, CHAIN)
        parts = [as_sum_part(structure, pomset, code),
                 as_sum_part(second, second_pomset, full_space(second))]
        assert parts[1].enumerator == WeightEnumerator.monomial(2)
        result = sum_dual_enumerator(parts, DIRECT, 4)
        assert result == parts[0].enumerator.times_x(2)

    def test_ordinal_with_zero_first_part(self):
        first = BlockStructure(3, (1, 1))
        second = BlockStructure(3, (2,))
        p1, p2 = make_pomset(2, 3, CHAIN), make_pomset(1, 3, ANTICHAIN)
        c1, c2 = zero_code(first), span_code([vec("12", 3)], second)
        result = sum_dual_enumerator([as_sum_part(first, p1, c1), as_sum_part(second, p2, c2)], ORDINAL, 3)
        assert result == brute_force_dual(*combined([(first, p1, c1), (second, p2, c2)], ORDINAL))

    def test_validation(self, z4_example):
        part = as_sum_part(*z4_example)
        with pytest.raises(ValidationError, match="至少需要 2 个分量"):
            sum_dual_enumerator([part], DIRECT, 4)
        with pytest.raises(ValidationError, match="未知的组合方式"):
            sum_dual_enumerator([part, part], "tensor", 4)
        with pytest.raises(ValidationError, match="模数"):
            sum_dual_enumerator([part, part], DIRECT, 5)
        bad_degree = SumPart(WeightEnumerator.monomial(3), 1, 1, 1)
        with pytest.raises(ValidationError, match="枚举次数"):
            sum_dual_enumerator([part, bad_degree], ORDINAL, 4)
        empty = SumPart(WeightEnumerator.monomial(2), 0, 1, 1)
        with pytest.raises(ValidationError, match="码字数必须为正"):
            sum_dual_enumerator([part, empty], ORDINAL, 4)


class TestSplitCode:
    """测试按分量拆分码"""

    def test_split_direct_sum(self, rng):
        for _ in range(10):
            _, parts = random_parts(rng, 2)
            code, _, _ = combined(parts, DIRECT)
            pieces = split_code(code, [parts[0][0].s, parts[1][0].s])
            assert pieces == [parts[0][2], parts[1][2]]

    def test_rejects_coupled_code(self, z4_example):
        _, _, code = z4_example
        with pytest.raises(ValidationError, match="直和"):
            split_code(code, [1, 1])

    def test_point_counts_must_cover_blocks(self, z4_example):
        _, _, code = z4_example
        with pytest.raises(ValidationError, match="块数"):
            split_code(code, [1])
