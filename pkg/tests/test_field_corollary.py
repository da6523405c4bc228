"""
素数域、块维数为 2 的推论与码字分类单元测试
"""
import logging
import random

import pytest

from src.utils.block_space import BlockStructure
from src.utils.error_handler import ComputationError, ValidationError
from src.utils.field_corollary import (CLASS_ONE, CLASS_THREE, CLASS_TWO, class_from_orbit_value,
                                       classify_block_dim2, corollary_class_sets, field_dim2_dual_enumerator,
                                       is_prime, orbit_class_value, printed_rule_class)
from src.utils.linear_code import zero_code
from src.utils.macwilliams import chain_dual_enumerator
from src.utils.pomset import CHAIN, make_pomset
from tests.conftest import brute_force_dual, random_code


def words(vectors):
    return {str(u) for u in vectors}


class TestClassification:
    """测试规范块分类"""

    def test_small_field_examples(self):
        assert classify_block_dim2(2, 1, 5) == CLASS_TWO
        assert classify_block_dim2(1, 1, 5) == CLASS_THREE
        assert classify_block_dim2(2, 2, 5) == CLASS_ONE

    @pytest.mark.parametrize("m", [5, 7, 11])
    def test_orbit_values_are_in_three_classes(self, m):
        for j in range(1, m // 2 + 1):
            expected = {CLASS_ONE: 2 * m - 4 * j, CLASS_TWO: -4 * j, CLASS_THREE: m - 4 * j}
            for t in range(1, (m - 1) // 2 + 1):
                value = orbit_class_value((1, t), j, m)
                assigned = classify_block_dim2(t, j, m)
                assert value == expected[assigned]
                # (1, t) 与 (1, −t) 同属一类
                assert orbit_class_value((1, m - t), j, m) == value

    @pytest.mark.parametrize("m", [5, 7, 11])
    def test_axis_blocks_are_class_three(self, m):
        for j in range(1, m // 2 + 1):
            assert orbit_class_value((1, 0), j, m) == m - 4 * j
            assert orbit_class_value((0, 1), j, m) == m - 4 * j

    @pytest.mark.parametrize("m", [5, 7, 11])
    def test_j_one_printed_rule(self, m):
        for t in range(1, (m - 1) // 2 + 1):
            expected = CLASS_THREE if t == 1 else CLASS_TWO
            assert printed_rule_class(t, 1, m) == expected
            assert classify_block_dim2(t, 1, m) == expected

    def test_disagreement_is_logged(self, caplog):
        with pytest.MonkeyPatch.context() as mp:
            mp.setattr('src.utils.field_corollary.printed_rule_class', lambda t, j, m: CLASS_ONE)
            with caplog.at_level(logging.WARNING, logger='src.utils.field_corollary'):
                assert classify_block_dim2(1, 1, 5) == CLASS_THREE
        assert "分类边界不一致" in caplog.text

    def test_unknown_orbit_value(self):
        with pytest.raises(ComputationError):
            class_from_orbit_value(7, 1, 5)

    @pytest.mark.parametrize("m", [2, 4, 9])
    def test_requires_odd_prime(self, m):
        with pytest.raises(ValidationError):
            orbit_class_value((1, 1), 1, m)

    def test_argument_ranges(self):
        with pytest.raises(ValidationError):
            printed_rule_class(3, 1, 5)
        with pytest.raises(ValidationError):
            orbit_class_value((1, 1), 3, 5)
        with pytest.raises(ValidationError):
            orbit_class_value((0, 0), 1, 5)

    def test_is_prime(self):
        assert [m for m in range(1, 20) if is_prime(m)] == [2, 3, 5, 7, 11, 13, 17, 19]


class TestClassSets:
    """测试C_ij^1、C_ij^2、C_ij^3"""

    def test_field_example(self, field_example):
        _, _, code = field_example
        sets_j1 = corollary_class_sets(code, 2, 1)
        assert sets_j1[CLASS_ONE] == frozenset()
        assert words(sets_j1[CLASS_TWO]) == {"2212", "3413"}
        assert words(sets_j1[CLASS_THREE]) == {"1011", "4114", "0310", "1201"}
        sets_j2 = corollary_class_sets(code, 2, 2)
        assert words(sets_j2[CLASS_ONE]) == {"2212", "3413"}
        assert len(sets_j2[CLASS_THREE]) == 4

    def test_first_stratum_is_empty(self, field_example):
        _, _, code = field_example
        sets = corollary_class_sets(code, 1, 1)
        assert all(not members for members in sets.values())


class TestFieldDim2DualEnumerator:
    """测试推论的对偶枚举"""

    def test_field_example(self, field_example):
        structure, pomset, code = field_example
        enumerator = field_dim2_dual_enumerator(code, pomset, structure)
        assert list(enumerator.coeffs) == [1, 0, 0, 8, 16]
        assert enumerator.to_polynomial() == "x^4 + 8xy^3 + 16y^4"
        assert enumerator == chain_dual_enumerator(code, pomset, structure)
        assert enumerator == brute_force_dual(code, pomset, structure)

    def test_zero_code(self):
        structure = BlockStructure(5, (2, 2))
        pomset = make_pomset(2, 5, CHAIN)
        code = zero_code(structure)
        enumerator = field_dim2_dual_enumerator(code, pomset, structure)
        assert enumerator.size == 5 ** 4
        assert enumerator == brute_force_dual(code, pomset, structure)

    @pytest.mark.parametrize("m, dims", [(3, (2, 2)), (5, (2,)), (5, (2, 2)), (7, (2,))])
    def test_agrees_with_theorem(self, m, dims):
        rng = random.Random(m * 10 + len(dims))
        structure = BlockStructure(m, dims)
        pomset = make_pomset(structure.s, m, CHAIN)
        for _ in range(8):
            code = random_code(rng, structure)
            assert field_dim2_dual_enumerator(code, pomset, structure) == \
                chain_dual_enumerator(code, pomset, structure)

    def test_requires_dimension_two(self, z5_example):
        structure, pomset, code = z5_example
        with pytest.raises(ValidationError, match="维数必须为 2"):
            field_dim2_dual_enumerator(code, pomset, structure)

    def test_requires_prime(self, z4_example):
        structure, pomset, code = z4_example
        with pytest.raises(ValidationError, match="不是素数"):
            field_dim2_dual_enumerator(code, pomset, structure)
