"""
块空间工具 - Lee 重量、Lee 块支撑以及 V = Z_m^{π(1)} ⊕ … ⊕ Z_m^{π(s)} 上的 pomset 块重量与距离
"""
import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .error_handler import ValidationError
from .pomset import Mset, Pomset, ideal_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockStructure:
    """块结构：模数 m 与标号 π，n = Σπ(i)"""
    m: int
    dims: Tuple[int, ...]

    def __post_init__(self):
        if self.m < 2:
            raise ValidationError(f"模数 m 必须 ≥ 2，当前为 {self.m}", field="m")
        if len(self.dims) < 1:
            raise ValidationError("块结构至少需要一个块", field="dims")
        if any(d < 1 for d in self.dims):
            raise ValidationError(f"块维数必须为正: {list(self.dims)}", field="dims")

    @property
    def n(self) -> int:
        return sum(self.dims)

    @property
    def s(self) -> int:
        return len(self.dims)

    @property
    def half(self) -> int:
        return self.m // 2

    @property
    def degree(self) -> int:
        """重量枚举多项式的次数 s⌊m/2⌋"""
        return self.s * self.half

    @property
    def starts(self) -> Tuple[int, ...]:
        offsets, total = [], 0
        for d in self.dims:
            offsets.append(total)
            total += d
        return tuple(offsets)

    def block_range(self, i: int) -> Tuple[int, int]:
        """第 i 块（从1开始）在坐标中的 [start, stop)"""
        if not 1 <= i <= self.s:
            raise ValidationError(f"块编号 {i} 超出范围 [1, {self.s}]", field="block")
        start = self.starts[i - 1]
        return start, start + self.dims[i - 1]

    def tail_length(self, i: int) -> int:
        """块 i+1..s 的总维数"""
        return sum(self.dims[i:])

    def sub_structure(self, first: int, last: int) -> "BlockStructure":
        """由块 first..last 组成的子结构"""
        if not 1 <= first <= last <= self.s:
            raise ValidationError(f"块区间 [{first}, {last}] 非法", field="block")
        return BlockStructure(self.m, self.dims[first - 1:last])

    def concat(self, other: "BlockStructure") -> "BlockStructure":
        """标号之和 π1 ⊕ π2"""
        if self.m != other.m:
            raise ValidationError(f"模数不一致: {self.m} vs {other.m}", field="m")
        return BlockStructure(self.m, self.dims + other.dims)

    def check_vector(self, u: "CodeVector"):
        if u.m != self.m:
            raise ValidationError(f"向量模数 {u.m} 与块结构模数 {self.m} 不一致", field="m")
        if len(u.entries) != self.n:
            raise ValidationError(f"向量长度 {len(u.entries)} 与 n = {self.n} 不一致", field="length")

    def blocks(self, u: "CodeVector") -> List[Tuple[int, ...]]:
        self.check_vector(u)
        return [u.entries[start:start + d] for start, d in zip(self.starts, self.dims)]

    def block(self, u: "CodeVector", i: int) -> Tuple[int, ...]:
        start, stop = self.block_range(i)
        return u.entries[start:stop]


@dataclass(frozen=True, order=True)
class CodeVector:
    """Z_m^n 中的向量，分量规范化存储在 [0, m-1]"""
    entries: Tuple[int, ...]
    m: int

    def __post_init__(self):
        if any(not 0 <= x < self.m for x in self.entries):
            raise ValidationError(f"向量分量必须位于 [0, {self.m - 1}]: {list(self.entries)}", field="entries")

    @classmethod
    def of(cls, entries: Iterable[int], m: int) -> "CodeVector":
        """读入时对分量取模"""
        return cls(tuple(int(x) % m for x in entries), m)

    @classmethod
    def zero(cls, n: int, m: int) -> "CodeVector":
        return cls((0,) * n, m)

    def __len__(self) -> int:
        return len(self.entries)

    def _check_same_space(self, other: "CodeVector"):
        if self.m != other.m or len(self.entries) != len(other.entries):
            raise ValidationError(
                f"向量长度或模数不一致: {self} vs {other}", field="length")

    def __add__(self, other: "CodeVector") -> "CodeVector":
        self._check_same_space(other)
        return CodeVector(tuple((x + y) % self.m for x, y in zip(self.entries, other.entries)), self.m)

    def __sub__(self, other: "CodeVector") -> "CodeVector":
        self._check_same_space(other)
        return CodeVector(tuple((x - y) % self.m for x, y in zip(self.entries, other.entries)), self.m)

    def __neg__(self) -> "CodeVector":
        return CodeVector(tuple((-x) % self.m for x in self.entries), self.m)

    def scale(self, c: int) -> "CodeVector":
        return CodeVector(tuple((c * x) % self.m for x in self.entries), self.m)

    def dot(self, other: "CodeVector") -> int:
        self._check_same_space(other)
        return sum(x * y for x, y in zip(self.entries, other.entries)) % self.m

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self) -> str:
        if all(x < 10 for x in self.entries):
            return "".join(str(x) for x in self.entries)
        return ",".join(str(x) for x in self.entries)


def lee_weight(a: int, m: int) -> int:
    """Lee 重量 w_L(a) = min(a, m-a)"""
    if not 0 <= a < m:
        raise ValidationError(f"剩余类 {a} 不在 [0, {m - 1}] 中", field="a")
    return min(a, m - a)


def block_lee_weight(block: Sequence[int], m: int) -> int:
    """块的 Lee 重量：块内分量 Lee 重量的最大值"""
    return max((lee_weight(x, m) for x in block), default=0)


def lee_block_support(u: CodeVector, structure: BlockStructure) -> Mset:
    """Lee 块支撑：每个非零块记为 s_i/i，s_i 为块 Lee 重量"""
    profile = tuple(block_lee_weight(block, structure.m) for block in structure.blocks(u))
    return Mset(structure.s, profile)


def _check_pomset_structure(pomset: Pomset, structure: BlockStructure):
    if pomset.size != structure.s or pomset.m != structure.m:
        raise ValidationError(
            f"pomset (s={pomset.size}, m={pomset.m}) 与块结构 (s={structure.s}, m={structure.m}) 不匹配",
            field="structure")


def pomset_block_weight(u: CodeVector, pomset: Pomset, structure: BlockStructure) -> int:
    """(P,π)-重量：Lee 块支撑生成的理想的基数"""
    _check_pomset_structure(pomset, structure)
    return ideal_of(pomset, lee_block_support(u, structure)).cardinality


def pomset_block_distance(u: CodeVector, v: CodeVector, pomset: Pomset, structure: BlockStructure) -> int:
    """d(u, v) = w(u - v)"""
    if len(u) != len(v):
        raise ValidationError(f"向量长度不一致: {len(u)} vs {len(v)}", field="length")
    return pomset_block_weight(u - v, pomset, structure)


def min_distance(code, pomset: Pomset, structure: BlockStructure) -> int:
    """
    (P,π)-最小距离

    线性码的最小距离等于非零码字的最小重量
    """
    if len(code.words) < 2:
        raise ValidationError("码字数少于2，最小距离无定义", field="code")
    return min(pomset_block_weight(u, pomset, structure) for u in code.words if not u.is_zero())


# ---------- numpy 批量计算 ----------

def block_lee_profiles(vectors: np.ndarray, structure: BlockStructure) -> np.ndarray:
    """批量计算块 Lee 重量，vectors 形状 (k, n)，返回 (k, s)"""
    if vectors.shape[0] == 0:
        return np.zeros((0, structure.s), dtype=np.int64)
    lee = np.minimum(vectors, structure.m - vectors)
    return np.maximum.reduceat(lee, list(structure.starts), axis=1)


def profile_weight(profile: Sequence[int], pomset: Pomset) -> int:
    return ideal_of(pomset, Mset(pomset.size, tuple(int(x) for x in profile))).cardinality


def pomset_block_weights(vectors: np.ndarray, pomset: Pomset, structure: BlockStructure) -> np.ndarray:
    """
    批量计算 (P,π)-重量

    只对出现过的块重量剖面求一次理想，再按剖面查表
    """
    _check_pomset_structure(pomset, structure)
    profiles = block_lee_profiles(vectors, structure)
    if profiles.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    unique, inverse = np.unique(profiles, axis=0, return_inverse=True)
    table = np.array([profile_weight(row, pomset) for row in unique], dtype=np.int64)
    return table[inverse.reshape(-1)]
