"""
多重集与偏序多重集（pomset）工具 - 多重集运算、序关系校验、理想生成、对偶以及链/反链/直和/序数和构造
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .error_handler import ValidationError

logger = logging.getLogger(__name__)

# 关系对 ((p, a), (q, b)) 表示 p/a R q/b
Element = Tuple[int, int]
RelationPair = Tuple[Element, Element]

CHAIN = "chain"
ANTICHAIN = "antichain"
DIRECT = "direct"
ORDINAL = "ordinal"


@dataclass(frozen=True)
class Mset:
    """
    定义在基点 1..s 上的多重集

    counts[a-1] 即 C_M(a)，基点从 1 开始编号
    """
    base_size: int
    counts: Tuple[int, ...]

    def __post_init__(self):
        if self.base_size < 1:
            raise ValidationError("多重集的基点数必须为正", field="base_size")
        if len(self.counts) != self.base_size:
            raise ValidationError(
                f"计数长度 {len(self.counts)} 与基点数 {self.base_size} 不一致", field="counts")
        if any(c < 0 for c in self.counts):
            raise ValidationError("多重集计数不能为负", field="counts")

    @classmethod
    def empty(cls, base_size: int) -> "Mset":
        return cls(base_size, (0,) * base_size)

    @classmethod
    def from_dict(cls, base_size: int, counts: Dict[int, int]) -> "Mset":
        """由 {基点: 计数} 构造，未出现的基点计数为0"""
        values = [0] * base_size
        for point, count in counts.items():
            if not 1 <= point <= base_size:
                raise ValidationError(f"基点 {point} 超出范围 [1, {base_size}]", field="counts")
            values[point - 1] = count
        return cls(base_size, tuple(values))

    def count(self, point: int) -> int:
        return self.counts[point - 1]

    @property
    def cardinality(self) -> int:
        return sum(self.counts)

    def __len__(self) -> int:
        return self.cardinality

    @property
    def root_set(self) -> FrozenSet[int]:
        return frozenset(a for a in range(1, self.base_size + 1) if self.counts[a - 1] > 0)

    def elements(self) -> List[Element]:
        """以 (计数, 基点) 形式列出非零元素"""
        return [(c, a) for a, c in enumerate(self.counts, start=1) if c > 0]

    def issubmset(self, other: "Mset") -> bool:
        self._check_compatible(other)
        return all(c1 <= c2 for c1, c2 in zip(self.counts, other.counts))

    def union(self, other: "Mset") -> "Mset":
        self._check_compatible(other)
        return Mset(self.base_size, tuple(max(c1, c2) for c1, c2 in zip(self.counts, other.counts)))

    __le__ = issubmset
    __or__ = union

    def _check_compatible(self, other: "Mset"):
        if self.base_size != other.base_size:
            raise ValidationError(
                f"多重集基点数不一致: {self.base_size} vs {other.base_size}", field="base_size")

    def __str__(self) -> str:
        return "{" + ", ".join(f"{c}/{a}" for c, a in self.elements()) + "}"


@dataclass(frozen=True)
class Pomset:
    """
    偏序多重集 P = (M, R)

    载体每个基点的计数统一为 ⌊m/2⌋；关系以显式的关系对集合存储（含自反对），
    构造时逐对扫描校验自反、反对称、传递三条公理。
    """
    m: int
    carrier: Mset
    relation: FrozenSet[RelationPair]

    def __post_init__(self):
        h = self.m // 2
        if any(c != h for c in self.carrier.counts):
            raise ValidationError(f"载体每个基点的计数必须为 ⌊m/2⌋ = {h}", field="carrier")
        for (p, a), (q, b) in self.relation:
            for count, point in ((p, a), (q, b)):
                if not 1 <= point <= self.size:
                    raise ValidationError(f"关系中的基点 {point} 超出范围", field="relation")
                if not 1 <= count <= self.carrier.count(point):
                    raise ValidationError(f"关系计数 {count}/{point} 超出载体计数", field="relation")
        self._validate_order()

    @property
    def size(self) -> int:
        return self.carrier.base_size

    @property
    def half(self) -> int:
        return self.m // 2

    def _validate_order(self):
        relation = self.relation
        for c, a in self.carrier.elements():
            if ((c, a), (c, a)) not in relation:
                raise ValidationError(f"关系不满足自反性: 缺少 {c}/{a} R {c}/{a}", field="relation")
        for x, y in relation:
            if x != y and (y, x) in relation:
                raise ValidationError(f"关系不满足反对称性: {x} 与 {y}", field="relation")
        successors: Dict[Element, List[Element]] = {}
        for x, y in relation:
            successors.setdefault(x, []).append(y)
        for x, y in relation:
            for z in successors.get(y, ()):
                if (x, z) not in relation:
                    raise ValidationError(f"关系不满足传递性: 缺少 {x} R {z}", field="relation")

    def below(self, point: int) -> Dict[int, int]:
        """严格位于 point 之下的基点及关系对携带的计数"""
        result: Dict[int, int] = {}
        for (q, b), (_, a) in self.relation:
            if a == point and b != point:
                result[b] = max(result.get(b, 0), q)
        return result

    def comparable(self, a: int, b: int) -> bool:
        points = {(x[1], y[1]) for x, y in self.relation}
        return (a, b) in points or (b, a) in points

    def less_than(self, a: int, b: int) -> bool:
        """a 严格位于 b 之下"""
        return a != b and any(x[1] == a and y[1] == b for x, y in self.relation)

    def maximal_points(self) -> List[int]:
        return [a for a in range(1, self.size + 1)
                if not any(self.less_than(a, b) for b in range(1, self.size + 1))]

    def minimal_points(self) -> List[int]:
        return [a for a in range(1, self.size + 1)
                if not any(self.less_than(b, a) for b in range(1, self.size + 1))]

    def is_chain(self) -> bool:
        return all(self.comparable(a, b)
                   for a in range(1, self.size + 1) for b in range(a + 1, self.size + 1))

    def is_antichain(self) -> bool:
        return not any(self.comparable(a, b)
                       for a in range(1, self.size + 1) for b in range(a + 1, self.size + 1))

    def levels(self) -> Optional[List[List[int]]]:
        """
        分层划分：若载体可划分为反链层 A_1..A_l，且任意 i<j 时 A_i 的每个点都在 A_j 每个点之下，
        返回各层；否则返回 None
        """
        remaining = list(range(1, self.size + 1))
        result: List[List[int]] = []
        while remaining:
            level = [a for a in remaining if not any(self.less_than(b, a) for b in remaining)]
            rest = [b for b in remaining if b not in level]
            if not all(self.less_than(a, b) for a in level for b in rest):
                return None
            result.append(level)
            remaining = rest
        return result

    def is_hierarchical(self) -> bool:
        return self.levels() is not None

    def __str__(self) -> str:
        strict = sorted((x[1], y[1]) for x, y in self.relation if x[1] != y[1])
        order = ", ".join(f"{a}<{b}" for a, b in strict) or "无"
        return f"Pomset(m={self.m}, M={self.carrier}, 序: {order})"


def _full_carrier(s: int, m: int) -> Mset:
    return Mset(s, (m // 2,) * s)


def _reflexive_pairs(s: int, h: int) -> List[RelationPair]:
    return [((h, a), (h, a)) for a in range(1, s + 1)]


def _check_dimensions(s: int, m: int):
    if s < 1:
        raise ValidationError(f"基点数 s 必须 ≥ 1，当前为 {s}", field="s")
    if m < 2:
        raise ValidationError(f"模数 m 必须 ≥ 2，当前为 {m}", field="m")


def make_pomset(s: int, m: int, kind: str) -> Pomset:
    """
    构造链或反链 pomset

    链: ⌊m/2⌋/i R ⌊m/2⌋/j ⇔ i ≤ j；反链: 仅有自反对
    """
    _check_dimensions(s, m)
    h = m // 2
    if kind == CHAIN:
        pairs = [((h, i), (h, j)) for i in range(1, s + 1) for j in range(i, s + 1)]
    elif kind == ANTICHAIN:
        pairs = _reflexive_pairs(s, h)
    else:
        raise ValidationError(f"未知的 pomset 类型: {kind}", field="kind")
    return Pomset(m, _full_carrier(s, m), frozenset(pairs))


def make_pomset_from_pairs(s: int, m: int, pairs: Iterable[Tuple[int, int]]) -> Pomset:
    """
    由基点对 (a, b)（表示 a 在 b 之下，计数取满）构造 pomset

    自反对自动补齐；不做传递闭包，传递性由构造校验
    """
    _check_dimensions(s, m)
    h = m // 2
    relation = set(_reflexive_pairs(s, h))
    for a, b in pairs:
        relation.add(((h, a), (h, b)))
    return Pomset(m, _full_carrier(s, m), frozenset(relation))


def _shift(pair: RelationPair, offset: int) -> RelationPair:
    (p, a), (q, b) = pair
    return (p, a + offset), (q, b + offset)


def combine_pomsets(p1: Pomset, p2: Pomset, mode: str) -> Pomset:
    """
    直和 (direct) 或序数和 (ordinal)

    P2 的基点整体平移 P1 的基点数；序数和额外令 P1 的每个点都在 P2 的每个点之下
    """
    if p1.m != p2.m:
        raise ValidationError(f"模数不一致: {p1.m} vs {p2.m}", field="m")
    if mode not in (DIRECT, ORDINAL):
        raise ValidationError(f"未知的组合方式: {mode}", field="mode")
    offset = p1.size
    h = p1.half
    relation = set(p1.relation) | {_shift(pair, offset) for pair in p2.relation}
    if mode == ORDINAL:
        relation |= {((h, i), (h, j))
                     for i in range(1, offset + 1) for j in range(offset + 1, offset + p2.size + 1)}
    return Pomset(p1.m, _full_carrier(offset + p2.size, p1.m), frozenset(relation))


def dual_pomset(pomset: Pomset) -> Pomset:
    """对偶 pomset: 载体不变，所有关系对反向"""
    return Pomset(pomset.m, pomset.carrier, frozenset((y, x) for x, y in pomset.relation))


def ideal_of(pomset: Pomset, generators: Mset) -> Mset:
    """
    子多重集生成的理想 ⟨S⟩ = ⋃ ⟨k/a⟩

    ⟨k/a⟩ 包含 k/a 本身，以及每个严格位于 a 之下的 b 在关系对 (q/b, ·/a) 中携带的计数 q，
    与 k 无关
    """
    if not generators.issubmset(pomset.carrier):
        raise ValidationError(f"生成集 {generators} 不是载体 {pomset.carrier} 的子多重集", field="generators")
    counts = list(generators.counts)
    for _, a in generators.elements():
        for b, q in pomset.below(a).items():
            counts[b - 1] = max(counts[b - 1], q)
    return Mset(generators.base_size, tuple(counts))
