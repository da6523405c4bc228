"""
重量枚举多项式 - 齐次二元多项式 Σ A_i x^{D-i} y^i，以系数列表 A_0..A_D 存储
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .error_handler import ComputationError, ValidationError

Number = Union[int, Fraction]


def _to_int(value: Number, what: str) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise ComputationError(f"{what} 不是整数: {value}", step="weight_enumerator")
    return int(value)


@dataclass(frozen=True)
class WeightEnumerator:
    """次数为 D = s⌊m/2⌋ 的重量枚举多项式"""
    degree: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ValidationError(f"次数不能为负: {self.degree}", field="degree")
        if len(self.coeffs) != self.degree + 1:
            raise ValidationError(
                f"系数个数 {len(self.coeffs)} 与次数 {self.degree} 不一致", field="coeffs")

    @classmethod
    def from_weights(cls, degree: int, weights: Iterable[int]) -> "WeightEnumerator":
        counts = [0] * (degree + 1)
        for w in weights:
            if not 0 <= w <= degree:
                raise ComputationError(f"重量 {w} 超出 [0, {degree}]", step="weight_enumerator")
            counts[w] += 1
        return cls(degree, tuple(counts))

    @classmethod
    def from_values(cls, degree: int, values: Sequence[Number]) -> "WeightEnumerator":
        """由可能是分数的系数构造，非整数系数视为内部错误"""
        return cls(degree, tuple(_to_int(v, f"系数 A_{i}") for i, v in enumerate(values)))

    @classmethod
    def monomial(cls, degree: int, weight: int = 0, coefficient: int = 1) -> "WeightEnumerator":
        """coefficient · x^{degree-weight} y^{weight}"""
        counts = [0] * (degree + 1)
        counts[weight] = coefficient
        return cls(degree, tuple(counts))

    @property
    def size(self) -> int:
        """系数之和，即码字个数"""
        return sum(self.coeffs)

    def coefficient(self, weight: int) -> int:
        return self.coeffs[weight]

    def _check_degree(self, other: "WeightEnumerator"):
        if self.degree != other.degree:
            raise ValidationError(f"多项式次数不一致: {self.degree} vs {other.degree}", field="degree")

    def __add__(self, other: "WeightEnumerator") -> "WeightEnumerator":
        self._check_degree(other)
        return WeightEnumerator(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "WeightEnumerator") -> "WeightEnumerator":
        self._check_degree(other)
        return WeightEnumerator(self.degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "WeightEnumerator") -> "WeightEnumerator":
        product = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return WeightEnumerator(self.degree + other.degree, tuple(product))

    def scaled(self, factor: Number) -> "WeightEnumerator":
        return WeightEnumerator.from_values(self.degree, [Fraction(factor) * a for a in self.coeffs])

    def times_x(self, power: int) -> "WeightEnumerator":
        """乘以 x^power：重量不变，次数增加"""
        return WeightEnumerator(self.degree + power, self.coeffs + (0,) * power)

    def times_y(self, power: int) -> "WeightEnumerator":
        """乘以 y^power：所有重量右移"""
        return WeightEnumerator(self.degree + power, (0,) * power + self.coeffs)

    def first_difference(self, other: "WeightEnumerator") -> Optional[int]:
        """第一个不同系数的下标，完全相同时返回 None"""
        if self.degree != other.degree:
            return 0
        for i, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return i
        return None

    def to_polynomial(self) -> str:
        """按 x/y 记法输出，例如 x^4 + x^2y^2 + 8xy^3 + 6y^4"""
        terms: List[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            monomial = _power("x", self.degree - i) + _power("y", i)
            magnitude = abs(c)
            body = monomial if magnitude == 1 and monomial else f"{magnitude}{monomial}"
            if not terms:
                terms.append(f"-{body}" if c < 0 else body)
            else:
                terms.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(terms) if terms else "0"

    def __str__(self) -> str:
        return self.to_polynomial()


def _power(variable: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return variable
    return f"{variable}^{exponent}"
