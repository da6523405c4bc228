"""
分圆域精确运算 - Q(ω_m) 中的元素以幂基 1, ω, …, ω^{φ(m)-1} 下的有理坐标表示，
所有余弦/特征和都在这里精确求值，不使用浮点数
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple, Union

from .error_handler import ComputationError, ValidationError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


def _poly_divide_exact(numerator: List[int], divisor: List[int]) -> List[int]:
    """整系数多项式精确除法（系数从低次到高次，除式首一）"""
    remainder = list(numerator)
    quotient = [0] * (len(numerator) - len(divisor) + 1)
    lead = len(divisor) - 1
    for k in range(len(quotient) - 1, -1, -1):
        c = remainder[k + lead]
        quotient[k] = c
        if c:
            for i, d in enumerate(divisor):
                remainder[k + i] -= c * d
    if any(remainder):
        raise ComputationError("分圆多项式除法出现余项", step="cyclotomic_polynomial")
    return quotient


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> Tuple[int, ...]:
    """
    第 m 个分圆多项式 Φ_m 的系数（从低次到高次）

    由 x^m - 1 依次精确除以所有真因子 d 的 Φ_d 得到
    """
    if m < 1:
        raise ValidationError(f"分圆多项式的阶必须为正: {m}", field="m")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divide_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


@lru_cache(maxsize=None)
def _power_table(m: int) -> Tuple[Tuple[int, ...], ...]:
    """ω^k (k = 0..m-1) 在幂基下的整数坐标"""
    phi_poly = cyclotomic_polynomial(m)
    deg = len(phi_poly) - 1
    current = [1] + [0] * (deg - 1)
    table = []
    for _ in range(m):
        table.append(tuple(current))
        # 乘以 ω 后用 Φ_m 消去 ω^deg
        shifted = [0] + current
        top = shifted.pop()
        for i in range(deg):
            shifted[i] -= top * phi_poly[i]
        current = shifted
    return tuple(table)


def _check_modulus(m: int):
    if m < 2:
        raise ValidationError(f"模数 m 必须 ≥ 2，当前为 {m}", field="m")


@dataclass(frozen=True)
class CycloNum:
    """Q(ω_m) 中的精确元素"""
    m: int
    coords: Tuple[Fraction, ...]

    @classmethod
    def zero(cls, m: int) -> "CycloNum":
        _check_modulus(m)
        return cls(m, (Fraction(0),) * euler_phi(m))

    @classmethod
    def rational(cls, m: int, value: Scalar) -> "CycloNum":
        _check_modulus(m)
        return cls(m, (Fraction(value),) + (Fraction(0),) * (euler_phi(m) - 1))

    @classmethod
    def from_powers(cls, m: int, weights: List[Scalar]) -> "CycloNum":
        """Σ_k weights[k]·ω^k，k 取 0..len-1（按 mod m 约化）"""
        _check_modulus(m)
        table = _power_table(m)
        acc = [Fraction(0)] * euler_phi(m)
        for k, w in enumerate(weights):
            if w:
                for i, c in enumerate(table[k % m]):
                    if c:
                        acc[i] += w * c
        return cls(m, tuple(acc))

    def _coerce(self, other: Union["CycloNum", Scalar]) -> "CycloNum":
        if isinstance(other, CycloNum):
            if other.m != self.m:
                raise ValidationError(f"分圆域模数不一致: {self.m} vs {other.m}", field="m")
            return other
        return CycloNum.rational(self.m, other)

    def __add__(self, other):
        other = self._coerce(other)
        return CycloNum(self.m, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.m, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, CycloNum):
            factor = Fraction(other)
            return CycloNum(self.m, tuple(a * factor for a in self.coords))
        other = self._coerce(other)
        product = [Fraction(0)] * (2 * len(self.coords) - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        product[i + j] += a * b
        return CycloNum.from_powers(self.m, product)

    __rmul__ = __mul__

    def conjugate(self) -> "CycloNum":
        """复共轭：ω^k → ω^{-k}"""
        weights = [Fraction(0)] * self.m
        for k, c in enumerate(self.coords):
            weights[(-k) % self.m] += c
        return CycloNum.from_powers(self.m, weights)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        terms = [f"{c}·ω^{k}" if k else str(c) for k, c in enumerate(self.coords) if c]
        return " + ".join(terms) if terms else "0"


def cyclo(m: int, power: int) -> CycloNum:
    """ω_m^power"""
    _check_modulus(m)
    return CycloNum(m, tuple(Fraction(c) for c in _power_table(m)[power % m]))


def cos_value(m: int, k: int) -> CycloNum:
    """cos(2πk/m) = (ω^k + ω^{-k}) / 2"""
    return (cyclo(m, k) + cyclo(m, -k)) * Fraction(1, 2)


@lru_cache(maxsize=None)
def kernel_sum(u: int, j: int, m: int) -> CycloNum:
    """Σ_{t=-j}^{j} ω^{ut}，即 1 + 2Σ_{t=1}^{j} cos(2πut/m)"""
    _check_modulus(m)
    if not 0 <= u < m:
        raise ValidationError(f"剩余类 {u} 不在 [0, {m - 1}] 中", field="u")
    if not 0 <= j <= m // 2:
        raise ValidationError(f"j = {j} 超出范围 [0, {m // 2}]", field="j")
    weights = [0] * m
    for t in range(-j, j + 1):
        weights[(u * t) % m] += 1
    return CycloNum.from_powers(m, weights)


def as_integer(x: CycloNum) -> int:
    """提取有理整数值，非整数视为上游计算错误"""
    if not x.is_rational():
        raise ComputationError(f"聚合值不是有理数: {x}", step="as_integer")
    value = x.coords[0]
    if value.denominator != 1:
        raise ComputationError(f"聚合值不是整数: {value}", step="as_integer")
    return int(value)


def evaluate_polynomial(coeffs: Tuple[int, ...], x: CycloNum) -> CycloNum:
    """Horner 法在 Q(ω_m) 中求整系数多项式的值"""
    result = CycloNum.zero(x.m)
    for c in reversed(coeffs):
        result = result * x + c
    return result
