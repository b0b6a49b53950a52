"""
有理系数稠密一元多项式 Poly（形式变量 x）。

coeffs[i] 为 x^i 的系数，末尾零系数被裁剪；零多项式的系数表为空，次数记为 -1。
实例不可变，可安全地在线程间共享。
"""
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .exact import RationalLike, to_rational, format_rational, factorial

ZERO_DEGREE = -1


def _trim(coeffs: List[Fraction]) -> Tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self._coeffs = _trim([to_rational(c) for c in coeffs])

    @classmethod
    def _wrap(cls, coeffs: List[Fraction]) -> "Poly":
        # 内部构造：系数已经是 Fraction，只需裁剪
        poly = cls.__new__(cls)
        poly._coeffs = _trim(coeffs)
        return poly

    @classmethod
    def zero(cls) -> "Poly":
        return cls._wrap([])

    @classmethod
    def one(cls) -> "Poly":
        return cls._wrap([Fraction(1)])

    @classmethod
    def constant(cls, value: RationalLike) -> "Poly":
        return cls._wrap([to_rational(value)])

    @classmethod
    def monomial(cls, degree: int, coefficient: RationalLike = 1) -> "Poly":
        """coefficient · x^degree"""
        if degree < 0:
            raise ValueError(f"单项式次数必须非负，得到 {degree}")
        return cls._wrap([Fraction(0)] * degree + [to_rational(coefficient)])

    @classmethod
    def x(cls) -> "Poly":
        return cls.monomial(1)

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1 if self._coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    # ---- 环运算 ----

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._wrap([-c for c in self._coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, factor: RationalLike) -> "Poly":
        factor = to_rational(factor)
        if factor == 0:
            return Poly.zero()
        return Poly._wrap([c * factor for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Poly.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"多项式幂指数必须为非负整数，得到 {exponent}")
        result, base = Poly.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    # ---- 求值与变换 ----

    def evaluate(self, value: RationalLike) -> Fraction:
        """Horner 法精确求值"""
        value = to_rational(value)
        result = Fraction(0)
        for c in reversed(self._coeffs):
            result = result * value + c
        return result

    __call__ = evaluate

    def reflect(self) -> "Poly":
        """返回 p(-x)：奇次系数变号"""
        return Poly._wrap([-c if i % 2 else c for i, c in enumerate(self._coeffs)])

    def derivative(self) -> "Poly":
        return Poly._wrap([i * c for i, c in enumerate(self._coeffs)][1:])

    def to_json(self) -> List[str]:
        """升幂排列的 "p/q" 字符串列表"""
        return [format_rational(c) for c in self._coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        return cls(data)

    def __repr__(self):
        return f"Poly({self.to_json()!r})"


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_scale(p: Poly, factor: RationalLike) -> Poly:
    return p.scale(factor)


def poly_neg(p: Poly) -> Poly:
    return -p


def poly_eval(p: Poly, value: RationalLike) -> Fraction:
    return p.evaluate(value)


def poly_reflect(p: Poly) -> Poly:
    return p.reflect()


def poly_derivative(p: Poly) -> Poly:
    return p.derivative()


def exp_monomial(k: int) -> Poly:
    """x^k / k!，即 e^{xt} 展开中 t^k 的系数"""
    return Poly.monomial(k, Fraction(1, factorial(k)))
