"""
系数环的最小接口：zero / one / add / mul / neg / invert / eq / scale。

截断级数和 Bell 多项式的代码只依赖这个接口，因此同一份实现可以同时用于
有理数系数和多项式系数。
"""
from fractions import Fraction

from .errors import NonInvertibleLeadingCoefficient
from .exact import RationalLike, to_rational
from .poly import Poly


class Ring:
    name = "ring"

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def eq(self, x, y) -> bool:
        return x == y

    def scale(self, x, factor: RationalLike):
        raise NotImplementedError

    def invert(self, x):
        """返回 x 的逆元；不可逆时抛出 NonInvertibleLeadingCoefficient"""
        raise NotImplementedError

    def from_rational(self, value: RationalLike):
        raise NotImplementedError

    def __repr__(self):
        return f"<Ring {self.name}>"


class RationalRing(Ring):
    name = "rational"

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def scale(self, x, factor: RationalLike) -> Fraction:
        return x * to_rational(factor)

    def invert(self, x) -> Fraction:
        if x == 0:
            raise NonInvertibleLeadingCoefficient("有理数 0 不可逆")
        return 1 / Fraction(x)

    def from_rational(self, value: RationalLike) -> Fraction:
        return to_rational(value)


class PolyRing(Ring):
    """
    Q[x] 上的环。只把常数 1 视为可逆：级数求逆只在 g(0) = 1 的情形下需要，
    这样可以避免引入有理函数系数。
    """
    name = "poly"

    def zero(self) -> Poly:
        return Poly.zero()

    def one(self) -> Poly:
        return Poly.one()

    def scale(self, x: Poly, factor: RationalLike) -> Poly:
        return x.scale(factor)

    def invert(self, x: Poly) -> Poly:
        if x != Poly.one():
            raise NonInvertibleLeadingCoefficient(f"多项式系数级数求逆要求常数项为 1，得到 {x!r}")
        return Poly.one()

    def from_rational(self, value: RationalLike) -> Poly:
        return Poly.constant(value)


RATIONAL = RationalRing()
POLY = PolyRing()


def ring_for(value) -> Ring:
    """根据元素类型推断所在的环"""
    if isinstance(value, Poly):
        return POLY
    return RATIONAL
