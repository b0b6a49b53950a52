"""
截断形式幂级数。

内部存普通系数 c_0..c_N（t^i 的系数），截断阶 N 显式保存；
指数型生成函数（EGF）系数通过 egf_coeff 读取（乘以 n!）。
系数环可以是有理数或 Q[x] 多项式，见 rings 模块。
"""
import logging
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .errors import OrderMismatch
from .exact import RationalLike, factorial
from .poly import exp_monomial
from .rings import Ring, RATIONAL, POLY, ring_for

logger = logging.getLogger(__name__)


class Series:
    __slots__ = ("ring", "_coeffs")

    def __init__(self, coeffs: Sequence, order: int = None, ring: Ring = None):
        coeffs = list(coeffs)
        if ring is None:
            ring = ring_for(coeffs[0]) if coeffs else RATIONAL
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError(f"截断阶必须非负，得到 {order}")
        coeffs = coeffs[:order + 1]
        coeffs += [ring.zero()] * (order + 1 - len(coeffs))
        self.ring = ring
        self._coeffs: Tuple = tuple(coeffs)

    @classmethod
    def constant(cls, value, order: int, ring: Ring = None) -> "Series":
        ring = ring or ring_for(value)
        return cls([value], order=order, ring=ring)

    @classmethod
    def one(cls, order: int, ring: Ring = RATIONAL) -> "Series":
        return cls([ring.one()], order=order, ring=ring)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> Tuple:
        return self._coeffs

    def coeff(self, i: int):
        return self._coeffs[i]

    def egf_coeff(self, n: int):
        """n! · c_n"""
        return self.ring.scale(self._coeffs[n], factorial(n))

    def egf_coeffs(self) -> List:
        return [self.egf_coeff(n) for n in range(len(self._coeffs))]

    def lift(self, ring: Ring) -> "Series":
        """把有理系数级数提升到其他环（目前只需提升到多项式环）"""
        if ring is self.ring:
            return self
        return Series([ring.from_rational(c) for c in self._coeffs], order=self.order, ring=ring)

    def _check_order(self, other: "Series"):
        if self.order != other.order:
            raise OrderMismatch(f"截断阶不一致: {self.order} != {other.order}")

    def __add__(self, other: "Series") -> "Series":
        self._check_order(other)
        ring = self.ring
        return Series([ring.add(a, b) for a, b in zip(self._coeffs, other._coeffs)],
                      order=self.order, ring=ring)

    def __neg__(self) -> "Series":
        return Series([self.ring.neg(c) for c in self._coeffs], order=self.order, ring=self.ring)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def scale(self, factor: RationalLike) -> "Series":
        ring = self.ring
        return Series([ring.scale(c, factor) for c in self._coeffs], order=self.order, ring=ring)

    def __mul__(self, other: "Series") -> "Series":
        return series_mul(self, other)

    def __pow__(self, exponent: int) -> "Series":
        return series_pow(self, exponent)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        if self.order != other.order:
            return False
        return all(self.ring.eq(a, b) for a, b in zip(self._coeffs, other._coeffs))

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"Series(order={self.order}, ring={self.ring.name}, coeffs={list(self._coeffs)!r})"


def series_mul(f: Series, g: Series) -> Series:
    """Cauchy 乘积，截断到阶 N"""
    f._check_order(g)
    ring = f.ring
    n = f.order
    a, b = f.coeffs, g.coeffs
    out = [ring.zero() for _ in range(n + 1)]
    for i in range(n + 1):
        ai = a[i]
        if not ai:
            continue
        for j in range(n + 1 - i):
            bj = b[j]
            if bj:
                out[i + j] = ring.add(out[i + j], ring.mul(ai, bj))
    return Series(out, order=n, ring=ring)


def series_recip(f: Series) -> Series:
    """
    倒数级数：g_0 = 1/c_0，g_m = -(1/c_0) Σ_{i=1..m} c_i g_{m-i}。
    常数项不可逆时由系数环抛出 NonInvertibleLeadingCoefficient。
    """
    ring = f.ring
    c = f.coeffs
    inv_c0 = ring.invert(c[0])
    neg_inv_c0 = ring.neg(inv_c0)
    g = [inv_c0]
    for m in range(1, f.order + 1):
        acc = ring.zero()
        for i in range(1, m + 1):
            if c[i]:
                acc = ring.add(acc, ring.mul(c[i], g[m - i]))
        g.append(ring.mul(neg_inv_c0, acc))
    return Series(g, order=f.order, ring=ring)


def series_pow(f: Series, exponent: int) -> Series:
    """反复平方求 f^a；f^0 = 1"""
    if exponent < 0:
        raise ValueError(f"级数幂指数必须非负，得到 {exponent}")
    result = Series.one(f.order, f.ring)
    base = f
    while exponent:
        if exponent & 1:
            result = series_mul(result, base)
        exponent >>= 1
        if exponent:
            base = series_mul(base, base)
    return result


def series_h(order: int) -> Series:
    """(e^t - 1)/t = Σ_{l≥0} t^l/(l+1)!，有理系数"""
    if order < 0:
        raise ValueError(f"截断阶必须非负，得到 {order}")
    return Series([Fraction(1, factorial(l + 1)) for l in range(order + 1)], order=order, ring=RATIONAL)


def series_exp_minus_one(order: int) -> Series:
    """e^t - 1 = Σ_{l≥1} t^l/l!，有理系数"""
    if order < 0:
        raise ValueError(f"截断阶必须非负，得到 {order}")
    coeffs = [Fraction(0)] + [Fraction(1, factorial(l)) for l in range(1, order + 1)]
    return Series(coeffs, order=order, ring=RATIONAL)


def series_exp_xt(order: int) -> Series:
    """e^{xt} = Σ x^k t^k / k!，多项式系数"""
    if order < 0:
        raise ValueError(f"截断阶必须非负，得到 {order}")
    return Series([exp_monomial(k) for k in range(order + 1)], order=order, ring=POLY)


def series_from_egf(values: Iterable, order: int, ring: Ring = None) -> Series:
    """由 EGF 系数 v_0..v_N 构造级数 Σ v_n t^n / n!"""
    values = list(values)
    ring = ring or (ring_for(values[0]) if values else RATIONAL)
    coeffs = [ring.scale(v, Fraction(1, factorial(n))) for n, v in enumerate(values)]
    return Series(coeffs, order=order, ring=ring)
