"""
精确算术基础：任意精度整数（Python int）、规范有理数（fractions.Fraction）、
阶乘与二项式系数。
"""
import math
import re
import logging
import threading
from fractions import Fraction
from typing import List, Union

from config import Config
from .errors import DivisionByZero, RationalFormatError

logger = logging.getLogger(__name__)

# Fraction 在构造时即约分，分母恒为正，零为 0/1
Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_PATTERN = re.compile(r'^\s*(-?\d+)(?:/(\d+))?\s*$')


def factorial(n: int) -> int:
    """返回 n! 的精确值"""
    if n < 0:
        raise ValueError(f"factorial 需要非负整数，得到 {n}")
    return math.factorial(n)


class PascalTable:
    """
    带上限的帕斯卡三角缓存。

    行只追加、不修改；写入时加锁，读取无需加锁。
    超过 max_rows 的请求回退到乘法公式（math.comb）。
    """

    def __init__(self, max_rows: int = None):
        self.max_rows = max_rows if max_rows is not None else Config.PASCAL_CACHE_ROWS
        self._rows: List[tuple] = [(1,)]
        self._lock = threading.Lock()

    def _grow(self, n: int):
        with self._lock:
            while len(self._rows) <= n:
                prev = self._rows[-1]
                row = (1,) + tuple(prev[i - 1] + prev[i] for i in range(1, len(prev))) + (1,)
                self._rows.append(row)
            logger.debug(f"帕斯卡表扩展到 {len(self._rows)} 行")

    def get(self, n: int, k: int) -> int:
        if n < 0:
            raise ValueError(f"binomial 需要 n >= 0，得到 {n}")
        if k < 0 or k > n:
            return 0
        if n >= self.max_rows:
            return math.comb(n, k)
        if n >= len(self._rows):
            self._grow(n)
        return self._rows[n][k]


_pascal = PascalTable()


def binomial(n: int, k: int) -> int:
    """二项式系数 C(n,k)；k 越界时返回 0"""
    return _pascal.get(n, k)


def to_rational(value) -> Fraction:
    """把 int / Fraction / "p/q" 文本转换为规范有理数"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise RationalFormatError(f"不支持的有理数类型: {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """解析 "p/q" 或 "p" 格式；要求 q > 0"""
    match = _RATIONAL_PATTERN.match(text)
    if not match:
        raise RationalFormatError(f"无法解析有理数: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise DivisionByZero(f"分母为零: {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value: RationalLike) -> str:
    """输出 "p/q"（q = 1 时输出 "p"）"""
    return str(Fraction(value))


# 有理数运算，全部返回规范形式

def rat_add(x: RationalLike, y: RationalLike) -> Fraction:
    return Fraction(x) + Fraction(y)


def rat_sub(x: RationalLike, y: RationalLike) -> Fraction:
    return Fraction(x) - Fraction(y)


def rat_mul(x: RationalLike, y: RationalLike) -> Fraction:
    return Fraction(x) * Fraction(y)


def rat_neg(x: RationalLike) -> Fraction:
    return -Fraction(x)


def rat_div(x: RationalLike, y: RationalLike) -> Fraction:
    if y == 0:
        raise DivisionByZero(f"除数为零: {x} / {y}")
    return Fraction(x) / Fraction(y)


def rat_inv(x: RationalLike) -> Fraction:
    if x == 0:
        raise DivisionByZero("零没有倒数")
    return 1 / Fraction(x)


def rat_pow(x: RationalLike, exponent: int) -> Fraction:
    """非负整数次幂，约定 0^0 = 1"""
    if exponent < 0:
        raise ValueError(f"指数必须为非负整数，得到 {exponent}")
    if exponent == 0:
        return Fraction(1)
    return Fraction(x) ** exponent
