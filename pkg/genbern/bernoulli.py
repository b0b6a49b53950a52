"""
广义 Bernoulli 多项式 B_n^a(x) 的三种独立算法。

生成函数 (t/(e^t-1))^a e^{-xt} = Σ B_k^a(-x) t^k/k! 给出的是 -x 方向；
三种算法在内部都按 -x 方向计算，只在返回前做一次 x → -x 反射，
对外一律返回标准方向的 B_n^a(x)。
"""
import logging
import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from config import Config
from .bell import BellTable
from .combinatorics import StirlingTable, shared_stirling_table
from .errors import UnsupportedOrder
from .exact import RationalLike, binomial, factorial
from .poly import Poly
from .rings import POLY, RATIONAL
from .series import Series, series_exp_xt, series_h, series_mul, series_pow, series_recip

logger = logging.getLogger(__name__)


class BernMethod(str, Enum):
    BELL = "bell"
    DOUBLESUM = "doublesum"
    SERIES = "series"

    @classmethod
    def parse(cls, value) -> "BernMethod":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            choices = ", ".join(m.value for m in cls)
            raise ValueError(f"未知的计算方法 {value!r}，可选: {choices}")


DEFAULT_METHOD = BernMethod(Config.DEFAULT_METHOD)


@dataclass(frozen=True)
class LambdaSeq:
    """λ_1..λ_M（x 的多项式），terms[m-1] = λ_m"""
    a: int
    terms: Tuple[Poly, ...]

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, m: int) -> Poly:
        if not 1 <= m <= len(self.terms):
            raise IndexError(f"λ 下标从 1 到 {len(self.terms)}，得到 {m}")
        return self.terms[m - 1]

    def at(self, value: RationalLike) -> Tuple[Fraction, ...]:
        """在 x = value 处求值后的有理数序列"""
        return tuple(term.evaluate(value) for term in self.terms)

    def scaled(self, factor: RationalLike) -> Tuple[Poly, ...]:
        return tuple(term.scale(factor) for term in self.terms)


@dataclass(frozen=True)
class BernResult:
    n: int
    a: int
    poly: Poly
    method: BernMethod

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "a": self.a,
            "method": self.method.value,
            "coeffs": self.poly.to_json(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BernResult":
        return cls(
            n=int(data["n"]),
            a=int(data["a"]),
            poly=Poly.from_json(data["coeffs"]),
            method=BernMethod.parse(data["method"]),
        )


def hockey_stick_sum(n: int, r: int) -> int:
    """Σ_{k=r}^{n} C(k,r)，应等于 C(n+1,r+1)"""
    return sum(binomial(k, r) for k in range(r, n + 1))


def _require_nonneg(n: int):
    if n < 0:
        raise ValueError(f"n 必须为非负整数，得到 {n}")


def _require_order(a: int, method: BernMethod):
    if a < 0:
        raise UnsupportedOrder(f"阶数 a 必须非负，得到 a={a}")
    if a == 0 and method is not BernMethod.SERIES:
        raise UnsupportedOrder("a=0 requires --method series")


class BernoulliEngine:
    """
    共享一张 Stirling 表的计算引擎。

    对每个阶数 a 缓存 λ 序列和 Bell 表：λ_m 与 n 无关，
    因此 B_{n,k}(λ) 在不同的 n 之间可以直接复用。
    """

    def __init__(self, table: StirlingTable = None):
        self.table = table or shared_stirling_table()
        self._lambda_terms: Dict[int, List[Poly]] = {}
        self._bell_tables: Dict[int, BellTable] = {}
        self._number_table = BellTable((), RATIONAL)
        self._lock = threading.RLock()

    # ---- λ 序列 ----

    def _lambda_term(self, a: int, m: int) -> Poly:
        """λ_m = Σ_{l=0}^{m} S(l+a,a) C(m,l) / C(l+a,a) · x^{m-l}"""
        coeffs = [Fraction(0)] * (m + 1)
        for l in range(m + 1):
            coeffs[m - l] = Fraction(self.table.get(l + a, a) * binomial(m, l), binomial(l + a, a))
        return Poly(coeffs)

    def _lambda_terms_upto(self, a: int, count: int) -> List[Poly]:
        with self._lock:
            terms = self._lambda_terms.setdefault(a, [])
            if len(terms) < count:
                self.table.ensure(count + a)
                for m in range(len(terms) + 1, count + 1):
                    terms.append(self._lambda_term(a, m))
                logger.debug(f"λ 序列 (a={a}) 扩展到 {count} 项")
            return terms

    def lambda_seq(self, a: int, count: int) -> LambdaSeq:
        if a < 1:
            raise UnsupportedOrder(f"λ 序列要求 a ≥ 1，得到 a={a}")
        if count < 1:
            raise ValueError(f"λ 序列长度必须 ≥ 1，得到 {count}")
        return LambdaSeq(a=a, terms=tuple(self._lambda_terms_upto(a, count)[:count]))

    def bell_table(self, a: int, count: int) -> BellTable:
        """阶数 a 对应的 Bell 表，保证序列至少有 count 项"""
        with self._lock:
            terms = self._lambda_terms_upto(a, count)
            bell = self._bell_tables.get(a)
            if bell is None:
                bell = self._bell_tables[a] = BellTable((), POLY)
            if len(bell) < len(terms):
                bell.extend(terms[len(bell):])
            return bell

    def g_series(self, a: int, order: int) -> Series:
        """g(t) = ((e^t - 1)/t)^a e^{xt}，多项式系数，截断到 order"""
        h_power = series_pow(series_h(order), a).lift(POLY)
        return series_mul(h_power, series_exp_xt(order))

    # ---- 三种算法 ----

    def bern_bell(self, n: int, a: int) -> BernResult:
        """B_n^a(-x) = Σ_{k=0}^{n} (-1)^k k! B_{n,k}(λ_1..λ_{n-k+1})"""
        _require_nonneg(n)
        _require_order(a, BernMethod.BELL)
        bell = self.bell_table(a, max(n, 1))
        total = Poly.zero()
        for k in range(n + 1):
            weight = factorial(k) if k % 2 == 0 else -factorial(k)
            total = total + bell.value(n, k).scale(weight)
        return BernResult(n=n, a=a, poly=total.reflect(), method=BernMethod.BELL)

    def bern_doublesum(self, n: int, a: int) -> BernResult:
        """
        B_n^a(-x) = Σ_{r=0}^{n} C(n+1,r+1) (-1)^r Σ_{l=0}^{n} S(l+ar,ar) (rx)^{n-l} C(n,l) / C(l+ar,ar)

        C(n+1,r+1) 来自对 k 求和的 hockey-stick 恒等式 Σ_{k=r}^{n} C(k,r)。
        """
        _require_nonneg(n)
        _require_order(a, BernMethod.DOUBLESUM)
        self.table.ensure(n + a * n)
        coeffs = [Fraction(0)] * (n + 1)
        for r in range(n + 1):
            weight = binomial(n + 1, r + 1) if r % 2 == 0 else -binomial(n + 1, r + 1)
            ar = a * r
            for l in range(n + 1):
                s = self.table.get(l + ar, ar)
                power = r ** (n - l)
                if not s or not power:
                    continue
                coeffs[n - l] += Fraction(weight * s * power * binomial(n, l), binomial(l + ar, ar))
        return BernResult(n=n, a=a, poly=Poly(coeffs).reflect(), method=BernMethod.DOUBLESUM)

    def bern_series(self, n: int, a: int) -> BernResult:
        """对 g(t) 直接求倒数级数，读取 t^n 的 EGF 系数（允许 a = 0）"""
        _require_nonneg(n)
        _require_order(a, BernMethod.SERIES)
        reciprocal = series_recip(self.g_series(a, n))
        return BernResult(n=n, a=a, poly=reciprocal.egf_coeff(n).reflect(), method=BernMethod.SERIES)

    def bern(self, n: int, a: int, method=DEFAULT_METHOD) -> BernResult:
        method = BernMethod.parse(method)
        if method is BernMethod.BELL:
            return self.bern_bell(n, a)
        if method is BernMethod.SERIES:
            return self.bern_series(n, a)
        return self.bern_doublesum(n, a)

    def bernoulli_number(self, n: int) -> Fraction:
        """B_n = Σ_{k=0}^{n} (-1)^k k! B_{n,k}(1/2, 1/3, ..., 1/(n-k+2))"""
        _require_nonneg(n)
        with self._lock:
            table = self._number_table
            if len(table) < n:
                table.extend([Fraction(1, m + 1) for m in range(len(table) + 1, n + 1)])
        total = Fraction(0)
        for k in range(n + 1):
            weight = factorial(k) if k % 2 == 0 else -factorial(k)
            total += weight * table.value(n, k)
        return total


_default_engine: Optional[BernoulliEngine] = None
_engine_lock = threading.Lock()


def default_engine() -> BernoulliEngine:
    global _default_engine
    if _default_engine is None:
        with _engine_lock:
            if _default_engine is None:
                _default_engine = BernoulliEngine()
    return _default_engine


def lambda_seq(a: int, count: int) -> LambdaSeq:
    return default_engine().lambda_seq(a, count)


def bern_bell(n: int, a: int) -> BernResult:
    return default_engine().bern_bell(n, a)


def bern_doublesum(n: int, a: int) -> BernResult:
    return default_engine().bern_doublesum(n, a)


def bern_series(n: int, a: int) -> BernResult:
    return default_engine().bern_series(n, a)


def bern(n: int, a: int, method=DEFAULT_METHOD) -> BernResult:
    return default_engine().bern(n, a, method)


def bernoulli_number(n: int) -> Fraction:
    return default_engine().bernoulli_number(n)


def g_series(a: int, order: int) -> Series:
    return default_engine().g_series(a, order)
