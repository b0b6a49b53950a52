"""
部分（不完全指数）Bell 多项式 B_{n,k}。

三种算法：
  - bell_enum   按分拆重数向量直接求和（指数复杂度，只作测试基准）
  - bell_rec    递推 B_{n,k} = Σ C(n-1,i-1) λ_i B_{n-i,k-1}（生产路径）
  - bell_closed 针对 Bernoulli 多项式 λ 序列的 Stirling 闭式
约定 B_{0,0}=1，B_{n,0}=0 (n>0)，B_{0,k}=0 (k>0)，B_{n,k}=0 (k>n)。
"""
import logging
import threading
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .combinatorics import StirlingTable, enumerate_partitions, shared_stirling_table
from .errors import InsufficientSequence, UnsupportedOrder
from .exact import RationalLike, binomial, factorial, to_rational
from .poly import Poly
from .rings import Ring, RATIONAL, ring_for
from .series import Series, series_from_egf, series_pow

logger = logging.getLogger(__name__)


def _validate(n: int, k: int):
    if n < 0 or k < 0:
        raise ValueError(f"Bell 多项式下标必须非负，得到 n={n}, k={k}")


def _boundary(n: int, k: int, ring: Ring):
    """边界情形的值；非边界返回 None"""
    if k > n:
        return ring.zero()
    if n == 0 and k == 0:
        return ring.one()
    if n == 0 or k == 0:
        return ring.zero()
    return None


def _require_length(n: int, k: int, seq: Sequence):
    needed = n - k + 1
    if len(seq) < needed:
        raise InsufficientSequence(f"B_{{{n},{k}}} 需要 {needed} 个参数，只给出 {len(seq)} 个")


def _as_terms(seq) -> Sequence:
    """LambdaSeq 等带 terms 属性的序列取 0 起始的 terms"""
    terms = getattr(seq, "terms", None)
    return seq if terms is None else terms


def _ring_of(seq: Sequence, ring: Optional[Ring]) -> Ring:
    if ring is not None:
        return ring
    return ring_for(seq[0]) if len(seq) else RATIONAL


def bell_enum(n: int, k: int, seq: Sequence, ring: Ring = None):
    """按定义对所有重数向量求和：n!/Πℓ_i! · Π(λ_i/i!)^{ℓ_i}"""
    _validate(n, k)
    seq = _as_terms(seq)
    ring = _ring_of(seq, ring)
    trivial = _boundary(n, k, ring)
    if trivial is not None:
        return trivial
    _require_length(n, k, seq)

    n_factorial = factorial(n)
    total = ring.zero()
    for vector in enumerate_partitions(n, k):
        denominator = 1
        term = ring.one()
        for i, count in enumerate(vector.multiplicities, start=1):
            if count:
                denominator *= factorial(count) * factorial(i) ** count
                term = ring.mul(term, seq[i - 1] ** count)
        total = ring.add(total, ring.scale(term, Fraction(n_factorial, denominator)))
    return total


class BellTable:
    """
    对固定序列 λ 记忆化的 B_{n,k} 表。

    B_{n,k} 只依赖 λ_1..λ_{n-k+1}，所以序列可以在表建好后继续追加，
    已缓存的值不会失效。
    """

    def __init__(self, seq: Sequence = (), ring: Ring = None):
        seq = _as_terms(seq)
        self.ring = _ring_of(seq, ring)
        self._seq: List = list(seq)
        self._cache: Dict[Tuple[int, int], object] = {}
        self._lock = threading.RLock()

    def __len__(self):
        return len(self._seq)

    def extend(self, terms: Sequence):
        with self._lock:
            self._seq.extend(_as_terms(terms))

    def value(self, n: int, k: int):
        _validate(n, k)
        trivial = _boundary(n, k, self.ring)
        if trivial is not None:
            return trivial
        _require_length(n, k, self._seq)
        key = (n, k)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        with self._lock:
            result = self._compute(n, k)
            self._cache[key] = result
        return result

    def _compute(self, n: int, k: int):
        ring = self.ring
        total = ring.zero()
        for i in range(1, n - k + 2):
            rest = self.value(n - i, k - 1)
            if not rest:
                continue
            term = ring.mul(self._seq[i - 1], rest)
            total = ring.add(total, ring.scale(term, binomial(n - 1, i - 1)))
        return total


def bell_rec(n: int, k: int, seq: Sequence, ring: Ring = None):
    """递推计算 B_{n,k}(seq)"""
    return BellTable(seq, ring).value(n, k)


def bell_closed(n: int, k: int, a: int, at_x: Optional[RationalLike] = None,
                table: StirlingTable = None) -> Poly:
    """
    λ_m = Σ S(l+a,a) C(m,l)/C(l+a,a) x^{m-l} 时 B_{n,k} 的闭式：

        (1/k!) Σ_{r=0}^{k} (-1)^{k-r} C(k,r) Σ_{l=0}^{n} S(l+ar,ar) (rx)^{n-l} C(n,l) / C(l+ar,ar)

    at_x 为 None 时返回 x 的多项式，否则返回在该点求值后的常数多项式。
    约定 0^0 = 1。k > n 时直接返回 0，不构建 n + a·k 行的 Stirling 表。
    """
    _validate(n, k)
    if a < 1:
        raise UnsupportedOrder(f"闭式要求阶数 a ≥ 1，得到 a={a}")
    if k > n:
        return Poly.zero()
    result = _closed_sum(n, k, a, table or shared_stirling_table())
    if at_x is not None:
        return Poly.constant(result.evaluate(to_rational(at_x)))
    return result


def _closed_sum(n: int, k: int, a: int, table: StirlingTable) -> Poly:
    """闭式的交错和本身，不对 k > n 做短路"""
    table.ensure(n + a * k)

    coeffs = [Fraction(0)] * (n + 1)
    for r in range(k + 1):
        sign = -1 if (k - r) % 2 else 1
        outer = sign * binomial(k, r)
        ar = a * r
        for l in range(n + 1):
            s = table.get(l + ar, ar)
            if not s:
                continue
            power = r ** (n - l)
            if not power:
                continue
            coeffs[n - l] += Fraction(outer * s * power * binomial(n, l), binomial(l + ar, ar))
    return Poly(coeffs).scale(Fraction(1, factorial(k)))


def bell_generating_series(k: int, seq: Sequence, order: int, ring: Ring = None) -> Series:
    """(1/k!) (Σ_{j≥1} λ_j t^j / j!)^k，截断到 order"""
    seq = _as_terms(seq)
    ring = _ring_of(seq, ring)
    values = [ring.zero()] + list(seq[:order])
    inner = series_from_egf(values, order, ring)
    return series_pow(inner, k).scale(Fraction(1, factorial(k)))
