"""
第二类 Stirling 数与分拆重数向量枚举。
"""
import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from config import Config
from .exact import factorial
from .series import series_exp_minus_one, series_pow

logger = logging.getLogger(__name__)


class StirlingTable:
    """
    第二类 Stirling 数三角表 S(n,k)，0 ≤ k ≤ n。

    用递推 S(n,k) = k·S(n-1,k) + S(n-1,k-1) 按行构建，行只追加；
    约定 S(0,0)=1，S(n,0)=0 (n>0)，S(n,k)=0 (k>n)。
    """

    def __init__(self, initial_rows: int = None):
        self._rows: List[Tuple[int, ...]] = [(1,)]
        self._overrides: Dict[Tuple[int, int], int] = {}
        self._lock = threading.Lock()
        rows = Config.STIRLING_INITIAL_ROWS if initial_rows is None else initial_rows
        if rows > 0:
            self.ensure(rows - 1)

    @property
    def cap(self) -> int:
        """当前已构建的最大 n"""
        return len(self._rows) - 1

    def ensure(self, n: int):
        """保证表至少覆盖到第 n 行"""
        if n < len(self._rows):
            return
        with self._lock:
            while len(self._rows) <= n:
                prev = self._rows[-1]
                m = len(prev)
                row = [0] * (m + 1)
                for k in range(1, m + 1):
                    left = prev[k] if k < m else 0
                    row[k] = k * left + prev[k - 1]
                self._rows.append(tuple(row))
            logger.debug(f"Stirling 表扩展到 n = {len(self._rows) - 1}")

    def get(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        if self._overrides:
            hit = self._overrides.get((n, k))
            if hit is not None:
                return hit
        if n >= len(self._rows):
            self.ensure(n)
        return self._rows[n][k]

    __call__ = get

    def row(self, n: int) -> Tuple[int, ...]:
        return tuple(self.get(n, k) for k in range(n + 1))

    def override(self, n: int, k: int, value: int):
        """测试钩子：篡改单个表项，用于校验套件的故障注入"""
        logger.warning(f"Stirling 表项被覆盖: S({n},{k}) = {value}")
        self._overrides[(n, k)] = value


_shared_table: Optional[StirlingTable] = None
_shared_lock = threading.Lock()


def shared_stirling_table() -> StirlingTable:
    """进程内共享的只读 Stirling 表（延迟构建）"""
    global _shared_table
    if _shared_table is None:
        with _shared_lock:
            if _shared_table is None:
                _shared_table = StirlingTable()
    return _shared_table


def stirling2(n: int, k: int, table: StirlingTable = None) -> int:
    return (table or shared_stirling_table()).get(n, k)


def stirling2_by_series(n: int, k: int) -> int:
    """n! · [x^n] (e^x - 1)^k / k!，完全不经过递推表"""
    if k < 1 or n < k:
        raise ValueError(f"生成函数校验要求 n ≥ k ≥ 1，得到 n={n}, k={k}")
    expansion = series_pow(series_exp_minus_one(n), k).scale(Fraction(1, factorial(k)))
    value = expansion.egf_coeff(n)
    if value.denominator != 1:
        raise ArithmeticError(f"生成函数系数不是整数: {value}")
    return value.numerator


def stirling2_gf_check(n: int, k: int, table: StirlingTable = None) -> bool:
    """表中 S(n,k) 是否等于生成函数展开给出的值"""
    return stirling2(n, k, table) == stirling2_by_series(n, k)


@dataclass(frozen=True)
class PartitionVector:
    """重数向量 ℓ_1..ℓ_{n-k+1}：Σ i·ℓ_i = n，Σ ℓ_i = k"""
    multiplicities: Tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(i * l for i, l in enumerate(self.multiplicities, start=1))

    @property
    def k(self) -> int:
        return sum(self.multiplicities)

    def parts(self) -> List[int]:
        """按降序展开的分拆"""
        out = []
        for i in range(len(self.multiplicities), 0, -1):
            out.extend([i] * self.multiplicities[i - 1])
        return out

    def __getitem__(self, i: int) -> int:
        # 1 起始下标，越界视为 0
        if 1 <= i <= len(self.multiplicities):
            return self.multiplicities[i - 1]
        return 0


def enumerate_partitions(n: int, k: int) -> Iterator[PartitionVector]:
    """
    枚举 n 分成恰好 k 个正部分的所有分拆，以重数向量给出。
    按部分大小降序递归下降，顺序确定。
    """
    if k < 1 or n < k:
        raise ValueError(f"枚举分拆要求 1 ≤ k ≤ n，得到 n={n}, k={k}")
    width = n - k + 1
    counts = [0] * width

    def descend(remaining: int, slots: int, largest: int):
        if slots == 0:
            if remaining == 0:
                yield PartitionVector(tuple(counts))
            return
        # 剩余 slots 个部分每个至少为 1
        top = min(largest, remaining - (slots - 1))
        for part in range(top, 0, -1):
            if part * slots < remaining:
                break
            counts[part - 1] += 1
            yield from descend(remaining - part, slots - 1, part)
            counts[part - 1] -= 1

    yield from descend(n, k, width)
