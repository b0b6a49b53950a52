"""
不变量校验套件：对三种算法、λ 序列、生成函数恒等式、Stirling 数等做精确比对，
生成 VerifyReport。cmd_verify 以此作为验收门槛。
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from config import Config
from .bell import BellTable, bell_closed, bell_enum
from .bernoulli import BernMethod, BernoulliEngine, BernResult, hockey_stick_sum
from .combinatorics import StirlingTable, stirling2_gf_check
from .exact import binomial
from .rings import POLY
from .series import Series, series_from_egf, series_mul

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    name: str
    param_range: str
    passed: bool
    counterexample: Optional[str] = None


@dataclass(frozen=True)
class VerifyReport:
    checks: Tuple[CheckResult, ...]

    @property
    def overall(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def first_failure(self) -> Optional[CheckResult]:
        for check in self.checks:
            if not check.passed:
                return check
        return None


class VerificationSuite:
    """
    按固定顺序运行所有校验。

    传入自定义的 StirlingTable 可以做故障注入：篡改过的表会让依赖它的校验失败，
    而独立的级数基准不受影响。
    """

    def __init__(self, max_n: int = None, max_a: int = None, enum_cap: int = None,
                 table: StirlingTable = None):
        self.max_n = Config.VERIFY_MAX_N if max_n is None else max_n
        self.max_a = Config.VERIFY_MAX_A if max_a is None else max_a
        self.enum_cap = Config.VERIFY_ENUM_CAP if enum_cap is None else enum_cap
        if self.max_n < 0 or self.max_a < 1 or self.enum_cap < 0:
            raise ValueError(f"校验范围无效: max_n={self.max_n}, max_a={self.max_a}, enum_cap={self.enum_cap}")
        self.engine = BernoulliEngine(table)
        self._results: Dict[Tuple[int, int, BernMethod], BernResult] = {}

    def _result(self, n: int, a: int, method: BernMethod) -> BernResult:
        key = (n, a, method)
        if key not in self._results:
            self._results[key] = self.engine.bern(n, a, method)
        return self._results[key]

    def _small_orders(self) -> range:
        return range(1, min(self.max_a, 3) + 1)

    def checks(self) -> List[Tuple[str, str, Callable[[], Optional[str]]]]:
        n, a = self.max_n, self.max_a
        small = min(a, 3)
        return [
            ("cross_method_equality", f"0<=n<={n}, 1<=a<={a}", self._cross_method_equality),
            ("degree_and_monicity", f"0<=n<={n}, 1<=a<={a}", self._degree_and_monicity),
            ("lambda_consistency", f"1<=m<={n}, 1<=a<={a}", self._lambda_consistency),
            ("egf_product_identity", f"N={n}, 1<=a<={small}", self._egf_product_identity),
            ("bell_three_way", f"0<=k<=n<={self.enum_cap} (enum), n<={n} (rec=closed), 1<=a<={small}",
             self._bell_three_way),
            ("stirling_gf", f"1<=k<=n<={n}", self._stirling_gf),
            ("hockey_stick", f"0<=r<=n<={n}", self._hockey_stick),
            ("derivative_identity", f"1<=n<={n}, 1<=a<={a}", self._derivative_identity),
            ("classical_specialization", f"0<=n<={n}", self._classical_specialization),
            ("odd_bernoulli_vanishing", f"3<=2k+1<={n}", self._odd_bernoulli_vanishing),
        ]

    def run(self) -> VerifyReport:
        results = []
        for name, param_range, check in self.checks():
            logger.info(f"运行校验: {name} ({param_range})")
            try:
                counterexample = check()
            except Exception as e:
                logger.exception(f"校验 {name} 抛出异常")
                counterexample = f"exception: {type(e).__name__}: {e}"
            passed = counterexample is None
            if not passed:
                logger.warning(f"校验失败: {name}: {counterexample}")
            results.append(CheckResult(name=name, param_range=param_range, passed=passed,
                                       counterexample=counterexample))
        return VerifyReport(checks=tuple(results))

    # ---- 各项校验：返回 None 表示通过，否则返回第一个反例的描述 ----

    def _cross_method_equality(self) -> Optional[str]:
        for a in range(1, self.max_a + 1):
            for n in range(self.max_n + 1):
                bell = self._result(n, a, BernMethod.BELL).poly
                double = self._result(n, a, BernMethod.DOUBLESUM).poly
                series = self._result(n, a, BernMethod.SERIES).poly
                if not (bell == double == series):
                    return f"n={n}, a={a}: bell={bell.to_json()}, doublesum={double.to_json()}, series={series.to_json()}"
        return None

    def _degree_and_monicity(self) -> Optional[str]:
        for a in range(1, self.max_a + 1):
            for n in range(self.max_n + 1):
                for method in BernMethod:
                    poly = self._result(n, a, method).poly
                    if poly.degree != n or not poly.is_monic():
                        return f"n={n}, a={a}, method={method.value}: {poly.to_json()}"
        return None

    def _lambda_consistency(self) -> Optional[str]:
        if self.max_n < 1:
            return None
        for a in range(1, self.max_a + 1):
            g = self.engine.g_series(a, self.max_n)
            seq = self.engine.lambda_seq(a, self.max_n)
            for m in range(1, self.max_n + 1):
                if seq[m] != g.egf_coeff(m):
                    return f"m={m}, a={a}: lambda={seq[m].to_json()}, egf={g.egf_coeff(m).to_json()}"
        return None

    def _egf_product_identity(self) -> Optional[str]:
        order = self.max_n
        one = Series.one(order, POLY)
        for a in self._small_orders():
            reflected = [self._result(k, a, BernMethod.BELL).poly.reflect() for k in range(order + 1)]
            product = series_mul(series_from_egf(reflected, order, POLY), self.engine.g_series(a, order))
            if product != one:
                return f"a={a}, N={order}: product={product!r}"
        return None

    def _bell_three_way(self) -> Optional[str]:
        for a in self._small_orders():
            seq = self.engine.lambda_seq(a, max(self.max_n, 1))
            rec_table = BellTable(seq, POLY)
            for n in range(self.max_n + 1):
                for k in range(n + 1):
                    rec = rec_table.value(n, k)
                    closed = bell_closed(n, k, a, table=self.engine.table)
                    if rec != closed:
                        return f"n={n}, k={k}, a={a}: rec={rec.to_json()}, closed={closed.to_json()}"
                    if n <= self.enum_cap:
                        enum = bell_enum(n, k, seq, POLY)
                        if enum != rec:
                            return f"n={n}, k={k}, a={a}: enum={enum.to_json()}, rec={rec.to_json()}"
        return None

    def _stirling_gf(self) -> Optional[str]:
        table = self.engine.table
        for n in range(1, self.max_n + 1):
            for k in range(1, n + 1):
                if not stirling2_gf_check(n, k, table):
                    return f"S({n},{k}) = {table.get(n, k)} does not match (e^x-1)^{k}/{k}!"
        return None

    def _hockey_stick(self) -> Optional[str]:
        for n in range(self.max_n + 1):
            for r in range(n + 1):
                if hockey_stick_sum(n, r) != binomial(n + 1, r + 1):
                    return f"n={n}, r={r}: sum={hockey_stick_sum(n, r)}, C(n+1,r+1)={binomial(n + 1, r + 1)}"
        return None

    def _derivative_identity(self) -> Optional[str]:
        for a in range(1, self.max_a + 1):
            for n in range(1, self.max_n + 1):
                current = self._result(n, a, BernMethod.DOUBLESUM).poly
                previous = self._result(n - 1, a, BernMethod.DOUBLESUM).poly
                if current.derivative() != previous.scale(n):
                    return f"n={n}, a={a}: d/dx={current.derivative().to_json()}, n*prev={previous.scale(n).to_json()}"
        return None

    def _classical_specialization(self) -> Optional[str]:
        for n in range(self.max_n + 1):
            at_zero = self._result(n, 1, BernMethod.SERIES).poly.evaluate(0)
            number = self.engine.bernoulli_number(n)
            if at_zero != number:
                return f"n={n}: B_n(0)={at_zero}, formula={number}"
        return None

    def _odd_bernoulli_vanishing(self) -> Optional[str]:
        for n in range(3, self.max_n + 1, 2):
            value = self.engine.bernoulli_number(n)
            if value != 0:
                return f"B_{n} = {value}"
        return None


def run_verification(max_n: int = None, max_a: int = None, enum_cap: int = None,
                     table: StirlingTable = None) -> VerifyReport:
    return VerificationSuite(max_n, max_a, enum_cap, table).run()
