"""
输出格式：json / csv / latex / plain。

有理数一律输出为 "p/q" 字符串（LaTeX 中为 \\frac{p}{q}），从不转换为浮点数。
json 与 csv 可以被 parse_* 函数读回，得到相同的内存对象。
"""
import io
import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from .bernoulli import BernMethod, BernResult
from .exact import format_rational, parse_rational
from .poly import Poly
from .verification import CheckResult, VerifyReport


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    LATEX = "latex"
    PLAIN = "plain"


@dataclass(frozen=True)
class BernTable:
    a: int
    method: BernMethod
    rows: Tuple[BernResult, ...]

    @property
    def max_n(self) -> int:
        return len(self.rows) - 1


@dataclass(frozen=True)
class BellValue:
    n: int
    k: int
    a: int
    at_x: Optional[Fraction]
    poly: Poly


def _dump_json(data: Any) -> str:
    return json.dumps(data, ensure_ascii=False, separators=(",", ":"))


def _dump_csv(columns: List[str], rows: List[List[str]]) -> str:
    frame = pd.DataFrame(rows, columns=columns)
    return frame.to_csv(index=False, lineterminator="\n")


def _load_csv(text: str) -> pd.DataFrame:
    return pd.read_csv(io.StringIO(text), dtype=str, keep_default_na=False)


# ---- 多项式与有理数的文本形式 ----

def _monomial(degree: int, latex: bool) -> str:
    if degree == 0:
        return ""
    if degree == 1:
        return "x"
    return f"x^{{{degree}}}" if latex else f"x^{degree}"


def _magnitude(value: Fraction, latex: bool) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    if latex:
        return f"\\frac{{{value.numerator}}}{{{value.denominator}}}"
    return f"{value.numerator}/{value.denominator}"


def _format_poly(poly: Poly, latex: bool) -> str:
    if poly.is_zero():
        return "0"
    pieces = []
    for degree in range(poly.degree, -1, -1):
        c = poly.coeff(degree)
        if c == 0:
            continue
        size = abs(c)
        mono = _monomial(degree, latex)
        if mono and size == 1:
            body = mono
        elif mono and size.denominator != 1:
            body = f"{_magnitude(size, latex)} {mono}"
        else:
            body = _magnitude(size, latex) + mono
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(pieces)


def format_poly_plain(poly: Poly) -> str:
    """降幂排列，例如 "x^2 - x + 1/6" """
    return _format_poly(poly, latex=False)


def format_poly_latex(poly: Poly) -> str:
    """例如 "x^{2} - x + \\frac{1}{6}" """
    return _format_poly(poly, latex=True)


def format_rational_latex(value: Fraction) -> str:
    text = _magnitude(abs(value), latex=True)
    return f"-{text}" if value < 0 else text


def _latex_tabular(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    lines = [
        r'\begin{tabular}{' + "l" * len(header) + '}',
        " & ".join(header) + r" \\ \hline",
    ]
    for row in rows:
        lines.append(" & ".join(row) + r" \\")
    lines.append(r'\end{tabular}')
    return "\n".join(lines) + "\n"


def _padded(poly: Poly, width: int) -> List[str]:
    coeffs = poly.to_json()
    return coeffs + ["0"] * (width - len(coeffs))


def _poly_from_cells(cells: Sequence[str]) -> Poly:
    return Poly([parse_rational(c) for c in cells if c != ""])


# ---- B_n^a(x) 单个结果 ----

def render_bern(result: BernResult, fmt: OutputFormat) -> str:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return _dump_json(result.to_dict()) + "\n"
    if fmt is OutputFormat.CSV:
        width = result.n + 1
        columns = ["n"] + [f"c{i}" for i in range(width)]
        return _dump_csv(columns, [[str(result.n)] + _padded(result.poly, width)])
    if fmt is OutputFormat.LATEX:
        return f"B_{{{result.n}}}^{{({result.a})}}(x) = {format_poly_latex(result.poly)}\n"
    return format_poly_plain(result.poly) + "\n"


def parse_bern(text: str, fmt: OutputFormat, a: int = None, method=None) -> BernResult:
    """读回 json（自带 a 和 method）或 csv（需要调用方给出 a 和 method）"""
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return BernResult.from_dict(json.loads(text))
    if fmt is OutputFormat.CSV:
        table = parse_table(text, fmt, a=a, method=method)
        return table.rows[0]
    raise ValueError(f"{fmt.value} 格式只用于展示，不能读回")


# ---- 表格 ----

def render_table(table: BernTable, fmt: OutputFormat) -> str:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return _dump_json({
            "a": table.a,
            "method": table.method.value,
            "rows": [row.to_dict() for row in table.rows],
        }) + "\n"
    if fmt is OutputFormat.CSV:
        width = table.max_n + 1
        columns = ["n"] + [f"c{i}" for i in range(width)]
        rows = [[str(row.n)] + _padded(row.poly, width) for row in table.rows]
        return _dump_csv(columns, rows)
    if fmt is OutputFormat.LATEX:
        header = ["$n$", f"$B_n^{{({table.a})}}(x)$"]
        rows = [[f"${row.n}$", f"${format_poly_latex(row.poly)}$"] for row in table.rows]
        return _latex_tabular(header, rows)
    return "".join(
        f"B_{row.n}^({table.a})(x) = {format_poly_plain(row.poly)}\n" for row in table.rows
    )


def parse_table(text: str, fmt: OutputFormat, a: int = None, method=None) -> BernTable:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        data = json.loads(text)
        rows = tuple(BernResult.from_dict(row) for row in data["rows"])
        return BernTable(a=int(data["a"]), method=BernMethod.parse(data["method"]), rows=rows)
    if fmt is OutputFormat.CSV:
        if a is None or method is None:
            raise ValueError("csv 不包含 a 和 method，读回时必须显式给出")
        method = BernMethod.parse(method)
        frame = _load_csv(text)
        coeff_columns = [c for c in frame.columns if c != "n"]
        rows = []
        for _, record in frame.iterrows():
            poly = _poly_from_cells([record[c] for c in coeff_columns])
            rows.append(BernResult(n=int(record["n"]), a=a, poly=poly, method=method))
        return BernTable(a=a, method=method, rows=tuple(rows))
    raise ValueError(f"{fmt.value} 格式只用于展示，不能读回")


# ---- Bernoulli 数 ----

def render_bernoulli(values: Sequence[Fraction], fmt: OutputFormat) -> str:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return _dump_json({
            "values": [{"n": n, "value": format_rational(v)} for n, v in enumerate(values)]
        }) + "\n"
    if fmt is OutputFormat.CSV:
        rows = [[str(n), format_rational(v)] for n, v in enumerate(values)]
        return _dump_csv(["n", "value"], rows)
    if fmt is OutputFormat.LATEX:
        rows = [[f"${n}$", f"${format_rational_latex(v)}$"] for n, v in enumerate(values)]
        return _latex_tabular(["$n$", "$B_n$"], rows)
    return "".join(f"B_{n} = {format_rational(v)}\n" for n, v in enumerate(values))


def parse_bernoulli(text: str, fmt: OutputFormat) -> List[Fraction]:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        entries = json.loads(text)["values"]
        return [parse_rational(entry["value"]) for entry in sorted(entries, key=lambda e: e["n"])]
    if fmt is OutputFormat.CSV:
        frame = _load_csv(text)
        return [parse_rational(v) for v in frame["value"]]
    raise ValueError(f"{fmt.value} 格式只用于展示，不能读回")


# ---- Bell 多项式 ----

def _bell_to_dict(value: BellValue) -> Dict[str, Any]:
    return {
        "n": value.n,
        "k": value.k,
        "a": value.a,
        "at_x": None if value.at_x is None else format_rational(value.at_x),
        "coeffs": value.poly.to_json(),
    }


def render_bell(value: BellValue, fmt: OutputFormat) -> str:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return _dump_json(_bell_to_dict(value)) + "\n"
    if fmt is OutputFormat.CSV:
        width = max(len(value.poly.coeffs), 1)
        columns = ["n", "k", "a", "at_x"] + [f"c{i}" for i in range(width)]
        at_x = "" if value.at_x is None else format_rational(value.at_x)
        row = [str(value.n), str(value.k), str(value.a), at_x] + _padded(value.poly, width)
        return _dump_csv(columns, [row])
    if fmt is OutputFormat.LATEX:
        return f"B_{{{value.n},{value.k}}} = {format_poly_latex(value.poly)}\n"
    return format_poly_plain(value.poly) + "\n"


def parse_bell(text: str, fmt: OutputFormat) -> BellValue:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        data = json.loads(text)
        at_x = data.get("at_x")
        return BellValue(n=int(data["n"]), k=int(data["k"]), a=int(data["a"]),
                         at_x=None if at_x is None else parse_rational(at_x),
                         poly=Poly.from_json(data["coeffs"]))
    if fmt is OutputFormat.CSV:
        record = _load_csv(text).iloc[0]
        coeff_columns = [c for c in record.index if c.startswith("c")]
        at_x = record["at_x"]
        return BellValue(n=int(record["n"]), k=int(record["k"]), a=int(record["a"]),
                         at_x=parse_rational(at_x) if at_x else None,
                         poly=_poly_from_cells([record[c] for c in coeff_columns]))
    raise ValueError(f"{fmt.value} 格式只用于展示，不能读回")


# ---- 校验报告 ----

def _check_to_dict(check: CheckResult) -> Dict[str, Any]:
    return {
        "name": check.name,
        "range": check.param_range,
        "passed": check.passed,
        "counterexample": check.counterexample,
    }


def render_report(report: VerifyReport, fmt: OutputFormat) -> str:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return json.dumps({
            "overall": report.overall,
            "checks": [_check_to_dict(c) for c in report.checks],
        }, ensure_ascii=False, indent=2) + "\n"
    if fmt is OutputFormat.CSV:
        rows = [[c.name, c.param_range, "PASS" if c.passed else "FAIL", c.counterexample or ""]
                for c in report.checks]
        return _dump_csv(["name", "range", "status", "counterexample"], rows)
    if fmt is OutputFormat.LATEX:
        rows = [[c.name.replace("_", r"\_"), c.param_range, "PASS" if c.passed else "FAIL"]
                for c in report.checks]
        return _latex_tabular(["check", "range", "status"], rows)
    lines = []
    for check in report.checks:
        lines.append(f"[{'PASS' if check.passed else 'FAIL'}] {check.name} ({check.param_range})")
        if check.counterexample:
            lines.append(f"    counterexample: {check.counterexample}")
    lines.append(f"overall: {'PASS' if report.overall else 'FAIL'}")
    return "\n".join(lines) + "\n"


def parse_report(text: str, fmt: OutputFormat) -> VerifyReport:
    fmt = OutputFormat(fmt)
    if fmt is not OutputFormat.JSON:
        raise ValueError("校验报告只能从 json 读回")
    data = json.loads(text)
    checks = tuple(CheckResult(name=c["name"], param_range=c["range"], passed=bool(c["passed"]),
                               counterexample=c["counterexample"]) for c in data["checks"])
    return VerifyReport(checks=checks)
