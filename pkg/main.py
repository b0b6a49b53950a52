import argparse
import logging
import sys

from config import Config
from genbern.bell import bell_closed
from genbern.bernoulli import BernMethod, bern, bernoulli_number
from genbern.errors import GenBernError
from genbern.exact import parse_rational
from genbern.render import (OutputFormat, BellValue, BernTable, render_bern, render_bell,
                            render_bernoulli, render_report, render_table)
from genbern.verification import VerificationSuite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def nonneg_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"需要整数，得到 {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"必须 >= 0，得到 {value}")
    return value


def positive_int(text):
    value = nonneg_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"必须 >= 1，得到 {value}")
    return value


def rational_arg(text):
    try:
        return parse_rational(text)
    except GenBernError as e:
        raise argparse.ArgumentTypeError(str(e))


def _write(text: str):
    sys.stdout.write(text)
    sys.stdout.flush()


def _check_order(parser, a: int, method: BernMethod):
    if a == 0 and method is not BernMethod.SERIES:
        parser.error("a=0 requires --method series")


def cmd_bern(args) -> int:
    """计算单个 B_n^a(x)"""
    method = BernMethod.parse(args.method)
    _check_order(args.parser, args.a, method)
    result = bern(args.n, args.a, method)
    _write(render_bern(result, args.format))
    return EXIT_OK


def cmd_table(args) -> int:
    """输出 n = 0..max_n 的 B_n^a(x) 表"""
    method = BernMethod.parse(args.method)
    _check_order(args.parser, args.a, method)
    rows = tuple(bern(n, args.a, method) for n in range(args.max_n + 1))
    _write(render_table(BernTable(a=args.a, method=method, rows=rows), args.format))
    return EXIT_OK


def cmd_bernoulli(args) -> int:
    """输出 Bernoulli 数 B_0..B_max_n"""
    values = [bernoulli_number(n) for n in range(args.max_n + 1)]
    _write(render_bernoulli(values, args.format))
    return EXIT_OK


def cmd_bell(args) -> int:
    """输出 B_{n,k}(λ_1..λ_{n-k+1})，可选在有理点求值"""
    poly = bell_closed(args.n, args.k, args.a, at_x=args.at_x)
    value = BellValue(n=args.n, k=args.k, a=args.a, at_x=args.at_x, poly=poly)
    _write(render_bell(value, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    """运行全部不变量校验；全部通过返回 0，否则返回 1"""
    suite = VerificationSuite(max_n=args.max_n, max_a=args.max_a, enum_cap=args.enum_cap)
    report = suite.run()
    _write(render_report(report, args.format))
    if report.overall:
        return EXIT_OK
    failure = report.first_failure
    sys.stderr.write(f"first failed check: {failure.name}: {failure.counterexample}\n")
    return EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="广义 Bernoulli 多项式的精确计算与交叉校验")
    subparsers = parser.add_subparsers(dest="command")

    methods = [m.value for m in BernMethod]
    formats = [f.value for f in OutputFormat]

    def add_format(sub):
        sub.add_argument("--format", choices=formats, default=OutputFormat.PLAIN.value, help="输出格式")

    sub = subparsers.add_parser("bern", help="计算 B_n^a(x)")
    sub.add_argument("--n", type=nonneg_int, required=True, help="次数 n")
    sub.add_argument("--a", type=nonneg_int, default=1, help="阶数 a（a=0 只能配合 --method series）")
    sub.add_argument("--method", choices=methods, default=Config.DEFAULT_METHOD, help="计算方法")
    add_format(sub)
    sub.set_defaults(handler=cmd_bern, parser=sub)

    sub = subparsers.add_parser("table", help="输出 B_0^a..B_max_n^a 表")
    sub.add_argument("--max-n", type=nonneg_int, required=True, help="最大次数")
    sub.add_argument("--a", type=nonneg_int, default=1, help="阶数 a")
    sub.add_argument("--method", choices=methods, default=Config.DEFAULT_METHOD, help="计算方法")
    add_format(sub)
    sub.set_defaults(handler=cmd_table, parser=sub)

    sub = subparsers.add_parser("bernoulli", help="输出 Bernoulli 数")
    sub.add_argument("--max-n", type=nonneg_int, required=True, help="最大下标")
    add_format(sub)
    sub.set_defaults(handler=cmd_bernoulli, parser=sub)

    sub = subparsers.add_parser("bell", help="计算 B_{n,k}(λ)")
    sub.add_argument("--n", type=nonneg_int, required=True, help="下标 n")
    sub.add_argument("--k", type=nonneg_int, required=True, help="下标 k")
    sub.add_argument("--a", type=positive_int, default=1, help="阶数 a（>= 1）")
    sub.add_argument("--at-x", type=rational_arg, default=None, help="在 x = p/q 处求值")
    add_format(sub)
    sub.set_defaults(handler=cmd_bell, parser=sub)

    sub = subparsers.add_parser("verify", help="运行全部校验")
    sub.add_argument("--max-n", type=nonneg_int, default=Config.VERIFY_MAX_N, help="最大次数")
    sub.add_argument("--max-a", type=positive_int, default=Config.VERIFY_MAX_A, help="最大阶数")
    sub.add_argument("--enum-cap", type=nonneg_int, default=Config.VERIFY_ENUM_CAP,
                     help="分拆枚举基准的最大 n")
    add_format(sub)
    sub.set_defaults(handler=cmd_verify, parser=sub)

    return parser


def main(argv=None) -> int:
    Config.load_config()
    logging.basicConfig(level=Config.LOG_LEVEL, format=Config.LOG_FORMAT)

    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    try:
        return args.handler(args)
    except GenBernError as e:
        args.parser.error(str(e))


if __name__ == "__main__":
    sys.exit(main())
