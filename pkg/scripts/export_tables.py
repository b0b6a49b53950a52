#!/usr/bin/env python3
"""
表格导出脚本 - 把多个阶数的 B_n^a(x) 表和 Bernoulli 数按所有格式写入输出目录

用法: python -m scripts.export_tables --max-n 12 --orders 1 2 3
"""
import argparse
import logging
import os

from tqdm import tqdm

from config import Config
from genbern.bernoulli import BernMethod, BernoulliEngine
from genbern.render import OutputFormat, BernTable, render_bernoulli, render_table

logger = logging.getLogger(__name__)

EXTENSIONS = {
    OutputFormat.JSON: "json",
    OutputFormat.CSV: "csv",
    OutputFormat.LATEX: "tex",
    OutputFormat.PLAIN: "txt",
}


def export_tables(max_n, orders, method, output_dir):
    """写出所有文件，返回写入的路径列表"""
    engine = BernoulliEngine()
    written = []

    for a in tqdm(orders, desc="导出 B_n^a 表"):
        rows = tuple(engine.bern(n, a, method) for n in range(max_n + 1))
        table = BernTable(a=a, method=method, rows=rows)
        for fmt, ext in EXTENSIONS.items():
            path = os.path.join(output_dir, f"bern_a{a}_{method.value}.{ext}")
            with open(path, 'w', encoding='utf-8') as f:
                f.write(render_table(table, fmt))
            written.append(path)

    values = [engine.bernoulli_number(n) for n in range(max_n + 1)]
    for fmt, ext in EXTENSIONS.items():
        path = os.path.join(output_dir, f"bernoulli_numbers.{ext}")
        with open(path, 'w', encoding='utf-8') as f:
            f.write(render_bernoulli(values, fmt))
        written.append(path)

    return written


def main():
    parser = argparse.ArgumentParser(description='导出广义 Bernoulli 多项式表')
    parser.add_argument('--max-n', type=int, default=12, help='最大次数')
    parser.add_argument('--orders', type=int, nargs='+', default=[1, 2, 3], help='阶数列表')
    parser.add_argument('--method', choices=[m.value for m in BernMethod], default=Config.DEFAULT_METHOD,
                        help='计算方法')
    parser.add_argument('--output', default=None, help='输出目录（默认 Config.OUTPUT_DIR）')
    args = parser.parse_args()

    logging.basicConfig(level=Config.LOG_LEVEL, format=Config.LOG_FORMAT)
    if args.output:
        Config.OUTPUT_DIR = args.output
    Config.init()

    written = export_tables(args.max_n, args.orders, BernMethod.parse(args.method), Config.OUTPUT_DIR)
    print(f"导出完成，共写入 {len(written)} 个文件到 {Config.OUTPUT_DIR}")


if __name__ == '__main__':
    main()
