#!/usr/bin/env python3
"""
算法对比脚本 - 比较 bell / doublesum / series 三种方法的耗时

每次计时都使用新的 BernoulliEngine（只共享 Stirling 表），避免 Bell 表缓存掩盖真实开销。
用法: python -m scripts.benchmark_methods --max-n 20 --max-a 3
"""
import argparse
import logging
import time

import pandas as pd
from tqdm import tqdm

from config import Config
from genbern.bernoulli import BernMethod, BernoulliEngine
from genbern.combinatorics import shared_stirling_table

logger = logging.getLogger(__name__)


def time_method(n, a, method, repeat):
    """返回 repeat 次中的最短耗时（秒）"""
    table = shared_stirling_table()
    best = None
    for _ in range(repeat):
        engine = BernoulliEngine(table)
        start = time.perf_counter()
        engine.bern(n, a, method)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best


def run_benchmark(max_n, max_a, repeat=1, step=1):
    records = []
    cells = [(n, a) for a in range(1, max_a + 1) for n in range(0, max_n + 1, step)]
    for n, a in tqdm(cells, desc="计时"):
        for method in BernMethod:
            records.append({
                "n": n,
                "a": a,
                "method": method.value,
                "seconds": time_method(n, a, method, repeat),
            })
    return pd.DataFrame(records)


def summarize(frame):
    """按 (a, n) 展开三种方法的耗时"""
    return frame.pivot_table(index=["a", "n"], columns="method", values="seconds")


def main():
    parser = argparse.ArgumentParser(description='比较三种算法的耗时')
    parser.add_argument('--max-n', type=int, default=20, help='最大次数')
    parser.add_argument('--max-a', type=int, default=3, help='最大阶数')
    parser.add_argument('--step', type=int, default=5, help='n 的步长')
    parser.add_argument('--repeat', type=int, default=3, help='每个单元重复次数，取最小值')
    parser.add_argument('--csv', default=None, help='把原始计时写入 CSV 文件')
    args = parser.parse_args()

    logging.basicConfig(level=Config.LOG_LEVEL, format=Config.LOG_FORMAT)

    frame = run_benchmark(args.max_n, args.max_a, args.repeat, args.step)
    if args.csv:
        frame.to_csv(args.csv, index=False)
        logger.info(f"原始计时已写入 {args.csv}")
    print(summarize(frame).to_string())


if __name__ == '__main__':
    main()
