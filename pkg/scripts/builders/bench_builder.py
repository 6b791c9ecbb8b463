"""
ファイル名: builders/bench_builder.py

責務:
- x = 10^(10^k) の直前の素数を探索し、探索コスト（候補数・篩除外数・判定回数・時間）を計測する。
"""

from typing import List, Sequence

from cores.entities import BenchResult, PrimalityConfig, decimal_digits
from cores.errors import InvalidArgument
from primes import DEFAULT_PRIMALITY, prev_prime
from utils import setup_logging
from .base import BuilderBase

log = setup_logging("BenchBuilder")


class BenchBuilder(BuilderBase[List[BenchResult]]):
    def __init__(self, sizes: Sequence[int], cfg: PrimalityConfig = DEFAULT_PRIMALITY) -> None:
        self.sizes = tuple(sizes)
        self.cfg = cfg

    def pre_build(self) -> None:
        log.info("=================[素数探索ベンチマーク]=========================")
        if not self.sizes or any(k < 0 for k in self.sizes):
            raise InvalidArgument(f"bench sizes must be non-negative: {self.sizes}")

    def build(self) -> List[BenchResult]:
        results: List[BenchResult] = []
        for k in self.sizes:
            x = 10 ** (10**k)
            p, stats = prev_prime(x, self.cfg)
            log.info(
                f"k={k}: gap={x - p}, 候補 {stats.candidates_examined}, "
                f"篩除外 {stats.sieve_eliminated}, 判定 {stats.mr_tests_run}, {stats.elapsed:.3f}s"
            )
            results.append(BenchResult(k=k, digits=decimal_digits(p), gap=x - p, stats=stats))
        return results


def run_bench(sizes: Sequence[int], cfg: PrimalityConfig = DEFAULT_PRIMALITY) -> List[BenchResult]:
    return BenchBuilder(sizes, cfg).run()
