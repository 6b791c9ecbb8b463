"""
ファイル名: primes/prime_search.py

責務:
- 極値素数の探索:
    prev_prime(x): x 未満の最大の素数（天井関数版の次項）
    next_prime(x): x より大きい最小の素数（床関数版の次項）
- 探索統計 SearchStats を同時に返す。

設計ポイント:
- x から離れる向きに奇数窓を切り出し、trial_division_bound 以下の素数で篩ってから
  生き残りだけを classify にかける
- 窓幅は max(1024, 4·ln(x)·ln(10)) 個の整数。素数が見つかるまで窓を延長
- 候補は x に近い順に判定するので、採用時点で (p, x) の整数はすべて合成数と確定済み
"""

import math
import time
from typing import Tuple

from attrs import define

from configs import SEARCH_BLOCK_LOG_FACTOR, SEARCH_BLOCK_MIN
from cores.entities import Natural, PrimalityConfig, SearchStats
from cores.errors import InvalidArgument
from utils import setup_logging
from .primality import DEFAULT_PRIMALITY, classify
from .sieve import sieve_odd_window

log = setup_logging("prime_search")


@define
class _Tally:
    examined: int = 0
    eliminated: int = 0
    tested: int = 0

    def freeze(self, started: float) -> SearchStats:
        return SearchStats(
            candidates_examined=self.examined,
            sieve_eliminated=self.eliminated,
            mr_tests_run=self.tested,
            elapsed=time.perf_counter() - started,
        )


def block_width(x: Natural) -> int:
    """窓幅（整数の個数）: max(1024, 4·ln(x)·ln(10))。"""
    return max(SEARCH_BLOCK_MIN, math.ceil(SEARCH_BLOCK_LOG_FACTOR * math.log(x) * math.log(10)))


def _scan(lo: Natural, count: int, descending: bool, cfg: PrimalityConfig, tally: _Tally) -> Natural:
    """窓内の候補を x に近い側から判定し、最初の素数を返す（なければ 0）。"""
    composite = sieve_odd_window(lo, count, cfg.trial_division_bound)
    order = range(count - 1, -1, -1) if descending else range(count)
    for i in order:
        tally.examined += 1
        if composite[i]:
            tally.eliminated += 1
            continue
        candidate = lo + 2 * i
        tally.tested += 1
        if classify(candidate, cfg).is_prime:
            return candidate
    return 0


def prev_prime(x: Natural, cfg: PrimalityConfig = DEFAULT_PRIMALITY) -> Tuple[Natural, SearchStats]:
    """
    役割:
        x 未満の最大の素数 p を返す。(p, x) の整数はすべて合成数。

    引数:
        x: 3 以上

    返り値:
        (p, SearchStats)

    例外:
        InvalidArgument: x < 3
    """
    if x < 3:
        raise InvalidArgument(f"prev_prime requires x >= 3, got {x}")
    started = time.perf_counter()
    tally = _Tally()
    if x == 3:
        return 2, tally.freeze(started)

    half = block_width(x) // 2
    hi = x - 1 if x % 2 == 0 else x - 2
    while hi >= 3:
        count = min(half, (hi - 3) // 2 + 1)
        lo = hi - 2 * (count - 1)
        found = _scan(lo, count, True, cfg, tally)
        if found:
            stats = tally.freeze(started)
            log.debug(f"prev_prime: gap={x - found}, {stats}")
            return found, stats
        hi = lo - 2
    return 2, tally.freeze(started)


def next_prime(x: Natural, cfg: PrimalityConfig = DEFAULT_PRIMALITY) -> Tuple[Natural, SearchStats]:
    """
    役割:
        x より大きい最小の素数 p を返す。(x, p) の整数はすべて合成数。

    引数:
        x: 1 以上

    例外:
        InvalidArgument: x < 1
    """
    if x < 1:
        raise InvalidArgument(f"next_prime requires x >= 1, got {x}")
    started = time.perf_counter()
    tally = _Tally()
    if x < 2:
        return 2, tally.freeze(started)

    half = block_width(x) // 2
    lo = x + 1 if x % 2 == 0 else x + 2
    while True:
        found = _scan(lo, half, False, cfg, tally)
        if found:
            stats = tally.freeze(started)
            log.debug(f"next_prime: gap={found - x}, {stats}")
            return found, stats
        lo += 2 * half
