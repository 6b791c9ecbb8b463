"""
ファイル名: primes/sieve.py

責務:
- 小さな素数の一覧（エラトステネスの篩）と、大きな x 近傍の奇数窓の篩を提供する。

設計ポイント:
- どちらも numpy の真偽配列＋ストライド代入で篩う
- 窓の篩は x が数千桁でも、素数ごとの剰余だけを Python int で計算する
"""

from functools import lru_cache
from math import isqrt
from typing import List, Tuple

import numpy as np

from configs import SIEVE_NATIVE_LIMIT
from cores.entities import Natural
from cores.errors import InvalidArgument, LimitTooLarge


@lru_cache(maxsize=8)
def _sieve_tuple(limit: int) -> Tuple[int, ...]:
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return tuple(np.flatnonzero(is_prime).tolist())


def small_prime_sieve(limit: Natural) -> List[Natural]:
    """
    役割:
        limit 以下の素数を昇順で返す。

    引数:
        limit: 2 以上 2^32 以下

    例外:
        InvalidArgument: limit < 2
        LimitTooLarge: limit > 2^32
    """
    if limit < 2:
        raise InvalidArgument(f"sieve limit must be >= 2, got {limit}")
    if limit > SIEVE_NATIVE_LIMIT:
        raise LimitTooLarge(f"sieve limit {limit} exceeds native range {SIEVE_NATIVE_LIMIT}")
    return list(_sieve_tuple(int(limit)))


def cached_primes(limit: Natural) -> Tuple[int, ...]:
    """試し割り・窓篩用の共有タプル（呼び出し側で変更しない）。"""
    if limit > SIEVE_NATIVE_LIMIT:
        raise LimitTooLarge(f"sieve limit {limit} exceeds native range {SIEVE_NATIVE_LIMIT}")
    return _sieve_tuple(int(limit))


def sieve_odd_window(lo: Natural, count: int, bound: Natural) -> np.ndarray:
    """
    役割:
        奇数 lo, lo+2, ..., lo+2(count-1) のうち、bound 以下の奇素数 p の
        倍数（p 自身は除く）に True を立てた配列を返す。

    引数:
        lo: 窓の先頭（奇数）
        count: 奇数候補の個数
        bound: 篩に使う素数の上限

    返り値:
        np.ndarray[bool]: True = 篩で合成数と確定
    """
    if lo % 2 == 0:
        raise InvalidArgument(f"window start must be odd, got {lo}")
    composite = np.zeros(count, dtype=bool)
    top = lo + 2 * (count - 1)
    for p in cached_primes(bound):
        if p == 2:
            continue
        p2 = p * p
        if p2 > top:
            break
        start = max(p2, -(-lo // p) * p)
        if start % 2 == 0:
            start += p
        if start > top:
            continue
        composite[(start - lo) // 2 :: p] = True
    return composite
