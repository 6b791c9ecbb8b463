"""
ファイル名: primes/primality.py

責務:
- 任意精度整数の層状素数判定 classify を提供する。
    1) 試し割り（trial_division_bound 以下の素数）
    2) deterministic_threshold 未満: 固定底集合による決定的 Miller-Rabin
    3) それ以上: BPSW（底2の強擬素数テスト + 強 Lucas テスト）+ シード付き乱択底
- 合成数の証拠（因数 / MR の底）を再検証する recheck_witness を提供する。

設計ポイント:
- n < 2 は Composite（証拠なし）とする全域関数
- 閾値未満では ProbablePrime を返さず、閾値以上では ProvenPrime を返さない
- Lucas で落ちた数は固定底・乱択底で MR の証拠を探してから Composite を返す
- 乱択底は (n, cfg) ごとに rng_seed から作り直すので、同じ入力には同じ結果
"""

from itertools import chain
from typing import Iterable, Iterator, Optional

import gmpy2

from configs import DETERMINISTIC_WITNESSES, ProvenMethod, WitnessKind
from cores.entities import (
    Composite,
    Natural,
    PrimalityConfig,
    PrimalityStatus,
    ProbablePrime,
    ProvenPrime,
    decimal_digits,
)
from utils import setup_logging
from .sieve import cached_primes

log = setup_logging("primality")

DEFAULT_PRIMALITY = PrimalityConfig()


def is_strong_probable_prime(n: Natural, base: int) -> bool:
    """
    役割:
        奇数 n > 2 が底 base の強擬素数（Miller-Rabin）かを返す。
    """
    n = gmpy2.mpz(n)
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = gmpy2.powmod(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = gmpy2.powmod(x, 2, n)
        if x == n - 1:
            return True
        if x == 1:
            return False
    return False


def is_strong_lucas_probable_prime(n: Natural) -> bool:
    """Selfridge パラメータによる強 Lucas 擬素数テスト（n は奇数・非平方）。"""
    return bool(gmpy2.is_strong_selfridge_prp(gmpy2.mpz(n)))


def _trial_division(n: Natural, cfg: PrimalityConfig) -> Optional[PrimalityStatus]:
    """
    役割:
        試し割り。因数が見つかれば Composite、n が素数と確定し
        かつ n < deterministic_threshold なら ProvenPrime、それ以外は None。
    """
    for p in cached_primes(cfg.trial_division_bound):
        if p * p > n:
            break
        if n % p == 0:
            if n == p:
                break
            return Composite(p, WitnessKind.FACTOR)
    else:
        return None
    if n < cfg.deterministic_threshold:
        return ProvenPrime(ProvenMethod.TRIAL_DIVISION)
    return None


def _deterministic(n: Natural) -> PrimalityStatus:
    for a in DETERMINISTIC_WITNESSES:
        if a >= n - 1:
            break
        if not is_strong_probable_prime(n, a):
            return Composite(a, WitnessKind.MR_BASE)
    return ProvenPrime(ProvenMethod.DETERMINISTIC_WITNESS_SET)


def _random_bases(n: Natural, cfg: PrimalityConfig) -> Iterator[int]:
    """rng_seed から [3, n-2] の底を extra_mr_rounds 個生成する（n >= 5）。"""
    state = gmpy2.random_state(cfg.rng_seed % 2**64)
    span = gmpy2.mpz(n - 4)
    for _ in range(cfg.extra_mr_rounds):
        yield int(gmpy2.mpz_random(state, span)) + 3


def _mr_witness(n: Natural, bases: Iterable[int]) -> Optional[int]:
    for base in bases:
        if not is_strong_probable_prime(n, base):
            return base
    return None


def _probable(n: Natural, cfg: PrimalityConfig) -> PrimalityStatus:
    if n < 5:
        # 閾値が極端に小さいときの 2, 3（4 は試し割りで除外済み）
        return ProbablePrime(bpsw=True, extra_rounds=cfg.extra_mr_rounds, rng_seed=cfg.rng_seed)
    if not is_strong_probable_prime(n, 2):
        return Composite(2, WitnessKind.MR_BASE)
    if gmpy2.is_square(n):
        return Composite(int(gmpy2.isqrt(n)), WitnessKind.FACTOR)
    if not is_strong_lucas_probable_prime(n):
        fixed = (a for a in DETERMINISTIC_WITNESSES[1:] if a < n - 1)
        witness = _mr_witness(n, chain(fixed, _random_bases(n, cfg)))
        if witness is None:
            log.warning(f"Lucas test rejects n ({decimal_digits(n)} digits) but no Miller-Rabin base witnessed it")
            return Composite()
        return Composite(witness, WitnessKind.MR_BASE)
    witness = _mr_witness(n, _random_bases(n, cfg))
    if witness is not None:
        return Composite(witness, WitnessKind.MR_BASE)
    return ProbablePrime(bpsw=True, extra_rounds=cfg.extra_mr_rounds, rng_seed=cfg.rng_seed)


def classify(n: Natural, cfg: PrimalityConfig = DEFAULT_PRIMALITY) -> PrimalityStatus:
    """
    役割:
        n の素数性を判定する（全域関数）。

    引数:
        n: 非負整数
        cfg: 判定設定

    返り値:
        PrimalityStatus:
            n < 2 → Composite（証拠なし）
            n < deterministic_threshold → ProvenPrime / Composite（誤判定なし）
            それ以上 → Composite（可能なら証拠付き）/ ProbablePrime
    """
    if n < 2:
        return Composite()
    status = _trial_division(n, cfg)
    if status is not None:
        return status
    if n < cfg.deterministic_threshold:
        return _deterministic(n)
    return _probable(n, cfg)


def is_prime(n: Natural, cfg: PrimalityConfig = DEFAULT_PRIMALITY) -> bool:
    return classify(n, cfg).is_prime


def recheck_witness(n: Natural, status: PrimalityStatus) -> bool:
    """
    役割:
        Composite の証拠を単独で再検証し、合成数であることが確かめられれば True。
        証拠なし・Composite 以外は False。
    """
    if not isinstance(status, Composite) or status.witness is None:
        return False
    w = status.witness
    if status.witness_kind is WitnessKind.FACTOR:
        return 1 < w < n and n % w == 0
    if n % 2 == 0 or n < 5:
        return False
    return not is_strong_probable_prime(n, w)

