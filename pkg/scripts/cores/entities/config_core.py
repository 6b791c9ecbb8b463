"""
責務:
- 実行時設定オブジェクト PrimalityConfig / MillsConfig を定義する（frozen attrs）。
- 型の不変条件は生成時に検証する。

設計指針:
- 既定値は configs/constants.py から取得
- MillsConfig は種（seed）が素数であることを classify で確認する
"""

from attrs import field, frozen

from configs import (
    DEFAULT_C,
    DEFAULT_SEED,
    DEFAULT_TERMS,
    DETERMINISTIC_THRESHOLD,
    DETERMINISTIC_WITNESS_LIMIT,
    EXTRA_MR_ROUNDS,
    RNG_SEED,
    SIEVE_NATIVE_LIMIT,
    TRIAL_DIVISION_BOUND,
    Variant,
)
from cores.errors import InvalidArgument, InvalidExponent, SeedNotPrime
from utils import setup_logging
from .natural_core import Natural, require_at_least

log = setup_logging("config_core")


def _check_threshold(instance: object, attribute: object, value: int) -> None:
    if not 0 <= value <= DETERMINISTIC_WITNESS_LIMIT:
        raise InvalidArgument(
            f"deterministic_threshold must lie in [0, {DETERMINISTIC_WITNESS_LIMIT}], got {value}"
        )


def _check_trial_bound(instance: object, attribute: object, value: int) -> None:
    require_at_least(2)(instance, attribute, value)
    if value > SIEVE_NATIVE_LIMIT:
        raise InvalidArgument(f"trial_division_bound exceeds {SIEVE_NATIVE_LIMIT}: {value}")


def _check_rng_seed(instance: object, attribute: object, value: int) -> None:
    if not -(2**63) <= value < 2**64:
        raise InvalidArgument(f"rng_seed must fit in 64 bits: {value}")


@frozen
class PrimalityConfig:
    """
    役割:
        素数判定の層構成パラメータ。
    属性:
        trial_division_bound: 試し割りに使う素数の上限（>= 2）
        deterministic_threshold: これ未満は決定的判定（ProvenPrime / Composite のみ）
        extra_mr_rounds: 閾値以上で BPSW 後に追加する乱択底の強擬素数テスト回数
        rng_seed: 乱択底の生成器シード
    """

    trial_division_bound: Natural = field(default=TRIAL_DIVISION_BOUND, validator=_check_trial_bound)
    deterministic_threshold: Natural = field(default=DETERMINISTIC_THRESHOLD, validator=_check_threshold)
    extra_mr_rounds: int = field(default=EXTRA_MR_ROUNDS, validator=require_at_least(0))
    rng_seed: int = field(default=RNG_SEED, validator=_check_rng_seed)


@frozen
class MillsConfig:
    """
    役割:
        素数列構築の設定。
    属性:
        c: 指数（>= 3、allow_c2 のとき 2 も可）
        variant: Ceiling / Floor
        seed: 初項（素数であること）
        terms: 項数（>= 1）
        primality: 素数判定設定
        allow_c2: c = 2 を探索的に許可
    """

    c: int = field(default=DEFAULT_C)
    variant: Variant = field(default=Variant.CEILING, converter=Variant)
    seed: Natural = field(default=DEFAULT_SEED, validator=require_at_least(0))
    terms: int = field(default=DEFAULT_TERMS, validator=require_at_least(1))
    primality: PrimalityConfig = field(factory=PrimalityConfig)
    allow_c2: bool = False

    def __attrs_post_init__(self) -> None:
        if not isinstance(self.c, int) or self.c < 2 or (self.c == 2 and not self.allow_c2):
            raise InvalidExponent(
                f"c must be an integer >= 3 (c = 2 only with allow_c2), got {self.c!r}"
            )
        if self.c == 2:
            log.warning("c = 2 は定理の範囲外（探索的実行）。挟み込み不等式が破れる可能性あり")
        # 循環 import 回避のため遅延 import
        from primes.primality import classify

        if not classify(self.seed, self.primality).is_prime:
            raise SeedNotPrime(f"seed is not prime: {self.seed}")
