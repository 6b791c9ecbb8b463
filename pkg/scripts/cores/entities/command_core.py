"""
責務:
- CLI の1コマンド分の指定 CommandSpec を定義し、計算前にフラグの組合せを検証する。

設計指針:
- 不正な組合せは UsageError（1行の診断）で拒否
- 種が素数かどうか等、ライブラリ設定側の検証は MillsConfig 生成時に行う
"""

from typing import Optional, Tuple

from attrs import field, frozen

from configs import (
    BFILE_SUBCOMMANDS,
    DEFAULT_BENCH_K,
    DEFAULT_C,
    DEFAULT_DIGITS,
    DEFAULT_LEMMA_N_MAX,
    DEFAULT_LEMMA_N_MIN,
    DEFAULT_SEED,
    DEFAULT_TERMS,
    EXTRA_MR_ROUNDS,
    OUTPUT_FORMATS,
    RNG_SEED,
    SUBCOMMANDS,
    Variant,
)
from cores.errors import UsageError


@frozen
class CommandSpec:
    subcommand: str
    c: int = DEFAULT_C
    variant: Variant = field(default=Variant.CEILING, converter=Variant)
    seed: int = DEFAULT_SEED
    seed_bound: Optional[int] = None
    terms: int = DEFAULT_TERMS
    digits: int = DEFAULT_DIGITS
    mr_rounds: int = EXTRA_MR_ROUNDS
    format: str = "text"
    cache_path: Optional[str] = None
    out_path: Optional[str] = None
    rng_seed: int = RNG_SEED
    allow_c2: bool = False
    n_min: int = DEFAULT_LEMMA_N_MIN
    n_max: int = DEFAULT_LEMMA_N_MAX
    bench_k: Tuple[int, ...] = DEFAULT_BENCH_K

    def __attrs_post_init__(self) -> None:
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"unknown subcommand: {self.subcommand}")
        if self.format not in OUTPUT_FORMATS:
            raise UsageError(f"unknown format: {self.format}")
        if self.format == "bfile" and self.subcommand not in BFILE_SUBCOMMANDS:
            raise UsageError(f"--format bfile is only valid for: {', '.join(BFILE_SUBCOMMANDS)}")
        if self.c < 2:
            raise UsageError(f"--c must be >= 2, got {self.c}")
        if self.c == 2 and not self.allow_c2:
            raise UsageError("--c 2 requires --allow-c2")
        if self.subcommand == "lemma-check" and self.c < 3:
            raise UsageError("lemma-check requires --c >= 3")
        if self.terms < 1:
            raise UsageError(f"--terms must be >= 1, got {self.terms}")
        if self.digits < 0:
            raise UsageError(f"--digits must be >= 0, got {self.digits}")
        if self.mr_rounds < 0:
            raise UsageError(f"--mr-rounds must be >= 0, got {self.mr_rounds}")
        if self.seed_bound is not None and self.seed_bound < 1:
            raise UsageError(f"--seed-from-bound must be >= 1, got {self.seed_bound}")
        if not 2 <= self.n_min <= self.n_max:
            raise UsageError(f"lemma range must satisfy 2 <= n-min <= n-max, got [{self.n_min}, {self.n_max}]")
        if not self.bench_k or any(k < 0 for k in self.bench_k):
            raise UsageError("--bench-k needs non-negative sizes")
