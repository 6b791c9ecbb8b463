"""
ファイル名: builders/lemma_builder.py

責務:
- 補題「(N-1)^c + 1 < p < N^c を満たす素数 p が存在する」を N ∈ [n_min, n_max] で走査する。
- 証人は prev_prime(N^c)。p ≤ (N-1)^c + 1 なら違反として記録する。
"""

from typing import List, Optional

from cores.entities import LemmaReport, Natural, PrimalityConfig, WorstMargin
from cores.errors import InvalidExponent, InvalidRange
from primes import DEFAULT_PRIMALITY, prev_prime
from utils import setup_logging
from .base import BuilderBase

log = setup_logging("LemmaBuilder")


class LemmaBuilder(BuilderBase[LemmaReport]):
    def __init__(self, c: int, n_min: Natural, n_max: Natural, cfg: PrimalityConfig = DEFAULT_PRIMALITY) -> None:
        self.c = c
        self.n_min = n_min
        self.n_max = n_max
        self.cfg = cfg

    def pre_build(self) -> None:
        log.info("=================[補題の範囲検証]=========================")
        if self.c < 3:
            raise InvalidExponent(f"lemma check needs c >= 3, got {self.c}")
        if not 2 <= self.n_min <= self.n_max:
            raise InvalidRange(f"need 2 <= n_min <= n_max, got [{self.n_min}, {self.n_max}]")

    def build(self) -> LemmaReport:
        violations: List[Natural] = []
        worst: Optional[WorstMargin] = None
        for n in range(self.n_min, self.n_max + 1):
            low = (n - 1) ** self.c + 1
            high = n**self.c
            p, _ = prev_prime(high, self.cfg)
            if p <= low:
                violations.append(n)
                log.warning(f"N={n}: ({low}, {high}) に素数なし")
                continue
            slack_low = p - low
            if worst is None or slack_low < worst.slack_low:
                worst = WorstMargin(n=n, prime=p, slack_low=slack_low, slack_high=high - p)
        return LemmaReport(
            c=self.c,
            n_min=self.n_min,
            n_max=self.n_max,
            violations=tuple(sorted(violations)),
            worst_margin=worst,
        )

    def post_build(self, result: LemmaReport) -> LemmaReport:
        log.info(
            f"c={result.c}, N=[{result.n_min}, {result.n_max}]: 違反 {len(result.violations)} 件"
        )
        return result


def check_lemma1(
    c: int, n_min: Natural, n_max: Natural, cfg: PrimalityConfig = DEFAULT_PRIMALITY
) -> LemmaReport:
    """
    例外:
        InvalidExponent: c < 3
        InvalidRange: 2 <= n_min <= n_max を満たさない
    """
    return LemmaBuilder(c, n_min, n_max, cfg).run()
