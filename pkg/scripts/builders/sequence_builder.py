"""
ファイル名: builders/sequence_builder.py

責務:
- 素数列 P_1 = seed, P_2, ..., P_terms を構築する。
    Ceiling: P_{n+1} = prev_prime(P_n^c)
    Floor  : P_{n+1} = next_prime(P_n^c)
- 各段で挟み込み不等式を厳密な整数比較で判定し、破れたら BoundViolation で中断する。
- キャッシュから復元した項も、延長前に全項を classify と境界判定で再検証する。

注意:
- 各項は前の項に依存するため構築は逐次
"""

from typing import List, Optional, Sequence, Tuple

from configs import BoundSide, Variant
from cores.constructors import make_sequence_record
from cores.entities import MillsConfig, Natural, PrimalityStatus, SearchStats, SequenceRecord
from cores.errors import BoundViolation, CacheInvalid, InvalidArgument
from primes import classify, next_prime, prev_prime
from utils import setup_logging
from .base import BuilderBase

log = setup_logging("SequenceBuilder")


class SequenceBuilder(BuilderBase[List[SequenceRecord]]):
    """
    役割:
        MillsConfig から SequenceRecord のリストを構築するビルダー。
    属性:
        cfg (MillsConfig): 構築設定
        cached_values (Sequence[Natural]): キャッシュ済みの項（先頭は seed）
        searches (int): 実行した素数探索の回数
    """

    def __init__(self, cfg: MillsConfig, cached_values: Sequence[Natural] = ()) -> None:
        self.cfg = cfg
        self.cached_values = list(cached_values)
        self.searches = 0

    def pre_build(self) -> None:
        log.info("=================[素数列を構築]=========================")
        log.info(
            f"c={self.cfg.c}, variant={self.cfg.variant.value}, seed={self.cfg.seed}, "
            f"terms={self.cfg.terms}, cached={len(self.cached_values)}"
        )
        if self.cached_values and self.cached_values[0] != self.cfg.seed:
            raise CacheInvalid(f"cached seed {self.cached_values[0]} differs from requested seed {self.cfg.seed}")

    def build(self) -> List[SequenceRecord]:
        records = self._restore(self.cached_values[: self.cfg.terms])
        if not records:
            seed = self.cfg.seed
            records.append(self._record(1, seed, None, self._status(seed), SearchStats()))
        while len(records) < self.cfg.terms:
            prev = records[-1].value
            value, stats = self._search(prev**self.cfg.c)
            record = self._record(len(records) + 1, value, prev, self._status(value), stats)
            log.info(
                f"p_{record.index}: {record.decimal_digits}桁 {record.status.label()} "
                f"(候補 {stats.candidates_examined}, 判定 {stats.mr_tests_run}, {stats.elapsed:.2f}s)"
            )
            records.append(record)
        return records

    def post_build(self, result: List[SequenceRecord]) -> List[SequenceRecord]:
        log.info(f"{len(result)}項を構築しました（素数探索 {self.searches} 回）")
        return result

    def _status(self, value: Natural) -> PrimalityStatus:
        return classify(value, self.cfg.primality)

    def _search(self, target: Natural) -> Tuple[Natural, SearchStats]:
        self.searches += 1
        if self.cfg.variant is Variant.CEILING:
            return prev_prime(target, self.cfg.primality)
        return next_prime(target, self.cfg.primality)

    def _record(
        self, index: int, value: Natural, prev: Optional[Natural], status: PrimalityStatus, stats: SearchStats
    ) -> SequenceRecord:
        if not status.is_prime:
            raise InvalidArgument(f"p_{index} = {value} is not prime ({status.label()})")
        record = make_sequence_record(index, value, prev, status, self.cfg.c, self.cfg.variant, stats)
        if not record.lower_bound_ok:
            raise BoundViolation(index, BoundSide.LOWER.value)
        if not record.upper_bound_ok:
            raise BoundViolation(index, BoundSide.UPPER.value)
        if prev is not None and value <= prev:
            raise BoundViolation(index, BoundSide.MONOTONE.value)
        return record

    def _restore(self, values: Sequence[Natural]) -> List[SequenceRecord]:
        if values:
            log.info(f"キャッシュ済み {len(values)} 項を再検証")
        records: List[SequenceRecord] = []
        prev: Optional[Natural] = None
        for index, value in enumerate(values, start=1):
            status = self._status(value)
            if not status.is_prime:
                raise CacheInvalid(f"cached p_{index} is not prime ({status.label()})")
            try:
                records.append(self._record(index, value, prev, status, SearchStats()))
            except BoundViolation as e:
                raise CacheInvalid(f"cached p_{index} violates the {e.side} bound") from e
            prev = value
        return records


def build_sequence(cfg: MillsConfig, cached_values: Sequence[Natural] = ()) -> List[SequenceRecord]:
    """
    役割:
        素数列を構築して返す（キャッシュ済みの項があれば検証して延長）。
    例外:
        BoundViolation: 挟み込み不等式の破れ
        CacheInvalid: キャッシュ項が素数でない・種が一致しない
    """
    return SequenceBuilder(cfg, cached_values).run()
