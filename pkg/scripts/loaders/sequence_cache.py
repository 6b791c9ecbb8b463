"""
ファイル名: loaders/sequence_cache.py

責務:
- 素数列の再開用キャッシュ（JSON）を読み書きするクラス（SequenceCache）。
    {"c": int, "variant": "ceiling"|"floor", "seed": "2", "terms": ["2", "7", ...], "statuses": [...]}
- 読込時は条件（c, variant, seed）の一致のみ確認し、各項の検証は SequenceBuilder に任せる。

設計・運用指針:
- 巨大整数は10進文字列で保持
- 書込は一時ファイル経由で置き換え（途中終了で壊れたキャッシュを残さない）
- 読込失敗は log.critical の上で CacheInvalid / IoError を送出
"""

import os
from typing import Tuple

from configs import log_cache_selection
from cores.entities import MillsConfig, Natural, SequenceReport, to_decimal
from cores.errors import CacheInvalid, InvalidArgument, IoError
from emitters import dump_document, status_to_dict
from parsers import CachedSequence, parse_cache
from utils import setup_logging

log = setup_logging("SequenceCache")


class SequenceCache:
    """
    役割:
        1つのキャッシュファイルに対する読込・保存。
    属性:
        path (str): キャッシュファイルパス
    """

    def __init__(self, path: str) -> None:
        self.path = path

    def exists(self) -> bool:
        return os.path.exists(self.path)

    def read(self) -> CachedSequence:
        """
        役割:
            キャッシュファイルをパースして返す。
        例外:
            IoError: 読込失敗
            CacheInvalid: 書式不正
        """
        try:
            with open(self.path, encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            log.critical(f"[{self.path}] CRITICAL: Failed to open/read cache ({e})")
            raise IoError(f"cannot read cache {self.path}: {e}") from e
        try:
            return parse_cache(text)
        except InvalidArgument as e:
            log.critical(f"[{self.path}] CRITICAL: Malformed cache ({e})")
            raise CacheInvalid(f"{self.path}: {e}") from e

    def load(self, cfg: MillsConfig) -> Tuple[Natural, ...]:
        """
        役割:
            cfg と同じ条件のキャッシュ済み項を返す（ファイルがなければ空）。
        例外:
            CacheInvalid: 条件（c, variant, seed）が一致しない・書式不正
        """
        log.info("=================[キャッシュを読み取り]=========================")
        log.info(log_cache_selection(self.path))
        if not self.exists():
            return ()
        cached = self.read()
        if (cached.c, cached.variant, cached.seed) != (cfg.c, cfg.variant, cfg.seed):
            raise CacheInvalid(
                f"{self.path} holds c={cached.c}, variant={cached.variant.value}, seed={cached.seed}; "
                f"requested c={cfg.c}, variant={cfg.variant.value}, seed={cfg.seed}"
            )
        log.info(f"キャッシュ済み {len(cached.terms)} 項")
        return cached.terms

    def save(self, report: SequenceReport) -> None:
        """
        役割:
            素数列をキャッシュへ書き出す。
        例外:
            IoError: 書込失敗
        """
        doc = {
            "c": report.c,
            "variant": report.variant.value,
            "seed": to_decimal(report.seed),
            "terms": [to_decimal(r.value) for r in report.records],
            "statuses": [status_to_dict(r.status) for r in report.records],
        }
        tmp_path = self.path + ".tmp"
        try:
            directory = os.path.dirname(self.path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(tmp_path, "w", encoding="utf-8", newline="\n") as f:
                f.write(dump_document(doc))
            os.replace(tmp_path, self.path)
        except OSError as e:
            log.critical(f"[{self.path}] CRITICAL: Failed to write cache ({e})")
            raise IoError(f"cannot write cache {self.path}: {e}") from e
        log.info(f"キャッシュへ {len(report.records)} 項を保存: {self.path}")
