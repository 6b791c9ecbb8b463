"""
ファイル名: configs/kind_labels.py

責務:
- 列挙値（変種・判定結果・証明方法・サブコマンド・出力形式）とそのラベルを一元管理。

設計指針:
- JSON/テキスト出力に現れる文字列はすべてここで定義
- Enum 化し、文字列値はそのまま出力に使う
"""

from enum import Enum


class Variant(str, Enum):
    """素数列の変種（天井関数 / 床関数）。"""

    CEILING = "ceiling"
    FLOOR = "floor"


class StatusKind(str, Enum):
    COMPOSITE = "composite"
    PROVEN_PRIME = "proven-prime"
    PROBABLE_PRIME = "probable-prime"


class ProvenMethod(str, Enum):
    TRIAL_DIVISION = "trial-division"
    DETERMINISTIC_WITNESS_SET = "deterministic-witness-set"


class WitnessKind(str, Enum):
    FACTOR = "factor"
    MR_BASE = "mr-base"


class Rounding(str, Enum):
    """有向丸めの向き。Down ≤ 真値 ≤ Up。"""

    DOWN = "down"
    UP = "up"


class BoundSide(str, Enum):
    LOWER = "lower"
    UPPER = "upper"
    MONOTONE = "monotone"


class CheckStatus(str, Enum):
    """往復検証の各インデックスの判定。"""

    PASS = "pass"
    FAIL = "fail"
    BRACKET = "bracket"


# =========================
# CLI サブコマンド・出力形式
# =========================
SUBCOMMANDS = ("sequence", "constant", "verify", "lemma-check", "bench")
OUTPUT_FORMATS = ("text", "json", "bfile")

# bfile は素数列のみ
BFILE_SUBCOMMANDS = ("sequence",)

# 出力文書の種別キー
DOC_KIND_SEQUENCE = "sequence"
DOC_KIND_CONSTANT = "constant"
DOC_KIND_ROUNDTRIP = "roundtrip"
DOC_KIND_LEMMA = "lemma"
DOC_KIND_BENCH = "bench"

# 定数名ラベル
CONSTANT_LABELS = {
    Variant.CEILING: "B",
    Variant.FLOOR: "A",
}
