"""
ファイル名: cores/errors.py

責務:
- ライブラリ全体の例外型を定義する。
- CLI はこれらを終了コード（1: 計算中の領域エラー / 2: 使い方の誤り）へ対応付ける。
"""

from typing import Optional


class MillsError(Exception):
    """全例外の基底クラス。"""


class InvalidArgument(MillsError, ValueError):
    pass


class LimitTooLarge(InvalidArgument):
    pass


class InvalidExponent(InvalidArgument):
    pass


class InvalidRange(InvalidArgument):
    pass


class SeedNotPrime(InvalidArgument):
    pass


class ExponentTooLarge(InvalidArgument):
    pass


class VariantMismatch(InvalidArgument):
    pass


class EmptySequence(InvalidArgument):
    pass


class UsageError(MillsError, ValueError):
    """CLI フラグ検証の失敗。"""


class BoundViolation(MillsError, RuntimeError):
    """
    役割:
        挟み込み不等式 (P_n-1)^c+1 < P_{n+1} < P_n^c（床関数版は対応する式）の破れ。
    属性:
        index (int): 破れた項のインデックス（1始まり）
        side (str): "lower" / "upper" / "monotone"
    """

    def __init__(self, index: int, side: str) -> None:
        super().__init__(f"bound violation at index {index} ({side} side)")
        self.index = index
        self.side = side


class NoCommonPrefix(MillsError, RuntimeError):
    pass


class PrecisionInsufficient(MillsError, RuntimeError):
    """
    役割:
        有向丸めした2つの冪が整数をまたぎ、天井/床が一致しない。
        誤りではなく「桁が足りない」ことを示す回復可能なシグナル。
    """

    def __init__(self, index: int, detail: Optional[str] = None) -> None:
        message = f"precision insufficient at index {index}"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)
        self.index = index


class CacheInvalid(MillsError, RuntimeError):
    pass


class IoError(MillsError, OSError):
    pass
