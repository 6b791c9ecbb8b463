"""
責務:
- 任意精度の非負整数 Natural（Python int）と、その10進文字列との相互変換を定義。
- エンティティ共通の検証関数（下限チェック）もここに置く。

設計指針:
- Natural は int の別名。丸めは一切行わない。
- JSON・キャッシュでは巨大整数をすべて10進文字列で保持する。
"""

from typing import Any, Callable

import gmpy2

from configs import DECIMAL_PATTERN
from cores.errors import InvalidArgument

Natural = int


def to_decimal(value: Natural) -> str:
    """
    役割:
        Natural を10進文字列へ変換する。
    例外:
        InvalidArgument: 負数
    """
    if value < 0:
        raise InvalidArgument(f"Natural must be non-negative: {value}")
    return gmpy2.mpz(value).digits(10)


def from_decimal(text: str) -> Natural:
    """
    役割:
        10進文字列を Natural へ変換する（先頭ゼロ・符号・空白は不可）。
        to_decimal との往復は恒等。
    例外:
        InvalidArgument: 書式不正
    """
    if not isinstance(text, str) or not DECIMAL_PATTERN.match(text):
        raise InvalidArgument(f"not a canonical decimal string: {text!r}")
    return int(gmpy2.mpz(text))


def decimal_digits(value: Natural) -> int:
    """10進桁数（巨大整数でも str() の桁数上限に掛からない）。"""
    return len(to_decimal(value))


def require_at_least(minimum: int) -> Callable[[Any, Any, Any], None]:
    """attrs 用バリデータ：値が minimum 以上の int であること。"""

    def _check(instance: Any, attribute: Any, value: Any) -> None:
        if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
            raise InvalidArgument(
                f"{type(instance).__name__}.{attribute.name} must be an integer >= {minimum}, got {value!r}"
            )

    return _check
