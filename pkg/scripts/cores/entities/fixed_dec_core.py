"""
責務:
- 10進固定小数点値 FixedDec（整数仮数 + 小数桁数 t）を定義する。値 = mantissa / 10^t。
- 有向丸めによる桁数変換（rescale）、天井・床、厳密比較を提供。

設計ポイント:
- 2進浮動小数点を一切経由しない
- 比較は桁数を揃えた整数比較（t が等しければ仮数の比較そのもの）
- 1.0 と 1.00 は等しい（値の等価）
"""

from functools import total_ordering
from typing import Tuple

from attrs import field, frozen
from typing_extensions import Self

from configs import FIXED_DECIMAL_PATTERN, Rounding
from cores.errors import InvalidArgument
from .natural_core import Natural, from_decimal, require_at_least, to_decimal


def _div_round(numerator: int, denominator: int, mode: Rounding) -> int:
    if mode is Rounding.DOWN:
        return numerator // denominator
    return -(-numerator // denominator)


@total_ordering
@frozen(eq=False)
class FixedDec:
    """
    役割:
        10進固定小数点の非負値。
    属性:
        mantissa (Natural): 整数仮数
        frac_digits (int): 小数桁数 t
    """

    mantissa: Natural = field(validator=require_at_least(0))
    frac_digits: int = field(default=0, validator=require_at_least(0))

    @classmethod
    def from_int(cls, value: Natural, frac_digits: int = 0) -> Self:
        return cls(value * 10**frac_digits, frac_digits)

    @classmethod
    def parse(cls, text: str) -> Self:
        """
        役割:
            "1.24055" 形式の文字列を FixedDec に変換（小数桁数は表記どおり）。
        例外:
            InvalidArgument: 書式不正
        """
        m = FIXED_DECIMAL_PATTERN.match(text)
        if not m:
            raise InvalidArgument(f"not a fixed decimal: {text!r}")
        frac = m.group(2) or ""
        return cls(from_decimal((m.group(1) + frac).lstrip("0") or "0"), len(frac))

    @property
    def ulp(self) -> "FixedDec":
        return FixedDec(1, self.frac_digits)

    def scaled(self, t: int, mode: Rounding = Rounding.DOWN) -> int:
        """
        役割:
            value·10^t を mode 方向に整数へ丸めて返す（Down=床, Up=天井）。
        """
        if t >= self.frac_digits:
            return self.mantissa * 10 ** (t - self.frac_digits)
        return _div_round(self.mantissa, 10 ** (self.frac_digits - t), mode)

    def rescale(self, t: int, mode: Rounding = Rounding.DOWN) -> "FixedDec":
        return FixedDec(self.scaled(t, mode), t)

    def floor(self) -> Natural:
        return self.scaled(0, Rounding.DOWN)

    def ceil(self) -> Natural:
        return self.scaled(0, Rounding.UP)

    def _aligned(self, other: "FixedDec") -> Tuple[int, int]:
        t = max(self.frac_digits, other.frac_digits)
        return self.scaled(t), other.scaled(t)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FixedDec):
            return NotImplemented
        a, b = self._aligned(other)
        return a == b

    def __lt__(self, other: "FixedDec") -> bool:
        if not isinstance(other, FixedDec):
            return NotImplemented
        a, b = self._aligned(other)
        return a < b

    def __hash__(self) -> int:
        m, t = self.mantissa, self.frac_digits
        while t > 0 and m % 10 == 0:
            m //= 10
            t -= 1
        return hash((m, t))

    def __str__(self) -> str:
        if self.frac_digits == 0:
            return to_decimal(self.mantissa)
        whole, frac = divmod(self.mantissa, 10**self.frac_digits)
        return f"{to_decimal(whole)}.{to_decimal(frac).rjust(self.frac_digits, '0')}"

    def __repr__(self) -> str:
        return f"FixedDec({self})"
