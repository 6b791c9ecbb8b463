"""
責務:
- 定数（A または B）を挟む区間 Interval = [lo, hi] を定義する。
- 構成側（constant_interval）が lo ≤ 真値 ≤ hi を保証し、ここでは lo ≤ hi と桁数一致を検証。
"""

from attrs import frozen

from configs import Rounding
from cores.errors import InvalidArgument
from .fixed_dec_core import FixedDec


@frozen
class Interval:
    """
    役割:
        有向丸めで得た下界 lo・上界 hi の組（小数桁数は等しい）。
    """

    lo: FixedDec
    hi: FixedDec

    def __attrs_post_init__(self) -> None:
        if self.lo.frac_digits != self.hi.frac_digits:
            raise InvalidArgument(
                f"interval bounds differ in precision: {self.lo.frac_digits} vs {self.hi.frac_digits}"
            )
        if self.hi < self.lo:
            raise InvalidArgument(f"empty interval: lo={self.lo} > hi={self.hi}")

    @property
    def frac_digits(self) -> int:
        return self.lo.frac_digits

    @property
    def width(self) -> FixedDec:
        return FixedDec(self.hi.mantissa - self.lo.mantissa, self.frac_digits)

    def truncate(self, t: int) -> "Interval":
        """小数 t 桁へ外向きに丸めた区間（包含関係は保たれる）。"""
        return Interval(self.lo.rescale(t, Rounding.DOWN), self.hi.rescale(t, Rounding.UP))

    def contains(self, value: FixedDec) -> bool:
        return self.lo <= value <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"
