"""
ファイル名: cores/constructors/make_sequence_record.py

責務:
- 隣接2項の挟み込み不等式を厳密な整数比較で判定し、SequenceRecord を生成する。

不等式:
- Ceiling: (prev-1)^c + 1 < value < prev^c
- Floor:   prev^c < value かつ value + 1 <= (prev+1)^c
"""

from typing import Optional, Tuple

from configs import Variant
from cores.entities import Natural, PrimalityStatus, SearchStats, SequenceRecord, decimal_digits


def check_bounds(prev: Optional[Natural], value: Natural, c: int, variant: Variant) -> Tuple[bool, bool]:
    """
    役割:
        (lower_bound_ok, upper_bound_ok) を返す。prev が None（初項）なら両方 True。
    """
    if prev is None:
        return True, True
    if variant is Variant.CEILING:
        return value > (prev - 1) ** c + 1, value < prev**c
    return value > prev**c, value + 1 <= (prev + 1) ** c


def make_sequence_record(
    index: int,
    value: Natural,
    prev: Optional[Natural],
    status: PrimalityStatus,
    c: int,
    variant: Variant,
    stats: SearchStats = SearchStats(),
) -> SequenceRecord:
    lower_ok, upper_ok = check_bounds(prev, value, c, variant)
    return SequenceRecord(
        index=index,
        value=value,
        status=status,
        lower_bound_ok=lower_ok,
        upper_bound_ok=upper_ok,
        decimal_digits=decimal_digits(value),
        stats=stats,
    )
