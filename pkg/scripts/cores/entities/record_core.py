"""
責務:
- 素数探索の統計 SearchStats と、素数列の1項 SequenceRecord を定義する。

設計方針:
- index は 1 始まり（p_1 = 初項）
- 境界フラグは構築側で厳密な整数比較により計算済みの値を保持
"""

from attrs import frozen

from .natural_core import Natural
from .status_core import PrimalityStatus


@frozen
class SearchStats:
    """
    属性:
        candidates_examined: 処理した候補数（奇数のみ）
        sieve_eliminated: 篩で除外した候補数
        mr_tests_run: 判定（classify）を実行した候補数
        elapsed: 経過秒
    """

    candidates_examined: int = 0
    sieve_eliminated: int = 0
    mr_tests_run: int = 0
    elapsed: float = 0.0


@frozen
class SequenceRecord:
    """
    役割:
        素数列の1項と、その判定結果・挟み込み境界チェック結果。
    """

    index: int
    value: Natural
    status: PrimalityStatus
    lower_bound_ok: bool
    upper_bound_ok: bool
    decimal_digits: int
    stats: SearchStats = SearchStats()

    @property
    def bounds_ok(self) -> bool:
        return self.lower_bound_ok and self.upper_bound_ok

    def __repr__(self) -> str:
        return (
            f"SequenceRecord(index={self.index}, digits={self.decimal_digits}, "
            f"status={self.status.label()}, bounds=({self.lower_bound_ok}, {self.upper_bound_ok}))"
        )
