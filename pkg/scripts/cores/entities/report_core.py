"""
責務:
- 計算結果のレポート型を定義する。
    KuipersParams / WorstMargin / LemmaReport / ConstantDigits /
    RoundtripEntry / RoundtripReport / BenchResult / SequenceReport / BenchReport

設計ポイント:
- いずれも不変（frozen attrs）。出力（emitters）と再読込（parsers）の単位になる
"""

from typing import Optional, Tuple

from attrs import frozen

from configs import CheckStatus, Variant
from cores.errors import InvalidExponent
from .fixed_dec_core import FixedDec
from .interval_core import Interval
from .natural_core import Natural
from .record_core import SearchStats, SequenceRecord
from .status_core import PrimalityStatus


@frozen
class KuipersParams:
    """
    役割:
        一般 c に対する Ingham 型指数パラメータ a = 3c-4, b = 3c-1。
        c·a + 1 = b·(c-1) と 8a ≥ 5b（a/b ≥ 5/8）を生成時に再検証する。
    """

    c: int
    a: int
    b: int

    def __attrs_post_init__(self) -> None:
        if self.c * self.a + 1 != self.b * (self.c - 1):
            raise InvalidExponent(f"identity c*a+1 = b*(c-1) fails for c={self.c}")
        if 8 * self.a < 5 * self.b:
            raise InvalidExponent(f"a/b >= 5/8 fails for c={self.c}")


@frozen
class WorstMargin:
    n: Natural
    prime: Natural
    slack_low: Natural
    slack_high: Natural


@frozen
class LemmaReport:
    """
    役割:
        区間 ((N-1)^c+1, N^c) に素数が存在するかの走査結果。
    属性:
        violations: 証人素数が見つからなかった N（昇順）
        worst_margin: slack_low 最小の N
    """

    c: int
    n_min: Natural
    n_max: Natural
    violations: Tuple[Natural, ...]
    worst_margin: Optional[WorstMargin]

    @property
    def ok(self) -> bool:
        return not self.violations


@frozen
class ConstantDigits:
    """
    役割:
        A（床関数版）または B（天井関数版）の認証済み10進桁と、その由来。
    属性:
        digits: "1." + 認証済み t* 桁
        interval: 桁の根拠となった区間
        statuses: 使用した各項の素数判定結果
    """

    c: int
    variant: Variant
    seed: Natural
    terms_used: int
    certified_fraction_digits: int
    digits: str
    interval: Interval
    requested_digits: int
    guard_digits: int
    statuses: Tuple[PrimalityStatus, ...] = ()

    @property
    def value(self) -> FixedDec:
        return FixedDec.parse(self.digits)


@frozen
class RoundtripEntry:
    """
    属性:
        expected: P_n
        lower / upper: 下界・上界の c^n 乗を天井（Ceiling）または床（Floor）で整数化した値
        status: pass / fail / bracket（最終項は区間の定義そのもの）
    """

    index: int
    expected: Natural
    lower: Natural
    upper: Natural
    status: CheckStatus


@frozen
class RoundtripReport:
    c: int
    variant: Variant
    seed: Natural
    terms_used: int
    frac_digits: int
    entries: Tuple[RoundtripEntry, ...]
    nesting: Tuple[bool, ...] = ()

    @property
    def passed(self) -> bool:
        return all(e.status is not CheckStatus.FAIL for e in self.entries) and all(self.nesting)


@frozen
class BenchResult:
    """
    属性:
        k: 規模パラメータ（x = 10^(10^k)）
        digits: x の桁数
        gap: x - 見つかった素数
    """

    k: int
    digits: int
    gap: Natural
    stats: SearchStats


@frozen
class SequenceReport:
    """
    役割:
        構築済み素数列とその構築条件（出力・キャッシュの単位）。
    """

    c: int
    variant: Variant
    seed: Natural
    records: Tuple[SequenceRecord, ...]


@frozen
class BenchReport:
    results: Tuple[BenchResult, ...]
