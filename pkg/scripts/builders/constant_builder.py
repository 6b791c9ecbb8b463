"""
ファイル名: builders/constant_builder.py

責務:
- 構築済みの素数列から定数（Ceiling → B, Floor → A）を挟む区間を計算する。
    Ceiling: [ (P_k - 1)^(c^-k) , P_k^(c^-k) ]
    Floor  : [ P_k^(c^-k) , (P_k + 1)^(c^-k) ]
- 下界・上界の10進展開が一致する桁までを「認証済み桁」として返す。
- 区間の入れ子（k → k+1 で縮むこと）を検査する。

設計ポイント:
- 下界は Down、上界は Up の有向丸め。区間は常に真の定数を含む
- 要求桁に届かないときはガード桁を倍にして再計算（改善が止まれば打ち切り）
"""

from typing import List, Optional, Sequence, Tuple

from configs import (
    CONSTANT_LABELS,
    DEFAULT_C,
    DEFAULT_SEED,
    EXTRA_REQUESTED_DIGITS,
    GUARD_RETRY_LIMIT,
    INTERVAL_EXTRA_DIGITS,
    Rounding,
    Variant,
)
from arith import guard_digits, iter_root
from cores.constructors import check_bounds
from cores.entities import ConstantDigits, FixedDec, Interval, Natural, PrimalityStatus, SequenceRecord
from cores.errors import EmptySequence, InvalidArgument, NoCommonPrefix, VariantMismatch
from utils import setup_logging
from .base import BuilderBase

log = setup_logging("ConstantBuilder")


def _check_sequence(seq: Sequence[SequenceRecord], c: int, variant: Variant) -> None:
    """
    例外:
        EmptySequence: 項がない
        InvalidArgument: index が 1..k の連番でない
        VariantMismatch: 隣接項が (c, variant) の挟み込み不等式を満たさない
    """
    if not seq:
        raise EmptySequence("constant interval needs at least one term")
    prev: Optional[Natural] = None
    for expected, record in enumerate(seq, start=1):
        if record.index != expected:
            raise InvalidArgument(f"sequence indices must run 1..k, found {record.index} at position {expected}")
        if not all(check_bounds(prev, record.value, c, variant)):
            raise VariantMismatch(f"p_{record.index} does not follow (c={c}, variant={variant.value})")
        prev = record.value


def constant_interval(
    seq: Sequence[SequenceRecord],
    c: int,
    variant: Variant,
    t: int,
    guard: Optional[int] = None,
) -> Interval:
    """
    役割:
        k = len(seq) 項目 P_k から、小数 t 桁の区間 [lo, hi] を返す。
        lo は Down、hi は Up で丸めるため lo ≤ 定数 ≤ hi。
    """
    if t < 0:
        raise InvalidArgument(f"fraction digits must be >= 0, got {t}")
    variant = Variant(variant)
    _check_sequence(seq, c, variant)
    k = len(seq)
    p = seq[-1].value
    if variant is Variant.CEILING:
        lo_base, hi_base = p - 1, p
    else:
        lo_base, hi_base = p, p + 1
    lo = iter_root(lo_base, c, k, t, Rounding.DOWN, guard)
    hi = iter_root(hi_base, c, k, t, Rounding.UP, guard)
    return Interval(lo, hi)


def certified_prefix(interval: Interval, requested_t: int) -> FixedDec:
    """
    役割:
        floor(lo·10^t) = floor(hi·10^t) となる最大の t ≤ requested_t を探し、
        その共通値を小数 t 桁の FixedDec で返す。
    例外:
        NoCommonPrefix: 整数部すら一致しない
    """
    if requested_t < 0:
        raise InvalidArgument(f"requested digits must be >= 0, got {requested_t}")
    t = requested_t
    a = interval.lo.scaled(t, Rounding.DOWN)
    b = interval.hi.scaled(t, Rounding.DOWN)
    while a != b:
        if t == 0:
            raise NoCommonPrefix(f"bounds disagree in the integer part: {interval}")
        a //= 10
        b //= 10
        t -= 1
    return FixedDec(a, t)


def certify(
    interval: Interval,
    requested_t: int,
    *,
    c: int = DEFAULT_C,
    variant: Variant = Variant.CEILING,
    seed: Natural = DEFAULT_SEED,
    terms_used: int = 1,
    guard: int = 0,
    statuses: Tuple[PrimalityStatus, ...] = (),
) -> ConstantDigits:
    """
    役割:
        区間から認証済み桁を取り出し ConstantDigits にまとめる。
        キーワード引数は由来情報（出力メタデータ用）。
    """
    prefix = certified_prefix(interval, requested_t)
    return ConstantDigits(
        c=c,
        variant=Variant(variant),
        seed=seed,
        terms_used=terms_used,
        certified_fraction_digits=prefix.frac_digits,
        digits=str(prefix),
        interval=interval,
        requested_digits=requested_t,
        guard_digits=guard,
        statuses=tuple(statuses),
    )


def check_nesting(seq: Sequence[SequenceRecord], c: int, variant: Variant, t: int) -> Tuple[bool, ...]:
    """
    役割:
        k = 1..K-1 について、k+1 項の区間が k 項の区間に（1ulp の丸め誤差込みで）
        含まれるかを返す。
    """
    intervals = [constant_interval(seq[:k], c, variant, t) for k in range(1, len(seq) + 1)]
    flags: List[bool] = []
    for outer, inner in zip(intervals, intervals[1:]):
        slack = outer.lo.ulp.mantissa
        flags.append(
            outer.lo.mantissa <= inner.lo.mantissa + slack and inner.hi.mantissa <= outer.hi.mantissa + slack
        )
    return tuple(flags)


class ConstantBuilder(BuilderBase[ConstantDigits]):
    """
    役割:
        素数列から定数の認証済み桁を構築するビルダー。
    属性:
        requested_t: 要求小数桁（省略時は P_k の桁数 + 20）
    """

    def __init__(
        self,
        seq: Sequence[SequenceRecord],
        c: int,
        variant: Variant,
        seed: Optional[Natural] = None,
        requested_t: Optional[int] = None,
    ) -> None:
        self.seq = list(seq)
        self.c = c
        self.variant = Variant(variant)
        self.seed = seed
        self.requested_t = requested_t

    def pre_build(self) -> None:
        log.info(f"=================[定数 {CONSTANT_LABELS[self.variant]} の桁を認証]=========================")
        _check_sequence(self.seq, self.c, self.variant)
        if self.seed is None:
            self.seed = self.seq[0].value
        if self.requested_t is None:
            self.requested_t = self.seq[-1].decimal_digits + EXTRA_REQUESTED_DIGITS
        log.info(f"terms={len(self.seq)}, requested={self.requested_t}")

    def build(self) -> ConstantDigits:
        assert self.requested_t is not None and self.seed is not None
        k = len(self.seq)
        t_interval = self.requested_t + INTERVAL_EXTRA_DIGITS
        guard = guard_digits(k, self.c)
        best: Optional[ConstantDigits] = None
        for _ in range(GUARD_RETRY_LIMIT + 1):
            interval = constant_interval(self.seq, self.c, self.variant, t_interval, guard)
            digits = certify(
                interval,
                self.requested_t,
                c=self.c,
                variant=self.variant,
                seed=self.seed,
                terms_used=k,
                guard=guard,
                statuses=tuple(r.status for r in self.seq),
            )
            log.debug(f"guard={guard}: 認証桁 {digits.certified_fraction_digits}")
            if best is not None and digits.certified_fraction_digits <= best.certified_fraction_digits:
                break
            best = digits
            if best.certified_fraction_digits >= self.requested_t:
                break
            guard *= 2
        assert best is not None
        return best

    def post_build(self, result: ConstantDigits) -> ConstantDigits:
        if result.certified_fraction_digits < result.requested_digits:
            log.warning(
                f"認証桁 {result.certified_fraction_digits} < 要求 {result.requested_digits}"
                "（項数が不足。--terms を増やしてください）"
            )
        log.info(f"{CONSTANT_LABELS[self.variant]} ≈ {result.digits[:22]}…（{result.certified_fraction_digits}桁）")
        return result


def build_constant(
    seq: Sequence[SequenceRecord],
    c: int,
    variant: Variant,
    requested_t: Optional[int] = None,
) -> ConstantDigits:
    return ConstantBuilder(seq, c, variant, requested_t=requested_t).run()
