"""
ファイル名: builders/roundtrip_builder.py

責務:
- 定数の区間 [lo, hi] から各 P_n を再構成し、構築済みの素数列と照合する。
    Ceiling: ceil(lo^(c^n)) と ceil(hi^(c^n))
    Floor  : floor(lo^(c^n)) と floor(hi^(c^n))
- 両端が一致すれば pass / fail を判定、一致しなければ精度不足として中断する。

最終項（n = terms_used）:
- 区間はその項の定義そのもの（例: Ceiling では lo^(c^k) ≈ P_k - 1, hi^(c^k) ≈ P_k）
  のため両端は一致し得ない。P_n を含み幅 2 以内なら bracket とする
"""

from typing import List, Optional, Sequence

from configs import CheckStatus, Rounding, Variant
from arith import pow_fixed
from cores.entities import ConstantDigits, FixedDec, RoundtripEntry, RoundtripReport, SequenceRecord
from cores.errors import EmptySequence, PrecisionInsufficient, VariantMismatch
from utils import setup_logging
from .base import BuilderBase
from .constant_builder import certify, check_nesting, constant_interval

log = setup_logging("RoundtripBuilder")


def _to_int(value: FixedDec, variant: Variant) -> int:
    return value.ceil() if variant is Variant.CEILING else value.floor()


def _entry(digits: ConstantDigits, record: SequenceRecord) -> RoundtripEntry:
    n, p = record.index, record.value
    t = digits.interval.frac_digits
    e = digits.c**n
    lower = _to_int(pow_fixed(digits.interval.lo, e, t, Rounding.DOWN), digits.variant)
    upper = _to_int(pow_fixed(digits.interval.hi, e, t, Rounding.UP), digits.variant)
    if lower == upper:
        status = CheckStatus.PASS if lower == p else CheckStatus.FAIL
    elif not lower <= p <= upper:
        status = CheckStatus.FAIL
    elif n == digits.terms_used and upper - lower <= 2:
        status = CheckStatus.BRACKET
    else:
        raise PrecisionInsufficient(n, f"[{lower}, {upper}] at {t} fraction digits")
    return RoundtripEntry(index=n, expected=p, lower=lower, upper=upper, status=status)


def roundtrip(digits: ConstantDigits, seq: Sequence[SequenceRecord]) -> RoundtripReport:
    """
    役割:
        digits.interval から n = 1..terms_used の各項を再構成して照合する。
    例外:
        EmptySequence: 照合する項が足りない
        VariantMismatch: 初項が digits の seed と一致しない
        PrecisionInsufficient: n < terms_used で両端が一致しない
    """
    if len(seq) < digits.terms_used or digits.terms_used < 1:
        raise EmptySequence(f"roundtrip needs {digits.terms_used} terms, got {len(seq)}")
    if seq[0].value != digits.seed:
        raise VariantMismatch(f"sequence seed {seq[0].value} differs from constant seed {digits.seed}")
    entries: List[RoundtripEntry] = []
    for record in seq[: digits.terms_used]:
        entry = _entry(digits, record)
        log.debug(f"n={entry.index}: [{entry.lower}, {entry.upper}] {entry.status.value}")
        entries.append(entry)
    return RoundtripReport(
        c=digits.c,
        variant=digits.variant,
        seed=digits.seed,
        terms_used=digits.terms_used,
        frac_digits=digits.interval.frac_digits,
        entries=tuple(entries),
    )


class RoundtripBuilder(BuilderBase[RoundtripReport]):
    """
    役割:
        小数 t 桁の区間を作り、往復検証と入れ子検査をまとめて行うビルダー。
    """

    def __init__(self, seq: Sequence[SequenceRecord], c: int, variant: Variant, t: int) -> None:
        self.seq = list(seq)
        self.c = c
        self.variant = Variant(variant)
        self.t = t
        self.digits: Optional[ConstantDigits] = None

    def pre_build(self) -> None:
        log.info("=================[往復検証]=========================")
        log.info(f"terms={len(self.seq)}, digits={self.t}")

    def build(self) -> RoundtripReport:
        interval = constant_interval(self.seq, self.c, self.variant, self.t)
        self.digits = certify(
            interval,
            self.t,
            c=self.c,
            variant=self.variant,
            seed=self.seq[0].value,
            terms_used=len(self.seq),
            statuses=tuple(r.status for r in self.seq),
        )
        report = roundtrip(self.digits, self.seq)
        nesting = check_nesting(self.seq, self.c, self.variant, self.t)
        return RoundtripReport(
            c=report.c,
            variant=report.variant,
            seed=report.seed,
            terms_used=report.terms_used,
            frac_digits=report.frac_digits,
            entries=report.entries,
            nesting=nesting,
        )

    def post_build(self, result: RoundtripReport) -> RoundtripReport:
        summary = ", ".join(f"{e.index}:{e.status.value}" for e in result.entries)
        log.info(f"判定 {summary} / 入れ子 {sum(result.nesting)}/{len(result.nesting)}")
        if not result.passed:
            log.error("往復検証に失敗しました")
        return result


def verify_roundtrip(seq: Sequence[SequenceRecord], c: int, variant: Variant, t: int) -> RoundtripReport:
    return RoundtripBuilder(seq, c, variant, t).run()
