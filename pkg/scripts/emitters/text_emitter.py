"""
ファイル名: emitters/text_emitter.py

責務:
- 人が読むためのテキスト出力。
    値の行（素数列は "n a(n)"、定数は桁文字列）を先に、
    メタデータは "# key: value" 形式で後ろにまとめる。
"""

from functools import singledispatch
from typing import List

from configs import CONSTANT_LABELS
from cores.entities import (
    BenchReport,
    ConstantDigits,
    LemmaReport,
    RoundtripReport,
    SequenceReport,
    to_decimal,
)
from cores.errors import InvalidArgument


def _join(lines: List[str]) -> str:
    return "\n".join(lines) + "\n"


@singledispatch
def emit_text(obj: object) -> str:
    raise InvalidArgument(f"no text form for {type(obj).__name__}")


@emit_text.register
def _(obj: SequenceReport) -> str:
    lines = [f"{r.index} {to_decimal(r.value)}" for r in obj.records]
    lines.append(f"# c: {obj.c}")
    lines.append(f"# variant: {obj.variant.value}")
    lines.append(f"# seed: {to_decimal(obj.seed)}")
    for r in obj.records:
        bounds = "ok" if r.bounds_ok else "violated"
        lines.append(f"# p_{r.index}: {r.decimal_digits} digits, {r.status.label()}, bounds {bounds}")
    return _join(lines)


@emit_text.register
def _(obj: ConstantDigits) -> str:
    lines = [
        obj.digits,
        f"# constant: {CONSTANT_LABELS[obj.variant]}",
        f"# c: {obj.c}",
        f"# variant: {obj.variant.value}",
        f"# seed: {to_decimal(obj.seed)}",
        f"# terms_used: {obj.terms_used}",
        f"# certified_fraction_digits: {obj.certified_fraction_digits}",
        f"# requested_digits: {obj.requested_digits}",
        f"# guard_digits: {obj.guard_digits}",
    ]
    lines.extend(f"# p_{i}: {s.label()}" for i, s in enumerate(obj.statuses, start=1))
    return _join(lines)


@emit_text.register
def _(obj: RoundtripReport) -> str:
    lines = [
        f"{e.index} {e.status.value} {to_decimal(e.expected)} [{to_decimal(e.lower)}, {to_decimal(e.upper)}]"
        for e in obj.entries
    ]
    lines.append(f"# c: {obj.c}")
    lines.append(f"# variant: {obj.variant.value}")
    lines.append(f"# terms_used: {obj.terms_used}")
    lines.append(f"# frac_digits: {obj.frac_digits}")
    lines.append("# nesting: " + " ".join("ok" if flag else "broken" for flag in obj.nesting))
    lines.append(f"# passed: {'yes' if obj.passed else 'no'}")
    return _join(lines)


@emit_text.register
def _(obj: LemmaReport) -> str:
    lines = [f"{'ok' if obj.ok else 'violated'}"]
    lines.append(f"# c: {obj.c}")
    lines.append(f"# range: [{obj.n_min}, {obj.n_max}]")
    lines.append("# violations: " + (" ".join(str(n) for n in obj.violations) or "none"))
    if obj.worst_margin is not None:
        w = obj.worst_margin
        lines.append(
            f"# worst_margin: N={w.n}, prime={to_decimal(w.prime)}, "
            f"slack_low={to_decimal(w.slack_low)}, slack_high={to_decimal(w.slack_high)}"
        )
    return _join(lines)


@emit_text.register
def _(obj: BenchReport) -> str:
    lines = [
        f"{r.k} {r.digits} {to_decimal(r.gap)} {r.stats.candidates_examined} "
        f"{r.stats.sieve_eliminated} {r.stats.mr_tests_run} {r.stats.elapsed:.6f}"
        for r in obj.results
    ]
    lines.append("# columns: k digits gap candidates sieve_eliminated tests elapsed")
    return _join(lines)
