"""
ファイル名: parsers/document_parser.py

責務:
- emitters/json_emitter.py が出力した JSON 文書を「kind」キーで判別し、レポート型へ戻す。
- キャッシュファイル（c, variant, seed, terms, statuses）を CachedSequence へパースする。
- 桁ファイル（"1." + 50桁/行）を桁文字列へ戻す。

設計ポイント:
- 大きな整数は10進文字列で受け取り from_decimal で変換（桁数制限なし）
- 派生値（ok / passed / label / decimal_digits）は読み捨て、エンティティ側で再計算
- 書式の誤りはすべて InvalidArgument
"""

import json
from typing import Any, Callable, Dict, List, Union

from configs import (
    DIGIT_LINE_PATTERN,
    DOC_KIND_BENCH,
    DOC_KIND_CONSTANT,
    DOC_KIND_LEMMA,
    DOC_KIND_ROUNDTRIP,
    DOC_KIND_SEQUENCE,
    CheckStatus,
    ProvenMethod,
    StatusKind,
    Variant,
    WitnessKind,
)
from cores.entities import (
    BenchReport,
    BenchResult,
    Composite,
    ConstantDigits,
    FixedDec,
    Interval,
    LemmaReport,
    PrimalityStatus,
    ProbablePrime,
    ProvenPrime,
    RoundtripEntry,
    RoundtripReport,
    SearchStats,
    SequenceRecord,
    SequenceReport,
    WorstMargin,
    decimal_digits,
    from_decimal,
)
from cores.errors import InvalidArgument
from utils import setup_logging
from .types import CachedSequence, DigitFile

log = setup_logging("documentParser")

Document = Dict[str, Any]


def load_json(text: str) -> Document:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidArgument(f"malformed JSON at line {e.lineno}: {e.msg}") from e
    if not isinstance(doc, dict):
        raise InvalidArgument("JSON document must be an object")
    return doc


def status_from_dict(doc: Document) -> PrimalityStatus:
    """
    役割:
        {"kind": ...} 形式の判定結果を PrimalityStatus へ戻す。
    """
    kind = StatusKind(doc["kind"])
    if kind is StatusKind.COMPOSITE:
        witness = doc.get("witness")
        witness_kind = doc.get("witness_kind")
        return Composite(
            witness=None if witness is None else from_decimal(witness),
            witness_kind=None if witness_kind is None else WitnessKind(witness_kind),
        )
    if kind is StatusKind.PROVEN_PRIME:
        return ProvenPrime(method=ProvenMethod(doc["method"]))
    return ProbablePrime(bpsw=bool(doc["bpsw"]), extra_rounds=int(doc["extra_rounds"]), rng_seed=int(doc["rng_seed"]))


def _stats(doc: Document) -> SearchStats:
    return SearchStats(
        candidates_examined=int(doc["candidates_examined"]),
        sieve_eliminated=int(doc["sieve_eliminated"]),
        mr_tests_run=int(doc["mr_tests_run"]),
        elapsed=float(doc["elapsed"]),
    )


def _record(doc: Document) -> SequenceRecord:
    value = from_decimal(doc["value"])
    return SequenceRecord(
        index=int(doc["index"]),
        value=value,
        status=status_from_dict(doc["status"]),
        lower_bound_ok=bool(doc["lower_bound_ok"]),
        upper_bound_ok=bool(doc["upper_bound_ok"]),
        decimal_digits=decimal_digits(value),
        stats=_stats(doc["stats"]),
    )


def _sequence(doc: Document) -> SequenceReport:
    return SequenceReport(
        c=int(doc["c"]),
        variant=Variant(doc["variant"]),
        seed=from_decimal(doc["seed"]),
        records=tuple(_record(r) for r in doc["terms"]),
    )


def _constant(doc: Document) -> ConstantDigits:
    interval = Interval(FixedDec.parse(doc["interval"]["lo"]), FixedDec.parse(doc["interval"]["hi"]))
    return ConstantDigits(
        c=int(doc["c"]),
        variant=Variant(doc["variant"]),
        seed=from_decimal(doc["seed"]),
        terms_used=int(doc["terms_used"]),
        certified_fraction_digits=int(doc["certified_fraction_digits"]),
        digits=str(doc["digits"]),
        interval=interval,
        requested_digits=int(doc["requested_digits"]),
        guard_digits=int(doc["guard_digits"]),
        statuses=tuple(status_from_dict(s) for s in doc["statuses"]),
    )


def _roundtrip(doc: Document) -> RoundtripReport:
    entries = tuple(
        RoundtripEntry(
            index=int(e["index"]),
            expected=from_decimal(e["expected"]),
            lower=from_decimal(e["lower"]),
            upper=from_decimal(e["upper"]),
            status=CheckStatus(e["status"]),
        )
        for e in doc["entries"]
    )
    return RoundtripReport(
        c=int(doc["c"]),
        variant=Variant(doc["variant"]),
        seed=from_decimal(doc["seed"]),
        terms_used=int(doc["terms_used"]),
        frac_digits=int(doc["frac_digits"]),
        entries=entries,
        nesting=tuple(bool(flag) for flag in doc["nesting"]),
    )


def _lemma(doc: Document) -> LemmaReport:
    worst = doc["worst_margin"]
    return LemmaReport(
        c=int(doc["c"]),
        n_min=int(doc["n_min"]),
        n_max=int(doc["n_max"]),
        violations=tuple(int(n) for n in doc["violations"]),
        worst_margin=None
        if worst is None
        else WorstMargin(
            n=int(worst["n"]),
            prime=from_decimal(worst["prime"]),
            slack_low=from_decimal(worst["slack_low"]),
            slack_high=from_decimal(worst["slack_high"]),
        ),
    )


def _bench(doc: Document) -> BenchReport:
    return BenchReport(
        results=tuple(
            BenchResult(k=int(r["k"]), digits=int(r["digits"]), gap=from_decimal(r["gap"]), stats=_stats(r["stats"]))
            for r in doc["results"]
        )
    )


_PARSERS: Dict[str, Callable[[Document], object]] = {
    DOC_KIND_SEQUENCE: _sequence,
    DOC_KIND_CONSTANT: _constant,
    DOC_KIND_ROUNDTRIP: _roundtrip,
    DOC_KIND_LEMMA: _lemma,
    DOC_KIND_BENCH: _bench,
}


def parse_document(source: Union[str, Document]) -> object:
    """
    役割:
        JSON 文書（文字列または dict）をレポート型へ戻す。
    例外:
        InvalidArgument: 未知の kind、欠けたキー、値の書式不正
    """
    doc = load_json(source) if isinstance(source, str) else source
    kind = doc.get("kind")
    parser = _PARSERS.get(kind) if isinstance(kind, str) else None
    if parser is None:
        raise InvalidArgument(f"unknown document kind: {kind!r}")
    try:
        return parser(doc)
    except InvalidArgument:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidArgument(f"malformed {kind} document: {e!r}") from e


def parse_cache(source: Union[str, Document]) -> CachedSequence:
    """
    役割:
        キャッシュ文書をパースする（値の検証は SequenceBuilder 側で行う）。
    例外:
        InvalidArgument: 書式不正・terms と statuses の件数不一致
    """
    doc = load_json(source) if isinstance(source, str) else source
    try:
        terms = tuple(from_decimal(t) for t in doc["terms"])
        statuses = tuple(status_from_dict(s) for s in doc["statuses"])
        cached = CachedSequence(
            c=int(doc["c"]),
            variant=Variant(doc["variant"]),
            seed=from_decimal(doc["seed"]),
            terms=terms,
            statuses=statuses,
        )
    except InvalidArgument:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidArgument(f"malformed cache document: {e!r}") from e
    if len(cached.terms) != len(cached.statuses):
        raise InvalidArgument(f"cache has {len(cached.terms)} terms but {len(cached.statuses)} statuses")
    return cached


def parse_digit_file(text: str) -> DigitFile:
    """
    役割:
        桁ファイルの行を連結して "1.2405..." 形式の文字列に戻す。
    例外:
        InvalidArgument: 数字以外を含む行
    """
    lines: List[str] = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise InvalidArgument("empty digit file")
    for lineno, line in enumerate(lines[1:], start=2):
        if not DIGIT_LINE_PATTERN.match(line):
            raise InvalidArgument(f"[line {lineno}] not a digit line: {line[:20]!r}")
    digits = "".join(lines)
    value = FixedDec.parse(digits)
    log.debug(f"digit file: {value.frac_digits} fraction digits")
    return DigitFile(digits=digits, frac_digits=value.frac_digits)
