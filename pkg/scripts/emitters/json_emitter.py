"""
ファイル名: emitters/json_emitter.py

責務:
- 各レポート型を「kind」キー付きの JSON 文書（dict）へ変換する。
- 素数・定数の値など大きくなり得る整数はすべて10進文字列で出力する。
  添字・件数・指数などの小さな整数は JSON の数値のまま。

設計ポイント:
- parsers/document_parser.py と対になる（emit → parse → emit がバイト一致）
- 派生値（ok / passed / label / decimal_digits）は読み手向けに出力し、読込時は再計算
"""

import json
from functools import singledispatch
from typing import Any, Dict

from configs import (
    CONSTANT_LABELS,
    DOC_KIND_BENCH,
    DOC_KIND_CONSTANT,
    DOC_KIND_LEMMA,
    DOC_KIND_ROUNDTRIP,
    DOC_KIND_SEQUENCE,
    JSON_INDENT,
)
from cores.entities import (
    BenchReport,
    Composite,
    ConstantDigits,
    LemmaReport,
    PrimalityStatus,
    ProbablePrime,
    ProvenPrime,
    RoundtripReport,
    SearchStats,
    SequenceRecord,
    SequenceReport,
    to_decimal,
)
from cores.errors import InvalidArgument

Document = Dict[str, Any]


def status_to_dict(status: PrimalityStatus) -> Document:
    doc: Document = {"kind": status.kind.value}
    if isinstance(status, Composite):
        doc["witness"] = None if status.witness is None else to_decimal(status.witness)
        doc["witness_kind"] = None if status.witness_kind is None else status.witness_kind.value
    elif isinstance(status, ProvenPrime):
        doc["method"] = status.method.value
    elif isinstance(status, ProbablePrime):
        doc["bpsw"] = status.bpsw
        doc["extra_rounds"] = status.extra_rounds
        doc["rng_seed"] = status.rng_seed
    return doc


def stats_to_dict(stats: SearchStats) -> Document:
    return {
        "candidates_examined": stats.candidates_examined,
        "sieve_eliminated": stats.sieve_eliminated,
        "mr_tests_run": stats.mr_tests_run,
        "elapsed": stats.elapsed,
    }


def record_to_dict(record: SequenceRecord) -> Document:
    return {
        "index": record.index,
        "value": to_decimal(record.value),
        "decimal_digits": record.decimal_digits,
        "status": status_to_dict(record.status),
        "lower_bound_ok": record.lower_bound_ok,
        "upper_bound_ok": record.upper_bound_ok,
        "stats": stats_to_dict(record.stats),
    }


@singledispatch
def to_document(obj: object) -> Document:
    """
    役割:
        レポート型を JSON 文書（dict）へ変換する。
    例外:
        InvalidArgument: 未対応の型
    """
    raise InvalidArgument(f"no JSON document for {type(obj).__name__}")


@to_document.register
def _(obj: SequenceReport) -> Document:
    return {
        "kind": DOC_KIND_SEQUENCE,
        "c": obj.c,
        "variant": obj.variant.value,
        "seed": to_decimal(obj.seed),
        "terms": [record_to_dict(r) for r in obj.records],
    }


@to_document.register
def _(obj: ConstantDigits) -> Document:
    return {
        "kind": DOC_KIND_CONSTANT,
        "label": CONSTANT_LABELS[obj.variant],
        "c": obj.c,
        "variant": obj.variant.value,
        "seed": to_decimal(obj.seed),
        "terms_used": obj.terms_used,
        "requested_digits": obj.requested_digits,
        "certified_fraction_digits": obj.certified_fraction_digits,
        "guard_digits": obj.guard_digits,
        "digits": obj.digits,
        "interval": {"lo": str(obj.interval.lo), "hi": str(obj.interval.hi)},
        "statuses": [status_to_dict(s) for s in obj.statuses],
    }


@to_document.register
def _(obj: RoundtripReport) -> Document:
    return {
        "kind": DOC_KIND_ROUNDTRIP,
        "c": obj.c,
        "variant": obj.variant.value,
        "seed": to_decimal(obj.seed),
        "terms_used": obj.terms_used,
        "frac_digits": obj.frac_digits,
        "passed": obj.passed,
        "entries": [
            {
                "index": e.index,
                "expected": to_decimal(e.expected),
                "lower": to_decimal(e.lower),
                "upper": to_decimal(e.upper),
                "status": e.status.value,
            }
            for e in obj.entries
        ],
        "nesting": list(obj.nesting),
    }


@to_document.register
def _(obj: LemmaReport) -> Document:
    worst = obj.worst_margin
    return {
        "kind": DOC_KIND_LEMMA,
        "c": obj.c,
        "n_min": obj.n_min,
        "n_max": obj.n_max,
        "ok": obj.ok,
        "violations": list(obj.violations),
        "worst_margin": None
        if worst is None
        else {
            "n": worst.n,
            "prime": to_decimal(worst.prime),
            "slack_low": to_decimal(worst.slack_low),
            "slack_high": to_decimal(worst.slack_high),
        },
    }


@to_document.register
def _(obj: BenchReport) -> Document:
    return {
        "kind": DOC_KIND_BENCH,
        "results": [
            {"k": r.k, "digits": r.digits, "gap": to_decimal(r.gap), "stats": stats_to_dict(r.stats)}
            for r in obj.results
        ],
    }


def dump_document(doc: Document) -> str:
    return json.dumps(doc, indent=JSON_INDENT, ensure_ascii=False) + "\n"


def emit_json(obj: object) -> str:
    return dump_document(to_document(obj))
