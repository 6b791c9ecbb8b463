# parsers/__init__.py
from parsers.document_parser import (
    load_json,
    parse_cache,
    parse_digit_file,
    parse_document,
    status_from_dict,
)
from parsers.types import CachedSequence, DigitFile

__all__ = [
    "load_json",
    "parse_cache",
    "parse_digit_file",
    "parse_document",
    "status_from_dict",
    "CachedSequence",
    "DigitFile",
]
