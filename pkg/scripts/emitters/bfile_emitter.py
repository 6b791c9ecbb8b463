"""
ファイル名: emitters/bfile_emitter.py

責務:
- 素数列を b-file 形式（"n a(n)" の行、n は 1 始まりの昇順、ヘッダなし）で出力する。
"""

from cores.entities import SequenceReport, to_decimal
from cores.errors import InvalidArgument


def emit_bfile(obj: object) -> str:
    """
    例外:
        InvalidArgument: 素数列以外
    """
    if not isinstance(obj, SequenceReport):
        raise InvalidArgument(f"b-file output is only defined for sequences, got {type(obj).__name__}")
    return "".join(f"{r.index} {to_decimal(r.value)}\n" for r in obj.records)
