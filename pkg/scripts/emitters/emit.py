# emitters/emit.py

from typing import Callable, Dict

from cores.errors import InvalidArgument
from .bfile_emitter import emit_bfile
from .json_emitter import emit_json
from .text_emitter import emit_text

_EMITTERS: Dict[str, Callable[[object], str]] = {
    "text": emit_text,
    "json": emit_json,
    "bfile": emit_bfile,
}


def emit(obj: object, fmt: str) -> str:
    """
    役割:
        レポート型を指定形式（text / json / bfile）の文字列にする。
    例外:
        InvalidArgument: 未知の形式、または形式が対象に未定義
    """
    try:
        emitter = _EMITTERS[fmt]
    except KeyError:
        raise InvalidArgument(f"unknown output format: {fmt}") from None
    return emitter(obj)
