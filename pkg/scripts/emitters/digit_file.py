"""
ファイル名: emitters/digit_file.py

責務:
- 認証済み桁をファイルへ書き出す。
    本体: "1." + 小数部、1行 50 桁（先頭行は "1." + 50 桁）、末尾改行
    付随: 同名の .json にメタデータ（constant 文書）
- 書込失敗は log.critical の上で IoError に変換して送出。
"""

import os
from typing import List

from configs import DIGITS_PER_LINE, sidecar_path
from cores.entities import ConstantDigits
from cores.errors import IoError
from utils import setup_logging
from .json_emitter import emit_json

log = setup_logging("digit_file")


def format_digit_lines(digits: str, per_line: int = DIGITS_PER_LINE) -> str:
    """
    役割:
        "1.2405..." を先頭行 "1." + per_line 桁、以降 per_line 桁ずつに折り返す。
    """
    whole, _, frac = digits.partition(".")
    if not frac:
        return whole + "\n"
    chunks: List[str] = [frac[i : i + per_line] for i in range(0, len(frac), per_line)]
    chunks[0] = f"{whole}.{chunks[0]}"
    return "\n".join(chunks) + "\n"


def _write(path: str, text: str) -> None:
    try:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        log.critical(f"[{path}] CRITICAL: Failed to write ({e})")
        raise IoError(f"cannot write {path}: {e}") from e


def write_output(path: str, text: str) -> None:
    _write(path, text)


def write_digit_file(digits: ConstantDigits, out_path: str) -> str:
    """
    役割:
        桁ファイルと JSON メタデータを書き出し、メタデータのパスを返す。
    例外:
        IoError: 書込失敗
    """
    meta_path = sidecar_path(out_path)
    if os.path.abspath(meta_path) == os.path.abspath(out_path):
        raise IoError(f"digit file and metadata would share a path: {out_path}")
    log.info("=================[桁ファイルを書き出し]=========================")
    _write(out_path, format_digit_lines(digits.digits))
    _write(meta_path, emit_json(digits))
    log.info(f"{out_path}（{digits.certified_fraction_digits}桁）, {meta_path}")
    return meta_path
