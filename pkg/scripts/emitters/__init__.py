# emitters/__init__.py

from .json_emitter import dump_document, emit_json, status_to_dict, to_document
from .text_emitter import emit_text
from .bfile_emitter import emit_bfile
from .digit_file import format_digit_lines, write_digit_file, write_output
from .emit import emit

__all__ = [
    "dump_document",
    "emit_json",
    "status_to_dict",
    "to_document",
    "emit_text",
    "emit_bfile",
    "format_digit_lines",
    "write_digit_file",
    "write_output",
    "emit",
]
