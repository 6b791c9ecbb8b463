# utils/__init__.py
# main_utils は各層から循環 import になるため含めない

from .logging_utils import setup_logging, set_log_level

__all__ = [
    "setup_logging",
    "set_log_level",
]
