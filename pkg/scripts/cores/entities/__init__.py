# cores/entities/__init__.py

from .natural_core import Natural, decimal_digits, from_decimal, to_decimal
from .fixed_dec_core import FixedDec
from .interval_core import Interval
from .status_core import Composite, PrimalityStatus, ProbablePrime, ProvenPrime
from .record_core import SearchStats, SequenceRecord
from .config_core import MillsConfig, PrimalityConfig
from .report_core import (
    BenchReport,
    BenchResult,
    ConstantDigits,
    KuipersParams,
    LemmaReport,
    RoundtripEntry,
    RoundtripReport,
    SequenceReport,
    WorstMargin,
)
from .command_core import CommandSpec

__all__ = [
    "Natural",
    "decimal_digits",
    "from_decimal",
    "to_decimal",
    "FixedDec",
    "Interval",
    "Composite",
    "PrimalityStatus",
    "ProbablePrime",
    "ProvenPrime",
    "SearchStats",
    "SequenceRecord",
    "MillsConfig",
    "PrimalityConfig",
    "BenchReport",
    "BenchResult",
    "ConstantDigits",
    "KuipersParams",
    "LemmaReport",
    "RoundtripEntry",
    "RoundtripReport",
    "SequenceReport",
    "WorstMargin",
    "CommandSpec",
]
