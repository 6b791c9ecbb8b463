# builders/__init__.py

from .base import BuilderBase
from .sequence_builder import SequenceBuilder, build_sequence
from .lemma_builder import LemmaBuilder, check_lemma1
from .constant_builder import (
    ConstantBuilder,
    build_constant,
    certified_prefix,
    certify,
    check_nesting,
    constant_interval,
)
from .roundtrip_builder import RoundtripBuilder, roundtrip, verify_roundtrip
from .bench_builder import BenchBuilder, run_bench

__all__ = [
    "BuilderBase",
    "SequenceBuilder",
    "build_sequence",
    "LemmaBuilder",
    "check_lemma1",
    "ConstantBuilder",
    "build_constant",
    "certified_prefix",
    "certify",
    "check_nesting",
    "constant_interval",
    "RoundtripBuilder",
    "roundtrip",
    "verify_roundtrip",
    "BenchBuilder",
    "run_bench",
]
