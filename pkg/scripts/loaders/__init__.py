from .sequence_cache import SequenceCache

__all__ = [
    "SequenceCache",
]
