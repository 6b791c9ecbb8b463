# cores/constructors/__init__.py

from .make_kuipers_params import ingham_seed, kuipers_params
from .make_sequence_record import check_bounds, make_sequence_record

__all__ = [
    "ingham_seed",
    "kuipers_params",
    "check_bounds",
    "make_sequence_record",
]
