# parsers/types.py

from typing import NamedTuple, Tuple

from configs import Variant
from cores.entities import Natural, PrimalityStatus


class CachedSequence(NamedTuple):
    """
    キャッシュファイルからパースされた素数列（未検証）。
    """

    c: int
    variant: Variant
    seed: Natural
    terms: Tuple[Natural, ...]
    statuses: Tuple[PrimalityStatus, ...]


class DigitFile(NamedTuple):
    """
    桁ファイルからパースされた桁文字列と小数桁数。
    """

    digits: str
    frac_digits: int
