"""
ファイル名: cores/constructors/make_kuipers_params.py

責務:
- 一般 c に対する指数パラメータ KuipersParams（a = 3c-4, b = 3c-1）を生成する。
- Ingham 型の定数 K から、補題の閾値 N > K^b + 1 を満たす最小の素数を種として返す。

注意:
- K, K' は数値として与えられていない。ingham_seed は利用者が指定した K に対する種を返すだけ
"""

from typing import Tuple

from cores.entities import KuipersParams, Natural, PrimalityConfig, SearchStats
from cores.errors import InvalidArgument, InvalidExponent
from primes import DEFAULT_PRIMALITY, next_prime


def kuipers_params(c: int) -> KuipersParams:
    """
    役割:
        (c, 3c-4, 3c-1) を返す。生成時に c·a+1 = b·(c-1) と 8a ≥ 5b を再検証。
    例外:
        InvalidExponent: c < 3
    """
    if c < 3:
        raise InvalidExponent(f"Kuipers parameters need c >= 3, got {c}")
    return KuipersParams(c=c, a=3 * c - 4, b=3 * c - 1)


def ingham_seed(k: Natural, c: int, cfg: PrimalityConfig = DEFAULT_PRIMALITY) -> Tuple[Natural, SearchStats]:
    """
    役割:
        K^b + 1 より大きい最小の素数（c = 3 なら b = 8）を返す。
    例外:
        InvalidArgument: k < 1
    """
    if k < 1:
        raise InvalidArgument(f"Ingham constant must be >= 1, got {k}")
    params = kuipers_params(c)
    return next_prime(k**params.b + 1, cfg)
