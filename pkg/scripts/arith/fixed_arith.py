"""
ファイル名: arith/fixed_arith.py

責務:
- 有向丸め付きの10進固定小数点演算。
    int_root   : floor(x^(1/r))（厳密）
    root_fixed : 固定小数点の r 乗根（Down / Up）
    iter_root  : x^(c^-n) を c 乗根の n 回反復で計算（ガード桁付き）
    pow_fixed  : 二分累乗（各乗算後に同じ向きへ丸め）
- u_n, v_n の近似値と往復検証 B^(c^n) の数値基盤。

設計ポイント:
- Down の結果 ≤ 真値 ≤ Up の結果、がどの段でも成り立つ（すべて単調な演算のため）
- Up は「厳密なら Down、そうでなければ Down + 1ulp」
- c^n 乗根を一度に取らず c 乗根を n 回：仮数が数百万桁になるのを避ける
"""

import math
from typing import Optional

import gmpy2

from configs import GUARD_DIGITS_BASE, POW_EXPONENT_CEILING, Rounding
from cores.entities import FixedDec, Natural
from cores.errors import ExponentTooLarge, InvalidArgument


def guard_digits(depth: int, c: int) -> int:
    """段ごとのガード桁数 g = 10 + ceil(log10(n·c))。"""
    return GUARD_DIGITS_BASE + math.ceil(math.log10(max(depth * c, 1)))


def _check_root_args(x: Natural, r: int) -> None:
    if r < 2:
        raise InvalidArgument(f"root degree must be >= 2, got {r}")
    if x < 0:
        raise InvalidArgument(f"root of a negative value: {x}")


def _iroot(x: Natural, r: int) -> "tuple[int, bool]":
    y, exact = gmpy2.iroot(gmpy2.mpz(x), r)
    return int(y), bool(exact)


def int_root(x: Natural, r: int) -> Natural:
    """
    役割:
        y = floor(x^(1/r))、すなわち y^r ≤ x < (y+1)^r を満たす y を返す。

    例外:
        InvalidArgument: r < 2 または x < 0
    """
    _check_root_args(x, r)
    return _iroot(x, r)[0]


def root_fixed(x: FixedDec, r: int, t_out: int, mode: Rounding) -> FixedDec:
    """
    役割:
        x の r 乗根を小数 t_out 桁で返す。
        Down: y^r ≤ x を満たす最大の t_out 桁値 y
        Up  : Down が厳密ならそれ、そうでなければ Down + 1ulp
    """
    _check_root_args(x.mantissa, r)
    shift = r * t_out - x.frac_digits
    if shift >= 0:
        y, exact = _iroot(x.mantissa * 10**shift, r)
    else:
        q, rem = divmod(x.mantissa, 10**-shift)
        y, exact = _iroot(q, r)
        exact = exact and rem == 0
    if mode is Rounding.UP and not exact:
        y += 1
    return FixedDec(y, t_out)


def iter_root(
    x: Natural,
    c: int,
    depth: int,
    t_out: int,
    mode: Rounding,
    guard: Optional[int] = None,
) -> FixedDec:
    """
    役割:
        x^(c^-depth) を c 乗根の depth 回反復で計算し、小数 t_out 桁で返す。
        各段は t_out + g 桁で mode 方向に丸め、最後に t_out 桁へ同じ向きで丸める。

    引数:
        x: 1 以上の整数
        c: 根の次数（>= 2）
        depth: 反復回数 n（>= 1）
        guard: ガード桁数（省略時 guard_digits(depth, c)）
    """
    if x < 1:
        raise InvalidArgument(f"iter_root requires x >= 1, got {x}")
    if depth < 1:
        raise InvalidArgument(f"iter_root requires depth >= 1, got {depth}")
    g = guard_digits(depth, c) if guard is None else guard
    t_work = t_out + g
    value = FixedDec(x, 0)
    for _ in range(depth):
        value = root_fixed(value, c, t_work, mode)
    return value.rescale(t_out, mode)


def mul_fixed(a: FixedDec, b: FixedDec, t_out: int, mode: Rounding) -> FixedDec:
    product = FixedDec(a.mantissa * b.mantissa, a.frac_digits + b.frac_digits)
    return product.rescale(t_out, mode)


def pow_fixed(
    x: FixedDec,
    e: Natural,
    t_out: int,
    mode: Rounding,
    max_exponent: Natural = POW_EXPONENT_CEILING,
) -> FixedDec:
    """
    役割:
        x^e を二分累乗で計算する。各乗算の後に t_out + g 桁へ mode 方向に丸め、
        最後に t_out 桁へ同じ向きで丸める。

    例外:
        ExponentTooLarge: e > max_exponent（既定 3^40）
        InvalidArgument: e < 0
    """
    if e < 0:
        raise InvalidArgument(f"negative exponent: {e}")
    if e > max_exponent:
        raise ExponentTooLarge(f"exponent {e} exceeds ceiling {max_exponent}")
    t_work = t_out + GUARD_DIGITS_BASE + len(str(e))
    result = FixedDec.from_int(1, t_work)
    base = x.rescale(t_work, mode)
    while e:
        if e & 1:
            result = mul_fixed(result, base, t_work, mode)
        e >>= 1
        if e:
            base = mul_fixed(base, base, t_work, mode)
    return result.rescale(t_out, mode)
