# arith/__init__.py

from .fixed_arith import guard_digits, int_root, iter_root, mul_fixed, pow_fixed, root_fixed

__all__ = [
    "guard_digits",
    "int_root",
    "iter_root",
    "mul_fixed",
    "pow_fixed",
    "root_fixed",
]
