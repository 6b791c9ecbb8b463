# primes/__init__.py

from .sieve import small_prime_sieve
from .primality import DEFAULT_PRIMALITY, classify, is_prime, recheck_witness
from .prime_search import next_prime, prev_prime

__all__ = [
    "small_prime_sieve",
    "DEFAULT_PRIMALITY",
    "classify",
    "is_prime",
    "recheck_witness",
    "next_prime",
    "prev_prime",
]
