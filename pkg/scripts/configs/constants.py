"""
ファイル名: configs/constants.py

責務:
- プロジェクト全体で使う“値のみ”定数を一元管理
- パスや種別ラベル等は除外（paths.py / kind_labels.py）
"""

import os

# ----------------------------
# ログ出力レベル
# ----------------------------
LOG_LEVEL = os.environ.get("MILLSCALE_LOG_LEVEL", "INFO")

# ----------------------------
# 素数判定（primality）
# ----------------------------
TRIAL_DIVISION_BOUND = 10**4
DETERMINISTIC_THRESHOLD = 2**64
EXTRA_MR_ROUNDS = 16
RNG_SEED = 0

# 先頭12素数を底にした強擬素数判定は n < 318665857834031151167461 で決定的
# （この値自体が底 2..37 すべての強擬素数）
DETERMINISTIC_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
DETERMINISTIC_WITNESS_LIMIT = 318665857834031151167461

# エラトステネスの篩で扱える上限（ネイティブ語長）
SIEVE_NATIVE_LIMIT = 2**32

# ----------------------------
# 素数探索（prime_search）
# ----------------------------
SEARCH_BLOCK_MIN = 1024
SEARCH_BLOCK_LOG_FACTOR = 4

# ----------------------------
# 固定小数点演算（fixed_arith）
# ----------------------------
GUARD_DIGITS_BASE = 10
POW_EXPONENT_CEILING = 3**40

# ----------------------------
# 定数の桁認証（constant_digits）
# ----------------------------
INTERVAL_EXTRA_DIGITS = 10
EXTRA_REQUESTED_DIGITS = 20
GUARD_RETRY_LIMIT = 2

# ----------------------------
# CLI デフォルト
# ----------------------------
DEFAULT_C = 3
DEFAULT_SEED = 2
DEFAULT_TERMS = 7
DEFAULT_DIGITS = 600
DEFAULT_LEMMA_N_MIN = 2
DEFAULT_LEMMA_N_MAX = 1000
DEFAULT_BENCH_K = (1, 2)

# ----------------------------
# 出力フォーマット
# ----------------------------
DIGITS_PER_LINE = 50
JSON_INDENT = 2

# ----------------------------
# 終了コード
# ----------------------------
EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2
