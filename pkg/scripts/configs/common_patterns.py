# scripts/configs/common_patterns.py

import re

# 非負整数の10進文字列（キャッシュ・JSON内の巨大整数）
DECIMAL_PATTERN = re.compile(r"^(0|[1-9]\d*)\Z")

# 固定小数点の10進表記（例: 1.24055）
FIXED_DECIMAL_PATTERN = re.compile(r"^(0|[1-9]\d*)(?:\.(\d+))?\Z")

# 桁ファイルの各行
DIGIT_LINE_PATTERN = re.compile(r"^(?:\d+\.)?\d+\Z")
