"""
configs/__init__.py

責務:
- configs/サブモジュールから必要な定数・設定をimportし、「from configs import ...」での利用をサポート
"""

from .paths import *
from .constants import *
from .kind_labels import *
from .common_patterns import *
