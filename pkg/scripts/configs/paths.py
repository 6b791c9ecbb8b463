"""
ファイル名: configs/paths.py

責務:
- キャッシュ・出力など“ファイル/ディレクトリパス”の定数を一元管理
- 環境変数 MILLSCALE_CACHE によるキャッシュ位置の上書きもここで解決

設計指針:
- 値・分類定数は constants.py / kind_labels.py へ分離
- ディレクトリ構成変更時はこの1ファイルを修正すればよい構造とする
"""

import os
from typing import Optional

# =======================
# パス基本定義
# =======================
PROJECT_DIR = os.path.dirname(os.path.abspath(__file__))
ROOT_DIR = os.path.normpath(os.path.join(PROJECT_DIR, "../../"))
DATA_DIR = os.path.join(ROOT_DIR, "data")
DEFAULT_CACHE_DIR = os.path.join(DATA_DIR, "cache")

# =======================
# 環境変数
# =======================
CACHE_ENV_VAR = "MILLSCALE_CACHE"

# =======================
# 共通ファイル名
# =======================
CACHE_FILE_TEMPLATE = "mills-c{c}-{variant}-s{seed}.json"
SIDECAR_SUFFIX = ".json"


def cache_dir() -> str:
    """
    役割:
        キャッシュディレクトリを返す。環境変数が設定されていればそちらを優先。
    """
    return os.environ.get(CACHE_ENV_VAR) or DEFAULT_CACHE_DIR


def default_cache_path(c: int, variant: str, seed: int) -> str:
    """
    役割:
        (c, variant, seed) ごとの標準キャッシュファイルパスを返す。
    """
    name = CACHE_FILE_TEMPLATE.format(c=c, variant=variant, seed=seed)
    return os.path.join(cache_dir(), name)


def sidecar_path(out_path: str) -> str:
    """桁ファイルに対応するメタデータJSONのパス。"""
    root, _ = os.path.splitext(out_path)
    return root + SIDECAR_SUFFIX


# =======================
# ログ関数
# =======================
def log_cache_selection(path: Optional[str]) -> str:
    """
    指定キャッシュパス情報をログ出力用に整形。
    """
    if path is None:
        return "キャッシュ：なし"
    exists = "既存" if os.path.exists(path) else "新規"
    return f"キャッシュ：{path}（{exists}）"
