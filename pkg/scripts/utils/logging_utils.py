"""
ロギングユーティリティ
- プロジェクト全体で使う logging.Logger のセットアップ関数を提供
- 全ロガーは親ロガー "millscale" の子として作り、ハンドラ・レベルは親で一元管理
- LOG_LEVEL は config（環境変数 MILLSCALE_LOG_LEVEL）から読み込み、CLI の --log-level で上書き可
"""

import logging

try:
    from configs import LOG_LEVEL
except ImportError:
    LOG_LEVEL = "INFO"

ROOT_LOGGER_NAME = "millscale"


def _root_logger() -> logging.Logger:
    root = logging.getLogger(ROOT_LOGGER_NAME)
    if not root.handlers:
        # 出力先は stderr
        handler = logging.StreamHandler()
        formatter = logging.Formatter(
            "[%(levelname)s] %(asctime)s %(name)s: %(message)s", "%Y-%m-%d %H:%M:%S"
        )
        handler.setFormatter(formatter)
        root.addHandler(handler)
        root.setLevel(getattr(logging, LOG_LEVEL.upper(), logging.INFO))
        root.propagate = False
    return root


def setup_logging(name: str = "main") -> logging.Logger:
    """
    指定名のロガー(logging.Logger)をセットアップし返す。

    引数:
        name (str): ロガー名（省略時'main'）
    戻り値:
        logging.Logger: "millscale.<name>" の子ロガー
    """
    _root_logger()
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")


def set_log_level(level: str) -> None:
    """
    全ロガーのレベルを変更する（CLI --log-level 用）。

    例外:
        ValueError: 不明なレベル名
    """
    value = getattr(logging, level.upper(), None)
    if not isinstance(value, int):
        raise ValueError(f"不明なログレベル: {level}")
    _root_logger().setLevel(value)
