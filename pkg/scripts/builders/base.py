# builders/base.py
import time
from abc import ABC, abstractmethod
from typing import Generic, TypeVar

T = TypeVar("T")


class BuilderBase(ABC, Generic[T]):
    """すべてのビルダーが継承する抽象クラス（pre_build → build → post_build）"""

    elapsed: float = 0.0

    def pre_build(self) -> None:
        """共通の前処理（入力検証・開始ログなど）"""
        pass

    @abstractmethod
    def build(self) -> T:
        """各ビルダーが実装するコア処理"""

    def post_build(self, result: T) -> T:
        """共通の後処理（結果の検証やログ出力など）"""
        return result

    def run(self) -> T:
        started = time.perf_counter()
        self.pre_build()
        result = self.post_build(self.build())
        self.elapsed = time.perf_counter() - started
        return result
