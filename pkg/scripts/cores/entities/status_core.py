"""
責務:
- 素数判定結果 PrimalityStatus（タグ付き列挙）を定義する。
    Composite {witness?, witness_kind?} / ProvenPrime {method} / ProbablePrime {bpsw, extra_rounds, rng_seed}

設計ポイント:
- is_prime で「素数側（証明済み or 確率的素数）」を一様に判定できる
- Composite の証拠は「自明でない因数」か「Miller-Rabin の底」。再検証は primality.recheck_witness
"""

from typing import ClassVar, Optional, Union

from attrs import field, frozen

from configs import ProvenMethod, StatusKind, WitnessKind
from cores.errors import InvalidArgument
from .natural_core import Natural, require_at_least


@frozen
class Composite:
    witness: Optional[Natural] = None
    witness_kind: Optional[WitnessKind] = None
    kind: ClassVar[StatusKind] = StatusKind.COMPOSITE

    def __attrs_post_init__(self) -> None:
        if (self.witness is None) != (self.witness_kind is None):
            raise InvalidArgument("witness and witness_kind must be given together")

    @property
    def is_prime(self) -> bool:
        return False

    def label(self) -> str:
        if self.witness is None:
            return self.kind.value
        return f"{self.kind.value} ({self.witness_kind.value} {self.witness})"


@frozen
class ProvenPrime:
    method: ProvenMethod
    kind: ClassVar[StatusKind] = StatusKind.PROVEN_PRIME

    @property
    def is_prime(self) -> bool:
        return True

    def label(self) -> str:
        return f"{self.kind.value} ({self.method.value})"


@frozen
class ProbablePrime:
    bpsw: bool = True
    extra_rounds: int = field(default=0, validator=require_at_least(0))
    rng_seed: int = 0
    kind: ClassVar[StatusKind] = StatusKind.PROBABLE_PRIME

    @property
    def is_prime(self) -> bool:
        return True

    def label(self) -> str:
        test = "bpsw" if self.bpsw else "mr"
        return f"{self.kind.value} ({test}+{self.extra_rounds} rounds, rng_seed {self.rng_seed})"


PrimalityStatus = Union[Composite, ProvenPrime, ProbablePrime]
