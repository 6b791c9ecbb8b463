"""
テスト共通設定。

- main.py と同じく scripts/ を sys.path に入れ、`from configs import ...` 形式の import を可能にする。
- 公表済みの値（p_1..p_7、B の先頭 600 桁）と、ライブラリに依存しない篩オラクルを fixture で提供する。
"""

import os
import sys

import pytest

SCRIPTS_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "scripts")
if SCRIPTS_DIR not in sys.path:
    sys.path.insert(0, SCRIPTS_DIR)

P6 = int("17619999581432728735667120910458586439705503907211069" "6028654438846269")
P7 = int(
    "54703823381492990628407924713718713957740513297193414"
    "21259587335767096542227048457036456872683352033529421007878"
    "29141860830768725102385452609882503551811073140339908096068"
    "8125590506176016285837338837682469"
)
CEILING_PRIMES = (2, 7, 337, 38272739, 56062005704198360319209, P6, P7)

B_600 = "1." + "".join(
    [
        "2405547052", "5201424067", "4695153379", "0034521235", "3396725255",
        "9232034386", "1886622104", "9111642316", "9209174137", "7064313608",
        "3109555650", "9480848158", "9481662421", "8378961303", "7426392535",
        "6658242301", "8524802142", "1960037621", "1464734105", "8229918628",
        "4182439221", "9437396337", "9442594273", "8936874985", "9158491115",
        "7886891108", "4262398559", "2731605607", "5719554304", "2915944781",
        "6278755834", "4774412491", "8125993063", "4590081972", "8945860313",
        "1303247244", "0907981721", "7119324606", "1009855753", "6063847008",
        "6985820925", "6038920740", "0817313213", "1691077511", "3322609476",
        "3239264899", "5703729933", "8452155290", "5152647430", "8960522935",
        "3735771869", "0936560934", "8000430515", "4856069064", "6309177739",
        "2832001365", "6550953673", "1549789328", "9032942357", "7708168137",
    ]
)


def oracle_sieve(limit: int) -> bytearray:
    """素朴なエラトステネスの篩（flags[n] == 1 なら素数）。"""
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return flags


@pytest.fixture(scope="session")
def ceiling_primes():
    return CEILING_PRIMES


@pytest.fixture(scope="session")
def b_digits_600():
    return B_600


@pytest.fixture(scope="session")
def small_sieve():
    return oracle_sieve(20000)


@pytest.fixture(scope="session")
def ceiling_records():
    from builders import build_sequence
    from cores.entities import MillsConfig

    return build_sequence(MillsConfig(c=3, variant="ceiling", seed=2, terms=5))


@pytest.fixture(scope="session")
def seven_term_records():
    from builders import build_sequence
    from cores.entities import MillsConfig

    return build_sequence(MillsConfig(c=3, variant="ceiling", seed=2, terms=7))


@pytest.fixture(scope="session")
def floor_records():
    from builders import build_sequence
    from cores.entities import MillsConfig

    return build_sequence(MillsConfig(c=3, variant="floor", seed=2, terms=5))
