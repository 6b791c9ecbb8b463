import pytest

import builders.sequence_builder as sequence_builder
from builders import SequenceBuilder, build_sequence, check_lemma1
from configs import Variant
from conftest import oracle_sieve
from cores.constructors import check_bounds, ingham_seed, kuipers_params
from cores.entities import MillsConfig, SearchStats, WorstMargin, decimal_digits
from cores.errors import BoundViolation, CacheInvalid, InvalidExponent, InvalidRange, SeedNotPrime
from primes import is_prime


def _trial_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_ceiling_sequence_reproduces_published_primes(seven_term_records, ceiling_primes):
    assert [r.value for r in seven_term_records] == list(ceiling_primes)
    assert [r.index for r in seven_term_records] == [1, 2, 3, 4, 5, 6, 7]
    assert seven_term_records[5].decimal_digits == 69
    assert seven_term_records[6].decimal_digits == 205


def test_ceiling_sequence_satisfies_sandwich(seven_term_records):
    for prev, record in zip(seven_term_records, seven_term_records[1:]):
        assert record.bounds_ok
        assert record.status.is_prime
        p, q = prev.value, record.value
        assert (p - 1) ** 3 + 1 < q < p**3


def test_floor_sequence_matches_oracle(floor_records):
    values = [r.value for r in floor_records]
    assert values[:4] == [2, 11, 1361, 2521008887]
    flags = oracle_sieve(1400)
    assert values[1] == next(n for n in range(9, 1400) if flags[n])
    assert values[2] == next(n for n in range(1332, 1400) if flags[n])
    cube = 1361**3
    assert all(not _trial_is_prime(n) for n in range(cube + 1, values[3]))
    assert _trial_is_prime(values[3])
    for prev, record in zip(floor_records, floor_records[1:]):
        assert prev.value**3 < record.value
        assert record.value + 1 <= (prev.value + 1) ** 3


def test_single_term_echoes_seed():
    records = build_sequence(MillsConfig(terms=1))
    assert len(records) == 1
    assert records[0].value == 2
    assert records[0].bounds_ok


def test_seed_must_be_prime():
    with pytest.raises(SeedNotPrime):
        MillsConfig(seed=4)
    with pytest.raises(SeedNotPrime):
        MillsConfig(seed=1)


def test_exponent_validation():
    with pytest.raises(InvalidExponent):
        MillsConfig(c=2)
    with pytest.raises(InvalidExponent):
        MillsConfig(c=1, allow_c2=True)
    records = build_sequence(MillsConfig(c=2, allow_c2=True, terms=4))
    assert [r.value for r in records] == [2, 3, 7, 47]


def test_general_exponent_sequence():
    records = build_sequence(MillsConfig(c=4, terms=3))
    assert [r.value for r in records[:2]] == [2, 13]
    assert all(r.bounds_ok for r in records)


def test_forced_lower_violation(monkeypatch):
    monkeypatch.setattr(sequence_builder, "prev_prime", lambda x, cfg: (2, SearchStats()))
    with pytest.raises(BoundViolation) as excinfo:
        build_sequence(MillsConfig(terms=3))
    assert excinfo.value.index == 2
    assert excinfo.value.side == "lower"


def test_forced_upper_violation(monkeypatch):
    monkeypatch.setattr(sequence_builder, "prev_prime", lambda x, cfg: (11, SearchStats()))
    with pytest.raises(BoundViolation) as excinfo:
        build_sequence(MillsConfig(terms=2))
    assert (excinfo.value.index, excinfo.value.side) == (2, "upper")


def test_cached_terms_are_reused(monkeypatch, ceiling_primes):
    calls = []
    original = sequence_builder.prev_prime

    def counting(x, cfg):
        calls.append(x)
        return original(x, cfg)

    monkeypatch.setattr(sequence_builder, "prev_prime", counting)
    builder = SequenceBuilder(MillsConfig(terms=5), cached_values=ceiling_primes[:4])
    records = builder.run()
    assert [r.value for r in records] == list(ceiling_primes[:5])
    assert calls == [ceiling_primes[3] ** 3]
    assert builder.searches == 1
    assert records[0].stats == SearchStats()


def test_cached_terms_truncated_to_request(ceiling_primes):
    records = build_sequence(MillsConfig(terms=3), cached_values=ceiling_primes)
    assert [r.value for r in records] == [2, 7, 337]


def test_cached_composite_is_rejected():
    with pytest.raises(CacheInvalid):
        build_sequence(MillsConfig(terms=3), cached_values=(2, 7, 339))


def test_cached_bound_violation_is_rejected():
    with pytest.raises(CacheInvalid):
        build_sequence(MillsConfig(terms=3), cached_values=(2, 7, 211))
    with pytest.raises(CacheInvalid):
        build_sequence(MillsConfig(terms=3), cached_values=(3, 23))


def test_check_bounds():
    assert check_bounds(None, 2, 3, Variant.CEILING) == (True, True)
    assert check_bounds(2, 7, 3, Variant.CEILING) == (True, True)
    assert check_bounds(2, 8, 3, Variant.CEILING) == (True, False)
    assert check_bounds(2, 11, 3, Variant.FLOOR) == (True, True)
    assert check_bounds(2, 7, 3, Variant.FLOOR) == (False, True)
    assert check_bounds(2, 27, 3, Variant.FLOOR) == (True, False)


def test_lemma_small_range():
    report = check_lemma1(3, 2, 200)
    assert report.ok
    assert report.violations == ()
    assert report.worst_margin == WorstMargin(n=2, prime=7, slack_low=5, slack_high=1)


def test_lemma_single_point():
    report = check_lemma1(3, 3, 3)
    assert report.worst_margin == WorstMargin(n=3, prime=23, slack_low=14, slack_high=4)


def test_lemma_full_range_has_no_violations():
    report = check_lemma1(3, 2, 1000)
    assert report.ok
    w = report.worst_margin
    assert w.prime > (w.n - 1) ** 3 + 1
    assert is_prime(w.prime)


def test_lemma_other_exponents():
    assert check_lemma1(4, 2, 100).ok
    assert check_lemma1(5, 2, 50).ok


def test_lemma_argument_errors():
    with pytest.raises(InvalidExponent):
        check_lemma1(2, 2, 10)
    with pytest.raises(InvalidRange):
        check_lemma1(3, 1, 10)
    with pytest.raises(InvalidRange):
        check_lemma1(3, 10, 5)


def test_kuipers_params():
    assert (kuipers_params(3).a, kuipers_params(3).b) == (5, 8)
    assert (kuipers_params(4).a, kuipers_params(4).b) == (8, 11)
    assert (kuipers_params(10).a, kuipers_params(10).b) == (26, 29)
    with pytest.raises(InvalidExponent):
        kuipers_params(2)


def test_ingham_seed():
    assert ingham_seed(1, 3)[0] == 3
    assert ingham_seed(2, 3)[0] == 263
    seed, _ = ingham_seed(8, 3)
    assert seed > 8**8 + 1
    assert is_prime(seed)


@pytest.mark.slow
def test_extended_ceiling_run_reaches_ten_terms(seven_term_records):
    values = [r.value for r in seven_term_records]
    records = build_sequence(MillsConfig(terms=10), cached_values=values)
    for prev, record in zip(records, records[1:]):
        assert record.bounds_ok
    assert decimal_digits(records[7].value) in (614, 615)
    assert records[9].status.kind.value == "probable-prime"


def test_kuipers_identities_for_all_exponents():
    for c in range(3, 1001):
        params = kuipers_params(c)
        assert (params.a, params.b) == (3 * c - 4, 3 * c - 1)
        assert c * params.a + 1 == params.b * (c - 1), c
        assert 8 * params.a >= 5 * params.b, c


def test_lower_sandwich_bound_is_composite():
    for n in range(2, 2001):
        assert (n - 1) ** 3 + 1 == n * (n * n - 3 * n + 3), n
    for n in range(3, 200):
        assert not is_prime((n - 1) ** 3 + 1), n


def test_floor_and_ceiling_agree_only_at_seed(ceiling_records, floor_records):
    ceiling = [r.value for r in ceiling_records]
    floor = [r.value for r in floor_records]
    assert ceiling[0] == floor[0] == 2
    for index in range(1, 5):
        assert ceiling[index] != floor[index], index + 1
