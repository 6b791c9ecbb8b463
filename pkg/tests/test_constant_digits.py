import attrs
import pytest

from builders import (
    ConstantBuilder,
    build_constant,
    build_sequence,
    certified_prefix,
    certify,
    check_nesting,
    constant_interval,
    roundtrip,
    verify_roundtrip,
)
from configs import CheckStatus, Variant
from cores.entities import FixedDec, Interval, MillsConfig, decimal_digits
from cores.errors import EmptySequence, NoCommonPrefix, PrecisionInsufficient, VariantMismatch

CEILING, FLOOR = Variant.CEILING, Variant.FLOOR


def _iv(lo, hi):
    return Interval(FixedDec.parse(lo), FixedDec.parse(hi))


def test_certify_examples():
    assert certify(_iv("1.2999", "1.3001"), 4).digits == "1"
    assert certify(_iv("1.2405547052", "1.2405547053"), 10).digits == "1.240554705"
    digits = certify(_iv("1.25", "1.25"), 5)
    assert digits.digits == "1.25000"
    assert digits.certified_fraction_digits == 5
    with pytest.raises(NoCommonPrefix):
        certify(_iv("1.9", "2.1"), 3)


def test_certify_records_provenance():
    digits = certify(_iv("1.2405", "1.2406"), 6, c=4, variant=FLOOR, seed=3, terms_used=2, guard=12)
    assert (digits.c, digits.variant, digits.seed, digits.terms_used) == (4, FLOOR, 3, 2)
    assert digits.requested_digits == 6
    assert digits.guard_digits == 12
    assert digits.certified_fraction_digits == 3
    assert digits.value == FixedDec.parse("1.240")


def test_constant_interval_contains_published_prefix(ceiling_records, b_digits_600):
    iv = constant_interval(ceiling_records, 3, CEILING, 30)
    assert iv.frac_digits == 30
    assert iv.contains(FixedDec.parse(b_digits_600[:32]))


def test_constant_interval_errors(ceiling_records):
    with pytest.raises(EmptySequence):
        constant_interval([], 3, CEILING, 10)
    with pytest.raises(VariantMismatch):
        constant_interval(ceiling_records, 3, FLOOR, 10)


def test_twenty_certified_digits_from_five_terms(ceiling_records):
    digits = build_constant(ceiling_records, 3, CEILING, 20)
    assert digits.digits == "1.24055470525201424067"
    assert digits.certified_fraction_digits == 20
    assert digits.terms_used == 5
    assert len(digits.statuses) == 5


def test_default_request_is_prefix_of_published_digits(ceiling_records, b_digits_600):
    builder = ConstantBuilder(ceiling_records, 3, CEILING)
    digits = builder.run()
    assert digits.requested_digits == 23 + 20
    assert 20 <= digits.certified_fraction_digits < digits.requested_digits
    assert b_digits_600.startswith(digits.digits)


def test_seven_terms_certify_two_hundred_digits(seven_term_records, b_digits_600):
    digits = build_constant(seven_term_records, 3, CEILING)
    assert digits.certified_fraction_digits >= 200
    assert b_digits_600.startswith(digits.digits)


def test_floor_constant_prefix(floor_records):
    digits = build_constant(floor_records, 3, FLOOR)
    assert digits.digits.startswith("1.3063778838")


def test_nesting_holds(ceiling_records, floor_records):
    assert check_nesting(ceiling_records, 3, CEILING, 40) == (True, True, True, True)
    assert all(check_nesting(floor_records, 3, FLOOR, 40))

def test_certified_prefix_grows_with_terms(seven_term_records, b_digits_600):
    counts = []
    for k in range(1, 8):
        records = seven_term_records[:k]
        prefix = certified_prefix(constant_interval(records, 3, CEILING, 240), 230)
        assert b_digits_600.startswith(str(prefix)), k
        assert prefix.frac_digits >= decimal_digits(records[-1].value) - 2, k
        counts.append(prefix.frac_digits)
    assert counts == sorted(counts)
    assert counts[-1] > counts[0]



def test_roundtrip_seven_terms(seven_term_records):
    report = verify_roundtrip(seven_term_records, 3, CEILING, 230)
    statuses = [e.status for e in report.entries]
    assert statuses == [CheckStatus.PASS] * 6 + [CheckStatus.BRACKET]
    for entry, record in zip(report.entries[:6], seven_term_records):
        assert entry.lower == entry.upper == record.value
    last = report.entries[6]
    assert last.lower <= seven_term_records[6].value <= last.upper
    assert report.passed
    assert all(report.nesting)


def test_roundtrip_floor_variant(floor_records):
    report = verify_roundtrip(floor_records, 3, FLOOR, 60)
    assert [e.status for e in report.entries[:4]] == [CheckStatus.PASS] * 4
    assert report.passed


def test_roundtrip_detects_truncated_precision(ceiling_records):
    iv = constant_interval(ceiling_records, 3, CEILING, 30).truncate(3)
    assert (str(iv.lo), str(iv.hi)) == ("1.240", "1.241")
    digits = certify(iv, 3, c=3, variant=CEILING, seed=2, terms_used=5)
    with pytest.raises(PrecisionInsufficient) as excinfo:
        roundtrip(digits, ceiling_records)
    assert excinfo.value.index == 3


def test_roundtrip_reports_tampered_term(ceiling_records):
    digits = certify(constant_interval(ceiling_records, 3, CEILING, 60), 60, c=3, variant=CEILING, seed=2, terms_used=5)
    tampered = list(ceiling_records)
    tampered[2] = attrs.evolve(tampered[2], value=331)
    report = roundtrip(digits, tampered)
    assert report.entries[2].status is CheckStatus.FAIL
    assert not report.passed


def test_roundtrip_needs_enough_terms(ceiling_records):
    digits = certify(constant_interval(ceiling_records, 3, CEILING, 40), 40, c=3, variant=CEILING, seed=2, terms_used=5)
    with pytest.raises(EmptySequence):
        roundtrip(digits, ceiling_records[:3])


@pytest.mark.slow
def test_six_hundred_published_digits(seven_term_records, b_digits_600):
    values = [r.value for r in seven_term_records]
    records = build_sequence(MillsConfig(terms=8), cached_values=values)
    assert records[7].decimal_digits in (614, 615)
    digits = build_constant(records, 3, CEILING, 600)
    assert digits.certified_fraction_digits == 600
    assert digits.digits == b_digits_600
