import json
import os

import pytest

import builders.sequence_builder as sequence_builder
from builders import certify
from cores.entities import BenchReport, FixedDec, Interval, LemmaReport, SearchStats
from cores.errors import InvalidArgument, IoError
from emitters import emit, emit_bfile, emit_json, format_digit_lines, write_digit_file
from parsers import parse_cache, parse_digit_file, parse_document
from utils.main_utils import build_command_spec, check_digit_file, main, parse_args


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _forbid_search(monkeypatch):
    def fail(x, cfg):
        raise AssertionError("prime search should not run")

    monkeypatch.setattr(sequence_builder, "prev_prime", fail)
    monkeypatch.setattr(sequence_builder, "next_prime", fail)


def test_sequence_text(capsys):
    code, out, _ = _run(capsys, "sequence", "--c", "3", "--variant", "ceiling", "--terms", "4")
    assert code == 0
    assert out.splitlines()[:4] == ["1 2", "2 7", "3 337", "4 38272739"]
    assert "# p_4: 8 digits, proven-prime (trial-division), bounds ok" in out.splitlines()


def test_sequence_single_term(capsys):
    code, out, _ = _run(capsys, "sequence", "--terms", "1")
    assert code == 0
    assert out.splitlines()[0] == "1 2"


def test_sequence_bfile(capsys):
    code, out, _ = _run(capsys, "sequence", "--terms", "4", "--format", "bfile")
    assert code == 0
    assert out == "1 2\n2 7\n3 337\n4 38272739\n"


def test_floor_bfile(capsys):
    code, out, _ = _run(capsys, "sequence", "--variant", "floor", "--terms", "4", "--format", "bfile")
    assert code == 0
    assert out == "1 2\n2 11\n3 1361\n4 2521008887\n"


def test_constant_text(capsys):
    code, out, _ = _run(capsys, "constant", "--terms", "5", "--digits", "20", "--format", "text")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1.24055470525201424067"
    assert all(line.startswith("# ") for line in lines[1:])
    assert "# constant: B" in lines
    assert "# certified_fraction_digits: 20" in lines


@pytest.mark.parametrize(
    "argv",
    [
        ("sequence", "--terms", "5", "--format", "json"),
        ("constant", "--terms", "5", "--digits", "20", "--format", "json"),
        ("verify", "--terms", "5", "--digits", "60", "--format", "json"),
        ("lemma-check", "--n-max", "50", "--format", "json"),
        ("bench", "--bench-k", "0", "1", "--format", "json"),
    ],
)
def test_json_round_trip_is_byte_identical(capsys, argv):
    code, out, _ = _run(capsys, *argv)
    assert code == 0
    assert emit_json(parse_document(out)) == out


def test_json_big_integers_are_strings(capsys):
    _, out, _ = _run(capsys, "sequence", "--terms", "5", "--format", "json")
    doc = json.loads(out)
    assert doc["kind"] == "sequence"
    assert doc["seed"] == "2"
    assert doc["terms"][4]["value"] == "56062005704198360319209"
    assert doc["terms"][3]["status"] == {"kind": "proven-prime", "method": "trial-division"}
    assert doc["terms"][4]["status"] == {"kind": "probable-prime", "bpsw": True, "extra_rounds": 16, "rng_seed": 0}


def test_empty_violations_serialize_as_empty_list():
    report = LemmaReport(c=3, n_min=2, n_max=3, violations=(), worst_margin=None)
    assert '"violations": []' in emit(report, "json")


def test_bfile_only_for_sequences():
    with pytest.raises(InvalidArgument):
        emit_bfile(BenchReport(results=()))
    with pytest.raises(InvalidArgument):
        emit(BenchReport(results=()), "yaml")


def test_lemma_text(capsys):
    code, out, _ = _run(capsys, "lemma-check", "--n-min", "2", "--n-max", "30")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "ok"
    assert "# violations: none" in lines
    assert "# worst_margin: N=2, prime=7, slack_low=5, slack_high=1" in lines


def test_bench_reports_gaps(capsys):
    code, out, _ = _run(capsys, "bench", "--bench-k", "0", "1", "--format", "json")
    assert code == 0
    results = json.loads(out)["results"]
    assert [(r["k"], r["digits"], r["gap"]) for r in results] == [(0, 1, "3"), (1, 10, "33")]


def test_seed_from_bound(capsys):
    code, out, _ = _run(capsys, "sequence", "--seed-from-bound", "2", "--terms", "1", "--format", "bfile")
    assert code == 0
    assert out == "1 263\n"


@pytest.mark.parametrize(
    "argv",
    [
        ("sequence", "--c", "2"),
        ("sequence", "--c", "1", "--allow-c2"),
        ("sequence", "--seed", "4"),
        ("sequence", "--terms", "0"),
        ("sequence", "--seed", "3", "--seed-from-bound", "2"),
        ("constant", "--format", "bfile"),
        ("lemma-check", "--n-min", "5", "--n-max", "3"),
        ("bogus",),
        ("sequence", "--format", "yaml"),
        ("bench", "--bench-k", "-1"),
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, out, err = _run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err


def test_truncated_precision_verify_exits_one(capsys):
    code, _, err = _run(capsys, "verify", "--terms", "5", "--digits", "3")
    assert code == 1
    assert "PrecisionInsufficient" in err


def test_verify_passes(capsys):
    code, out, _ = _run(capsys, "verify", "--terms", "5", "--digits", "60")
    assert code == 0
    assert out.splitlines()[0].startswith("1 pass 2 ")
    assert "# passed: yes" in out.splitlines()


def test_forced_bound_violation_exits_one(capsys, monkeypatch):
    monkeypatch.setattr(sequence_builder, "prev_prime", lambda x, cfg: (2, SearchStats()))
    code, out, err = _run(capsys, "sequence", "--terms", "3")
    assert code == 1
    assert out == ""
    assert "BoundViolation" in err


def test_cache_makes_second_run_search_free(capsys, monkeypatch, tmp_path):
    cache = str(tmp_path / "seq.json")
    argv = ("constant", "--terms", "5", "--digits", "20", "--cache", cache)
    code, first, _ = _run(capsys, *argv)
    assert code == 0
    doc = json.loads(open(cache, encoding="utf-8").read())
    assert (doc["c"], doc["variant"], doc["seed"]) == (3, "ceiling", "2")
    assert doc["terms"] == ["2", "7", "337", "38272739", "56062005704198360319209"]
    assert len(parse_cache(doc).statuses) == 5

    _forbid_search(monkeypatch)
    code, second, _ = _run(capsys, *argv)
    assert code == 0
    assert second == first


def test_cache_default_location_from_environment(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("MILLSCALE_CACHE", str(tmp_path))
    code, _, _ = _run(capsys, "sequence", "--terms", "3", "--cache")
    assert code == 0
    assert os.path.exists(tmp_path / "mills-c3-ceiling-s2.json")


def test_corrupted_cache_exits_one(capsys, tmp_path):
    proven = {"kind": "proven-prime", "method": "trial-division"}
    cache = tmp_path / "bad.json"
    cache.write_text(
        json.dumps({"c": 3, "variant": "ceiling", "seed": "2", "terms": ["2", "9"], "statuses": [proven, proven]}),
        encoding="utf-8",
    )
    code, _, err = _run(capsys, "sequence", "--terms", "3", "--cache", str(cache))
    assert code == 1
    assert "CacheInvalid" in err


def test_cache_for_other_parameters_is_rejected(capsys, tmp_path):
    cache = str(tmp_path / "seq.json")
    assert _run(capsys, "sequence", "--terms", "3", "--cache", cache)[0] == 0
    code, _, err = _run(capsys, "sequence", "--variant", "floor", "--terms", "3", "--cache", cache)
    assert code == 1
    assert "CacheInvalid" in err


def test_digit_file_and_sidecar(capsys, tmp_path):
    out_path = tmp_path / "b.txt"
    code, out, _ = _run(capsys, "constant", "--terms", "5", "--digits", "20", "--out", str(out_path))
    assert code == 0
    assert out == ""
    text = out_path.read_text(encoding="utf-8")
    assert text == "1.24055470525201424067\n"
    assert parse_digit_file(text).frac_digits == 20
    meta = parse_document((tmp_path / "b.json").read_text(encoding="utf-8"))
    assert meta.certified_fraction_digits == 20
    assert meta.terms_used == 5

def test_digit_file_is_read_back_after_writing(tmp_path):
    digits = certify(Interval(FixedDec.parse("1.2405"), FixedDec.parse("1.2406")), 4)
    path = str(tmp_path / "d.txt")
    write_digit_file(digits, path)
    check_digit_file(digits, path)
    with open(path, "w", encoding="utf-8") as f:
        f.write("1.241\n")
    with pytest.raises(IoError):
        check_digit_file(digits, path)
    with open(path, "w", encoding="utf-8") as f:
        f.write("1.24\nx0\n")
    with pytest.raises(IoError):
        check_digit_file(digits, path)
    with pytest.raises(IoError):
        check_digit_file(digits, str(tmp_path / "missing.txt"))



def test_format_digit_lines(b_digits_600):
    text = format_digit_lines(b_digits_600)
    lines = text.splitlines()
    assert text.endswith("\n")
    assert len(lines) == 12
    assert lines[0] == "1." + b_digits_600[2:52]
    assert all(len(line) == 50 for line in lines[1:])
    assert parse_digit_file(text).digits == b_digits_600
    assert format_digit_lines("1") == "1\n"


def test_parse_args_defaults():
    spec = build_command_spec(parse_args(["constant"]))
    assert (spec.c, spec.variant.value, spec.seed, spec.terms, spec.digits) == (3, "ceiling", 2, 7, 600)
    assert (spec.mr_rounds, spec.format, spec.rng_seed, spec.allow_c2) == (16, "text", 0, False)
    assert spec.cache_path is None


def test_parse_document_rejects_unknown_kind():
    with pytest.raises(InvalidArgument):
        parse_document('{"kind": "nothing"}')
    with pytest.raises(InvalidArgument):
        parse_document("[1, 2]")
    with pytest.raises(InvalidArgument):
        parse_document('{"kind": "sequence", "c": 3}')
