# utils/main_utils.py

"""
ファイル名: utils/main_utils.py

責務:
- CLI の主要な工程（引数パース、CommandSpec 検証、設定生成、キャッシュ付き素数列構築、
  サブコマンド実行、出力、終了コードへの対応付け）を責任ごとに関数分割して提供。
- main.py から呼び出される“流れ”を、関数単位で実装。

終了コード:
- 0: 成功
- 1: 計算中の領域エラー（BoundViolation、再試行後の PrecisionInsufficient、CacheInvalid、IoError、検証失敗）
- 2: 使い方の誤り（フラグ検証、種が素数でない、c の範囲外）
"""

import argparse
import sys
from typing import List, Optional, Sequence, Tuple

from configs import (
    DEFAULT_BENCH_K,
    DEFAULT_C,
    DEFAULT_DIGITS,
    DEFAULT_LEMMA_N_MAX,
    DEFAULT_LEMMA_N_MIN,
    DEFAULT_SEED,
    DEFAULT_TERMS,
    EXIT_DOMAIN_ERROR,
    EXIT_OK,
    EXIT_USAGE_ERROR,
    EXTRA_MR_ROUNDS,
    OUTPUT_FORMATS,
    RNG_SEED,
    SUBCOMMANDS,
    Variant,
    default_cache_path,
)
from builders import build_constant, build_sequence, check_lemma1, run_bench, verify_roundtrip
from cores.constructors import ingham_seed
from cores.entities import (
    BenchReport,
    CommandSpec,
    ConstantDigits,
    MillsConfig,
    PrimalityConfig,
    SequenceReport,
    from_decimal,
)
from cores.errors import InvalidArgument, IoError, MillsError, PrecisionInsufficient, UsageError
from emitters import emit, write_digit_file, write_output
from loaders import SequenceCache
from parsers import parse_digit_file
from utils import set_log_level, setup_logging

log = setup_logging("main_utils")

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _natural(text: str) -> int:
    """argparse 用：巨大な種も受け付ける非負整数。"""
    try:
        return from_decimal(text)
    except MillsError:
        raise argparse.ArgumentTypeError(f"not a non-negative integer: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--c", type=int, default=DEFAULT_C, help="指数 c（>= 3、--allow-c2 で 2 も可）")
    common.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.CEILING.value)
    common.add_argument("--seed", type=_natural, default=None, help=f"初項（素数、既定 {DEFAULT_SEED}）")
    common.add_argument(
        "--seed-from-bound", type=int, default=None, metavar="K", help="K^(3c-1)+1 を超える最小の素数を初項にする"
    )
    common.add_argument("--terms", type=int, default=DEFAULT_TERMS)
    common.add_argument("--digits", type=int, default=DEFAULT_DIGITS, help="要求小数桁数")
    common.add_argument("--mr-rounds", type=int, default=EXTRA_MR_ROUNDS, help="BPSW 後の追加乱択底の回数")
    common.add_argument("--format", choices=OUTPUT_FORMATS, default="text")
    common.add_argument(
        "--cache", nargs="?", const="", default=None, metavar="PATH", help="再開用キャッシュ（PATH 省略時は既定の場所）"
    )
    common.add_argument("--out", default=None, metavar="PATH")
    common.add_argument("--rng-seed", type=int, default=RNG_SEED)
    common.add_argument("--allow-c2", action="store_true", help="c = 2 を探索的に許可（定理の範囲外）")
    common.add_argument("--n-min", type=int, default=DEFAULT_LEMMA_N_MIN)
    common.add_argument("--n-max", type=int, default=DEFAULT_LEMMA_N_MAX)
    common.add_argument("--bench-k", type=int, nargs="+", default=list(DEFAULT_BENCH_K), metavar="K")
    common.add_argument("--log-level", choices=LOG_LEVELS, type=str.upper, default=None)

    parser = argparse.ArgumentParser(prog="millscale", description="一般化 Mills 素数列と定数の認証済み桁")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """
    役割:
        コマンドライン引数をパースして返す。
    例外:
        SystemExit(2): argparse が検出した使い方の誤り
    """
    args = build_parser().parse_args(argv)
    if args.log_level:
        set_log_level(args.log_level)
    return args


def build_command_spec(args: argparse.Namespace) -> CommandSpec:
    """
    役割:
        Namespace を CommandSpec へ変換する（組合せの検証は CommandSpec 側）。
    例外:
        UsageError: --seed と --seed-from-bound の併用、その他の不正な組合せ
    """
    log.info("=================[コマンドを検証]=========================")
    if args.seed is not None and args.seed_from_bound is not None:
        raise UsageError("--seed and --seed-from-bound are mutually exclusive")
    spec = CommandSpec(
        subcommand=args.subcommand,
        c=args.c,
        variant=args.variant,
        seed=DEFAULT_SEED if args.seed is None else args.seed,
        seed_bound=args.seed_from_bound,
        terms=args.terms,
        digits=args.digits,
        mr_rounds=args.mr_rounds,
        format=args.format,
        cache_path=args.cache,
        out_path=args.out,
        rng_seed=args.rng_seed,
        allow_c2=args.allow_c2,
        n_min=args.n_min,
        n_max=args.n_max,
        bench_k=tuple(args.bench_k),
    )
    log.info(f"{spec.subcommand}: c={spec.c}, variant={spec.variant.value}, format={spec.format}")
    return spec


def primality_config(spec: CommandSpec) -> PrimalityConfig:
    return PrimalityConfig(extra_mr_rounds=spec.mr_rounds, rng_seed=spec.rng_seed)


def mills_config(spec: CommandSpec) -> MillsConfig:
    """
    役割:
        CommandSpec から MillsConfig を作る（--seed-from-bound の種もここで解決）。
    例外:
        SeedNotPrime / InvalidExponent: 使い方の誤りとして扱う
    """
    primality = primality_config(spec)
    seed = spec.seed
    if spec.seed_bound is not None:
        seed, _ = ingham_seed(spec.seed_bound, spec.c, primality)
        log.info(f"K={spec.seed_bound} から種 {seed} を決定")
    return MillsConfig(
        c=spec.c,
        variant=spec.variant,
        seed=seed,
        terms=spec.terms,
        primality=primality,
        allow_c2=spec.allow_c2,
    )


def resolve_cache(spec: CommandSpec, cfg: MillsConfig) -> Optional[SequenceCache]:
    """--cache の値を解決する（空文字は既定の場所）。"""
    if spec.cache_path is None:
        return None
    path = spec.cache_path or default_cache_path(cfg.c, cfg.variant.value, cfg.seed)
    return SequenceCache(path)


def load_sequence(cfg: MillsConfig, cache: Optional[SequenceCache]) -> SequenceReport:
    """
    役割:
        キャッシュがあれば検証して延長し、新しい項が増えたら保存する。
    """
    cached: Tuple[int, ...] = cache.load(cfg) if cache is not None else ()
    records = build_sequence(cfg, cached)
    report = SequenceReport(c=cfg.c, variant=cfg.variant, seed=cfg.seed, records=tuple(records))
    if cache is not None and len(records) > len(cached):
        cache.save(report)
    return report


def _write(spec: CommandSpec, text: str) -> None:
    if spec.out_path:
        write_output(spec.out_path, text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def run_sequence(spec: CommandSpec, cfg: MillsConfig) -> int:
    report = load_sequence(cfg, resolve_cache(spec, cfg))
    _write(spec, emit(report, spec.format))
    return EXIT_OK


def check_digit_file(digits: ConstantDigits, path: str) -> None:
    """
    役割:
        書き出した桁ファイルを読み戻し、認証済み桁と一致することを確かめる。
    例外:
        IoError: 読めない・桁が一致しない
    """
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        log.critical(f"[{path}] CRITICAL: Failed to read back digit file ({e})")
        raise IoError(f"cannot read {path}: {e}") from e
    try:
        written = parse_digit_file(text)
    except InvalidArgument as e:
        raise IoError(f"{path}: {e}") from e
    if written.digits != digits.digits:
        log.critical(f"[{path}] CRITICAL: digit file does not match the certified digits")
        raise IoError(f"{path}: written digits differ from the certified prefix")
    log.debug(f"{path}: {written.frac_digits} digits verified")


def run_constant(spec: CommandSpec, cfg: MillsConfig) -> int:
    report = load_sequence(cfg, resolve_cache(spec, cfg))
    digits = build_constant(report.records, cfg.c, cfg.variant, requested_t=spec.digits)
    if spec.out_path:
        write_digit_file(digits, spec.out_path)
        check_digit_file(digits, spec.out_path)
    else:
        _write(spec, emit(digits, spec.format))
    return EXIT_OK


def run_verify(spec: CommandSpec, cfg: MillsConfig) -> int:
    """
    役割:
        往復検証。PrecisionInsufficient なら桁を倍にして1回だけ再試行する。
    """
    report = load_sequence(cfg, resolve_cache(spec, cfg))
    t = spec.digits
    try:
        result = verify_roundtrip(report.records, cfg.c, cfg.variant, t)
    except PrecisionInsufficient as e:
        t = max(2 * t, 1)
        log.warning(f"{e}。{t}桁で再試行")
        result = verify_roundtrip(report.records, cfg.c, cfg.variant, t)
    _write(spec, emit(result, spec.format))
    return EXIT_OK if result.passed else EXIT_DOMAIN_ERROR


def run_lemma(spec: CommandSpec) -> int:
    report = check_lemma1(spec.c, spec.n_min, spec.n_max, primality_config(spec))
    _write(spec, emit(report, spec.format))
    return EXIT_OK if report.ok else EXIT_DOMAIN_ERROR


def run_bench_command(spec: CommandSpec) -> int:
    report = BenchReport(results=tuple(run_bench(spec.bench_k, primality_config(spec))))
    _write(spec, emit(report, spec.format))
    return EXIT_OK


def _diagnose(e: BaseException) -> None:
    sys.stderr.write(f"[ERROR] {type(e).__name__}: {e}\n")


def run(spec: CommandSpec) -> int:
    """
    役割:
        1コマンドを実行し終了コードを返す。
        設定の生成（検証）段階の誤りは 2、計算段階の誤りは 1。
    """
    cfg: Optional[MillsConfig] = None
    try:
        if spec.subcommand in ("sequence", "constant", "verify"):
            cfg = mills_config(spec)
    except MillsError as e:
        _diagnose(e)
        return EXIT_USAGE_ERROR
    try:
        if spec.subcommand == "sequence":
            assert cfg is not None
            return run_sequence(spec, cfg)
        if spec.subcommand == "constant":
            assert cfg is not None
            return run_constant(spec, cfg)
        if spec.subcommand == "verify":
            assert cfg is not None
            return run_verify(spec, cfg)
        if spec.subcommand == "lemma-check":
            return run_lemma(spec)
        return run_bench_command(spec)
    except MillsError as e:
        log.critical(f"{spec.subcommand} failed: {e}")
        _diagnose(e)
        return EXIT_DOMAIN_ERROR


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE_ERROR
    try:
        spec = build_command_spec(args)
    except MillsError as e:
        _diagnose(e)
        return EXIT_USAGE_ERROR
    return run(spec)
