"""
Command line interface.

Subcommands: train, run, impute, decide, analyze-rationality, transform,
compare, summarize. Exit codes: 0 success, 2 config error, 3 data error,
4 numeric failure, 1 anything else.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from application import data_preparation, feature_extraction, rationality_analyzer, utility_optimizer
from application.decision_pipeline import DecisionPipeline, compare_dataset
from application.pipeline_config import PipelineConfig
from domain.exceptions import ConfigError, exit_code_for
from domain.value_objects.feature_domain import FeatureDomain
from domain.value_objects.feature_params import FeatureParams
from infrastructure.config import config_loader
from infrastructure.io.csv_loader import load_csv, write_csv
from infrastructure.io.json_reports import render_report, write_report
from infrastructure.io.model_store import save_model
from infrastructure.logging_config import LEVELS, configure_logging

logger = logging.getLogger(__name__)

PROG = "decision-engine"


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned integer, got {text!r}") from None
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError(f"seed must lie in [0, 2^64), got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser with every subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file")
    common.add_argument("--seed", type=_seed, help="root seed (overrides the config)")
    common.add_argument("--out", help="output directory (reports go to stdout when absent)")
    common.add_argument("--log-level", default="WARNING", choices=LEVELS, help="stderr log level")

    parser = argparse.ArgumentParser(prog=PROG, description="Flexibly-bounded decision engine")
    commands = parser.add_subparsers(dest="command", required=True)

    for name, text in (
        ("train", "run the pipeline and save the decision model"),
        ("run", "run the pipeline and report its metrics"),
    ):
        command = commands.add_parser(name, parents=[common], help=text)
        command.add_argument("--data", required=True, help="input CSV")
        command.add_argument("--target", required=True, help="decision target column")

    impute = commands.add_parser("impute", parents=[common], help="complete missing cells")
    impute.add_argument("--data", required=True, help="input CSV")

    decide = commands.add_parser("decide", parents=[common], help="choose the option of highest expected utility")
    decide.add_argument("--utility", help="UtilitySpec JSON (or pass it as --config)")

    analyze = commands.add_parser(
        "analyze-rationality", parents=[common], help="assess whether irrationality is marginalizable"
    )
    analyze.add_argument("--process", help="decision process JSON (or pass it as --config)")
    analyze.add_argument("--threshold", type=float, help="overrides the document threshold")

    transform = commands.add_parser("transform", parents=[common], help="extract features from complete rows")
    transform.add_argument("--data", required=True, help="input CSV without missing cells")
    transform.add_argument("--domain", choices=[d.value for d in FeatureDomain], help="feature domain")
    transform.add_argument("--window-size", type=int, help="STFT window (power of two)")
    transform.add_argument("--hop", type=int, help="STFT hop")

    compare = commands.add_parser("compare", parents=[common], help="compare bounded and flexibly-bounded runs")
    compare.add_argument("--data", required=True, help="input CSV")
    compare.add_argument("--target", required=True, help="decision target column")

    summarize = commands.add_parser("summarize", parents=[common], help="describe a dataset")
    summarize.add_argument("--data", required=True, help="input CSV")
    return parser


def _emit(data: dict, out: Optional[str], filename: str) -> None:
    if out is None:
        sys.stdout.write(render_report(data))
    else:
        write_report(data, Path(out) / filename)


def _pipeline(args) -> None:
    if args.command == "train" and args.out is None:
        raise ConfigError("train needs --out to store the model")
    config = config_loader.load_pipeline_config(args.config, args.seed)
    report = DecisionPipeline(config).run(args.data, args.target)
    if args.command == "train":
        save_model(report.model, Path(args.out) / "model.json")
    _emit(report.to_dict(), args.out, "report.json")


def _impute(args) -> None:
    config = config_loader.load_pipeline_config(args.config, args.seed)
    dataset = load_csv(args.data, config.missing_tokens)
    result, seed, _ = DecisionPipeline(config).impute(dataset)
    if args.out is not None:
        write_csv(result.completed, Path(args.out) / "imputed.csv")
    _emit(result.to_dict(seed), args.out, "imputation.json")


def _document(args, flag: str) -> dict:
    path = getattr(args, flag)
    if path is not None and args.config is not None:
        raise ConfigError(f"give the document with --{flag} or --config, not both")
    path = path or args.config
    if path is None:
        raise ConfigError(f"{args.command} needs --{flag} (or --config)")
    return config_loader.load_json(path)


def _decide(args) -> None:
    spec = config_loader.parse_utility_spec(_document(args, "utility"))
    _emit(utility_optimizer.choose_rational(spec).to_dict(), args.out, "decision.json")


def _analyze(args) -> None:
    process, threshold = config_loader.parse_decision_process(_document(args, "process"))
    if args.threshold is not None:
        threshold = args.threshold
    report = rationality_analyzer.assess_satisficing(process, threshold)
    data = {
        "name": process.name,
        **report.to_dict(),
        "process_rational": rationality_analyzer.is_process_rational(process),
    }
    _emit(data, args.out, "rationality.json")


def _transform(args) -> None:
    if args.out is None:
        raise ConfigError("transform needs --out to store the feature matrix")
    config = config_loader.load_pipeline_config(args.config, args.seed)
    domain = FeatureDomain(args.domain) if args.domain else config.transform
    params = FeatureParams(
        args.window_size or config.feature_params.window_size,
        args.hop or config.feature_params.hop,
    )
    dataset = load_csv(args.data, config.missing_tokens)
    features = feature_extraction.transform_dataset(dataset, domain, params)
    write_csv(features, Path(args.out) / "features.csv")
    _emit(
        {"domain": domain.value, **params.to_dict(), "rows": features.n_rows, "features": features.n_cols},
        args.out,
        "transform.json",
    )


def _compare(args) -> None:
    if args.config is None:
        configs = PipelineConfig()
    else:
        configs = config_loader.parse_comparison(config_loader.load_json(args.config))
    if args.seed is not None:
        if isinstance(configs, tuple):
            configs = tuple(c.with_seed(args.seed) for c in configs)
        else:
            configs = configs.with_seed(args.seed)
    tokens = configs[0].missing_tokens if isinstance(configs, tuple) else configs.missing_tokens
    dataset = load_csv(args.data, tokens)
    _emit(compare_dataset(dataset, configs, args.target).to_dict(), args.out, "comparison.json")


def _summarize(args) -> None:
    config = config_loader.load_pipeline_config(args.config, args.seed)
    dataset = load_csv(args.data, config.missing_tokens)
    data = data_preparation.summarize(dataset).to_dict()
    data["information_power"] = rationality_analyzer.information_power_ratio(dataset).to_dict()
    _emit(data, args.out, "summary.json")


HANDLERS = {
    "train": _pipeline,
    "run": _pipeline,
    "impute": _impute,
    "decide": _decide,
    "analyze-rationality": _analyze,
    "transform": _transform,
    "compare": _compare,
    "summarize": _summarize,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, run one subcommand and map failures to exit codes.

    Returns:
        Process exit code
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        HANDLERS[args.command](args)
    except Exception as error:  # pylint: disable=broad-except
        logger.debug("command failed", exc_info=True)
        sys.stderr.write(f"{PROG} {args.command}: error: {error}\n")
        return exit_code_for(error)
    return 0
