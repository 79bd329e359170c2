"""
Command-line surface.

    fuzzy-contrast enhance IMAGE [--variant GA-plus] [--max-generations 50]
    fuzzy-contrast benchmark CONFIG.toml
    fuzzy-contrast baseline IMAGE
    fuzzy-contrast fitness IMAGE [--genome genome.json]
    fuzzy-contrast corpus DIRECTORY
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any

import structlog
from pydantic import ValidationError

from src.core.exceptions import ConfigurationException, FuzzyContrastException
from src.core.models import FamilySet, HyperParams, VariantId
from src.core.settings import settings
from src.fitness.evaluator import FitnessReport, evaluate, working_plane
from src.fuzzy.serialization import load_genome, save_genome, save_lut_csv
from src.fuzzy.transform import build_lut, enhance
from src.harness.benchmark import run_benchmark
from src.harness.config import load_config
from src.harness.reports import render_table, write_report
from src.imaging.filters import equalize_image
from src.imaging.io import load_image, save_image
from src.imaging.metrics import context_metrics
from src.imaging.synthetic import write_corpus
from src.optimizers.registry import variant_registry
from src.optimizers.trace import improvement_rate, write_trace_csv
from utils.logging_config import configure_logging

logger = structlog.get_logger(__name__)

IMAGE_SUFFIXES = {".png", ".pgm", ".ppm"}

# flag -> HyperParams field
HYPERPARAM_FLAGS: dict[str, tuple[str, type]] = {
    "--change-prob": ("change_prob", float),
    "--mutate-mu": ("mutate_mu", float),
    "--mutate-sigma": ("mutate_sigma", float),
    "--membership-split-prob": ("membership_split_prob", float),
    "--pop-size": ("pop_size", int),
    "--neighbors-per-gen": ("neighbors_per_gen", int),
    "--crossover-swap-prob": ("crossover_swap_prob", float),
    "--tournament-size": ("tournament_size", int),
    "--max-functions": ("max_functions", int),
    "--edge-threshold": ("edge_threshold", float),
    "--workers": ("workers", int),
}


def _add_hyperparam_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("hyperparameters")
    for flag, (dest, kind) in HYPERPARAM_FLAGS.items():
        group.add_argument(flag, dest=dest, type=kind, default=None)
    group.add_argument("--ga-family-set", dest="ga_family_set", choices=[f.value for f in FamilySet])
    group.add_argument("--entropy-source", dest="entropy_source", choices=["sobel", "enhanced"])
    group.add_argument("--gray-mode", dest="gray_mode", choices=["constant", "passthrough"])
    group.add_argument(
        "--freeze-targets", dest="freeze_targets", action="store_true", default=None
    )
    group.add_argument("--per-run-time", dest="per_run_time", type=float, default=None)
    group.add_argument("--max-generations", dest="max_generations", type=int, default=None)


def hyperparam_overrides(args: argparse.Namespace) -> dict[str, Any]:
    """HyperParams fields given explicitly on the command line."""
    names = [dest for dest, _ in HYPERPARAM_FLAGS.values()]
    names += ["ga_family_set", "entropy_source", "gray_mode", "freeze_targets"]
    return {n: getattr(args, n) for n in names if getattr(args, n, None) is not None}


def hyperparams_from_args(args: argparse.Namespace) -> HyperParams:
    """
    A generation cap without --per-run-time runs generation-capped, which
    keeps traces reproducible.
    """
    overrides = hyperparam_overrides(args)
    if args.per_run_time is not None:
        overrides["time_budget"] = args.per_run_time
    elif args.max_generations is not None:
        overrides["time_budget"] = None
    overrides["max_generations"] = args.max_generations
    seed = getattr(args, "seed", None)
    overrides["seed"] = settings.runtime.seed if seed is None else seed
    try:
        return HyperParams(**overrides)
    except ValidationError as e:
        raise ConfigurationException(f"invalid hyperparameters: {e}") from e


def _default_output(image_path: Path, tag: str) -> Path:
    suffix = image_path.suffix.lower() if image_path.suffix.lower() in IMAGE_SUFFIXES else ".png"
    return Path(settings.runtime.output_dir) / f"{image_path.stem}_{tag}{suffix}"


def _emit(document: dict[str, Any]) -> None:
    print(json.dumps(document, indent=2))


def _f_delta(after: FitnessReport, before: FitnessReport) -> float | None:
    if after.degenerate or before.degenerate:
        return None
    return after.F - before.F


def cmd_enhance(args: argparse.Namespace) -> int:
    image_path = Path(args.image)
    image = load_image(image_path)
    hp = hyperparams_from_args(args)
    variant = VariantId(args.variant)

    trace = variant_registry.run(image, variant, hp, seed=hp.seed)
    genome = trace.best_genome
    lut = build_lut(genome, hp.gray_passthrough)
    enhanced = enhance(image, lut)

    output = Path(args.output) if args.output else _default_output(image_path, str(variant))
    stem = output.with_suffix("")
    save_image(enhanced, output)
    genome_path = save_genome(genome, args.genome_out or f"{stem}.genome.json")
    lut_path = save_lut_csv(lut, args.lut_out or f"{stem}.lut.csv")
    trace_path = write_trace_csv(trace, args.trace_out or f"{stem}.trace.csv")

    plane = working_plane(image)
    original = evaluate(plane, hp.edge_threshold, hp.entropy_source)
    final = trace.best_report
    if final.degenerate:
        logger.warning("Degenerate final fitness", variant=str(variant), E=final.E)

    _emit(
        {
            "variant": str(variant),
            "seed": hp.seed,
            "generations": trace.generations,
            "stopped_by": trace.stopped_by,
            "improvement_rate": improvement_rate(trace),
            "original": original.model_dump(mode="json"),
            "enhanced": final.model_dump(mode="json"),
            "delta_f": _f_delta(final, original),
            "metrics": context_metrics(plane, working_plane(enhanced)).model_dump(),
            "outputs": {
                "image": str(output),
                "genome": str(genome_path),
                "lut": str(lut_path),
                "trace": str(trace_path),
            },
        }
    )
    return 0


def cmd_baseline(args: argparse.Namespace) -> int:
    image_path = Path(args.image)
    image = load_image(image_path)
    hp = hyperparams_from_args(args)

    equalized = equalize_image(image)
    output = Path(args.output) if args.output else _default_output(image_path, "equalized")
    save_image(equalized, output)

    plane, equalized_plane = working_plane(image), working_plane(equalized)
    original = evaluate(plane, hp.edge_threshold, hp.entropy_source)
    report = evaluate(equalized_plane, hp.edge_threshold, hp.entropy_source)
    if report.degenerate:
        logger.warning("Degenerate fitness after equalization", E=report.E)

    _emit(
        {
            "method": "histogram-equalization",
            "original": original.model_dump(mode="json"),
            "equalized": report.model_dump(mode="json"),
            "delta_f": _f_delta(report, original),
            "metrics": context_metrics(plane, equalized_plane).model_dump(),
            "outputs": {"image": str(output)},
        }
    )
    return 0


def cmd_fitness(args: argparse.Namespace) -> int:
    image = load_image(args.image)
    hp = hyperparams_from_args(args)
    if args.genome:
        genome = load_genome(args.genome)
        image = enhance(image, genome, hp.gray_passthrough)
    report = evaluate(working_plane(image), hp.edge_threshold, hp.entropy_source)
    _emit(report.model_dump(mode="json"))
    return 0


def cmd_benchmark(args: argparse.Namespace) -> int:
    overrides: dict[str, Any] = {}
    hyper = hyperparam_overrides(args)
    if hyper:
        overrides["hyperparams"] = hyper
    for key in ("num_of_test", "per_run_time", "max_generations", "output_dir"):
        if getattr(args, key, None) is not None:
            overrides[key] = getattr(args, key)
    if args.seed is not None:
        overrides["master_seed"] = args.seed
    if args.variants:
        overrides["variants"] = args.variants

    config = load_config(args.config, overrides)
    report = run_benchmark(config)
    json_path, table_path = write_report(report, config.output_dir)
    sys.stdout.write(render_table(report))
    logger.info("Report written", json=str(json_path), table=str(table_path))
    return 0


def cmd_corpus(args: argparse.Namespace) -> int:
    seed = settings.runtime.seed if args.seed is None else args.seed
    for path in write_corpus(args.directory, seed=seed):
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzy-contrast",
        description="Evolve fuzzy intensity transformations for contrast enhancement.",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging")
    parser.add_argument("--quiet", "-q", action="store_true", help="warnings and errors only")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enhance", help="optimize and apply a transfer function to one image")
    p.add_argument("image")
    p.add_argument(
        "--variant", default=VariantId.GA_PLUS.value, choices=[v.value for v in VariantId]
    )
    p.add_argument("--output", "-o", help="enhanced image path (.png/.pgm/.ppm)")
    p.add_argument("--genome-out")
    p.add_argument("--lut-out")
    p.add_argument("--trace-out")
    p.add_argument("--seed", type=int, default=None)
    _add_hyperparam_flags(p)
    p.set_defaults(handler=cmd_enhance)

    p = sub.add_parser("benchmark", help="run the variant comparison protocol")
    p.add_argument("config", help="TOML experiment file")
    p.add_argument("--num-of-test", dest="num_of_test", type=int, default=None)
    p.add_argument("--output-dir", dest="output_dir", default=None)
    p.add_argument("--variants", nargs="+", choices=[v.value for v in VariantId])
    p.add_argument("--seed", type=int, default=None, help="master seed")
    _add_hyperparam_flags(p)
    p.set_defaults(handler=cmd_benchmark)

    p = sub.add_parser("baseline", help="histogram-equalize an image and score it")
    p.add_argument("image")
    p.add_argument("--output", "-o")
    _add_hyperparam_flags(p)
    p.set_defaults(handler=cmd_baseline)

    p = sub.add_parser("fitness", help="print the FitnessReport of an image")
    p.add_argument("image")
    p.add_argument("--genome", help="genome JSON to apply before scoring")
    _add_hyperparam_flags(p)
    p.set_defaults(handler=cmd_fitness)

    p = sub.add_parser("corpus", help="write the synthetic test images")
    p.add_argument("directory")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(handler=cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(verbose=args.verbose, quiet=args.quiet)
    try:
        return args.handler(args)
    except FuzzyContrastException as e:
        logger.debug("Command failed", command=args.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
