"""Command-line interface: run, aggregate, query and landscape.

Exit codes: 0 success, 1 configuration validation error, 2 runtime error.
"""

import argparse
import logging
import sys
from typing import Optional, Sequence, Tuple

import numpy as np

from ..archive import load_archive
from ..config import SettingsManager, load_experiment
from ..datasets import load_csv
from ..exceptions import ConfigValidationError, ResidualSRError
from ..expression import from_text
from ..file_operations import ArtifactWriterFactory, read_meta
from ..metrics import loss_landscape
from ..objectives import LossKind
from .aggregate import aggregate_directory
from .experiment_app import ExperimentApp
from .query import (
    QUERY_COLUMNS,
    RELATION_COLUMNS,
    NormalizationRecords,
    QueryBox,
    query_archive,
    query_rows,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_RUNTIME = 2


def int_range(text: str) -> Tuple[int, int]:
    """Parse ``a:b`` into an inclusive integer range."""
    try:
        low, high = (int(part) for part in text.split(":"))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected a:b integers, got {text!r}") from e
    if low > high:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return low, high


def float_range(text: str) -> Tuple[float, float]:
    """Parse ``lo:hi`` into a float interval."""
    try:
        low, high = (float(part) for part in text.split(":"))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected lo:hi numbers, got {text!r}") from e
    return low, high


def int_list(text: str) -> Tuple[int, ...]:
    """Parse ``i,j,...`` into integers."""
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from e


def create_argument_parser() -> argparse.ArgumentParser:
    """Create command-line argument parser.

    Returns:
        Configured argument parser
    """
    parser = argparse.ArgumentParser(
        description="Diversified residual symbolic regression experiments",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Logging level (overrides LOG_LEVEL)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Run the trials of an experiment config")
    run.add_argument("--config", required=True, help="Experiment JSON config")
    run.add_argument("--out", help="Output directory (overrides output_dir)")
    run.add_argument("--trials", type=int, help="Number of trials (overrides config)")
    run.add_argument("--jobs", type=int, default=1, help="Trials run in parallel")
    run.add_argument("--no-progress", action="store_true", help="Hide progress bars")

    aggregate = commands.add_parser("aggregate", help="Summarize trial traces")
    aggregate.add_argument(
        "--in", dest="input_dir", required=True, help="Run directory"
    )
    aggregate.add_argument("--out", required=True, help="Summary CSV path")

    query = commands.add_parser("query", help="Filter archive elites by descriptors")
    query.add_argument("--archive", required=True, help="Archive JSONL file")
    query.add_argument(
        "--rep", type=int_range, required=True, help="Node count range a:b"
    )
    query.add_argument(
        "--trans", type=int_range, required=True, help="Transcendental count range a:b"
    )
    query.add_argument("--clusters", type=int_list, help="Outlier clusters i,j,...")
    query.add_argument("--top", type=int, default=6, help="Rows to return")
    query.add_argument(
        "--transforms",
        help="transforms.json of the run; adds raw-plane slope/intercept columns",
    )
    query.add_argument("--out", help="Also write the table to this CSV")

    landscape = commands.add_parser("landscape", help="Loss over a 2-D weight grid")
    landscape.add_argument("--expr", required=True, help="Canonical expression text")
    landscape.add_argument("--data", required=True, help="CSV dataset")
    landscape.add_argument("--x-cols", type=lambda s: s.split(","), default=["x"])
    landscape.add_argument("--y-col", default="y")
    landscape.add_argument(
        "--loss",
        choices=[kind.value for kind in LossKind],
        default=LossKind.MEDAE.value,
    )
    landscape.add_argument(
        "--index", type=int_list, required=True, help="Weight indices a,b"
    )
    landscape.add_argument(
        "--range", type=float_range, required=True, help="Grid range lo:hi"
    )
    landscape.add_argument("--range-b", type=float_range, help="Second axis lo:hi")
    landscape.add_argument("--steps", type=int, default=101, help="Points per axis")
    landscape.add_argument("--out", required=True, help="Output CSV")
    return parser


def _cmd_run(args: argparse.Namespace) -> int:
    experiment = load_experiment(args.config)
    if args.trials is not None:
        if args.trials < 1:
            raise ConfigValidationError([("trials", "must be >= 1")])
        experiment = experiment.model_copy(update={"trials": args.trials})
    output_dir = args.out or experiment.output_dir
    if not output_dir:
        raise ConfigValidationError([("output_dir", "no output directory given")])
    settings = SettingsManager().load_settings(
        log_level=args.log_level,
        **({"show_progress": False} if args.no_progress else {}),
    )
    ExperimentApp(settings).run(experiment, output_dir, jobs=args.jobs)
    return EXIT_OK


def _cmd_aggregate(args: argparse.Namespace) -> int:
    aggregate_directory(args.input_dir, args.out)
    return EXIT_OK


def _cmd_query(args: argparse.Namespace) -> int:
    box = QueryBox(args.rep, args.trans, args.clusters)
    elites = query_archive(load_archive(args.archive), box, args.top)
    normalization = None
    if args.transforms:
        normalization = NormalizationRecords.load(args.transforms)
    columns = list(QUERY_COLUMNS) + (list(RELATION_COLUMNS) if normalization else [])
    rows = [[row[c] for c in columns] for row in query_rows(elites, normalization)]
    writer = ArtifactWriterFactory.create_csv_writer(columns)
    sys.stdout.write(writer.render(rows, {}))
    if args.out:
        writer.write(rows, args.out, read_meta(args.archive))
    return EXIT_OK


def _cmd_landscape(args: argparse.Namespace) -> int:
    if len(args.index) != 2:
        raise ValueError("--index needs exactly two weight indices")
    tree = from_text(args.expr)
    dataset = load_csv(args.data, args.x_cols, args.y_col)
    values_a = np.linspace(args.range[0], args.range[1], args.steps)
    range_b = args.range_b or args.range
    values_b = np.linspace(range_b[0], range_b[1], args.steps)
    grid = loss_landscape(
        tree, dataset, LossKind(args.loss), tuple(args.index), values_a, values_b
    )
    writer = ArtifactWriterFactory.create_csv_writer(("w_a", "w_b", "loss"))
    meta = {"loss": args.loss, "index": ",".join(str(i) for i in args.index)}
    writer.write(grid.rows(), args.out, meta)
    a_best, b_best = grid.argmin()
    logger.info("Lowest grid loss at w_a=%.6g w_b=%.6g", a_best, b_best)
    return EXIT_OK


_COMMANDS = {
    "run": _cmd_run,
    "aggregate": _cmd_aggregate,
    "query": _cmd_query,
    "landscape": _cmd_landscape,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand and return its exit code."""
    parser = create_argument_parser()
    args = parser.parse_args(argv)
    if args.command != "run" and args.log_level:
        logging.basicConfig(level=args.log_level)
    try:
        return _COMMANDS[args.command](args)
    except ConfigValidationError as e:
        for path, message in e.problems:
            print(f"{path}: {message}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ResidualSRError, OSError, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
