"""Command-line entry point for the Latin rectangle census toolkit"""

import argparse
import os
import sys
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from dotenv import load_dotenv

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.census.extremal import CensusResult, extremal_m
from src.census.formulas import CensusRunner
from src.census.generator import enumerate_graphs
from src.exceptions import LatinCensusError
from src.graphs.bipartite_graph import format_graph
from src.number_theory.constants import PublishedConstants
from src.number_theory.divisibility import check_divisibility, corollary_divisor, predicted_divisor
from src.number_theory.factoring import factorize, two_power_valuation
from src.number_theory.verification import verify_published
from src.permanent.formula import MonicPolynomial, latin_count_via_permanents
from src.symmetry.census import SYMMETRY_MAX_N, spot_check_invariance, symmetry_census
from src.latin.autotopism import AUTOPARATOPISM_MAX_N
from src.latin.enumeration import ENUMERATE_REDUCED_MAX_N, enumerate_reduced
from src.utils.config_loader import (
    get_budget_config,
    get_census_config,
    get_output_config,
    get_permanent_config,
    load_config,
)
from src.utils.logger import set_log_level, setup_logger
from src.utils.output_saver import CheckResult, all_passed, format_count, save_census_report

# Load environment variables
load_dotenv()

logger = setup_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED_CHECK = 2


class UsageError(Exception):
    pass


class CensusArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors instead of exiting with status 2"""

    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


@dataclass
class RunConfig:
    """Parsed command plus the settings it runs with"""

    command: str
    params: Dict[str, Any]
    workers: int = 1
    memo_cache: Optional[str] = None
    checkpoint_every: int = 500
    output_format: str = "human"
    group_digits: int = 5
    output_dir: str = "data/outputs"
    chunk_size: int = 65536
    seed: int = 0
    show_progress: bool = False
    budgets: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.workers < 1:
            raise UsageError(f"--workers must be at least 1, got {self.workers}")
        if self.checkpoint_every < 1:
            raise UsageError(f"--checkpoint-every must be at least 1, got {self.checkpoint_every}")
        if self.output_format not in ("human", "machine"):
            raise UsageError(f"unknown output format {self.output_format!r}")
        for name, value in self.budgets.items():
            if int(value) < 1:
                raise UsageError(f"budget {name} must be positive, got {value}")
        if self.memo_cache:
            parent = Path(self.memo_cache).parent
            if parent.exists() and not parent.is_dir():
                raise UsageError(f"memo cache directory {parent} is not a directory")

    @classmethod
    def from_args(cls, args: argparse.Namespace, config: Dict[str, Any]) -> "RunConfig":
        census = get_census_config(config)
        output = get_output_config(config)
        common = {"command", "workers", "memo_cache", "checkpoint_every", "format", "seed", "progress", "config"}
        params = {key: value for key, value in vars(args).items() if key not in common}
        if params.get("via_k") is None and args.command == "count-squares":
            params["via_k"] = census.get("default_via_k")
        return cls(
            command=args.command,
            params=params,
            workers=args.workers if args.workers is not None else int(census.get("workers", 1)),
            memo_cache=args.memo_cache if args.memo_cache is not None else census.get("memo_cache"),
            checkpoint_every=(
                args.checkpoint_every if args.checkpoint_every is not None
                else int(census.get("checkpoint_every", 500))
            ),
            output_format=args.format or output.get("format", "human"),
            group_digits=int(output.get("group_digits", 5)),
            output_dir=output.get("directory", "data/outputs"),
            chunk_size=int(get_permanent_config(config).get("chunk_size", 65536)),
            seed=args.seed if args.seed is not None else int(config.get("random", {}).get("seed", 0)),
            show_progress=args.progress and (args.format or output.get("format", "human")) != "machine",
            budgets={key: int(value) for key, value in get_budget_config(config).items()},
        )

    @property
    def machine(self) -> bool:
        return self.output_format == "machine"

    def count(self, value: int) -> str:
        return format_count(value, self.output_format, self.group_digits)

    def runner(self) -> CensusRunner:
        return CensusRunner(
            workers=self.workers,
            memo_path=self.memo_cache,
            checkpoint_every=self.checkpoint_every,
            show_progress=self.show_progress,
            budgets=self.budgets,
        )

    def budget(self, name: str, default: int) -> int:
        return self.budgets.get(name, default)


def build_parser() -> CensusArgumentParser:
    common = CensusArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, help="Worker processes (default from config)")
    common.add_argument("--memo-cache", help="Memo cache file for m(B) values")
    common.add_argument("--checkpoint-every", type=int, help="Save the memo after this many graph classes")
    common.add_argument("--format", choices=("human", "machine"), help="Output format")
    common.add_argument("--seed", type=int, help="Seed for randomised spot checks")
    common.add_argument("--progress", action="store_true", help="Show progress bars")
    common.add_argument("--config", help="Path to config YAML")

    parser = CensusArgumentParser(description="Latin rectangle census toolkit")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=CensusArgumentParser)
    commands.required = True

    sub = commands.add_parser("count-rectangles", parents=[common], help="R_(k,n) by the graph-class sum")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)

    sub = commands.add_parser("count-squares", parents=[common], help="R_n via k-regular graphs and complements")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--via-k", type=int, help="Degree to sum over (default floor(n/2))")

    sub = commands.add_parser("census-extremal", parents=[common], help="Extremal m(B) census")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--k", type=int, help="Single degree (default: every 2 <= k <= n-2)")

    sub = commands.add_parser("enumerate-graphs", parents=[common], help="Classes of k-regular bipartite graphs")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--show", action="store_true", help="Print every class in BGF format")

    sub = commands.add_parser("permanent-count", parents=[common], help="L_n from signed permanents")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--poly", help="Lower coefficients c0,c1,... of the monic polynomial")

    commands.add_parser("verify-published", parents=[common], help="Consistency checks of published constants")

    sub = commands.add_parser("factorize", parents=[common], help="Prime factorization of a value or of R_n")
    sub.add_argument("value", type=int, nargs="?", help="Value to factor")
    sub.add_argument("--n", type=int, help="Factor the published R_n instead")

    sub = commands.add_parser("divisors", parents=[common], help="Factorial divisors of R_n")
    sub.add_argument("--n", type=int, required=True)

    sub = commands.add_parser("symmetry-census", parents=[common], help="Squares with non-trivial autoparatopisms")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--spot-checks", type=int, default=0, help="Random paratopism invariance checks")

    sub = commands.add_parser("reproduce-tables", parents=[common], help="Recompute the published tables up to --max-n")
    sub.add_argument("--max-n", type=int, default=7)
    sub.add_argument("--save", action="store_true", help="Save JSON and markdown reports")

    return parser


def banner(run: RunConfig, title: str) -> None:
    if run.machine:
        return
    print("\n" + "=" * 80)
    print(f"🔢 {title}")
    print("=" * 80 + "\n")


def report(run: RunConfig, results: List[CheckResult]) -> int:
    for result in results:
        print(result.line())
    if not run.machine:
        failed = sum(1 for result in results if not result.passed)
        mark = "✅" if not failed else "❌"
        print(f"\n{mark} {len(results) - failed} passed, {failed} failed")
    return EXIT_OK if all_passed(results) else EXIT_FAILED_CHECK


def count_rectangles(run: RunConfig) -> int:
    k, n = run.params["k"], run.params["n"]
    banner(run, f"REDUCED {k}x{n} LATIN RECTANGLES")
    value = run.runner().reduced_rectangles(k, n)
    print(run.count(value) if run.machine else f"R_({k},{n}) = {run.count(value)}")
    return EXIT_OK


def count_squares(run: RunConfig) -> int:
    n, via_k = run.params["n"], run.params.get("via_k")
    banner(run, f"REDUCED LATIN SQUARES OF ORDER {n}")
    value = run.runner().reduced_squares(n, via_k)
    print(run.count(value) if run.machine else f"R_{n} = {run.count(value)}")
    return EXIT_OK


def census_extremal(run: RunConfig) -> int:
    n = run.params["n"]
    degrees = [run.params["k"]] if run.params.get("k") is not None else list(range(2, n - 1))
    if not degrees:
        raise UsageError(f"census-extremal needs n >= 4, got n={n}")
    banner(run, f"EXTREMAL m(B) CENSUS FOR n={n}")

    runner = run.runner()
    constants = PublishedConstants()
    results: List[CheckResult] = []
    for k in degrees:
        census = extremal_m(k, n, runner)
        if run.machine:
            print(census.to_line())
        else:
            _print_census(run, census)
        results.extend(_compare_extremal(census, constants))
    return report(run, results) if results else EXIT_OK


def _print_census(run: RunConfig, census: CensusResult) -> None:
    print(f"n={census.n} k={census.k}")
    print(f"  • Classes: {census.class_count}")
    print(f"  • R_({census.k},{census.n}): {run.count(census.reduced_count)}")
    print(f"  • min m(B): {run.count(census.min_m)} (attained by {census.min_count})")
    print(f"  • max m(B): {run.count(census.max_m)} (attained by {census.max_count})")
    print(f"  • max m(B) also has most perfect matchings: {census.max_m_has_most_matchings}")


def _compare_extremal(census: CensusResult, constants: PublishedConstants) -> List[CheckResult]:
    try:
        published = constants.extremal(census.k, census.n)
    except LatinCensusError:
        return []
    matches = (
        published.min_m == census.min_m
        and published.min_count == census.min_count
        and published.max_m == census.max_m
        and census.max_unique
    )
    return [CheckResult(
        f"extremal-n{census.n}-k{census.k}",
        matches,
        f"computed {census.min_m}/{census.min_count}/{census.max_m}, "
        f"published {published.min_m}/{published.min_count}/{published.max_m}",
    )]


def enumerate_graph_classes(run: RunConfig) -> int:
    n, k = run.params["n"], run.params["k"]
    banner(run, f"{k}-REGULAR BIPARTITE GRAPHS ON {n}+{n} VERTICES")
    classes = list(enumerate_graphs(
        k, n, run.budget("graphs_max_n", 8), run.budget("graphs_k2_max_n", 11)
    ))
    if run.params.get("show"):
        for graph_class in classes:
            print(format_graph(graph_class.graph), end="")
    print(f"CLASSES {n} {k} {len(classes)}" if run.machine else f"✓ {len(classes)} isomorphism classes")
    return EXIT_OK


def permanent_count(run: RunConfig) -> int:
    n = run.params["n"]
    polynomial = MonicPolynomial.parse(run.params["poly"], n) if run.params.get("poly") else None
    banner(run, f"LATIN SQUARES OF ORDER {n} FROM SIGNED PERMANENTS")
    value = latin_count_via_permanents(
        n,
        polynomial,
        workers=run.workers,
        chunk_size=run.chunk_size,
        max_n=run.budget("permanent_max_n", 5),
        show_progress=run.show_progress,
    )
    print(run.count(value) if run.machine else f"L_{n} = {run.count(value)}")

    constants = PublishedConstants()
    if not constants.has(n, n):
        return EXIT_OK
    expected = constants.latin_squares(n)
    return report(run, [CheckResult(
        f"permanent-n{n}", value == expected, f"L_{n} = n!(n-1)!R_{n} = {expected}"
    )])


def verify(run: RunConfig) -> int:
    banner(run, "PUBLISHED CONSTANT CHECKS")
    return report(run, verify_published())


def factorize_value(run: RunConfig) -> int:
    value, n = run.params.get("value"), run.params.get("n")
    if (value is None) == (n is None):
        raise UsageError("factorize needs exactly one of VALUE or --n")
    label = str(value)
    if n is not None:
        value = PublishedConstants().reduced_squares(n)
        label = f"R_{n}"
    if value < 1:
        raise UsageError(f"factorize needs a positive value, got {value}")
    banner(run, f"FACTORIZATION OF {label}")
    factorization = factorize(value)
    if run.machine:
        print(f"{value} {factorization}")
        print(f"V2 {two_power_valuation(value)}")
    else:
        print(f"{label} = {factorization}")
        print(f"  • 2-adic valuation: {two_power_valuation(value)}")
    return EXIT_OK


def divisors(run: RunConfig) -> int:
    n = run.params["n"]
    banner(run, f"FACTORIAL DIVISORS OF R_{n}")
    predicted = predicted_divisor(n)
    corollary = corollary_divisor(n)
    if run.machine:
        print(f"PREDICTED {n} {predicted}")
        print(f"FACTORIAL {n} {corollary}")
    else:
        print(f"  • divisor from smaller squares: {run.count(predicted)}")
        print(f"  • factorial divisor: {run.count(corollary)}")
    constants = PublishedConstants()
    if constants.has(n, n):
        return report(run, check_divisibility(n, constants.reduced_squares(n)))
    return EXIT_OK


def symmetry(run: RunConfig) -> int:
    n = run.params["n"]
    squares_max_n = run.budget("enumerate_reduced_max_n", ENUMERATE_REDUCED_MAX_N)
    autoparatopism_max_n = run.budget("autoparatopism_max_n", AUTOPARATOPISM_MAX_N)
    banner(run, f"AUTOPARATOPISM CENSUS FOR n={n}")
    census = symmetry_census(
        n,
        run.workers,
        run.budget("symmetry_max_n", SYMMETRY_MAX_N),
        run.show_progress,
        squares_max_n=squares_max_n,
        autoparatopism_max_n=autoparatopism_max_n,
    )
    print(census.to_line())
    samples = run.params.get("spot_checks") or 0
    if samples <= 0:
        return EXIT_OK
    squares = list(enumerate_reduced(n, n, max_n=squares_max_n))
    mismatches = spot_check_invariance(squares, samples, run.seed, autoparatopism_max_n)
    return report(run, [CheckResult(
        f"symmetry-invariance-n{n}", mismatches == 0, f"{samples} samples, seed {run.seed}, {mismatches} mismatches"
    )])


def reproduce_tables(run: RunConfig) -> int:
    max_n = run.params["max_n"]
    if not 1 <= max_n <= 11:
        raise UsageError(f"--max-n must be in 1..11, got {max_n}")
    banner(run, f"REPRODUCING PUBLISHED TABLES FOR n <= {max_n}")
    start_time = datetime.now()

    runner = run.runner()
    constants = PublishedConstants()
    results: List[CheckResult] = []
    reduced_rows: List[Dict] = []
    extremal_rows: List[Dict] = []
    computed_squares: Dict[int, int] = {}

    # Rows come ordered by n then k, so k == n closes each order
    for n, k, published in constants.rows():
        if n > max_n:
            break
        if 2 <= k <= n - 2:
            census = extremal_m(k, n, runner)
            value = census.reduced_count
            extremal_rows.append(census.to_dict())
            results.extend(_compare_extremal(census, constants))
        else:
            value = runner.reduced_rectangles(k, n)
        reduced_rows.append({'n': n, 'k': k, 'computed': value, 'published': published})
        results.append(CheckResult(
            f"table-n{n}-k{k}", value == published, f"computed {value}, published {published}"
        ))
        if k == n:
            computed_squares[n] = value
            if n >= 2:
                results.extend(check_divisibility(n, value, computed_squares))

    status = report(run, results)
    if run.params.get("save"):
        save_census_report(reduced_rows, extremal_rows, results, run.output_dir)
    if not run.machine:
        elapsed = datetime.now() - start_time
        print(f"\nTime elapsed: {elapsed.total_seconds():.1f}s")
        print(f"Memo entries: {len(runner.memo)}")
    return status


HANDLERS = {
    "count-rectangles": count_rectangles,
    "count-squares": count_squares,
    "census-extremal": census_extremal,
    "enumerate-graphs": enumerate_graph_classes,
    "permanent-count": permanent_count,
    "verify-published": verify,
    "factorize": factorize_value,
    "divisors": divisors,
    "symmetry-census": symmetry,
    "reproduce-tables": reproduce_tables,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv, run one subcommand and return the exit status.

    0 on success, 1 on usage errors, 2 when any verification line fails.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = load_config(args.config)
        if not os.getenv("LOG_LEVEL"):
            set_log_level(config.get("logging", {}).get("level", "INFO"))
        run_config = RunConfig.from_args(args, config)
        return HANDLERS[run_config.command](run_config)
    except UsageError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return int(e.code or 0)
    except FileNotFoundError as e:
        logger.error(f"Configuration error: {e}")
        return EXIT_USAGE
    except (LatinCensusError, ValueError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    try:
        sys.exit(run())
    except KeyboardInterrupt:
        print("\n\nInterrupted by user. Exiting...")
        sys.exit(EXIT_USAGE)
