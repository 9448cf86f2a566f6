import argparse
import logging
import os
import sys

from ..errors import ConfigurationError, SincDqmError
from ..integrators import IntegratorId
from .case_runner import emit_solution_csv
from .config import CaseConfig, HarnessConfig
from .convergence import run_convergence
from .reference_tables import REFERENCE_TABLES
from .runner import BenchmarkRunner
from .table_report import reproduce_table

__all__ = ["build_parser", "main"]

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_CONFIGURATION_ERROR = 2

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sinc-dqm",
                                     description="Sinc differential quadrature solver for the advection-dispersion equation.")
    parser.add_argument("--log-level", help="overrides SINC_DQM_LOG_LEVEL")
    parser.add_argument("--workers", type=int, help="overrides SINC_DQM_WORKERS")
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="run a single case from a configuration file")
    solve.add_argument("--config", required=True, help="flat 'key = value' case file")
    solve.add_argument("--sample-every", type=int, help="error-time sampling interval in steps")

    table = commands.add_parser("table", help="reproduce a reference error table")
    table.add_argument("--id", dest="table_id", type=int, required=True, choices=sorted(REFERENCE_TABLES))
    table.add_argument("--csv", help="path of the machine-readable report (default: <output dir>/table_<id>.csv)")

    convergence = commands.add_parser("convergence", help="tabulate errors over a grid of mesh and time steps")
    convergence.add_argument("--problem", required=True)
    convergence.add_argument("--method", required=True, choices=[method.value for method in IntegratorId],
                             type=str.upper)
    convergence.add_argument("--dx-list", type=float, nargs="+", required=True)
    convergence.add_argument("--dt-list", type=float, nargs="+", required=True)
    convergence.add_argument("--csv", help="path of the error grid CSV (default: <output dir>/convergence_<problem>_<method>.csv)")

    return parser

def _output_path(runner : BenchmarkRunner, path, default_name : str) -> str:
    if path is None:
        os.makedirs(runner.config.output_dir, exist_ok=True)
        path = os.path.join(runner.config.output_dir, default_name)
    return path

def solve(args, runner : BenchmarkRunner) -> int:
    case = CaseConfig.from_file(args.config)
    if args.sample_every is not None:
        if args.sample_every < 1:
            raise ConfigurationError(f"Sampling interval must be at least one step, got {args.sample_every}.")
        runner.config.sample_every[case.problem] = args.sample_every

    report = runner.run_cases([case], description="solve")[0]

    print(f"case: {case.describe()}")
    print(f"grid: {report.grid}")
    print(f"status: {report.status}")
    print(f"steps: {report.steps_taken} / {report.n_steps}")
    if report.completed:
        print(f"linf: {report.linf:.17g} (node {report.final_error.argmax_node})")
        if case.out:
            emit_solution_csv(report)
        return EXIT_PASS
    print(f"diverged at step: {report.diverged_at_step}")
    return EXIT_FAIL

def table(args, runner : BenchmarkRunner) -> int:
    report = reproduce_table(args.table_id, runner)
    sys.stdout.write(report.render())
    report.write_csv(_output_path(runner, args.csv, f"table_{args.table_id}.csv"))
    return EXIT_PASS if report.all_passed else EXIT_FAIL

def convergence(args, runner : BenchmarkRunner) -> int:
    report = run_convergence(args.problem, args.method, args.dx_list, args.dt_list, runner)
    sys.stdout.write(report.render())
    report.write_csv(_output_path(runner, args.csv, f"convergence_{report.problem}_{report.method}.csv"))
    return EXIT_PASS

COMMANDS = { "solve": solve, "table": table, "convergence": convergence }

def main(argv = None) -> int:
    args = build_parser().parse_args(argv)
    logger = logging.getLogger("sinc_dqm")
    try:
        config = HarnessConfig().load_config()
        if args.log_level:
            config.log_level = logging.getLevelName(args.log_level.upper())
            if not isinstance(config.log_level, int):
                raise ConfigurationError(f"Unknown log level '{args.log_level}'.")
        if args.workers is not None:
            if args.workers < 1:
                raise ConfigurationError(f"Worker count must be at least 1, got {args.workers}.")
            config.workers = args.workers
        runner = BenchmarkRunner(config)
        return COMMANDS[args.command](args, runner)
    except SincDqmError as error:
        logging.basicConfig(format='[%(asctime)s] %(name)s - %(levelname)s: %(message)s')
        logger.error(str(error))
        return EXIT_CONFIGURATION_ERROR
    except OSError as error:
        logger.error(f"Unable to access '{error.filename}': {error.strerror}")
        return EXIT_CONFIGURATION_ERROR
