# -------------------------------------------
# Entry point of the thimble-lab command line.
# Exit codes: 0 success, 1 failed verification, 2 numerical failure
# (non-convergence, uncertified lattice rounding, lost trace), 3 invalid input.
# -------------------------------------------
import argparse
import sys
from pathlib import Path
from typing import List, Optional, Union
from thimble_lab.cli.run_config import OUTPUT_FORMATS, RunConfig, RunConfigManager
from thimble_lab.cli.commands import (
    EXIT_BAD_INPUT,
    EXIT_NUMERIC_FAILURE,
    FIGURE_NAMES,
    VERIFY_SUITES,
    DEFAULT_SAMPLES,
    CommandResult,
    parse_complex,
    parse_tuple,
    cmd_periods,
    cmd_monodromy,
    cmd_figure,
    cmd_verify,
)
from thimble_lab.utilities.custom_context_managers import atomic_write
from thimble_lab.utilities.custom_exceptions import (
    InvalidArgumentException,
    NonConvergenceException,
    LatticeRecognitionFailedException,
    TraceLostException,
    BracketNotFoundException,
    PathExitsDomainException,
    NearCriticalValueException,
    OnBranchPointException,
    SingularityOnPathException,
    OnExcludedLocusException,
)

NUMERIC_FAILURES = (
    NonConvergenceException,
    LatticeRecognitionFailedException,
    TraceLostException,
    BracketNotFoundException,
)
INPUT_FAILURES = (
    InvalidArgumentException,
    PathExitsDomainException,
    NearCriticalValueException,
    OnBranchPointException,
    SingularityOnPathException,
    OnExcludedLocusException,
    FileNotFoundError,
    TypeError,
    ValueError,
)


class ArgumentParser(argparse.ArgumentParser):
    """
    Behaviour class, argument parser raising InvalidArgumentException instead of exiting.
    """

    # region Class Methods
    def error(self, message: str):
        raise InvalidArgumentException(message)
    # endregion


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument('--tol', type=float, default=None, help="Quadrature tolerance (default from config, 1e-9).")
    common.add_argument('--clearance', type=float, default=None, help="Minimal distance of base paths to the critical values.")
    common.add_argument('--seed', type=int, default=None, help="Seed of sampled computations.")
    common.add_argument('--out', type=str, default=None, help="Output file, replaced atomically. Defaults to stdout.")
    common.add_argument('--config', type=str, default=None, help="Run-config yaml file.")
    common.add_argument('--format', type=str, default=None, choices=OUTPUT_FORMATS, help="Output format.")

    parser = ArgumentParser(prog='thimble-lab', description="Periods, monodromy and affine structure of the fibration t1 + t2 + 1/(t1 t2).")
    subparsers = parser.add_subparsers(dest='command', required=True)

    periods = subparsers.add_parser('periods', parents=[common], help="Thimble integral G_j(q).")
    periods.add_argument('--j', type=int, default=0, help="Thimble index.")
    periods.add_argument('--q', type=str, required=True, help="Target point as 're,im' (use --q=-2,0 for negative real parts).")

    monodromy = subparsers.add_parser('monodromy', parents=[common], help="Numerically recovered monodromy.")
    monodromy.add_argument('--around', type=str, required=True, help="A, B, C or inf.")

    figure = subparsers.add_parser('figure', parents=[common], help="SVG figure or CSV data.")
    figure.add_argument('--name', type=str, required=True, help=f"One of {', '.join(FIGURE_NAMES)}.")
    figure.add_argument('--resolution', type=str, default='21,21', help="Affine grid resolution 'NX,NY'.")
    figure.add_argument('--window', type=str, default='-6,6,-6,6', help="Affine grid window 'RE0,RE1,IM0,IM1'.")
    figure.add_argument('--samples', type=int, default=DEFAULT_SAMPLES, help="Sample count of the atlas figure.")

    verify = subparsers.add_parser('verify', parents=[common], help="Verification suites.")
    verify.add_argument('--suite', type=str, default='all', choices=('all',) + VERIFY_SUITES)
    verify.add_argument('--samples', type=int, default=DEFAULT_SAMPLES, help="Sample count of the gluing suite.")
    return parser


def resolve_config(arguments: argparse.Namespace) -> RunConfig:
    """:return: Run config from the config file with the command line flags applied."""
    config: RunConfig = RunConfigManager.read_config(config_path=arguments.config)
    return config.with_overrides(
        tol=arguments.tol,
        path_clearance=arguments.clearance,
        seed=arguments.seed,
        output_format=arguments.format,
        output_path=arguments.out,
    )


def run_command(arguments: argparse.Namespace, config: RunConfig) -> CommandResult:
    if arguments.command == 'periods':
        return cmd_periods(arguments.j, parse_complex(arguments.q), config)
    if arguments.command == 'monodromy':
        return cmd_monodromy(arguments.around, config)
    if arguments.command == 'figure':
        return cmd_figure(
            arguments.name,
            config,
            window=parse_tuple(arguments.window, 4, float),
            resolution=parse_tuple(arguments.resolution, 2, int),
            samples=arguments.samples,
        )
    return cmd_verify(arguments.suite, config, samples=arguments.samples)


def emit(result: CommandResult, config: RunConfig) -> None:
    """Writes the command output once, to stdout or atomically to the output path."""
    for line in result.summary:
        print(line, file=sys.stderr)
    if config.writes_stdout:
        if isinstance(result.content, bytes):
            sys.stdout.buffer.write(result.content)
            sys.stdout.flush()
        else:
            sys.stdout.write(result.content)
        return
    mode: str = 'wb' if isinstance(result.content, bytes) else 'w'
    with atomic_write(Path(config.output_path), mode=mode) as handle:
        handle.write(result.content)


def main(argv: Optional[List[str]] = None) -> int:
    """
    :param argv: Command line arguments without the program name, defaults to sys.argv[1:].
    :return: Exit code.
    """
    try:
        arguments: argparse.Namespace = build_parser().parse_args(argv)
        config: RunConfig = resolve_config(arguments)
        result: CommandResult = run_command(arguments, config)
    except NUMERIC_FAILURES as exception:
        print(f"error: {type(exception).__name__}: {exception}", file=sys.stderr)
        return EXIT_NUMERIC_FAILURE
    except INPUT_FAILURES as exception:
        print(f"error: {type(exception).__name__}: {exception}", file=sys.stderr)
        return EXIT_BAD_INPUT
    emit(result, config)
    return result.exit_code


if __name__ == '__main__':
    sys.exit(main())
