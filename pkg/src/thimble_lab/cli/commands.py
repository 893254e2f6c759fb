# -------------------------------------------
# Module containing the command implementations of the thimble-lab command line.
# Every command returns its rendered output with an exit code; nothing is written here,
# so the caller emits each output once (stdout or an atomically replaced file).
# -------------------------------------------
import csv
import io
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Sequence, Tuple, Union
import matplotlib.pyplot as plt
from thimble_lab.homology.monodromy import (
    LoopLabel,
    LatticeAutomorphism,
    monodromy_around,
    content,
    is_unipotent_conjugate,
)
from thimble_lab.periods.thimble_integrals import ThimbleIntegral, thimble_integral
from thimble_lab.periods.monodromy_recovery import MonodromyRecovery, numeric_monodromy
from thimble_lab.periods.appendix_contours import (
    APPENDIX_AGREEMENT_TOLERANCE,
    AppendixReport,
    verify_appendix_contours,
)
from thimble_lab.affine_syz.affine_chart import AffineChartSample, export_chart
from thimble_lab.affine_syz.ray_tracing import RayKind, trace_ray
from thimble_lab.affine_syz.triple_point import find_triple_point
from thimble_lab.cps_model.isomorphism import TOTAL_SHEAR, IsomorphismReport, verify_isomorphism
from thimble_lab.mirror_atlas.charts import ImmersedChartPoint, sample_torus_points
from thimble_lab.mirror_atlas.superpotential import eval_W, fiber_equation_check, chart_agreement
from thimble_lab.mirror_atlas.relations import CubicConstancy, cubic_constancy, symbolic_cubic_constant
from thimble_lab.visualization.display_figures import (
    plot_cps_atlas,
    plot_orientation,
    plot_affine_grid,
    plot_mirror_atlas,
    svg_bytes,
)
from thimble_lab.cli.run_config import RunConfig
from thimble_lab.utilities.readwrite_json import dumps_json, format_real, format_complex
from thimble_lab.utilities.custom_exceptions import (
    InvalidArgumentException,
    MatrixMismatchException,
    SignConditionViolatedException,
    DeformationMismatchException,
)

SCHEMA_VERSION: int = 1
EXIT_OK: int = 0
EXIT_VERIFY_FAILED: int = 1
EXIT_NUMERIC_FAILURE: int = 2
EXIT_BAD_INPUT: int = 3
FIGURE_NAMES: Tuple[str, ...] = ('orientation', 'cps', 'affine-grid', 'atlas')
VERIFY_SUITES: Tuple[str, ...] = ('appendix', 'gluing', 'iso')
APPENDIX_POINTS: Tuple[float, ...] = (1.5, -2.0)
MIN_SIGN_SAMPLES: int = 200
CHART_AGREEMENT_TOLERANCE: float = 1e-12
CUBIC_SPREAD_TOLERANCE: float = 1e-10
FIBER_SAMPLE_COUNT: int = 100
DEFAULT_WINDOW: Tuple[float, float, float, float] = (-6.0, 6.0, -6.0, 6.0)
DEFAULT_RESOLUTION: Tuple[int, int] = (21, 21)
DEFAULT_SAMPLES: int = 1000


@dataclass(frozen=True)
class CommandResult:
    """
    Data class, exit code and rendered output of a command with human-readable summary lines for stderr.
    """
    exit_code: int
    content: Union[str, bytes]
    summary: Tuple[str, ...] = field(default=())


@dataclass(frozen=True)
class VerificationCheck:
    """
    Data class, outcome of a single assertion of a verification suite.
    """
    suite: str
    name: str
    passed: bool
    detail: Dict[str, object] = field(default_factory=dict)

    # region Class Methods
    def to_dict(self) -> dict:
        return {'suite': self.suite, 'name': self.name, 'passed': self.passed, 'detail': self.detail}

    def __str__(self) -> str:
        details: str = ', '.join(f'{key}={value}' for key, value in sorted(self.detail.items()))
        return f"{'PASS' if self.passed else 'FAIL'} {self.suite}/{self.name}" + (f": {details}" if details else '')
    # endregion


# region Argument Parsing
def parse_complex(text: str) -> complex:
    """:return: Complex number from 're,im' (a bare real part is accepted)."""
    parts: List[str] = [part.strip() for part in str(text).split(',')]
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError as exception:
        raise InvalidArgumentException(f"Could not parse '{text}' as 're,im'.") from exception
    raise InvalidArgumentException(f"Could not parse '{text}' as 're,im'.")


def parse_tuple(text: str, count: int, cast: Callable[[str], Union[int, float]]) -> tuple:
    """:return: Comma separated values cast to the given type, exactly count of them."""
    parts: List[str] = [part.strip() for part in str(text).split(',')]
    if len(parts) != count:
        raise InvalidArgumentException(f"Expected {count} comma separated values, got '{text}'.")
    try:
        return tuple(cast(part) for part in parts)
    except ValueError as exception:
        raise InvalidArgumentException(f"Could not parse '{text}'.") from exception


def parse_loop_label(text: str) -> LoopLabel:
    if text.lower() in ('inf', 'infinity'):
        return LoopLabel.INFINITY
    try:
        return LoopLabel.from_name(text)
    except ValueError as exception:
        raise InvalidArgumentException(str(exception)) from exception
# endregion


def _payload(command: str, **content) -> dict:
    return {'schema_version': SCHEMA_VERSION, 'command': command, **content}


def _require_json(config: RunConfig, command: str) -> None:
    if config.output_format != 'json':
        raise InvalidArgumentException(f"Command '{command}' only emits json, got format '{config.output_format}'.")


def cmd_periods(j: int, q: complex, config: RunConfig) -> CommandResult:
    """:return: Thimble integral G_j(q) along the default thimble path as JSON."""
    _require_json(config, 'periods')
    integral: ThimbleIntegral = thimble_integral(j, q, tol=config.tol, clearance=config.path_clearance)
    payload: dict = _payload(
        'periods',
        j=integral.j,
        q=format_complex(q),
        value=format_complex(integral.value),
        error=format_real(integral.error),
        n_evals=integral.n_evaluations,
    )
    return CommandResult(exit_code=EXIT_OK, content=dumps_json(payload), summary=(f"G_{integral.j}({q}) = {integral.value:.12g}",))


def _matches_expectation(label: LoopLabel, matrix: LatticeAutomorphism) -> bool:
    if label == LoopLabel.INFINITY:
        return is_unipotent_conjugate(matrix, TOTAL_SHEAR)
    return matrix.entries == monodromy_around(label).entries


def cmd_monodromy(around: str, config: RunConfig) -> CommandResult:
    """:return: Numerically recovered monodromy with its certification data as JSON."""
    _require_json(config, 'monodromy')
    label: LoopLabel = parse_loop_label(around)
    recovery: MonodromyRecovery = numeric_monodromy(label, tol=config.tol, clearance=config.path_clearance)
    matrix: LatticeAutomorphism = recovery.matrix
    payload: dict = _payload(
        'monodromy',
        around=label.value,
        matrix=matrix.as_lists(),
        raw_matrix=[[format_real(value) for value in row] for row in recovery.raw_matrix],
        residual=format_real(recovery.residual),
        error_bound=format_real(recovery.error_bound),
        trace=int(matrix.trace),
        content=content(matrix),
        expected=None if label == LoopLabel.INFINITY else monodromy_around(label).as_lists(),
        matches=_matches_expectation(label, matrix),
    )
    return CommandResult(exit_code=EXIT_OK, content=dumps_json(payload), summary=(f"M_{label.value} = {matrix.as_lists()}",))


# region Figures
def affine_chart_csv(samples: Sequence[AffineChartSample]) -> str:
    """:return: CSV text with one row per sample (re, im, chamber_id, f_c, f_d, failure)."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['re', 'im', 'chamber_id', 'f_c', 'f_d', 'failure'])
    for sample in samples:
        f_c, f_d = (format_real(value) for value in sample.f) if sample.succeeded else ('', '')
        writer.writerow([format_real(sample.q.real), format_real(sample.q.imag), sample.chamber_id, f_c, f_d, sample.failure or ''])
    return buffer.getvalue()


def _render(figure: plt.Figure) -> bytes:
    try:
        return svg_bytes(figure)
    finally:
        plt.close(figure)


def cmd_figure(
        name: str,
        config: RunConfig,
        window: Tuple[float, float, float, float] = DEFAULT_WINDOW,
        resolution: Tuple[int, int] = DEFAULT_RESOLUTION,
        samples: int = DEFAULT_SAMPLES) -> CommandResult:
    """
    :param name: One of orientation, cps, affine-grid, atlas.
    :return: SVG bytes, or CSV text for the affine grid with format csv.
    """
    if name not in FIGURE_NAMES:
        raise InvalidArgumentException(f"Unknown figure '{name}', expected one of {FIGURE_NAMES}.")
    output_format: str = 'svg' if config.output_format == 'json' else config.output_format
    if output_format == 'csv' and name != 'affine-grid':
        raise InvalidArgumentException(f"Figure '{name}' has no csv form.")

    if name == 'cps':
        fig, _ = plot_cps_atlas()
    elif name == 'orientation':
        triple = find_triple_point(tol=config.tol)
        rays = [
            trace_ray(kind, tol=config.tol, clearance=config.path_clearance, detour_radius=config.detour_radius)
            for kind in RayKind
        ]
        fig, _ = plot_orientation(rays, triple_point=triple)
    elif name == 'affine-grid':
        chart: List[AffineChartSample] = export_chart(
            window,
            resolution,
            tol=config.tol,
            clearance=config.path_clearance,
            detour_radius=config.detour_radius,
            threads=config.threads,
        )
        failures: int = sum(1 for sample in chart if not sample.succeeded)
        summary: Tuple[str, ...] = (f"{len(chart)} samples, {failures} failed",)
        if output_format == 'csv':
            return CommandResult(exit_code=EXIT_OK, content=affine_chart_csv(chart), summary=summary)
        fig, _ = plot_affine_grid(chart)
        return CommandResult(exit_code=EXIT_OK, content=_render(fig), summary=summary)
    else:
        if samples < 1:
            raise InvalidArgumentException(f"Sample count must be positive, got {samples}.")
        fig, _ = plot_mirror_atlas(sample_torus_points(samples, seed=config.seed))
    return CommandResult(exit_code=EXIT_OK, content=_render(fig), summary=(f"figure {name}",))
# endregion


# region Verification Suites
def verify_appendix_suite(config: RunConfig, samples: int) -> List[VerificationCheck]:
    checks: List[VerificationCheck] = []
    for q in APPENDIX_POINTS:
        name: str = f'q={q:g}'
        try:
            report: AppendixReport = verify_appendix_contours(q)
        except (SignConditionViolatedException, DeformationMismatchException) as exception:
            checks.append(VerificationCheck(suite='appendix', name=name, passed=False, detail={'reason': str(exception)}))
            continue
        checks.append(VerificationCheck(
            suite='appendix',
            name=f'{name} sign samples',
            passed=report.sample_count >= MIN_SIGN_SAMPLES,
            detail={'case': report.case, 'sample_count': report.sample_count},
        ))
        checks.append(VerificationCheck(
            suite='appendix',
            name=f'{name} deformed integral',
            passed=report.relative_difference <= APPENDIX_AGREEMENT_TOLERANCE,
            detail={'relative_difference': format_real(report.relative_difference)},
        ))
    return checks


def verify_gluing_suite(config: RunConfig, samples: int) -> List[VerificationCheck]:
    points = sample_torus_points(samples, seed=config.seed)
    agreement: float = chart_agreement(points)
    fiber_residual: float = max(
        (fiber_equation_check(value, ImmersedChartPoint(i=1, u=value, v=0)) for value in (eval_W(point) for point in points[:FIBER_SAMPLE_COUNT])),
        default=0.0,
    )
    constancy: CubicConstancy = cubic_constancy(points)
    symbolic: complex = complex(symbolic_cubic_constant())
    return [
        VerificationCheck(
            suite='gluing',
            name='chart agreement',
            passed=agreement <= CHART_AGREEMENT_TOLERANCE,
            detail={'max_relative_discrepancy': format_real(agreement), 'samples': len(points)},
        ),
        VerificationCheck(
            suite='gluing',
            name='section on fiber',
            passed=fiber_residual == 0.0,
            detail={'max_residual': format_real(fiber_residual)},
        ),
        VerificationCheck(
            suite='gluing',
            name='cubic relation constant',
            passed=constancy.spread <= CUBIC_SPREAD_TOLERANCE and abs(constancy.constant - symbolic) <= CUBIC_SPREAD_TOLERANCE * abs(symbolic),
            detail={'constant': format_complex(constancy.constant), 'symbolic': format_complex(symbolic), 'spread': format_real(constancy.spread)},
        ),
    ]


def verify_iso_suite(config: RunConfig, samples: int) -> List[VerificationCheck]:
    try:
        report: IsomorphismReport = verify_isomorphism()
    except MatrixMismatchException as exception:
        return [VerificationCheck(suite='iso', name='transpose identities', passed=False, detail={'reason': str(exception)})]
    checks: List[VerificationCheck] = [
        VerificationCheck(
            suite='iso',
            name=f'transpose {check.label.value}',
            passed=check.matches,
            detail={'transpose': check.transpose.as_lists(), 'glue': check.glue.as_lists()},
        )
        for check in report.matrix_checks
    ]
    checks.extend(
        VerificationCheck(
            suite='iso',
            name=f'cut direction {check.label.value}',
            passed=check.matches,
            detail={'vanishing_class': list(check.vanishing_class.coeffs)},
        )
        for check in report.direction_checks
    )
    checks.append(VerificationCheck(
        suite='iso',
        name='encircling holonomy',
        passed=report.encircling_matches,
        detail={'linear_part': report.encircling_holonomy.linear_part().as_lists()},
    ))
    return checks


SUITE_RUNNERS: Dict[str, Callable[[RunConfig, int], List[VerificationCheck]]] = {
    'appendix': verify_appendix_suite,
    'gluing': verify_gluing_suite,
    'iso': verify_iso_suite,
}


def cmd_verify(suite: str, config: RunConfig, samples: int = DEFAULT_SAMPLES) -> CommandResult:
    """:return: Verification report as JSON; exit 1 when any assertion of the selected suites fails."""
    _require_json(config, 'verify')
    if suite != 'all' and suite not in VERIFY_SUITES:
        raise InvalidArgumentException(f"Unknown suite '{suite}', expected 'all' or one of {VERIFY_SUITES}.")
    if samples < 1:
        raise InvalidArgumentException(f"Sample count must be positive, got {samples}.")
    checks: List[VerificationCheck] = []
    for name in (VERIFY_SUITES if suite == 'all' else (suite,)):
        checks.extend(SUITE_RUNNERS[name](config, samples))
    failures: List[VerificationCheck] = [check for check in checks if not check.passed]
    payload: dict = _payload(
        'verify',
        suite=suite,
        seed=config.seed,
        passed=not failures,
        checks=[check.to_dict() for check in checks],
        first_failure=None if not failures else f'{failures[0].suite}/{failures[0].name}',
    )
    verdict: str = 'PASS' if not failures else f'FAIL at {failures[0].suite}/{failures[0].name}'
    return CommandResult(
        exit_code=EXIT_OK if not failures else EXIT_VERIFY_FAILED,
        content=dumps_json(payload),
        summary=tuple(str(check) for check in checks) + (verdict,),
    )
# endregion
