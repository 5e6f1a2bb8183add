"""RSL 셸 모듈.

모든 연산을 위한 배치 명령행 인터페이스를 제공합니다. 데이터는 stdout 또는
--output 파일로, 진단 메시지는 stderr 로 보냅니다.
"""

import argparse
import io
import logging
import math
import sys
from typing import Any

import numpy as np

from rsl.analysis.spectral_stats import (
    DEFAULT_DROP_LOWEST,
    DEFAULT_PAIR_X_MAX,
    Histogram,
    pair_correlation,
    spacing_distribution,
    unfold,
)
from rsl.analysis.trace_formulas import (
    DEFAULT_QUAD_TOL,
    TestFunction,
    analogy_report,
    discrepancy_bound,
    explicit_formula_residual,
    gutzwiller_fluct,
    load_length_spectrum,
    primes_as_orbits,
    selberg_zeta_partial,
)
from rsl.config import setup_logger
from rsl.errors import RslError
from rsl.numtheory.primes import prime_powers, sieve
from rsl.numtheory.zero_cache import format_zero_table, load_or_compute, read_zero_table
from rsl.numtheory.zeros import (
    DEFAULT_GRID_FACTOR,
    DEFAULT_REFINE_TOL,
    MIN_T_MAX,
    fluct_correlation,
    fluct_sum,
    smooth_count,
    smoothed_fluct_sum,
    smoothed_staircase_fluct,
    staircase,
)
from rsl.numtheory.zeta import euler_product_partial, hardy_z, xi_critical, zeta_eta
from rsl.physics.landau import (
    LandauParams,
    LandauState,
    guiding_center_init,
    integrate_landau,
    landau_normal_modes,
    lll_projection,
)
from rsl.physics.spectrum import landau_spectrum
from rsl.physics.xp import count_bk, count_connes, count_landau, xp_flow
from rsl.report import TableOutput, write_json, write_table

logger = logging.getLogger(__name__)

DEFAULT_POINTS = 200
DEFAULT_SPACING_BINS = 40
DEFAULT_STEPS_PER_PERIOD = 400


def _zeros_up_to(path: str | None, t_max: float) -> Any:
    return load_or_compute(path, max(t_max, MIN_T_MAX))


def _cmd_zeros(args: argparse.Namespace) -> Any:
    table = load_or_compute(args.cache, args.t_max, args.grid_factor, args.refine_tol)
    if args.format == "json":
        return table.model_dump()
    return format_zero_table(table)


def _cmd_counts(args: argparse.Namespace) -> TableOutput:
    grid = np.linspace(args.e_max / args.points, args.e_max, args.points)
    zeros = _zeros_up_to(args.zeros, args.e_max)

    if args.model == "bk":
        values = count_bk(grid, maslov=args.maslov)
        relation = "N_bk(E) = (E/2pi)(log(E/2pi) - 1) + 1" + (
            " - 1/8" if args.maslov else ""
        )
    elif args.model == "connes":
        if args.cutoff is None:
            raise ValueError("--lambda is required for the connes model")
        values = count_connes(grid, args.cutoff)
        relation = "N_c(E) = (E/2pi) log(Lambda^2/2pi) - (E/2pi)(log(E/2pi) - 1)"
    else:
        if args.box is None or args.ell is None:
            raise ValueError("--L and --ell are required for the landau model")
        values = count_landau(grid, args.box, args.ell)
        relation = "N_L(E) = (E/2pi) log(L^2/(2pi ell^2)) - (E/2pi)(log(E/2pi) - 1)"

    stairs = staircase(grid, zeros)
    smooth = smooth_count(grid)
    rows = tuple(
        (float(e), float(v), int(n), float(s))
        for e, v, n, s in zip(grid, values, stairs, smooth, strict=True)
    )
    return TableOutput(
        columns=("E", "count", "staircase", "smooth_count"),
        rows=rows,
        comments=(
            f"quantity: semiclassical counting function ({args.model}) "
            "and zero staircase",
            "units: E is the zero height (energy in hbar*|omega_h| for landau); "
            "counts are state numbers",
            f"relation: {relation}; staircase N(E) = #{{gamma_n <= E}}; "
            "smooth_count = theta(E)/pi + 1",
        ),
    )


def _cmd_fluct(args: argparse.Namespace) -> TableOutput:
    if args.e_max <= args.e_min:
        raise ValueError("--e-max must exceed --e-min")
    n_points = int(round((args.e_max - args.e_min) / args.step)) + 1
    grid = np.linspace(args.e_min, args.e_max, n_points)
    zeros = _zeros_up_to(args.zeros, args.e_max + 8.0 * max(args.smooth, 0.0))
    table = sieve(args.p_max)

    if args.smooth > 0.0:
        formula = smoothed_fluct_sum(grid, table, args.m_max, args.smooth)
        observed = smoothed_staircase_fluct(grid, zeros, args.smooth)
        if grid.size >= 3:
            fluct_correlation(grid, zeros, table, args.m_max, args.smooth)
    else:
        formula = fluct_sum(grid, table, args.m_max)
        observed = np.asarray(staircase(grid, zeros)) - np.asarray(smooth_count(grid))

    rows = tuple(
        (float(e), float(f), float(o))
        for e, f, o in zip(grid, formula, observed, strict=True)
    )
    return TableOutput(
        columns=("E", "prime_sum", "staircase_fluct"),
        rows=rows,
        comments=(
            "quantity: fluctuating part of the zero counting function",
            f"units: E is the zero height; Gaussian smoothing width {args.smooth:g}",
            "relation: N(E) - theta(E)/pi - 1 ~ -(1/pi) sum_p sum_m "
            "sin(m E log p)/(m p^(m/2))",
            f"truncation: primes <= {args.p_max}, m <= {args.m_max}",
        ),
    )


def _histogram_table(
    histogram: Histogram, quantity: str, reference: str
) -> TableOutput:
    edges = histogram.bin_edges
    rows = tuple(
        (float(edges[i]), float(edges[i + 1]), float(d), float(r))
        for i, (d, r) in enumerate(
            zip(histogram.counts, histogram.reference, strict=True)
        )
    )
    return TableOutput(
        columns=("bin_left", "bin_right", "density", "reference_value"),
        rows=rows,
        comments=(
            f"quantity: {quantity}",
            "units: unfolded spacing (mean spacing 1)",
            f"relation: reference_value = {reference} at the bin midpoint",
            f"samples: {histogram.n_samples}",
        ),
    )


def _cmd_stats(args: argparse.Namespace) -> TableOutput:
    seq = unfold(read_zero_table(args.zeros), drop_lowest=args.drop)
    if args.kind == "spacing":
        bins = args.bins or DEFAULT_SPACING_BINS
        report = spacing_distribution(seq, bins)
        logger.info("KS statistic vs GUE surmise: %.6f", report.ks_statistic)
        table = _histogram_table(
            report.histogram,
            "nearest-neighbour spacing density of unfolded zeros",
            "(32/pi^2) s^2 exp(-4 s^2/pi)",
        )
        ks_line = f"ks_statistic: {report.ks_statistic:.12g}"
        return table.model_copy(update={"comments": (*table.comments, ks_line)})

    bins = args.bins or round(args.x_max / 0.25)
    histogram = pair_correlation(seq, args.x_max, args.x_max / bins)
    return _histogram_table(
        histogram,
        "pair correlation density of unfolded zeros per reference zero",
        "1 - (sin(pi x)/(pi x))^2",
    )


def _cmd_explicit(args: argparse.Namespace) -> Any:
    zeros = _zeros_up_to(args.zeros, args.zero_max).below(args.zero_max)
    limit = max(2, math.ceil(math.exp(args.u_max)))
    powers = prime_powers(sieve(limit), args.u_max)
    report = explicit_formula_residual(
        TestFunction(sigma=args.sigma), zeros, powers, quad_tol=args.quad_tol
    )
    payload = report.model_dump()
    payload["relation"] = (
        "sum_gamma h(gamma) = (1/2pi) int h(k) Re psi(1/4 + ik/2) dk + h(i/2) + h(-i/2)"
        " - g(0) log pi - 2 sum_(p,n) log p p^(-n/2) g(n log p)"
    )
    payload["test_function"] = "h(k) = exp(-k^2/(2 sigma^2))"
    if args.format == "csv":
        numeric = {k: v for k, v in sorted(payload.items()) if not isinstance(v, str)}
        return TableOutput(
            columns=("term", "value"),
            rows=tuple((k, v) for k, v in numeric.items()),
            comments=(
                "quantity: explicit formula residual report",
                f"relation: {payload['relation']}",
            ),
        )
    return payload


def _landau_params(args: argparse.Namespace) -> LandauParams:
    return LandauParams(
        mass=args.mu,
        charge=args.charge,
        field=args.field,
        light_speed=args.light_speed,
        coupling=args.coupling,
        hbar=args.hbar,
    )


def _cmd_landau(args: argparse.Namespace) -> TableOutput:
    if args.kind == "spectrum":
        spectrum = landau_spectrum(args.rho, args.e_max)
        return TableOutput(
            columns=("n", "E_n", "phase_residual"),
            rows=tuple(
                zip(
                    spectrum.indices,
                    spectrum.energies,
                    spectrum.residuals,
                    strict=True,
                )
            ),
            comments=(
                "quantity: boundary-quantized Landau spectrum",
                f"units: energy in {spectrum.energy_unit}; "
                f"rho = L^2/(2 ell^2) = {args.rho:g}",
                "relation: 2 Im log Gamma(1/4 + iE/2) - E log rho = -2 pi n",
                f"turning_energy: {spectrum.turning_energy:.12g}",
            ),
        )

    params = _landau_params(args)
    if args.kind == "lll":
        projection = lll_projection(params)
        return TableOutput(
            columns=("quantity", "value"),
            rows=(
                ("ell", projection.ell),
                ("omega_h_abs", projection.omega_h_abs),
                ("momentum_scale", projection.momentum_scale),
                ("energy_unit", projection.energy_unit),
                ("ratio", params.frequency_ratio),
            ),
            comments=(
                "quantity: lowest-Landau-level projection scales",
                "units: ell is a length; energy_unit is hbar*|omega_h|",
                "relation: ell^2 = hbar c/(e B), p = (hbar/ell^2) y, "
                "H_LLL = e lambda ell^2 xp / hbar",
            ),
        )

    if args.kind == "modes":
        modes = landau_normal_modes(params)
        rows = (
            ("omega_b", params.omega_b),
            ("omega_c", modes.omega_c),
            ("omega_h_abs", modes.omega_h_abs),
            ("ratio", modes.ratio),
            ("lambda_c_over_b", params.coupling * params.light_speed / params.field),
            ("magnetic_length", params.magnetic_length),
        )
        return TableOutput(
            columns=("quantity", "value"),
            rows=rows,
            comments=(
                "quantity: normal-mode frequencies of the planar Landau model",
                "units: angular frequency in inverse time units of the inputs",
                "relation: s^4 + omega_B^2 s^2 - kappa^2 = 0, omega_B = eB/(mu c), "
                "kappa = e lambda/mu",
            ),
        )

    if args.guiding_center:
        init = guiding_center_init(params, args.x0, args.y0)
    else:
        init = LandauState(x=args.x0, y=args.y0, vx=args.vx0, vy=args.vy0)
    period = 2.0 * math.pi / params.omega_c
    dt = args.dt if args.dt is not None else period / DEFAULT_STEPS_PER_PERIOD
    t_end = args.t_end if args.t_end is not None else 10.0 * period
    traj = integrate_landau(params, init, dt, t_end, every=args.every)
    energy = traj.energy
    rows = tuple(
        (float(t), float(x), float(y), float(vx), float(vy), float(e))
        for t, x, y, vx, vy, e in zip(
            traj.t, traj.x, traj.y, traj.vx, traj.vy, energy, strict=True
        )
    )
    return TableOutput(
        columns=("t", "x", "y", "vx", "vy", "energy"),
        rows=rows,
        comments=(
            "quantity: RK4 trajectory of a charged particle in field B "
            "and potential e lambda x y",
            "units: time and length in the input units",
            "relation: x'' = -omega_B y' - kappa y, y'' = omega_B x' - kappa x; "
            "energy = mu v^2/2 + e lambda x y",
        ),
    )


def _cmd_analogy(args: argparse.Namespace) -> TableOutput:
    rows = tuple(
        (row.p, row.n, row.sinh_term, row.power_term, row.rel_dev)
        for row in analogy_report(sieve(args.p_max), args.n_max)
    )
    return TableOutput(
        columns=("p", "n", "sinh_term", "power_term", "rel_dev"),
        rows=rows,
        comments=(
            "quantity: orbit amplitude versus prime-power weight",
            "units: dimensionless",
            "relation: sinh_term = 1/(2 sinh(n log p/2)), power_term = p^(-n/2), "
            "rel_dev = p^-n/(1 - p^-n)",
        ),
    )


def _cmd_selberg(args: argparse.Namespace) -> TableOutput:
    spectrum = load_length_spectrum(args.lengths)
    report = selberg_zeta_partial(spectrum, args.s, args.m_max)
    return TableOutput(
        columns=("quantity", "value"),
        rows=(
            ("re", report.value.real),
            ("im", report.value.imag),
            ("abs", abs(report.value)),
            ("truncation_bound", report.truncation_bound),
            ("lengths", report.length_count),
            ("m_max", report.m_max),
        ),
        comments=(
            "quantity: truncated Selberg zeta product",
            f"units: dimensionless; s = {format(args.s)}",
            "relation: Z(s) = prod_l prod_(m=0..m_max) (1 - exp(-l (s + m)))",
        ),
    )


def _cmd_zeta(args: argparse.Namespace) -> TableOutput:
    if args.kind == "critical":
        grid = np.linspace(args.e_max / args.points, args.e_max, args.points)
        rows = tuple(
            (float(e), float(z), float(v))
            for e, z, v in zip(grid, hardy_z(grid), xi_critical(grid), strict=True)
        )
        return TableOutput(
            columns=("E", "hardy_z", "xi_critical"),
            rows=rows,
            comments=(
                "quantity: Hardy Z and xi on the critical line",
                "units: E is the height t of s = 1/2 + it",
                "relation: xi(1/2 + iE) = -(E^2 + 1/4)/2 pi^(-1/4) "
                "|Gamma(1/4 + iE/2)| Z(E)",
            ),
        )

    values = [euler_product_partial(args.s, sieve(limit)) for limit in args.limits]
    target = complex(zeta_eta(args.s))
    rows = tuple(
        (limit, v.real, v.imag, abs(v - target))
        for limit, v in zip(args.limits, values, strict=True)
    )
    return TableOutput(
        columns=("limit", "re", "im", "abs_dev"),
        rows=rows,
        comments=(
            "quantity: partial Euler product against the eta-series zeta",
            f"units: dimensionless; s = {format(args.s)}",
            "relation: prod_(p <= limit) (1 - p^-s)^-1 -> zeta(s) for Re s > 1",
        ),
    )


def _cmd_orbits(args: argparse.Namespace) -> TableOutput:
    if args.e_max <= args.e_min:
        raise ValueError("--e-max must exceed --e-min")
    n_points = int(round((args.e_max - args.e_min) / args.step)) + 1
    grid = np.linspace(args.e_min, args.e_max, n_points)
    table = sieve(args.p_max)
    orbit_sum = np.asarray(gutzwiller_fluct(primes_as_orbits(table), grid, args.m_max))
    prime_sum = np.asarray(fluct_sum(grid, table, args.m_max))
    rows = tuple(
        (float(e), float(o), float(p), float(o + p))
        for e, o, p in zip(grid, orbit_sum, prime_sum, strict=True)
    )
    bound = discrepancy_bound(table, args.m_max)
    return TableOutput(
        columns=("E", "orbit_sum", "prime_sum", "discrepancy"),
        rows=rows,
        comments=(
            "quantity: periodic-orbit sum with primes as orbits (T = lambda = log p)",
            "units: E is the energy (zero height); sums are state numbers",
            "relation: orbit_sum = (1/pi) sum_p sum_m sin(m E log p)"
            "/(2m sinh(m log p/2)); discrepancy = orbit_sum + prime_sum",
            f"discrepancy_bound: {bound:.12g}",
        ),
    )


def _cmd_flow(args: argparse.Namespace) -> TableOutput:
    times = np.linspace(0.0, args.t_end, args.points)
    points = [xp_flow(args.x0, args.p0, float(t)) for t in times]
    rows = tuple(
        (float(t), pt.x, pt.p, pt.energy) for t, pt in zip(times, points, strict=True)
    )
    return TableOutput(
        columns=("t", "x", "p", "energy"),
        rows=rows,
        comments=(
            "quantity: classical flow of H = xp",
            "units: dimensionless phase-space coordinates",
            "relation: x(t) = x0 e^t, p(t) = p0 e^-t, energy = x p",
        ),
    )


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=default if suppress else 0,
        help="INFO with -v, DEBUG with -vv",
    )
    parser.add_argument(
        "--output", default=default if suppress else None, help="output path (stdout)"
    )
    parser.add_argument(
        "--format",
        choices=("csv", "json"),
        default=default if suppress else None,
        help="output format",
    )


def _add_landau_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--mu", type=float, default=1.0, help="mass")
    parser.add_argument("--charge", type=float, default=1.0, help="charge e")
    parser.add_argument("--field", type=float, default=1.0, help="magnetic field B")
    parser.add_argument("--light-speed", type=float, default=1.0, help="light speed c")
    parser.add_argument(
        "--coupling", type=float, default=0.01, help="saddle coupling lambda"
    )
    parser.add_argument("--hbar", type=float, default=1.0, help="Planck constant")


def build_parser() -> argparse.ArgumentParser:
    """rsl 명령행 파서를 만듭니다."""
    parser = argparse.ArgumentParser(prog="rsl", description="Riemann spectral lab")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    zeros = sub.add_parser("zeros", help="locate zeros of Z(t)")
    _add_common(zeros, suppress=True)
    zeros.add_argument("--t-max", type=float, required=True)
    zeros.add_argument("--cache", help="zero table cache path")
    zeros.add_argument("--grid-factor", type=float, default=DEFAULT_GRID_FACTOR)
    zeros.add_argument("--refine-tol", type=float, default=DEFAULT_REFINE_TOL)
    zeros.set_defaults(handler=_cmd_zeros)

    counts = sub.add_parser("counts", help="semiclassical counting functions")
    _add_common(counts, suppress=True)
    counts.add_argument("--model", choices=("bk", "connes", "landau"), required=True)
    counts.add_argument("--lambda", dest="cutoff", type=float)
    counts.add_argument("--L", dest="box", type=float)
    counts.add_argument("--ell", type=float)
    counts.add_argument("--e-max", type=float, required=True)
    counts.add_argument("--points", type=int, default=DEFAULT_POINTS)
    counts.add_argument("--maslov", action="store_true")
    counts.add_argument("--zeros", help="zero table cache path")
    counts.set_defaults(handler=_cmd_counts)

    fluct = sub.add_parser("fluct", help="prime-sum fluctuation versus staircase")
    _add_common(fluct, suppress=True)
    fluct.add_argument("--e-min", type=float, required=True)
    fluct.add_argument("--e-max", type=float, required=True)
    fluct.add_argument("--p-max", type=int, default=10_000)
    fluct.add_argument("--m-max", type=int, default=5)
    fluct.add_argument("--smooth", type=float, default=0.2)
    fluct.add_argument("--step", type=float, default=0.05)
    fluct.add_argument("--zeros", help="zero table cache path")
    fluct.set_defaults(handler=_cmd_fluct)

    stats = sub.add_parser("stats", help="GUE spacing and pair statistics")
    _add_common(stats, suppress=True)
    stats.add_argument("kind", choices=("spacing", "paircorr"))
    stats.add_argument("--zeros", required=True, help="zero table file")
    stats.add_argument("--bins", type=int)
    stats.add_argument("--drop", type=int, default=DEFAULT_DROP_LOWEST)
    stats.add_argument("--x-max", type=float, default=DEFAULT_PAIR_X_MAX)
    stats.set_defaults(handler=_cmd_stats)

    explicit = sub.add_parser("explicit", help="explicit formula residual report")
    _add_common(explicit, suppress=True)
    explicit.add_argument("--sigma", type=float, default=5.0)
    explicit.add_argument("--zero-max", type=float, default=60.0)
    explicit.add_argument("--u-max", type=float, default=3.0)
    explicit.add_argument("--quad-tol", type=float, default=DEFAULT_QUAD_TOL)
    explicit.add_argument("--zeros", help="zero table cache path")
    explicit.set_defaults(handler=_cmd_explicit)

    landau = sub.add_parser("landau", help="Landau model modes, dynamics, spectrum")
    _add_common(landau, suppress=True)
    landau.add_argument("kind", choices=("modes", "trajectory", "spectrum", "lll"))
    _add_landau_params(landau)
    landau.add_argument("--x0", type=float, default=1.0)
    landau.add_argument("--y0", type=float, default=1.0)
    landau.add_argument("--vx0", type=float, default=0.0)
    landau.add_argument("--vy0", type=float, default=0.0)
    landau.add_argument("--dt", type=float)
    landau.add_argument("--t-end", type=float)
    landau.add_argument("--every", type=int, default=1)
    landau.add_argument("--guiding-center", action="store_true")
    landau.add_argument("--rho", type=float, default=1000.0)
    landau.add_argument("--e-max", type=float, default=100.0)
    landau.set_defaults(handler=_cmd_landau)

    analogy = sub.add_parser("analogy", help="sinh versus power-law amplitudes")
    _add_common(analogy, suppress=True)
    analogy.add_argument("--p-max", type=int, required=True)
    analogy.add_argument("--n-max", type=int, default=1)
    analogy.set_defaults(handler=_cmd_analogy)

    selberg = sub.add_parser("selberg", help="truncated Selberg zeta product")
    _add_common(selberg, suppress=True)
    selberg.add_argument("--lengths", required=True, help="length spectrum file")
    selberg.add_argument("--s", type=complex, required=True)
    selberg.add_argument("--m-max", type=int, default=10)
    selberg.set_defaults(handler=_cmd_selberg)

    zeta = sub.add_parser("zeta", help="critical-line values and Euler products")
    _add_common(zeta, suppress=True)
    zeta.add_argument("kind", choices=("critical", "euler"))
    zeta.add_argument("--e-max", type=float, default=50.0)
    zeta.add_argument("--points", type=int, default=DEFAULT_POINTS)
    zeta.add_argument("--s", type=complex, default=2.0)
    zeta.add_argument("--limits", type=int, nargs="+", default=[100, 1000, 10_000])
    zeta.set_defaults(handler=_cmd_zeta)

    orbits = sub.add_parser("orbits", help="periodic-orbit sum with primes as orbits")
    _add_common(orbits, suppress=True)
    orbits.add_argument("--e-min", type=float, required=True)
    orbits.add_argument("--e-max", type=float, required=True)
    orbits.add_argument("--p-max", type=int, default=10_000)
    orbits.add_argument("--m-max", type=int, default=5)
    orbits.add_argument("--step", type=float, default=0.05)
    orbits.set_defaults(handler=_cmd_orbits)

    flow = sub.add_parser("flow", help="classical flow of H = xp")
    _add_common(flow, suppress=True)
    flow.add_argument("--x0", type=float, default=1.0)
    flow.add_argument("--p0", type=float, default=1.0)
    flow.add_argument("--t-end", type=float, default=1.0)
    flow.add_argument("--points", type=int, default=11)
    flow.set_defaults(handler=_cmd_flow)

    return parser


def _emit(result: Any, fmt: str, out: io.StringIO) -> None:
    if isinstance(result, str):
        out.write(result)
    elif isinstance(result, TableOutput):
        write_table(result, fmt, out)
    else:
        write_json(result, out)


def main(argv: list[str] | None = None) -> int:
    """명령행 진입점.

    Args:
        argv: 인자 목록. None 이면 sys.argv[1:].

    Returns:
        종료 코드 (성공 0, 실행 오류 1). 사용법 오류는 argparse 가 2 로 종료합니다.
    """
    args = build_parser().parse_args(argv)
    level = {0: None, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    setup_logger(level)
    logging.captureWarnings(True)

    fmt = args.format or ("json" if args.command == "explicit" else "csv")
    args.format = fmt
    buffer = io.StringIO()
    try:
        _emit(args.handler(args), fmt, buffer)
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="\n") as f:
                f.write(buffer.getvalue())
        else:
            sys.stdout.write(buffer.getvalue())
    except (RslError, ValueError, OSError) as e:
        message = " ".join(str(e).split()) or type(e).__name__
        print(f"rsl: error: {message}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
