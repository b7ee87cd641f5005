"""Cross-form, transform, normalization and inequality check suites.

Each suite returns a CheckResult; run_all bundles them into a
VerificationReport.  Everything is deterministic for a fixed
configuration (no randomness anywhere).
"""

from __future__ import annotations

import datetime
import json
import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from .forms import (
    lombardi_ogilvie_alpha,
    podolsky_pauling_G,
    psi_gegenbauer,
    psi_trig,
)
from .hydrogenic import (
    PhysicalScale,
    QuantumState,
    expectation_p2,
    expectation_r2,
    radial_wavefunction,
    slater_expansion,
)
from .transform import (
    OUTGOING_STRICT,
    DEFAULT_QUADRATURE,
    QuadratureSpec,
    diagonalization_residual,
    parseval_check,
    transform_numeric,
)
from .specfun import spherical_bessel_j


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification suite."""

    name: str
    states_covered: tuple
    grid: str
    max_residual: float
    tolerance: float
    passed: bool
    details: str = ""

    @classmethod
    def from_residual(cls, name, states, grid, residual, tolerance, details=""):
        return cls(name, tuple(states), grid, float(residual), float(tolerance),
                   bool(residual <= tolerance), details)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "states_covered": [list(s) for s in self.states_covered],
            "grid": self.grid,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "details": self.details,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CheckResult":
        return cls(d["name"], tuple(tuple(s) for s in d["states_covered"]),
                   d["grid"], d["max_residual"], d["tolerance"], d["passed"],
                   d.get("details", ""))


@dataclass(frozen=True)
class VerificationReport:
    results: tuple
    config: dict
    timestamp: str
    overall_pass: bool

    @classmethod
    def assemble(cls, results, config) -> "VerificationReport":
        return cls(
            results=tuple(results),
            config=dict(config),
            timestamp=datetime.datetime.now(datetime.timezone.utc).isoformat(),
            overall_pass=all(r.passed for r in results),
        )

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "timestamp": self.timestamp,
            "overall_pass": self.overall_pass,
            "results": [r.to_dict() for r in self.results],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        d = json.loads(text)
        return cls(
            results=tuple(CheckResult.from_dict(r) for r in d["results"]),
            config=d["config"],
            timestamp=d["timestamp"],
            overall_pass=d["overall_pass"],
        )


@dataclass(frozen=True)
class VerifyConfig:
    """Tunable knobs of the verification run."""

    scale: PhysicalScale = field(default_factory=PhysicalScale)
    tol_scale: float = 1.0
    quad_spec: QuadratureSpec = DEFAULT_QUADRATURE

    def describe(self) -> dict:
        return {
            "hbar": self.scale.hbar,
            "beta": self.scale.beta,
            "tol_scale": self.tol_scale,
            "quadrature": {
                "rel_tol": self.quad_spec.rel_tol,
                "abs_tol": self.quad_spec.abs_tol,
                "max_rho": self.quad_spec.max_rho,
                "panel_budget": self.quad_spec.panel_budget,
            },
        }


DEFAULT_CONFIG = VerifyConfig()


def default_grid(scale: PhysicalScale = PhysicalScale(), count: int = 60,
                 mirrored: bool = False) -> np.ndarray:
    """p = 0 plus `count` log-spaced points of p/(hbar beta) in [1e-3, 1e3]."""
    if count < 1:
        raise ValueError("grid needs at least one point")
    pos = np.logspace(-3.0, 3.0, count) * scale.momentum
    if mirrored:
        return np.concatenate([-pos[::-1], [0.0], pos])
    return np.concatenate([[0.0], pos])


def _states(max_N: int, scale: PhysicalScale):
    return [QuantumState(N, l, scale) for N in range(1, max_N + 1)
            for l in range(N)]


def _phase_aligned_residual(values_a, values_b, ref_a, ref_b) -> float:
    a = np.asarray(values_a) / ref_a
    b = np.asarray(values_b) / ref_b
    return float(np.max(np.abs(a - b) / (1.0 + np.abs(a))))


def verify_form_equivalence(max_N: int = 8, grid=None,
                            config: VerifyConfig = DEFAULT_CONFIG) -> CheckResult:
    """Gegenbauer expansion vs trigonometric expansion, phase-aligned."""
    if max_N > 8:
        raise ValueError("form-equivalence suite specified for max_N <= 8")
    scale = config.scale
    if grid is None:
        grid = default_grid(scale, mirrored=True)
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0:
        raise ValueError("empty grid")
    p_ref = scale.momentum
    worst = 0.0
    states = _states(max_N, scale)
    for state in states:
        trig = [psi_trig(state, p) for p in grid]
        geg = [psi_gegenbauer(state, p) for p in grid]
        ref_t = psi_trig(state, p_ref)
        ref_g = psi_gegenbauer(state, p_ref)
        assert abs(ref_t) > 0 and abs(ref_g) > 0
        worst = max(worst, _phase_aligned_residual(trig, geg, ref_t, ref_g))
    return CheckResult.from_residual(
        "form_equivalence", [(s.N, s.l) for s in states],
        f"{grid.size}-point mirrored log grid", worst,
        1e-11 * config.tol_scale)


def verify_quadrature(max_N: int = 4, grid=None,
                      config: VerifyConfig = DEFAULT_CONFIG) -> CheckResult:
    """Numerical transform of R_{Nl} against the trigonometric closed form.

    Run under the outgoing strict convention, which reproduces the
    closed form with no extra phase factor.
    """
    scale = config.scale
    if grid is None:
        pos = np.concatenate([np.logspace(-2, math.log10(20.0), 13)]) * scale.momentum
        grid = np.concatenate([-pos[::-1], [0.0], pos])
    grid = np.asarray(grid, dtype=float)
    worst = 0.0
    failures = []
    states = _states(max_N, scale)
    for state in states:
        for p in grid:
            closed = psi_trig(state, p)
            try:
                numeric = transform_numeric(
                    lambda r: radial_wavefunction(state, r), p,
                    OUTGOING_STRICT, config.quad_spec, scale)
            except Exception as exc:  # noqa: BLE001 - recorded per point
                failures.append(f"(N={state.N},l={state.l},p={p:g}): {exc}")
                continue
            worst = max(worst, abs(numeric - closed))
    details = "; ".join(failures) if failures else ""
    residual = worst if not failures else math.inf
    return CheckResult.from_residual(
        "quadrature_vs_closed_form", [(s.N, s.l) for s in states],
        f"{grid.size}-point mirrored grid up to 20 hbar beta", residual,
        1e-7 * config.tol_scale, details)


def verify_lo_proportionality(max_N: int = 6, grid=None,
                              config: VerifyConfig = DEFAULT_CONFIG) -> CheckResult:
    """Constancy in p of psi_trig / conj(alpha_LO), per state.

    The Lombardi-Ogilvie closed form matches the incoming-kernel
    convention while the trigonometric expansion matches the outgoing
    one, so the convention-matched ratio pairs psi_trig(p) with
    conj(alpha(p)) (equivalently alpha(-p)).  Measured constants are
    logged per state.
    """
    scale = config.scale
    if grid is None:
        grid = default_grid(scale, mirrored=True)
    grid = np.asarray(grid, dtype=float)
    worst = 0.0
    constants = []
    states = _states(max_N, scale)
    for state in states:
        ratios = []
        for p in grid:
            alpha = lombardi_ogilvie_alpha(state, p)
            if abs(alpha) < 1e-13:
                continue
            ratios.append(psi_trig(state, p) / alpha.conjugate())
        ratios = np.asarray(ratios)
        mean = ratios.mean()
        rel_std = float(np.sqrt(np.mean(np.abs(ratios - mean) ** 2)) / abs(mean))
        worst = max(worst, rel_std)
        constants.append(f"(N={state.N},l={state.l}): {mean:.6g}")
    return CheckResult.from_residual(
        "lombardi_ogilvie_proportionality", [(s.N, s.l) for s in states],
        f"{grid.size}-point mirrored log grid", worst,
        1e-9 * config.tol_scale, details="; ".join(constants))


def verify_pp_vs_hankel(max_N: int = 4, config: VerifyConfig = DEFAULT_CONFIG) -> CheckResult:
    """Closed-form Podolsky-Pauling vs the j_l Hankel-quadrature oracle.

    Proportionality (constancy of the ratio in p) between G_{Nl}(p) and
    int_0^inf j_l(p r / hbar) R_{Nl}(r) r^2 dr.
    """
    scale = config.scale
    grid = np.linspace(0.2, 5.0, 12) * scale.momentum
    r_hi = config.quad_spec.max_rho / (2.0 * scale.beta)
    worst = 0.0
    states = _states(max_N, scale)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        for state in states:
            ratios = []
            for p in grid:
                k = p / scale.hbar
                numeric, _ = quad(
                    lambda r: spherical_bessel_j(state.l, k * r)
                    * radial_wavefunction(state, r) * r * r,
                    0.0, r_hi, epsabs=1e-13, epsrel=1e-12, limit=800)
                ratios.append(podolsky_pauling_G(state, p) / numeric)
            ratios = np.asarray(ratios)
            mean = ratios.mean()
            rel_std = float(np.sqrt(np.mean((ratios - mean) ** 2)) / abs(mean))
            worst = max(worst, rel_std)
    return CheckResult.from_residual(
        "podolsky_pauling_vs_hankel", [(s.N, s.l) for s in states],
        "12-point linear grid, p/(hbar beta) in [0.2, 5]", worst,
        1e-7 * config.tol_scale)


# Compactly supported bump tests for the diagonalization identity; each
# entry is (f, f', support).  All vanish to first order at the endpoints.
def _bump(a, b):
    def f(r):
        if not a < r < b:
            return 0.0
        return (r - a) ** 2 * (b - r) ** 2

    def df(r):
        if not a < r < b:
            return 0.0
        return 2.0 * (r - a) * (b - r) ** 2 - 2.0 * (r - a) ** 2 * (b - r)

    return f, df, (a, b)


DIAGONALIZATION_TESTS = (_bump(1.0, 2.0), _bump(0.5, 2.5), _bump(2.0, 4.0))


def verify_parseval_and_diagonalization(max_N: int = 5,
                                        config: VerifyConfig = DEFAULT_CONFIG) -> CheckResult:
    """Unitarity (Parseval, measure dp/(2 pi hbar)) plus Eq.-diagonal identity."""
    scale = config.scale
    worst = 0.0
    details = []
    states = _states(max_N, scale)
    for state in states:
        expansion = slater_expansion(state, normalized=True)
        pos, mom = parseval_check(expansion, config.quad_spec)
        worst = max(worst, abs(mom - pos), abs(mom - 1.0))
    p_grid = np.linspace(-10.0, 10.0, 21) * scale.momentum
    for i, (f, df, support) in enumerate(DIAGONALIZATION_TESTS):
        res = diagonalization_residual(f, df, support, p_grid,
                                       spec=config.quad_spec, scale=scale)
        details.append(f"bump{i} on {support}: {res:.3e}")
        worst = max(worst, res)
    return CheckResult.from_residual(
        "parseval_and_diagonalization", [(s.N, s.l) for s in states],
        "Parseval N <= %d; 21-point p grid in [-10, 10] hbar beta" % max_N,
        worst, 1e-7 * config.tol_scale, details="; ".join(details))


def verify_uncertainty(max_N: int = 5,
                       config: VerifyConfig = DEFAULT_CONFIG) -> CheckResult:
    """<r^2><p^2> >= 9 hbar^2 / 4 for every state, D = 3."""
    scale = config.scale
    bound = 2.25 * scale.hbar ** 2
    worst = -math.inf
    details = []
    states = _states(max_N, scale)
    for state in states:
        product = expectation_r2(state) * expectation_p2(state)
        shortfall = bound - product
        worst = max(worst, shortfall)
        if state.N == 1:
            details.append(f"ground-state product: {product:.12g}")
    return CheckResult.from_residual(
        "uncertainty_bound", [(s.N, s.l) for s in states],
        "analytic <r^2>, quadrature <p^2>", max(worst, 0.0),
        1e-9 * config.tol_scale, details="; ".join(details))


def verify_so4_constancy(max_N: int = 6, grid=None,
                         config: VerifyConfig = DEFAULT_CONFIG) -> CheckResult:
    """|psi_{N,N-1}|^2 (hbar^2 beta^2 + p^2)^{N+1} constant in p."""
    scale = config.scale
    if grid is None:
        grid = default_grid(scale, mirrored=True)
    grid = np.asarray(grid, dtype=float)
    pm2 = scale.momentum ** 2
    worst = 0.0
    states = [QuantumState(N, N - 1, scale) for N in range(1, max_N + 1)]
    for state in states:
        vals = np.array([
            abs(psi_trig(state, p)) ** 2 * (pm2 + p * p) ** (state.N + 1)
            for p in grid
        ])
        rel_std = float(vals.std() / vals.mean())
        worst = max(worst, rel_std)
    return CheckResult.from_residual(
        "so4_form_constancy", [(s.N, s.l) for s in states],
        f"{grid.size}-point mirrored log grid", worst,
        1e-10 * config.tol_scale)


SUITES = {
    "form_equivalence": lambda cfg: verify_form_equivalence(config=cfg),
    "quadrature": lambda cfg: verify_quadrature(config=cfg),
    "lo_proportionality": lambda cfg: verify_lo_proportionality(config=cfg),
    "pp_vs_hankel": lambda cfg: verify_pp_vs_hankel(config=cfg),
    "parseval_diagonalization": lambda cfg: verify_parseval_and_diagonalization(config=cfg),
    "uncertainty": lambda cfg: verify_uncertainty(config=cfg),
    "so4_constancy": lambda cfg: verify_so4_constancy(config=cfg),
}


def run_all(config: VerifyConfig = DEFAULT_CONFIG,
            suites=None) -> VerificationReport:
    """Run the requested suites (all by default) and assemble a report."""
    names = list(SUITES) if suites is None else list(suites)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {unknown}")
    results = [SUITES[name](config) for name in names]
    return VerificationReport.assemble(results, config.describe())
