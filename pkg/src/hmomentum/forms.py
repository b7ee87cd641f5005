"""Closed-form momentum-space families and their changes of variables.

The finite Gegenbauer expansion, its boundary-value (script-D) variant,
the trigonometric expansion, the Lombardi-Ogilvie family, the
Podolsky-Pauling family in both the p and chi parametrizations, and the
maximal-l distribution shapes.

Phase convention: the assembled Gegenbauer-route product
sin(gamma) * (C^1 + i D^1) is evaluated as e^{i (n+1) gamma}, which is
regular at gamma = 0 and makes the Gegenbauer and trigonometric routes
agree exactly (the literal combination is the conjugate-phase twin; wave
functions are defined up to such a convention).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .hydrogenic import (
    PhysicalScale,
    QuantumState,
    normalization_constant,
)
from .specfun import binomial, factorial, gegenbauer_C, gegenbauer_D1


@dataclass(frozen=True)
class AngleVariables:
    """The equivalent angle parametrizations of a radial momentum p.

    x = cos(gamma) = cos(theta) = (1/2) [(1/2)^2 + (p/2 hbar beta)^2]^{-1/2},
    theta = arctan(p / hbar beta), and cos(chi_p) =
    (hbar^2 beta^2 - p^2) / (hbar^2 beta^2 + p^2).  x, gamma and chi_p
    depend on p only through p^2; theta is odd in p.
    """

    x: float
    gamma: float
    theta: float
    chi_p: float


def angle_variables(p: float, scale: PhysicalScale = PhysicalScale()) -> AngleVariables:
    """Compute all angle variables at radial momentum p."""
    pm = scale.momentum
    theta = math.atan2(p, pm)
    b = p / (2.0 * pm)
    x = 0.5 / math.sqrt(0.25 + b * b)
    gamma = math.acos(x)
    chi_p = math.acos((pm * pm - p * p) / (pm * pm + p * p))
    assert abs(x - abs(math.cos(theta))) < 1e-14
    return AngleVariables(x=x, gamma=gamma, theta=theta, chi_p=chi_p)


def _check_term_index(N: int, l: int, t: int) -> None:
    if not 0 <= t <= N - l - 1:
        raise IndexError(f"term index t={t} out of range for (N={N}, l={l})")


def coeff_a(state: QuantumState, t: int) -> float:
    """Gegenbauer-expansion coefficient a^{(N)}_{l t}.

    a = N_{Nl} 2^{l+t+2} (-1)^t binom(N+l, N-l-1-t) Gamma(l+t+2)
        / (t! (2 beta)^2).
    """
    N, l = state.N, state.l
    _check_term_index(N, l, t)
    beta = state.scale.beta
    return (
        normalization_constant(state)
        * 2.0 ** (l + t + 2)
        * (-1) ** t
        * binomial(N + l, N - l - 1 - t)
        * math.gamma(l + t + 2)
        / (factorial(t) * (2.0 * beta) ** 2)
    )


def coeff_b(state: QuantumState, t: int) -> float:
    """Trigonometric-expansion coefficient b^{(t)}_{Nl}.

    Textually identical to a^{(N)}_{l t}; kept as a separate entry point
    mirroring the two expansions.
    """
    N, l = state.N, state.l
    _check_term_index(N, l, t)
    beta = state.scale.beta
    return (
        normalization_constant(state)
        * 2.0 ** (l + t + 2)
        / (2.0 * beta) ** 2
        * (-1) ** t
        / factorial(t)
        * binomial(N + l, N - l - 1 - t)
        * math.gamma(l + t + 2)
    )


def psi_trig(state: QuantumState, p: float) -> complex:
    """Trigonometric finite expansion of the momentum wave function.

    psi = sum_t b_t e^{i (l+t+2) theta} cos^{l+t+2}(theta) with
    theta = arctan(p / hbar beta); defined for any real p by the odd
    extension of theta.
    """
    N, l = state.N, state.l
    pm = state.scale.momentum
    theta = math.atan2(p, pm)
    cos_t = pm / math.hypot(p, pm)
    total = 0.0 + 0.0j
    for t in range(N - l):
        k = l + t + 2
        total += coeff_b(state, t) * cmath.exp(1j * k * theta) * cos_t ** k
    return total


def psi_gegenbauer(state: QuantumState, p: float) -> complex:
    """Gegenbauer finite expansion of the momentum wave function.

    psi = sum_t a_t sin(gamma) cos^{l+2+t}(gamma)
          (C^1_{l+1+t} + i D^1_{l+1+t})(cos gamma), with the real part
    carried by D^1 and the imaginary part by C^1 (see module docstring).
    p = 0 is the analytic limit sum_t a_t; negative p is the odd-theta
    (conjugate) extension.
    """
    N, l = state.N, state.l
    if p < 0:
        return psi_gegenbauer(state, -p).conjugate()
    if p == 0:
        return complex(sum(coeff_a(state, t) for t in range(N - l)))
    angles = angle_variables(p, state.scale)
    x, gamma = angles.x, angles.gamma
    if gamma == 0.0:
        # p small enough that cos(gamma) rounds to 1; analytic limit.
        return complex(sum(coeff_a(state, t) for t in range(N - l)))
    sin_g = math.sin(gamma)
    total = 0.0 + 0.0j
    for t in range(N - l):
        n = l + 1 + t
        combo = sin_g * complex(gegenbauer_D1(n, x), gegenbauer_C(n, 1.0, x))
        total += coeff_a(state, t) * x ** (l + 2 + t) * combo
    return total


def psi_script_D(state: QuantumState, p: float) -> complex:
    """Script-D (boundary value) form: sum_t 2 a_t sqrt(1-x^2) x^{l+2+t} D-script.

    Identical to `psi_gegenbauer` by construction, since the script-D
    function is the (C^1 + i D^1)/2 combination under the same phase
    convention.
    """
    from .specfun import gegenbauer_script_D1

    N, l = state.N, state.l
    if p < 0:
        return psi_script_D(state, -p).conjugate()
    if p == 0:
        return complex(sum(coeff_a(state, t) for t in range(N - l)))
    angles = angle_variables(p, state.scale)
    x = angles.x
    if x >= 1.0:
        return complex(sum(coeff_a(state, t) for t in range(N - l)))
    root = math.sqrt(1.0 - x * x)
    total = 0.0 + 0.0j
    for t in range(N - l):
        n = l + 1 + t
        total += 2.0 * coeff_a(state, t) * root * x ** (l + 2 + t) \
            * gegenbauer_script_D1(n, x)
    return total


def lombardi_ogilvie_c(N: int, l: int, k: int) -> float:
    """Lombardi-Ogilvie coefficient c^k_{Nl}.

    c = 2^k (N-l-1)! (l+k+1)! / (k! (N-l-k-1)! (2l+k+1)!).
    """
    if not 0 <= k <= N - l - 1:
        raise IndexError(f"k={k} out of range for (N={N}, l={l})")
    return (
        2.0 ** k
        * factorial(N - l - 1)
        * factorial(l + k + 1)
        / (factorial(k) * factorial(N - l - k - 1) * factorial(2 * l + k + 1))
    )


def lombardi_ogilvie_alpha(state: QuantumState, p: float) -> complex:
    """Unnormalized Lombardi-Ogilvie radial momentum function.

    alpha = sum_k c^k_{Nl} (i beta_p / (p - i beta_p))^{l+k+2}, with
    beta_p = hbar beta the momentum scale.  The external normalization
    constant is not reproduced; comparisons against this family are
    proportionality tests.
    """
    N, l = state.N, state.l
    bp = state.scale.momentum
    z = 1j * bp / (p - 1j * bp)
    total = 0.0 + 0.0j
    for k in range(N - l):
        total += lombardi_ogilvie_c(N, l, k) * z ** (l + k + 2)
    return total


def _pp_prefactor(N: int, l: int) -> float:
    return math.sqrt(factorial(N - l - 1) * N / (math.pi * factorial(N + l)))


def podolsky_pauling_G(state: QuantumState, p: float) -> float:
    """Podolsky-Pauling radial momentum function G_{Nl}(p), p >= 0.

    G = (2 hbar beta)^{5/2} Gamma(l+1) sqrt((N-l-1)! N / (pi (N+l)!))
        (4 hbar beta p)^l / (hbar^2 beta^2 + p^2)^{l+2}
        C^{l+1}_{N-l-1}((hbar^2 beta^2 - p^2) / (hbar^2 beta^2 + p^2)).

    Normalized so that int_0^inf G^2 p^2 dp = 1.
    """
    if p < 0:
        raise ValueError(f"Podolsky-Pauling G requires p >= 0, got {p}")
    N, l = state.N, state.l
    pm = state.scale.momentum
    denom = pm * pm + p * p
    arg = (pm * pm - p * p) / denom
    return (
        (2.0 * pm) ** 2.5
        * math.gamma(l + 1)
        * _pp_prefactor(N, l)
        * (4.0 * pm * p) ** l
        / denom ** (l + 2)
        * gegenbauer_C(N - l - 1, l + 1, arg)
    )


def ultraspherical_S(N: int, l: int, chi: float) -> float:
    """Polar-angle factor S_{(N-1) l}(chi) = sin^l(chi) C^{l+1}_{N-l-1}(cos chi)."""
    return math.sin(chi) ** l * gegenbauer_C(N - l - 1, l + 1, math.cos(chi))


def podolsky_pauling_chi(state: QuantumState, chi: float) -> float:
    """Podolsky-Pauling function in the chi parametrization, chi in [0, pi].

    Equals G_{Nl} at p(chi) = hbar beta tan(chi/2):
    (2 hbar beta)^{5/2} 2^l Gamma(l+1) sqrt((N-l-1)! N / (pi (N+l)!))
    cos^4(chi/2) S_{(N-1) l}(chi), divided by (hbar beta)^4.
    """
    if not 0.0 <= chi <= math.pi:
        raise ValueError(f"chi must lie in [0, pi], got {chi}")
    N, l = state.N, state.l
    pm = state.scale.momentum
    return (
        (2.0 * pm) ** 2.5
        * 2.0 ** l
        * math.gamma(l + 1)
        * _pp_prefactor(N, l)
        * math.cos(chi / 2.0) ** 4
        * ultraspherical_S(N, l, chi)
        / pm ** 4
    )


def distribution_max_l(form: str, N: int, p: float,
                       scale: PhysicalScale = PhysicalScale()) -> float:
    """Unnormalized maximal-l (l = N-1) momentum density shapes.

    "PP": (4 hbar beta p)^{2(N-1)} / (hbar^2 beta^2 + p^2)^{2(N+1)},
    defined for p >= 0.
    "LO": 1 / (hbar^2 beta^2 + p^2)^{N+1}, defined for any real p.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    pm = scale.momentum
    if form == "PP":
        if p < 0:
            raise ValueError("PP density is defined for p >= 0")
        return (4.0 * pm * p) ** (2 * (N - 1)) / (pm * pm + p * p) ** (2 * (N + 1))
    if form == "LO":
        return 1.0 / (pm * pm + p * p) ** (N + 1)
    raise ValueError(f"unknown distribution form {form!r}")


FORM_EVALUATORS = {
    "trig": psi_trig,
    "gegenbauer": psi_gegenbauer,
    "script_D": psi_script_D,
    "lombardi_ogilvie": lombardi_ogilvie_alpha,
    "podolsky_pauling": lambda state, p: complex(podolsky_pauling_G(state, p)),
}
