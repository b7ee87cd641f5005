"""Special functions evaluated by stable recurrences.

Factorials and binomials, generalized Laguerre polynomials, Gegenbauer
polynomials, the order-1 Gegenbauer function of the second kind, Ferrers
functions of order -1/2, and spherical Bessel/Neumann functions.

Polynomials are evaluated with three-term recurrences rather than their
explicit alternating sums, which become unstable at high degree.  All
functions here are pure and thread-safe.
"""

from __future__ import annotations

import cmath
import math

# math.factorial overflows float conversion past 170!.
FLOAT_FACTORIAL_MAX = 170


def factorial(n: int, exact: bool = True):
    """n! as an exact integer, or as a float for n <= 170.

    Raises:
        ValueError: if n is negative or not integral.
        OverflowError: in floating mode for n > 170.
    """
    if n != int(n) or n < 0:
        raise ValueError(f"factorial requires a nonnegative integer, got {n!r}")
    n = int(n)
    if exact:
        return math.factorial(n)
    if n > FLOAT_FACTORIAL_MAX:
        raise OverflowError(
            f"{n}! overflows double precision (limit {FLOAT_FACTORIAL_MAX})"
        )
    return float(math.factorial(n))


def binomial(a: int, b: int) -> int:
    """Binomial coefficient C(a, b); zero for b < 0 or b > a."""
    if a != int(a) or a < 0:
        raise ValueError(f"binomial requires a >= 0, got a={a!r}")
    if b != int(b):
        raise ValueError(f"binomial requires integer b, got b={b!r}")
    a, b = int(a), int(b)
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def laguerre(n: int, alpha: int, x: float) -> float:
    """Generalized Laguerre polynomial L_n^alpha(x) by three-term recurrence.

    The recurrence (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}
    is stable in the direction of increasing degree.
    """
    if n < 0:
        raise ValueError(f"laguerre degree must be >= 0, got {n}")
    if alpha < 0:
        raise ValueError(f"laguerre index must be >= 0, got {alpha}")
    if n == 0:
        return 1.0
    prev = 1.0
    cur = 1.0 + alpha - x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
    return cur


def gegenbauer_C(n: int, lam: float, x: float) -> float:
    """Gegenbauer polynomial C_n^lambda(x) by the standard recurrence.

    n C_n = 2(n+lambda-1) x C_{n-1} - (n+2 lambda-2) C_{n-2}.
    """
    if n < 0:
        raise ValueError(f"gegenbauer degree must be >= 0, got {n}")
    if lam < 1:
        raise ValueError(f"gegenbauer order must be >= 1, got {lam}")
    if n == 0:
        return 1.0
    prev = 1.0
    cur = 2.0 * lam * x
    for k in range(2, n + 1):
        prev, cur = cur, (2.0 * (k + lam - 1) * x * cur - (k + 2 * lam - 2) * prev) / k
    return cur


def gegenbauer_D1(n: int, x: float) -> float:
    """Order-1 Gegenbauer function of the second kind, D_n^1(x).

    Evaluated through the trigonometric identity
    D_n^1(cos theta) = cos((n+1) theta) / sin(theta) with theta = arccos(x).
    Singular at the interval endpoints, hence |x| < 1 strictly.
    """
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    if not -1.0 < x < 1.0:
        raise ValueError(f"D_n^1 requires |x| < 1, got x={x}")
    theta = math.acos(x)
    return math.cos((n + 1) * theta) / math.sin(theta)


def gegenbauer_script_D1(n: int, x: float) -> complex:
    """Boundary-value Gegenbauer function of the second kind, order 1.

    The combined first/second-kind value at x + i0, evaluated as
    e^{i(n+1) theta} / (2 sin theta), theta = arccos(x), under this
    package's phase convention (the real part carries D_n^1, the
    imaginary part C_n^1, so that the assembled momentum forms agree
    with the trigonometric expansion exactly).
    """
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    if not -1.0 < x < 1.0:
        raise ValueError(f"script-D requires |x| < 1, got x={x}")
    theta = math.acos(x)
    return cmath.exp(1j * (n + 1) * theta) / (2.0 * math.sin(theta))


def _check_half_integer_degree(nu: float) -> int:
    """Map nu to the integer n = nu - 1/2 used by the order -1/2 family."""
    n = nu - 0.5
    if abs(n - round(n)) > 1e-12 or round(n) < 0:
        raise ValueError(
            f"order -1/2 Ferrers functions implemented for nu - 1/2 a "
            f"nonnegative integer, got nu={nu}"
        )
    return int(round(n))


def ferrers_P_mhalf(nu: float, x: float) -> float:
    """Ferrers function of the first kind P_nu^{-1/2}(x), x in [-1, 1].

    Defined through the Gegenbauer connection with mu = 1/2:
    P_nu^{-1/2}(x) = sqrt(2/pi) * Gamma(nu+1/2)/Gamma(nu+3/2)
                     * (1-x^2)^{1/4} * C_{nu-1/2}^1(x).
    """
    n = _check_half_integer_degree(nu)
    if not -1.0 <= x <= 1.0:
        raise ValueError(f"P requires x in [-1, 1], got {x}")
    pref = math.sqrt(2.0 / math.pi) * math.gamma(nu + 0.5) / math.gamma(nu + 1.5)
    return pref * (1.0 - x * x) ** 0.25 * gegenbauer_C(n, 1.0, x)


def ferrers_Q_mhalf(nu: float, x: float) -> float:
    """Ferrers function of the second kind Q_nu^{-1/2}(x), x in (-1, 1).

    Q_nu^{-1/2}(x) = sqrt(pi/2) * Gamma(nu+1/2)/Gamma(nu+3/2)
                     * (1-x^2)^{1/4} * D_{nu-1/2}^1(x).
    """
    n = _check_half_integer_degree(nu)
    if not -1.0 < x < 1.0:
        raise ValueError(f"Q requires |x| < 1, got {x}")
    pref = math.sqrt(math.pi / 2.0) * math.gamma(nu + 0.5) / math.gamma(nu + 1.5)
    return pref * (1.0 - x * x) ** 0.25 * gegenbauer_D1(n, x)


def spherical_bessel_j(l: int, x: float) -> float:
    """Spherical Bessel function j_l(x).

    Upward recurrence for x >= l; downward (Miller) recurrence for x < l,
    where the upward direction is unstable.  j_0(0) = 1 by continuity.
    """
    if l < 0:
        raise ValueError(f"order must be >= 0, got {l}")
    x = float(x)
    if x == 0.0:
        return 1.0 if l == 0 else 0.0
    j0 = math.sin(x) / x
    if l == 0:
        return j0
    j1 = math.sin(x) / (x * x) - math.cos(x) / x
    if l == 1:
        return j1
    if abs(x) >= l:
        prev, cur = j0, j1
        for k in range(1, l):
            prev, cur = cur, (2 * k + 1) / x * cur - prev
        return cur
    # Miller's algorithm: recurse downward from well above l, then
    # normalize with the known j_0.
    top = l + int(abs(x)) + 25
    jp1 = 0.0
    jc = 1e-30
    out = 0.0
    for k in range(top, 0, -1):
        jm1 = (2 * k + 1) / x * jc - jp1
        jp1, jc = jc, jm1
        if k - 1 == l:
            out = jc
        if abs(jc) > 1e250:
            jc *= 1e-250
            jp1 *= 1e-250
            out *= 1e-250
    return out * (j0 / jc)


def spherical_neumann_n0(x: float) -> float:
    """Spherical Neumann function n_0(x) = -cos(x)/x for x > 0."""
    if x <= 0:
        raise ValueError(f"n_0 requires x > 0, got {x}")
    return -math.cos(x) / x
