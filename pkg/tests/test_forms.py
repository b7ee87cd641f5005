"""Momentum-space families: expansions, LO, PP, distributions, cross-checks."""

import cmath
import math

import numpy as np
import pytest
from scipy.integrate import quad

from hmomentum.forms import (
    angle_variables,
    coeff_a,
    coeff_b,
    distribution_max_l,
    lombardi_ogilvie_alpha,
    lombardi_ogilvie_c,
    podolsky_pauling_G,
    podolsky_pauling_chi,
    psi_gegenbauer,
    psi_script_D,
    psi_trig,
    ultraspherical_S,
)
from hmomentum.hydrogenic import (
    PhysicalScale,
    QuantumState,
    normalization_constant,
    slater_expansion,
)
from hmomentum.specfun import binomial, ferrers_P_mhalf, ferrers_Q_mhalf
from hmomentum.transform import OUTGOING_STRICT, transform_slater_expansion


class TestAngleVariables:
    def test_at_zero(self):
        ang = angle_variables(0.0)
        assert ang.x == 1.0
        assert ang.gamma == 0.0
        assert ang.theta == 0.0
        assert ang.chi_p == 0.0

    def test_at_momentum_scale(self):
        ang = angle_variables(1.0)
        assert ang.x == pytest.approx(1.0 / math.sqrt(2.0))
        assert ang.theta == pytest.approx(math.pi / 4.0)
        assert ang.gamma == pytest.approx(math.pi / 4.0)
        assert ang.chi_p == pytest.approx(math.pi / 2.0)

    def test_large_p_limits(self):
        ang = angle_variables(1e8)
        assert ang.theta == pytest.approx(math.pi / 2.0, abs=1e-7)
        assert ang.chi_p == pytest.approx(math.pi, abs=1e-3)
        assert ang.x == pytest.approx(0.0, abs=1e-7)

    def test_even_and_odd_parts(self):
        plus = angle_variables(0.7)
        minus = angle_variables(-0.7)
        assert minus.x == plus.x
        assert minus.chi_p == plus.chi_p
        assert minus.theta == -plus.theta

    def test_scale_covariance(self):
        scale = PhysicalScale(beta=2.0)
        assert angle_variables(2.0, scale).theta == pytest.approx(
            angle_variables(1.0).theta)


class TestCoefficients:
    def test_ground_state(self):
        # N_{10} 2^2 binom(1,0) Gamma(2) / 4 = 2
        assert coeff_a(QuantumState(1, 0), 0) == pytest.approx(2.0)

    def test_2p(self):
        expect = 4.0 * normalization_constant(QuantumState(2, 1))
        assert coeff_a(QuantumState(2, 1), 0) == pytest.approx(expect)

    def test_b_equals_a(self):
        for N in range(1, 7):
            for l in range(N):
                state = QuantumState(N, l)
                for t in range(N - l):
                    assert coeff_b(state, t) == pytest.approx(
                        coeff_a(state, t), rel=1e-14)

    def test_sign_alternation(self):
        state = QuantumState(5, 1)
        for t in range(4):
            assert coeff_a(state, t) * (-1) ** t > 0

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            coeff_a(QuantumState(2, 1), 1)
        with pytest.raises(IndexError):
            coeff_b(QuantumState(3, 0), -1)


class TestPsiTrig:
    def test_ground_state_values(self):
        state = QuantumState(1, 0)
        assert psi_trig(state, 0.0) == pytest.approx(2.0 + 0.0j)
        # theta = pi/4: 2 e^{i pi/2} cos^2 = i at p = hbar beta
        assert psi_trig(state, 1.0) == pytest.approx(1.0j, abs=1e-15)

    def test_ground_state_closed_density(self):
        state = QuantumState(1, 0)
        for p in (0.0, 0.3, 1.0, 4.0):
            expect = 4.0 / (1.0 + p * p) ** 2
            assert abs(psi_trig(state, p)) ** 2 == pytest.approx(expect, rel=1e-13)

    def test_conjugate_symmetry(self):
        state = QuantumState(4, 2)
        for p in (0.2, 1.0, 7.0):
            assert psi_trig(state, -p) == pytest.approx(
                psi_trig(state, p).conjugate(), rel=1e-14)

    def test_decay_at_large_p(self):
        state = QuantumState(3, 0)
        tail = [abs(psi_trig(state, p)) for p in (30.0, 100.0, 300.0)]
        assert tail[0] > tail[1] > tail[2]
        assert tail[2] < 1e-4

    def test_equals_strict_transform(self):
        """psi_trig is the outgoing strict transform of R_{Nl}, verbatim."""
        for N, l in [(1, 0), (2, 0), (3, 1), (5, 2)]:
            expansion = slater_expansion(QuantumState(N, l), normalized=True)
            for p in (0.0, 0.6, 2.5, -1.2):
                closed = transform_slater_expansion(expansion, p, OUTGOING_STRICT)
                assert psi_trig(QuantumState(N, l), p) == pytest.approx(
                    closed, rel=1e-12, abs=1e-13)


class TestPsiGegenbauer:
    @pytest.mark.parametrize("N", range(1, 9))
    def test_matches_trig(self, N):
        grid = np.concatenate([[0.0], np.logspace(-3, 3, 25)])
        grid = np.concatenate([-grid[1:][::-1], grid])
        for l in range(N):
            state = QuantumState(N, l)
            for p in grid:
                a = psi_gegenbauer(state, p)
                b = psi_trig(state, p)
                assert a == pytest.approx(b, abs=1e-11 * (1.0 + abs(b)))

    def test_p_zero_is_analytic_limit(self):
        state = QuantumState(3, 1)
        at_zero = psi_gegenbauer(state, 0.0)
        near_zero = psi_gegenbauer(state, 1e-8)
        assert near_zero == pytest.approx(at_zero, abs=1e-6)

    def test_term_phase_identity(self):
        """sin(gamma) [D^1 + i C^1](cos gamma) = e^{i (n+1) gamma}.

        The per-term content of the expansion: the real part comes from
        the D-function, the imaginary part from the C-polynomial.
        """
        from hmomentum.specfun import gegenbauer_C, gegenbauer_D1

        for n in range(6):
            for gamma in (0.2, 0.8, 1.4):
                x = math.cos(gamma)
                combo = math.sin(gamma) * complex(
                    gegenbauer_D1(n, x), gegenbauer_C(n, 1.0, x))
                assert combo == pytest.approx(
                    cmath.exp(1j * (n + 1) * gamma), abs=1e-13)

    def test_script_D_identical(self):
        for N, l in [(1, 0), (2, 0), (4, 3), (6, 1)]:
            state = QuantumState(N, l)
            for p in (0.0, 0.5, -2.0, 9.0):
                assert psi_script_D(state, p) == pytest.approx(
                    psi_gegenbauer(state, p), rel=1e-12, abs=1e-13)


class TestLombardiOgilvie:
    def test_c_ground_state(self):
        assert lombardi_ogilvie_c(1, 0, 0) == pytest.approx(1.0)

    def test_c_2s(self):
        assert lombardi_ogilvie_c(2, 0, 0) == pytest.approx(1.0)
        # 2^1 1! 2! / (1! 0! 2!) = 2
        assert lombardi_ogilvie_c(2, 0, 1) == pytest.approx(2.0)

    def test_c_out_of_range(self):
        with pytest.raises(IndexError):
            lombardi_ogilvie_c(2, 1, 1)

    def test_ground_state_value(self):
        # alpha = i / (p - i) ^2 * ... : at p = hbar beta = 1,
        # z = i/(1-i), z^2 = i/2 / (-i) ... direct: (i/(1-i))^2 = -1/(2) * ... compute
        expect = (1j / (1.0 - 1j)) ** 2
        assert lombardi_ogilvie_alpha(QuantumState(1, 0), 1.0) == pytest.approx(expect)
        assert expect == pytest.approx(-0.5j)

    def test_ground_state_density(self):
        state = QuantumState(1, 0)
        for p in (0.0, 0.5, 2.0):
            expect = 1.0 / (1.0 + p * p) ** 2
            assert abs(lombardi_ogilvie_alpha(state, p)) ** 2 == pytest.approx(
                expect, rel=1e-13)

    @pytest.mark.parametrize("N,l", [(1, 0), (2, 0), (3, 1), (4, 3), (6, 2)])
    def test_proportional_to_trig_conjugate(self, N, l):
        """psi_trig(p) / conj(alpha(p)) is a p-independent constant."""
        state = QuantumState(N, l)
        ratios = [psi_trig(state, p) / lombardi_ogilvie_alpha(state, p).conjugate()
                  for p in (0.1, 0.9, 3.0, -1.7)]
        for r in ratios[1:]:
            assert r == pytest.approx(ratios[0], rel=1e-11)

    def test_unconjugated_ratio_not_constant(self):
        state = QuantumState(2, 0)
        r1 = psi_trig(state, 0.5) / lombardi_ogilvie_alpha(state, 0.5)
        r2 = psi_trig(state, 2.0) / lombardi_ogilvie_alpha(state, 2.0)
        assert abs(r1 - r2) > 1e-3


class TestPodolskyPauling:
    def test_ground_state_at_zero(self):
        # 2^{5/2} / sqrt(pi)
        expect = 2.0 ** 2.5 / math.sqrt(math.pi)
        assert podolsky_pauling_G(QuantumState(1, 0), 0.0) == pytest.approx(expect)
        assert expect == pytest.approx(3.19153824, abs=2e-8)

    def test_negative_p_rejected(self):
        with pytest.raises(ValueError):
            podolsky_pauling_G(QuantumState(1, 0), -0.5)

    def test_node_of_2p_at_origin(self):
        assert podolsky_pauling_G(QuantumState(2, 1), 0.0) == 0.0

    @pytest.mark.parametrize("N", range(1, 6))
    def test_unit_momentum_norm(self, N):
        for l in range(N):
            state = QuantumState(N, l)
            val, _ = quad(lambda p: podolsky_pauling_G(state, p) ** 2 * p * p,
                          0.0, math.inf, limit=400)
            assert val == pytest.approx(1.0, abs=1e-8)

    def test_chi_route_equals_p_route(self):
        for N, l in [(1, 0), (2, 1), (3, 0), (4, 2)]:
            state = QuantumState(N, l)
            for chi in (0.3, 1.0, math.pi / 2.0, 2.4):
                p = math.tan(chi / 2.0)
                assert podolsky_pauling_chi(state, chi) == pytest.approx(
                    podolsky_pauling_G(state, p), rel=1e-11)

    def test_chi_domain(self):
        with pytest.raises(ValueError):
            podolsky_pauling_chi(QuantumState(1, 0), -0.1)
        with pytest.raises(ValueError):
            podolsky_pauling_chi(QuantumState(1, 0), math.pi + 0.1)

    def test_chi_endpoint(self):
        # cos^4(chi/2) kills the value at chi = pi for the nodeless 1s
        assert podolsky_pauling_chi(QuantumState(1, 0), math.pi) == pytest.approx(
            0.0, abs=1e-12)

    def test_ultraspherical_S(self):
        assert ultraspherical_S(1, 0, 1.1) == pytest.approx(1.0)
        for chi in (0.4, 1.3, 2.8):
            assert ultraspherical_S(2, 1, chi) == pytest.approx(math.sin(chi))


class TestDistributions:
    def test_pp_ground_state_shape(self):
        # (p^0) / (1 + p^2)^4
        assert distribution_max_l("PP", 1, 0.0) == pytest.approx(1.0)
        assert distribution_max_l("PP", 1, 1.0) == pytest.approx(1.0 / 16.0)

    def test_lo_ground_state_shape(self):
        assert distribution_max_l("LO", 1, 0.0) == pytest.approx(1.0)
        assert distribution_max_l("LO", 1, 1.0) == pytest.approx(0.25)
        assert distribution_max_l("LO", 1, -1.0) == pytest.approx(0.25)

    def test_pp_node_at_origin(self):
        assert distribution_max_l("PP", 3, 0.0) == 0.0

    def test_pp_negative_p_rejected(self):
        with pytest.raises(ValueError):
            distribution_max_l("PP", 2, -1.0)

    def test_invalid_args(self):
        with pytest.raises(ValueError):
            distribution_max_l("XX", 1, 0.0)
        with pytest.raises(ValueError):
            distribution_max_l("LO", 0, 0.0)

    def test_lo_matches_alpha_density(self):
        for N in (2, 4):
            state = QuantumState(N, N - 1)
            ref_p = 0.8
            norm = (abs(lombardi_ogilvie_alpha(state, ref_p)) ** 2
                    / distribution_max_l("LO", N, ref_p))
            for p in (0.0, 1.5, 4.0):
                assert abs(lombardi_ogilvie_alpha(state, p)) ** 2 == pytest.approx(
                    norm * distribution_max_l("LO", N, p), rel=1e-11)

    def test_pp_matches_G_density(self):
        for N in (2, 3):
            state = QuantumState(N, N - 1)
            ref_p = 0.8
            norm = (podolsky_pauling_G(state, ref_p) ** 2
                    / distribution_max_l("PP", N, ref_p))
            for p in (0.4, 1.5, 4.0):
                assert podolsky_pauling_G(state, p) ** 2 == pytest.approx(
                    norm * distribution_max_l("PP", N, p), rel=1e-11)


def psi_ferrers(state, p):
    """Term-wise Ferrers-function assembly of the momentum wave function.

    Builds each Slater term's transform from the half-odd-degree Ferrers
    pair (P, Q)^{-1/2} instead of the Gegenbauer/trigonometric closed
    forms; an algebraically independent third route.
    """
    N, l = state.N, state.l
    pm = state.scale.momentum
    beta = state.scale.beta
    b = p / (2.0 * pm)
    x = 0.5 / math.sqrt(0.25 + b * b)
    norm = normalization_constant(state)
    pref = (p / state.scale.hbar) * math.sqrt(math.pi * pm / p) * norm
    total = 0.0 + 0.0j
    for t in range(N - l):
        coeff = (-1) ** t * binomial(N + l, N - l - 1 - t) / math.factorial(t)
        nu = l + 1.5 + t
        radial = (2.0 * x) ** (l + 2.5 + t) * math.gamma(l + 3 + t)
        pair = complex(ferrers_P_mhalf(nu, x),
                       (2.0 / math.pi) * ferrers_Q_mhalf(nu, x))
        total += coeff / (2.0 * beta) ** 3 * radial * pair
    return pref * total


class TestFerrersRoute:
    @pytest.mark.parametrize("N,l", [(1, 0), (2, 0), (3, 1)])
    def test_is_i_times_conjugate_trig(self, N, l):
        """The Ferrers route equals i * conj(psi_trig) identically in p."""
        state = QuantumState(N, l)
        for p in (0.4, 1.0, 3.0):
            via_ferrers = psi_ferrers(state, p)
            expect = 1j * psi_trig(state, p).conjugate()
            assert via_ferrers == pytest.approx(expect, rel=1e-12)
