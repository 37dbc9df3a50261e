import math

import numpy as np
import pytest

from airyprop import evolve as ev
from airyprop import kernelcoeffs as kc
from airyprop import oracle
from airyprop import propagator as pr
from airyprop.errors import (
    DomainError,
    ParameterError,
    RangeError,
    SingularOriginError,
    TruncationDomainError,
)
from airyprop.grids import GridWaveFunction, gregory_weights
from airyprop.kernelcoeffs import EquationVariant as V
from airyprop.residuals import _d1, _d2
from airyprop.specfun import airy_pair

CFG = pr.OscillatorConfig(omega0=1.0, omega1=2.0, T=1.0)


def gaussian_grid(n_points=1024, half_width=12.0):
    return GridWaveFunction.from_callable(
        lambda x: np.exp(-(x**2)), -half_width, half_width, n_points
    )


class TestEigenstate:
    def test_odd_parity_zero(self):
        assert ev.eigenstate(1, 1.0, x=0.0) == 0.0

    def test_unit_norm(self):
        x = np.linspace(-12, 12, 1024)
        w = gregory_weights(len(x), x[1] - x[0])
        for n in [0, 3, 8]:
            psi = ev.eigenstate(n, 1.0, x=x)
            assert abs(np.sum(w * psi * psi) - 1.0) <= 1e-10

    def test_orthogonality(self):
        x = np.linspace(-12, 12, 1024)
        w = gregory_weights(len(x), x[1] - x[0])
        for n, k in [(0, 2), (1, 3), (4, 5)]:
            val = np.sum(w * ev.eigenstate(n, 1.0, x=x) * ev.eigenstate(k, 1.0, x=x))
            assert abs(val) <= 1e-10

    def test_high_order_stays_finite(self):
        vals = ev.eigenstate(60, 1.0, x=np.linspace(-12, 12, 64))
        assert np.all(np.isfinite(vals))

    def test_range_guard(self):
        with pytest.raises(RangeError):
            ev.eigenstate(61, 1.0)

    def test_units(self):
        # peak width scales with sqrt(hbar / m omega)
        x = np.linspace(-6, 6, 2048)
        w = gregory_weights(len(x), x[1] - x[0])
        psi = ev.eigenstate(0, 2.0, m=3.0, hbar=0.5, x=x)
        assert abs(np.sum(w * psi * psi) - 1.0) <= 1e-10
        var = np.sum(w * x * x * psi * psi)
        assert abs(var - 0.5 / (2 * 3.0 * 2.0)) <= 1e-10  # <x^2> = hbar/(2 m omega)


class TestSolveCauchy:
    def test_norm_conservation(self):
        phi = gaussian_grid()
        out = ev.solve_cauchy(V.INCREASING, phi, 0.5)
        assert abs(out.norm_squared() - phi.norm_squared()) <= 1e-8

    def test_linearity(self):
        phi1 = gaussian_grid()
        phi2 = GridWaveFunction.from_callable(
            lambda x: x * np.exp(-(x**2)), -12.0, 12.0, 1024
        )
        a, b = 0.7 + 0.2j, -0.4j
        combo = phi1.with_values(a * phi1.values + b * phi2.values)
        lhs = ev.solve_cauchy(V.INCREASING, combo, 0.4).values
        rhs = (
            a * ev.solve_cauchy(V.INCREASING, phi1, 0.4).values
            + b * ev.solve_cauchy(V.INCREASING, phi2, 0.4).values
        )
        assert np.max(np.abs(lhs - rhs)) <= 1e-12

    @pytest.mark.parametrize("n", [0, 2, 4])
    def test_chirp_matches_analytic_evolution(self, n):
        phi = ev.eigenstate_grid(n, CFG.omega0)
        for t in [0.25, 0.5, 1.0]:
            out = ev.solve_cauchy(V.OSCILLATOR_CHIRP, phi, t, cfg=CFG)
            want = ev.evolve_eigenstate_analytic(n, t, CFG)(out.x)
            assert np.max(np.abs(out.values - want)) <= 1e-6
            assert abs(out.norm_squared() - 1.0) <= 1e-8

    def test_general_profile_route(self):
        phi = ev.eigenstate_grid(0, CFG.omega0)
        mu = CFG.classical_solution()
        out = ev.solve_cauchy(V.OSCILLATOR_GENERAL, phi, 0.5, cfg=CFG, mu=mu)
        want = ev.solve_cauchy(V.OSCILLATOR_CHIRP, phi, 0.5, cfg=CFG)
        assert np.max(np.abs(out.values - want.values)) <= 1e-6

    def test_boundary_decay_required(self):
        narrow = GridWaveFunction.from_callable(lambda x: np.exp(-(x**2)), -3, 3, 64)
        with pytest.raises(TruncationDomainError):
            ev.solve_cauchy(V.INCREASING, narrow, 0.5)

    def test_initial_time_required(self):
        phi = gaussian_grid().with_values(gaussian_grid().values, t=0.3)
        with pytest.raises(DomainError):
            ev.solve_cauchy(V.INCREASING, phi, 0.5)


class TestEvolveEigenstateAnalytic:
    def test_initial_limit(self):
        for n in [0, 1, 3]:
            phi = ev.eigenstate_grid(n, CFG.omega0)
            got = ev.evolve_eigenstate_analytic(n, 1e-4, CFG)(phi.x)
            assert np.max(np.abs(got - phi.values)) <= 1e-3

    def test_unit_norm_through_transition(self):
        x = np.linspace(-12, 12, 1024)
        w = gregory_weights(len(x), x[1] - x[0])
        for t in [CFG.T / 4, CFG.T / 2, CFG.T]:
            psi = ev.evolve_eigenstate_analytic(2, t, CFG)(x)
            assert abs(np.sum(w * np.abs(psi) ** 2) - 1.0) <= 1e-8

    def test_general_route_matches_chirp_route(self):
        mu = CFG.classical_solution()
        x = np.linspace(-6, 6, 129)
        for t in [0.3, 0.6, 0.9]:
            a = ev.evolve_eigenstate_analytic(3, t, CFG)(x)
            b = ev.evolve_eigenstate_analytic(3, t, CFG, mu=mu)(x)
            assert np.max(np.abs(a - b)) <= 1e-7

    def test_against_unitary_stepper(self):
        # fully independent route: Cayley stepping of the chirp Hamiltonian
        n, t = 1, 0.5
        phi = ev.eigenstate_grid(n, CFG.omega0)
        stepped = oracle.unitary_stepper(CFG.frequency_profile(), phi, t, dt=1e-4)
        analytic = stepped.with_values(ev.evolve_eigenstate_analytic(n, t, CFG)(phi.x), t=t)
        fidelity = abs(oracle.overlap(stepped, analytic))
        assert abs(fidelity - 1.0) <= 1e-5


class TestGaugeSolve:
    def test_modulus_equals_plain_solution(self):
        phi = gaussian_grid()
        t = 0.6
        gauge = ev.gauge_solve(phi, t)
        plain = ev.solve_cauchy(V.INCREASING, phi, t)
        # |exp(-i x^2/t)| = 1: moduli agree to one rounding of the multiply
        assert np.max(np.abs(np.abs(gauge.values) - np.abs(plain.values))) <= 3e-16

    def test_construction_identity(self):
        phi = gaussian_grid()
        t = 0.45
        gauge = ev.gauge_solve(phi, t)
        plain = ev.solve_cauchy(V.INCREASING, phi, t)
        assert np.max(np.abs(gauge.values * np.exp(1j * gauge.x**2 / t) - plain.values)) <= 1e-12

    def test_origin_error(self):
        with pytest.raises(SingularOriginError):
            ev.gauge_solve(gaussian_grid(), 0.0)

    def test_discrete_equation_residual(self):
        # i psi_t + psi_xx/4 + t x^2 psi + (i/2t)(2 x psi_x + psi) = 0 on the
        # gauge solution psi = exp(-i x^2/t) integral G phi dy, with the
        # quadrature carried on a grid fine enough for the x-stencils (the
        # gauge phase oscillates at rate 2x/t)
        y = np.linspace(-12.0, 12.0, 2048)
        wq = gregory_weights(len(y), y[1] - y[0]) * np.exp(-(y**2))
        x = np.linspace(-5.5, 5.5, 2048)
        dx = x[1] - x[0]
        ht = 2e-4

        def gauge_psi(t):
            g = kc.green_coeffs(V.INCREASING, t)
            kern = np.exp(
                1j * (g.alpha * x[:, None] ** 2 + g.beta * x[:, None] * y + g.gamma * y**2)
            ) / np.sqrt(2j * np.pi * g.mu)
            return np.exp(-1j * x * x / t) * (kern @ wq)

        for t in [0.25, 0.6, 1.0]:
            sols = [gauge_psi(t + k * ht) for k in (-2, -1, 0, 1, 2)]
            v = sols[2]
            mid = slice(2, -2)
            psi_t = _d1([s[mid] for s in sols], ht)
            psi_x = (8 * (v[3:-1] - v[1:-3]) - (v[4:] - v[:-4])) / (12 * dx)
            psi_xx = (-v[4:] + 16 * v[3:-1] - 30 * v[2:-2] + 16 * v[1:-3] - v[:-4]) / (
                12 * dx * dx
            )
            xm = x[mid]
            res = (
                1j * psi_t
                + 0.25 * psi_xx
                + t * xm * xm * v[mid]
                + (1j / (2 * t)) * (2 * xm * psi_x + v[mid])
            )
            interior = np.abs(xm) <= 5.0
            assert np.max(np.abs(res[interior])) <= 1e-4

    def test_modified_initial_condition(self):
        # exp(i x^2/t) psi -> phi as t -> 0+, checked at t = 1e-3 by a
        # fine-grid quadrature that resolves the kernel oscillation
        t = 1e-3
        g = kc.green_coeffs(V.INCREASING, t)
        y = np.linspace(-8.0, 8.0, 2**21 + 1)
        w = gregory_weights(len(y), y[1] - y[0])
        phi = np.exp(-(y**2))
        for x in [-1.0, 0.0, 0.7, 1.4]:
            kern = np.exp(1j * (g.alpha * x * x + g.beta * x * y + g.gamma * y * y)) / np.sqrt(
                2j * np.pi * g.mu
            )
            psi_gauge = np.exp(-1j * x * x / t) * np.sum(w * kern * phi)
            recovered = np.exp(1j * x * x / t) * psi_gauge
            assert abs(recovered - math.exp(-x * x)) <= 1e-2


class TestNls:
    PARAMS = (0.3, 1.0, -2.0, 0.7)

    def airy_mu(self):
        c1, c2 = self.PARAMS[:2]
        mu = lambda t: c1 * airy_pair(t).a + c2 * airy_pair(t).b
        dmu = lambda t: c1 * airy_pair(t).da + c2 * airy_pair(t).db
        return mu, dmu

    def test_kappa_log_form(self):
        mu, dmu = self.airy_mu()
        params = ev.NlsParams(s=1.0, coupling=0.8, kappa0=0.4)
        for t in [0.3, 0.9]:
            closed = ev.nls_kappa(params, mu, dmu, t, method="closed")
            quad = ev.nls_kappa(params, mu, dmu, t, method="quadrature")
            assert abs(closed - quad) <= 1e-10
            assert abs(closed - (0.4 - 0.8 * math.log(mu(t) / mu(0.0)))) <= 1e-14

    def test_kappa_power_form(self):
        mu, dmu = self.airy_mu()
        params = ev.NlsParams(s=0.5, coupling=-0.6, kappa0=0.0)
        for t in [0.4, 1.1]:
            closed = ev.nls_kappa(params, mu, dmu, t, method="closed")
            quad = ev.nls_kappa(params, mu, dmu, t, method="quadrature")
            assert abs(closed - quad) <= 1e-9

    def test_zero_coupling(self):
        mu, dmu = self.airy_mu()
        params = ev.NlsParams(s=1.0, coupling=0.0, kappa0=0.25)
        assert ev.nls_kappa(params, mu, dmu, 0.8) == 0.25

    def test_modulus_law(self):
        c1, c2, b0, g0 = self.PARAMS
        params = ev.NlsParams(s=0.5, coupling=0.7, kappa0=0.1, phi=0.2)
        for t in [0.0, 0.5, 1.0]:
            psi = ev.nls_solution(params, V.INCREASING, c1, c2, b0, g0, 0.8, -0.3, t)
            mu = kc.general_coeffs(V.INCREASING, c1, c2, b0, g0, t).mu
            assert abs(abs(psi) ** 2 - 1.0 / mu) <= 1e-14 * max(1.0, 1.0 / mu)

    @pytest.mark.parametrize("s_exp", [0.0, 0.5, 1.0])
    def test_equation_residual(self, s_exp):
        c1, c2, b0, g0 = self.PARAMS
        lam = 0.7
        params = ev.NlsParams(s=s_exp, coupling=lam, kappa0=0.1, phi=0.2)
        mu, dmu = self.airy_mu()

        def kernel(x, y, t):
            return complex(ev.nls_solution(params, V.INCREASING, c1, c2, b0, g0, x, y, t))

        h = 1e-3
        for (x, y, t) in [(0.8, -0.5, 0.6), (-0.4, 0.9, 0.9)]:
            fx = [kernel(x + k * h, y, t) for k in (-2, -1, 0, 1, 2)]
            ft = [kernel(x, y, t + k * h) for k in (-2, -1, 0, 1, 2)]
            f0 = fx[2]
            res = (
                1j * _d1(ft, h)
                + 0.25 * _d2(fx, h)
                + t * x * x * f0
                - lam * dmu(t) * abs(f0) ** (2 * s_exp) * f0
            )
            assert abs(res) <= 1e-4

    def test_mu_positive_required(self):
        params = ev.NlsParams(s=0.5, coupling=0.7)
        with pytest.raises(ParameterError):
            # c2 < 0 makes mu(0) negative
            ev.nls_solution(params, V.INCREASING, 0.3, -1.0, 1.0, 0.0, 0.5, 0.5, 0.2)

    def test_negative_s_rejected(self):
        with pytest.raises(ParameterError):
            ev.NlsParams(s=-1.0, coupling=0.0)
