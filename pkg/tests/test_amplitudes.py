import cmath
import math

import numpy as np
import pytest

from airyprop import amplitudes as am
from airyprop import evolve as ev
from airyprop import oracle
from airyprop import propagator as pr
from airyprop.errors import DomainError, ParameterError, ParityError
from airyprop.kernelcoeffs import EquationVariant as V
from airyprop.kernelcoeffs import oscillator_coeffs

CFG = pr.OscillatorConfig(omega0=1.0, omega1=2.0, T=1.0)
PHASE = CFG.scaled_phase(CFG.T)


class TestZeta:
    def test_sudden_limit_form(self):
        assert abs(am.sudden_zeta(1.0, 2.0) - 2.0 * math.sqrt(2.0)) <= 1e-15

    def test_equal_frequencies_degenerate(self):
        with pytest.raises(ParameterError):
            am.sudden_zeta(1.0, 1.0)

    def test_chirp_and_scaled_forms_agree(self):
        # same zeta from the dimensionless branch with the omega scaling and
        # from the generally-normalized coefficients
        tau = CFG.tau(CFG.T)
        dimless = oscillator_coeffs(tau, CFG.delta)
        z1 = am.zeta(dimless, CFG.omega0, CFG.omega1, chirp_scaling=CFG.omega)
        z2 = am.zeta(PHASE, CFG.omega0, CFG.omega1)
        assert abs(z1 - z2) <= 1e-12 * max(1.0, abs(z2))

    def test_identity_transition_degenerate(self):
        w = 1.3
        prof = oracle.FrequencyProfile.constant(w)
        cfg = pr.OscillatorConfig(omega0=w, omega1=w, T=1.0, profile=prof)
        mu = cfg.classical_solution()
        phase = cfg.scaled_phase(0.7, mu=mu)
        with pytest.raises(ParameterError):
            am.zeta(phase, w, w)

    def test_invariant_difference_identity(self):
        # D+ - D- = beta^2 w0 w1 exactly
        d_plus, d_minus = am.quadratic_invariants(PHASE, CFG.omega0, CFG.omega1)
        want = PHASE.beta**2 * CFG.omega0 * CFG.omega1
        assert abs((d_plus - d_minus) - want) <= 1e-12 * want


class TestTransitionAmplitude:
    def test_odd_parity_zero(self):
        assert am.transition_amplitude(1, 0, PHASE, CFG) == 0.0
        assert am.transition_amplitude(2, 5, PHASE, CFG) == 0.0

    def test_column_unitarity(self):
        tab = am.transition_table(CFG, k_max=48)
        assert np.all(tab.column_defects(4) <= 1e-8)

    def test_column_orthonormality_includes_phases(self):
        tab = am.transition_table(CFG, k_max=48)
        assert tab.orthonormality_defect(4) <= 1e-8

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_against_quadrature_overlap(self, n):
        # c_kn = <terminal eigenstate k | evolved eigenstate n> on the grid
        psi = ev.solve_cauchy(V.OSCILLATOR_CHIRP, ev.eigenstate_grid(n, CFG.omega0), CFG.T, cfg=CFG)
        for k in range(n % 2, 7, 2):
            bra = ev.eigenstate_grid(k, CFG.omega1)
            direct = oracle.overlap(bra, psi)
            closed = am.transition_amplitude(k, n, PHASE, CFG)
            assert abs(direct - closed) <= 1e-8

    def test_near_identity_transition(self):
        # a barely-changed frequency: |c_nn| ~ 1, off-diagonals ~ 0; the Airy
        # chirp parametrization degenerates as omega1 -> omega0 (delta ->
        # infinity), so this is the general route's regime
        w1 = 1.0 + 1e-4
        prof = oracle.FrequencyProfile.linear_chirp(1.0, w1, 1.0)
        cfg = pr.OscillatorConfig(omega0=1.0, omega1=w1, T=1.0, profile=prof)
        mu = cfg.classical_solution()
        phase = cfg.scaled_phase(cfg.T, mu=mu)
        for n in range(3):
            assert abs(abs(am.transition_amplitude(n, n, phase, cfg)) - 1.0) <= 1e-6
        assert abs(am.transition_amplitude(2, 0, phase, cfg)) <= 1e-3

    def test_identity_transition_by_oracle(self):
        # constant frequency: the evolved state stays the same eigenstate
        w = 1.0
        prof = oracle.FrequencyProfile.constant(w)
        psi0 = ev.eigenstate_grid(1, w)
        out = oracle.unitary_stepper(prof, psi0, 1.0, dt=1e-3)
        assert abs(abs(oracle.overlap(psi0, out)) - 1.0) <= 1e-6
        other = ev.eigenstate_grid(3, w)
        assert abs(oracle.overlap(other, out)) <= 1e-6

    def test_downward_chirp_unitarity(self):
        cfg = pr.OscillatorConfig(omega0=2.0, omega1=1.0, T=1.0)
        tab = am.transition_table(cfg, k_max=48)
        assert np.all(tab.column_defects(3) <= 1e-8)


class TestSuddenAmplitude:
    def test_ground_overlap_value(self):
        for ratio in (2.0, 5.0, 10.0):
            w0, w1 = 1.0, ratio
            got = abs(am.sudden_amplitude(0, 0, w0, w1)) ** 2
            want = 2.0 * math.sqrt(w0 * w1) / (w0 + w1)
            assert abs(got - want) <= 1e-10

    def test_ground_overlap_against_quadrature(self):
        x = np.linspace(-12, 12, 2001)
        w = oracle.gregory_weights(len(x), x[1] - x[0])
        for w1 in (2.0, 5.0):
            direct = np.sum(w * ev.eigenstate(0, 1.0, x=x) * ev.eigenstate(0, w1, x=x))
            got = am.sudden_amplitude(0, 0, 1.0, w1)
            assert abs(abs(got) - abs(direct)) <= 1e-10

    def test_parity_zero(self):
        assert am.sudden_amplitude(0, 1, 1.0, 2.0) == 0.0

    def test_geometric_column_sum(self):
        total = sum(abs(am.sudden_amplitude(2 * k, 0, 1.0, 2.0)) ** 2 for k in range(64))
        assert abs(total - 1.0) <= 1e-10

    def test_matrix_matches_eigenbasis_overlaps(self):
        x = np.linspace(-12, 12, 4001)
        w = oracle.gregory_weights(len(x), x[1] - x[0])
        for k, n in [(2, 0), (1, 1), (3, 1), (2, 2), (4, 2)]:
            direct = np.sum(w * ev.eigenstate(k, 2.0, x=x) * ev.eigenstate(n, 1.0, x=x))
            got = am.sudden_amplitude(k, n, 1.0, 2.0)
            assert abs(abs(got) - abs(direct)) <= 1e-10

    def test_downward_jump(self):
        got = abs(am.sudden_amplitude(0, 0, 2.0, 1.0)) ** 2
        assert abs(got - 2.0 * math.sqrt(2.0) / 3.0) <= 1e-10


class TestTransitionProbability:
    def test_matches_amplitude_modulus(self):
        for k in range(9):
            for n in range(k % 2, 9, 2):
                p = am.transition_probability(k, n, PHASE, CFG)
                a = abs(am.transition_amplitude(k, n, PHASE, CFG)) ** 2
                assert abs(p - a) <= 1e-10

    def test_nonnegative(self):
        for k in range(0, 13):
            for n in range(k % 2, 13, 2):
                assert am.transition_probability(k, n, PHASE, CFG) >= 0.0

    def test_ground_column_closed_form(self):
        for k in range(6):
            got = am.ground_state_probability(k, PHASE, CFG)
            want = am.transition_probability(2 * k, 0, PHASE, CFG)
            assert abs(got - want) <= 1e-10 * max(1.0, want)

    def test_first_excited_column_closed_form(self):
        for k in range(6):
            got = am.first_excited_probability(k, PHASE, CFG)
            want = am.transition_probability(2 * k + 1, 1, PHASE, CFG)
            assert abs(got - want) <= 1e-10 * max(1.0, want)

    def test_negative_binomial_closures(self):
        s0 = sum(am.ground_state_probability(k, PHASE, CFG) for k in range(64))
        s1 = sum(am.first_excited_probability(k, PHASE, CFG) for k in range(64))
        assert abs(s0 - 1.0) <= 1e-10
        assert abs(s1 - 1.0) <= 1e-10

    def test_odd_zero(self):
        assert am.transition_probability(1, 0, PHASE, CFG) == 0.0


class TestExpandState:
    def test_basis_vector_gives_column(self):
        tab = am.transition_table(CFG, k_max=16)
        e2 = np.zeros(17)
        e2[2] = 1.0
        out = am.expand_state(e2, tab)
        assert np.array_equal(out, tab.entries[:, 2])

    def test_norm_conservation(self):
        tab = am.transition_table(CFG, k_max=48)
        c0 = np.zeros(5, dtype=complex)
        c0[0], c0[2], c0[4] = 0.6, 0.48j, math.sqrt(1 - 0.36 - 0.48**2)
        out = am.expand_state(c0, tab)
        assert abs(np.sum(np.abs(out) ** 2) - 1.0) <= 1e-8

    def test_linearity(self):
        tab = am.transition_table(CFG, k_max=16)
        a = np.zeros(6, dtype=complex)
        b = np.zeros(6, dtype=complex)
        a[0], b[4] = 1.0, 1.0
        combo = (a + 1j * b) / math.sqrt(2)
        lhs = am.expand_state(combo, tab)
        rhs = (am.expand_state(a, tab) + 1j * am.expand_state(b, tab)) / math.sqrt(2)
        assert np.max(np.abs(lhs - rhs)) <= 1e-14

    def test_non_normalized_warns(self):
        tab = am.transition_table(CFG, k_max=8)
        with pytest.warns(UserWarning):
            am.expand_state(np.array([2.0]), tab)


class TestBargmann:
    ANGLES = am.bargmann_angles(PHASE, CFG.omega0, CFG.omega1)

    def test_quantum_number_map(self):
        idx = am.quantum_numbers(0, 0)
        assert (idx.j, idx.lam, idx.lam_prime) == (-0.75, 0.25, 0.25)
        idx = am.quantum_numbers(1, 1)
        assert (idx.j, idx.lam, idx.lam_prime) == (-0.25, 0.75, 0.75)
        idx = am.quantum_numbers(4, 2)
        assert (idx.j, idx.lam, idx.lam_prime) == (-0.75, 2.25, 1.25)
        with pytest.raises(ParityError):
            am.quantum_numbers(1, 2)

    def test_index_validation(self):
        with pytest.raises(ParameterError):
            am.BargmannIndex(j=-0.5, lam=0.5, lam_prime=0.5)
        with pytest.raises(ParameterError):
            am.BargmannIndex(j=-0.75, lam=0.3, lam_prime=0.25)

    def test_swap_symmetry(self):
        # exchanging (alpha <-> gamma, w0 <-> w1) swaps the tangent ratios of
        # theta and phi exactly; under atan2 both components flip sign, so
        # the angles themselves swap modulo pi
        from dataclasses import replace

        swapped = replace(PHASE, alpha=PHASE.gamma, gamma=PHASE.alpha)
        ang = am.bargmann_angles(PHASE, CFG.omega0, CFG.omega1)
        ang_swapped = am.bargmann_angles(swapped, CFG.omega1, CFG.omega0)
        assert abs(math.tan(ang.theta) - math.tan(ang_swapped.phi)) <= 1e-12
        assert abs(math.tan(ang.phi) - math.tan(ang_swapped.theta)) <= 1e-12
        for a, b in [(ang.theta, ang_swapped.phi), (ang.phi, ang_swapped.theta)]:
            wrapped = (a - b + math.pi / 2) % math.pi - math.pi / 2
            assert abs(wrapped) <= 1e-12

    def test_hyperbolic_angle_branch(self):
        # tanh^2(tau/2) in [0,1); 1/sinh(tau/2) carries the sign of beta and
        # equals zeta (the consistent normalization carries sqrt(w0 w1))
        assert 0.0 <= math.tanh(self.ANGLES.tau / 2.0) ** 2 < 1.0
        assert math.copysign(1.0, self.ANGLES.tau) == math.copysign(1.0, PHASE.beta)
        d_plus, d_minus = am.quadratic_invariants(PHASE, CFG.omega0, CFG.omega1)
        want = PHASE.beta * math.sqrt(CFG.omega0 * CFG.omega1) / math.sqrt(d_minus)
        got = 1.0 / math.sinh(self.ANGLES.tau / 2.0)
        assert abs(got - want) <= 1e-10 * max(1.0, abs(want))
        assert abs(got - am.zeta(PHASE, CFG.omega0, CFG.omega1)) <= 1e-10

    def test_full_element_phase_structure(self):
        # c_kn equals exp(-i lam theta) t^j(|tau|) exp(-i lam' phi) up to a
        # single unimodular constant per parity class (the quarter-integer
        # weights feel theta only modulo 8 pi, which the tangent ratios do
        # not pin down)
        for parity, kn_pairs in [
            (0, [(0, 0), (2, 0), (2, 2), (4, 2), (6, 4)]),
            (1, [(1, 1), (3, 1), (3, 3), (5, 3)]),
        ]:
            ratios = []
            for k, n in kn_pairs:
                idx = am.quantum_numbers(k, n)
                c = am.transition_amplitude(k, n, PHASE, CFG)
                full = am.bargmann_full(idx, self.ANGLES)
                ratios.append(c / full)
            for r in ratios:
                assert abs(abs(r) - 1.0) <= 1e-10
                assert abs(r - ratios[0]) <= 1e-8

    def test_matrix_element_matches_amplitude_modulus(self):
        tau = abs(self.ANGLES.tau)
        for k in range(7):
            for n in range(k % 2, 7, 2):
                idx = am.quantum_numbers(k, n)
                t = am.bargmann_t(idx, tau)
                c = am.transition_amplitude(k, n, PHASE, CFG)
                assert abs(abs(t) - abs(c)) <= 1e-8

    def test_full_element_modulus(self):
        idx = am.quantum_numbers(2, 0)
        full = am.bargmann_full(idx, self.ANGLES)
        assert abs(abs(full) - abs(am.bargmann_t(idx, abs(self.ANGLES.tau)))) <= 1e-14

    @pytest.mark.parametrize("j", [-0.75, -0.25])
    def test_unitarity_row_sums(self, j):
        tau = 0.8
        base = j + 1.0
        for r in range(4):
            for rp in range(4):
                total = sum(
                    am.bargmann_t(am.BargmannIndex(j, base + r, base + s), tau)
                    * am.bargmann_t(am.BargmannIndex(j, base + rp, base + s), tau)
                    for s in range(80)
                )
                want = 1.0 if r == rp else 0.0
                assert abs(total - want) <= 1e-8

    @pytest.mark.parametrize("tau", [0.35, 0.8, 1.6])
    def test_integral_representation(self, tau):
        x = np.linspace(-12, 12, 4096)
        w = oracle.gregory_weights(len(x), x[1] - x[0])
        for k in range(7):
            for n in range(k % 2, 7, 2):
                idx = am.quantum_numbers(k, n)
                integ = math.exp(tau / 4.0) * np.sum(
                    w * ev.eigenstate(k, 1.0, x=x) * ev.eigenstate(n, 1.0, x=np.exp(tau / 2.0) * x)
                )
                assert abs(integ - am.bargmann_t(idx, tau)) <= 1e-8

    def test_origin(self):
        idx = am.quantum_numbers(2, 2)
        with pytest.raises(DomainError):
            am.bargmann_t(idx, 0.0)
        assert am.bargmann_t_origin(idx) == 1.0
        assert am.bargmann_t_origin(am.quantum_numbers(4, 2)) == 0.0


class TestTableSerialization:
    def test_json_payload(self, tmp_path):
        tab = am.transition_table(CFG, k_max=6)
        payload = tab.to_json(tmp_path / "table.json")
        assert payload["K_max"] == 6
        assert payload["params"]["sudden"] is False
        assert len(payload["entries"]) == 7
        assert len(payload["unitarity_defect"]) == 7
        re, im = payload["entries"][0][0]
        assert complex(re, im) == tab.entries[0, 0]

    def test_probability_csv(self, tmp_path):
        tab = am.sudden_transition_table(1.0, 2.0, k_max=4)
        path = tmp_path / "probs.csv"
        tab.to_probability_csv(path)
        rows = path.read_text().splitlines()
        assert rows[0] == "k,n0,n1,n2,n3,n4"
        first = [float(v) for v in rows[1].split(",")[1:]]
        assert abs(first[0] - 2.0 * math.sqrt(2.0) / 3.0) <= 1e-10
        assert first[1] == 0.0  # parity zero


class TestOracleEquivalence:
    def test_stepper_reproduces_probabilities(self):
        # independent Cayley stepping vs the closed forms, k,n <= 3 (the full
        # k,n <= 6 box runs in the acceptance suite)
        prof = CFG.frequency_profile()
        bras = [ev.eigenstate_grid(k, CFG.omega1) for k in range(4)]
        worst = 0.0
        for n in range(4):
            out = oracle.unitary_stepper(prof, ev.eigenstate_grid(n, CFG.omega0), CFG.T, dt=2e-4)
            for k in range(n % 2, 4, 2):
                p = abs(oracle.overlap(bras[k], out)) ** 2
                worst = max(worst, abs(p - am.transition_probability(k, n, PHASE, CFG)))
        assert worst <= 1e-3
