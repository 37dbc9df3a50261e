"""Closed-form Schrodinger propagators with ramped quadratic potentials, the
parametric-oscillator transition machinery, and a numerical oracle that
cross-validates every closed form."""

from .amplitudes import (
    BargmannAngles,
    BargmannIndex,
    TransitionTable,
    bargmann_angles,
    bargmann_full,
    bargmann_t,
    bargmann_t_origin,
    expand_state,
    first_excited_probability,
    ground_state_probability,
    quantum_numbers,
    sudden_amplitude,
    sudden_transition_table,
    sudden_zeta,
    transition_amplitude,
    transition_probability,
    transition_table,
    zeta,
)
from .evolve import (
    GridWaveFunction,
    NlsParams,
    eigenstate,
    eigenstate_grid,
    evolve_eigenstate_analytic,
    gauge_solve,
    nls_kappa,
    nls_solution,
    solve_cauchy,
)
from .kernelcoeffs import (
    EquationVariant,
    QuadraticPhase,
    chirp_general_coeffs,
    chirp_scaled_coeffs,
    compose_forward,
    compose_inverse,
    gauge_alpha,
    general_coeffs,
    general_oscillator_coeffs,
    green_coeffs,
    oscillator_coeffs,
    oscillator_mu,
)
from .oracle import (
    ClassicalSolution,
    FrequencyProfile,
    fresnel_quadrature,
    gamma_quadrature,
    integrate_classical,
    overlap,
    unitary_stepper,
)
from .propagator import (
    OscillatorConfig,
    batch_evaluate,
    free_particle_green,
    general_green,
    greens,
    kernel_K,
    oscillator_green,
)
from .specfun import (
    AirySample,
    HypTermSpec,
    airy_pair,
    clausen_3f2,
    gauss_fresnel,
    hermite,
    hyp2f1_term,
    parity_split_2f1,
    to_standard_airy,
)

__version__ = "0.1.0"
