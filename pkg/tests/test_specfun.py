import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from airyprop import specfun as sf
from airyprop.errors import DomainError, ParameterError, ParityError, RangeError


class TestAiryPair:
    def test_values_at_zero(self):
        s = sf.airy_pair(0.0)
        assert (s.a, s.b, s.da, s.db) == (0.0, 1.0, 1.0, 0.0)

    def test_partial_sum_tail_bound_at_one(self):
        # a(1) against the three-term partial sum t + t^4/12 + t^7/504; the
        # remainder is bounded by the first omitted term 80/10! divided by
        # (1 - r) with term ratio r = (1/9)/(4*(4/3+3)) = 1/156.
        partial = 1.0 + 1.0 / 12.0 + 1.0 / 504.0
        first_omitted = 80.0 / math.factorial(10)
        bound = first_omitted / (1.0 - 1.0 / 156.0)
        assert abs(sf.airy_pair(1.0).a - partial) <= bound

    def test_wronskian_pointwise(self):
        s = sf.airy_pair(0.7)
        assert abs(s.wronskian() + 1.0) <= 1e-12

    @pytest.mark.parametrize("t", np.linspace(-5, 5, 200).tolist())
    def test_wronskians_on_core_range(self, t):
        s = sf.airy_pair(t)
        assert s.wronskian_defect() <= 1e-12
        assert s.wronskian_derivatives_defect() <= 1e-12

    def test_series_vs_converted_standard(self):
        # the two evaluation strategies agree over the whole documented range
        for t in np.linspace(-30, 30, 241):
            if abs(t) <= sf.SERIES_CUTOFF:
                s = sf.airy_pair_series(t)
            else:
                s = sf.airy_pair(t)
            r = sf.airy_pair_from_standard(t)
            for x, y in zip((s.a, s.b, s.da, s.db), (r.a, r.b, r.da, r.db)):
                assert abs(x - y) <= 1e-9 * max(1.0, abs(y))

    def test_high_precision_spot_checks(self):
        mp = pytest.importorskip("mpmath")
        mp.mp.dps = 30
        for t, tol in [(0.5, 1e-12), (-5.0, 1e-12), (-8.0, 1e-9), (25.0, 1e-9), (-27.5, 1e-9)]:
            s = sf.airy_pair(t)
            w = mp.mpf(t) ** 3 / 9
            ref = (
                t * mp.hyp0f1(mp.mpf(4) / 3, w),
                mp.hyp0f1(mp.mpf(2) / 3, w),
                mp.hyp0f1(mp.mpf(1) / 3, w),
                t * t / 2 * mp.hyp0f1(mp.mpf(5) / 3, w),
            )
            for x, r in zip((s.a, s.b, s.da, s.db), ref):
                assert abs(x - float(r)) <= tol * max(1.0, abs(float(r)))

    def test_ode_residual_by_series_differentiation(self):
        for t in np.linspace(-5, 5, 41):
            ra, rb = sf.airy_ode_residuals_series(t)
            s = sf.airy_pair_series(t)
            scale = max(1.0, abs(t * s.a), abs(t * s.b))
            assert abs(ra) <= 1e-12 * scale
            assert abs(rb) <= 1e-12 * scale

    def test_domain_and_range_errors(self):
        with pytest.raises(DomainError):
            sf.airy_pair(float("nan"))
        with pytest.raises(RangeError):
            sf.airy_pair(31.0)

    @given(st.floats(min_value=-5.0, max_value=5.0, allow_nan=False))
    @settings(max_examples=80, deadline=None)
    def test_wronskian_property(self, t):
        assert sf.airy_pair(t).wronskian_defect() <= 1e-12


class TestStandardConversion:
    def test_ai_at_zero(self):
        s = sf.airy_pair(0.0)
        ai, bi, dai, dbi = sf.to_standard_airy(s)
        assert abs(ai - 0.35502805388781724) <= 1e-14
        assert abs(bi - 0.6149266274460007) <= 1e-13  # Bi(0) = 3^(-1/6)/Gamma(2/3)

    def test_standard_wronskian(self):
        for t in [-4.0, -1.0, 0.0, 1.5, 4.0]:
            ai, bi, dai, dbi = sf.to_standard_airy(sf.airy_pair(t))
            assert abs(ai * dbi - dai * bi - 1.0 / math.pi) <= 1e-12

    def test_round_trip(self):
        for t in [-3.0, 0.2, 2.5]:
            s = sf.airy_pair(t)
            back = sf.from_standard_airy(t, *sf.to_standard_airy(s))
            for x, y in zip((s.a, s.b, s.da, s.db), (back.a, back.b, back.da, back.db)):
                assert abs(x - y) <= 1e-13 * max(1.0, abs(x))


class TestHermite:
    def test_seed_and_linear(self):
        assert sf.hermite(0, 0.3) == 1.0
        assert sf.hermite(1, 2.0) == 4.0

    def test_cubic_via_explicit_coefficients(self):
        # H_3(x) = 8x^3 - 12x
        for x in [-1.5, 0.0, 1.0, 2.25]:
            assert abs(sf.hermite(3, x) - (8 * x**3 - 12 * x)) <= 1e-12 * max(1.0, abs(x) ** 3)
        assert sf.hermite(3, 1.0) == -4.0

    def test_against_numpy_basis(self):
        x = np.linspace(-2, 2, 9)
        for n in range(8):
            ref = np.polynomial.hermite.hermval(x, [0.0] * n + [1.0])
            assert np.allclose(sf.hermite(n, x), ref, rtol=1e-12, atol=1e-12)

    def test_range_error(self):
        with pytest.raises(RangeError):
            sf.hermite(201, 0.0)


class TestTerminatingHypergeometric:
    def test_empty_product(self):
        spec = sf.HypTermSpec(0, 0, c=0.37, z=2.1 + 3j)
        assert sf.hyp2f1_term(spec) == 1.0

    def test_single_term(self):
        z = 0.3 + 0.4j
        spec = sf.HypTermSpec(1, 1, c=-0.5, z=z)
        assert abs(sf.hyp2f1_term(spec) - (1 - 2 * z)) <= 1e-14

    def test_even_parity_example(self):
        # k=4, n=2, c=(1-6)/2, z=(1+i)/2 equals the parity-reduced right side
        # with r=2, s=1, zeta=1: both sides sum to -3/5.
        z = 0.5 + 0.5j
        lhs = sf.hyp2f1_term(sf.HypTermSpec(4, 2, c=-2.5, z=z))
        rhs = sf.parity_split_2f1(4, 2, 1.0)
        assert abs(lhs - (-0.6)) <= 1e-14
        assert abs(lhs - rhs) <= 1e-14

    def test_zero_denominator_rejected(self):
        with pytest.raises(ParameterError):
            sf.HypTermSpec(3, 4, c=-2, z=0.5)

    def test_exact_fraction_path(self):
        spec = sf.HypTermSpec(2, 2, c=Fraction(-3, 2), z=Fraction(1, 3))
        val = sf.hyp2f1_term(spec)
        assert isinstance(val, Fraction)
        # 1 - (8/3)z + (8/3)z^2 at z = 1/3
        assert val == 1 - Fraction(8, 9) + Fraction(8, 27)


class TestParitySplit:
    def test_trivial(self):
        assert sf.parity_split_2f1(0, 0, 0.7) == 1.0

    def test_k2_n0_is_one(self):
        for zeta in [0.0, 0.5, -2.0]:
            assert abs(sf.parity_split_2f1(2, 0, zeta) - 1.0) <= 1e-15

    def test_odd_minimal_case(self):
        # k=3, n=1 reduces to -i*zeta
        for zeta in [0.25, -1.5]:
            assert abs(sf.parity_split_2f1(3, 1, zeta) - (-1j * zeta)) <= 1e-15

    def test_odd_parity_error(self):
        with pytest.raises(ParityError):
            sf.parity_split_2f1(2, 1, 0.3)

    @pytest.mark.parametrize("zeta", [0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0])
    def test_identity_against_complex_argument(self, zeta):
        # The direct sum at the complex argument is evaluated in exact
        # Gaussian-rational arithmetic (in float it suffers the very
        # cancellation the parity transformation removes); the float
        # parity-split path must match the exact value to 1e-12.
        zq = Fraction(zeta)
        for k in range(0, 21):
            for n in range(k % 2, 21, 2):
                dr, di = sf.hyp2f1_term(
                    sf.HypTermSpec(
                        k, n, c=Fraction(1 - k - n, 2), z=(Fraction(1, 2), zq / 2)
                    )
                )
                exact = complex(float(dr), float(di))
                split = sf.parity_split_2f1(k, n, float(zeta))
                scale = max(1.0, abs(exact))
                assert abs(exact - split) <= 1e-12 * scale
                # the direct float sum agrees within its own conditioning
                direct = sf.hyp2f1_term(
                    sf.HypTermSpec(k, n, c=(1 - k - n) / 2.0, z=0.5 * (1 + 1j * zeta))
                )
                assert abs(direct - exact) <= 1e-9 * scale

    @given(
        st.integers(min_value=0, max_value=12),
        st.integers(min_value=0, max_value=12),
        st.fractions(min_value=-3, max_value=3, max_denominator=8),
    )
    @settings(max_examples=60, deadline=None)
    def test_clausen_identity_exact(self, r, s, zeta):
        k, n = 2 * r, 2 * s
        z = 1 + Fraction(zeta) ** 2
        assert sf.clausen_3f2(k, n, z) == sf.parity_split_abs2(k, n, zeta)
        k, n = 2 * r + 1, 2 * s + 1
        assert sf.clausen_3f2(k, n, z) == sf.parity_split_abs2(k, n, zeta)


class TestClausen:
    def test_trivial_cases(self):
        assert sf.clausen_3f2(0, 0, 3.7) == 1.0
        assert sf.clausen_3f2(2, 0, 123.4) == 1.0  # -n = 0 truncates immediately

    def test_exact_rational_value(self):
        # k=n=2 at z=2 (zeta=1): |2F1|^2 = |1/3 - 2/3|^2 = 1/9 both ways
        assert sf.clausen_3f2(2, 2, Fraction(2)) == Fraction(1, 9)
        assert sf.parity_split_abs2(2, 2, Fraction(1)) == Fraction(1, 9)

    def test_float_matches_parity_split(self):
        for zeta in [0.3, 1.7]:
            z = 1 + zeta**2
            for k in range(0, 21):
                for n in range(k % 2, 21, 2):
                    lhs = sf.clausen_3f2(k, n, z)
                    rhs = sf.parity_split_abs2(k, n, zeta)
                    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))

    def test_parity_error(self):
        with pytest.raises(ParityError):
            sf.clausen_3f2(1, 2, 2.0)


class TestGammaIdentities:
    def test_reflection(self):
        # Gamma(z) Gamma(1-z) = pi / sin(pi z)
        for z in np.linspace(0.05, 0.95, 20):
            lhs = sf.gamma(z) * sf.gamma(1 - z)
            rhs = math.pi / math.sin(math.pi * z)
            assert abs(lhs - rhs) <= 1e-13 * abs(rhs)

    def test_duplication(self):
        # Gamma(2z) = 2^(2z-1)/sqrt(pi) Gamma(z) Gamma(z + 1/2)
        for z in np.linspace(0.1, 10.0, 20):
            lhs = sf.gamma(2 * z)
            rhs = 2 ** (2 * z - 1) / math.sqrt(math.pi) * sf.gamma(z) * sf.gamma(z + 0.5)
            assert abs(lhs - rhs) <= 1e-13 * abs(rhs)

    def test_pole(self):
        with pytest.raises(DomainError):
            sf.gamma(-2.0)

    def test_pochhammer_exact(self):
        assert sf.pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
        assert sf.pochhammer(-2, 3) == 0


class TestGaussFresnel:
    def test_pure_gaussian(self):
        assert abs(sf.gauss_fresnel(1j, 0.0) - math.sqrt(math.pi)) <= 1e-14

    def test_shifted_gaussian_oracle(self):
        # quadrature oracle: integral exp(-z^2 - 2z) dz = sqrt(pi)*e
        assert abs(sf.gauss_fresnel(1j, 1j) - 4.818029094698721) <= 1e-12

    def test_pure_fresnel(self):
        # damped-quadrature oracle (eps -> 0 extrapolation) gives sqrt(pi*i)
        want = cmath.sqrt(math.pi * 1j)
        assert abs(sf.gauss_fresnel(1.0, 0.0) - want) <= 1e-14
        assert abs(want - complex(1.2533141373155003, 1.2533141373155003)) <= 1e-15

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            sf.gauss_fresnel(0.0, 1.0)
        with pytest.raises(DomainError):
            sf.gauss_fresnel(1.0 - 0.5j, 0.0)
