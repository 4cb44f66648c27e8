"""Temporal/spatial/free complexity measures and error-correction accounting."""

import math

import pytest

from physcomp.errors import (
    EntropyOutOfRange,
    NegativeInput,
    NonPositiveEnergy,
    NonPositiveTemperature,
    ProbabilityOutOfRange,
)
from physcomp.measures import (
    ComplexityReport,
    binary_entropy,
    complexity_report,
    error_correction_space,
    free_phi,
    free_phi_op_equivalent,
    free_phi_thermo,
    landauer_cost,
    ml_min_time,
    phi_space,
    phi_time,
)
from physcomp.units import BIT, CONSTANTS, ENERGY, TEMPERATURE, TIME, Quantity

HBAR = CONSTANTS.hbar.magnitude
EV = CONSTANTS.electron_volt.magnitude

# frozen scalar oracles
PHI_TIME_1J_1S = 6.036760722267447e33  # 2 / (pi hbar)
ML_TIME_1EV = 1.0339169235974639e-15  # pi hbar / (2 eV), from pinned constants
LANDAUER_300K_1BIT = 2.870978885078724e-21  # k_B 300 ln2
H_1E_MINUS_3_BITS = 0.011407757737461138
EC_EXACT_1E6_1E_MINUS3 = 11407.757737461138
EC_ASYM_1E6_1E_MINUS3 = 9965.784284662088


def joules(x):
    return Quantity(x, ENERGY, "J")


def seconds(x):
    return Quantity(x, TIME, "s")


def kelvin_t(x):
    return Quantity(x, TEMPERATURE, "K")


class TestPhiTime:
    def test_one_joule_one_second(self):
        assert phi_time(joules(1.0), seconds(1.0)) == pytest.approx(
            PHI_TIME_1J_1S, rel=1e-12
        )

    def test_zero_energy_zero_ops(self):
        assert phi_time(joules(0.0), seconds(1.0)) == 0.0

    def test_inverse_of_minimum_flip_time_is_one_op(self):
        assert phi_time(joules(math.pi * HBAR / 2.0), seconds(1.0)) == pytest.approx(
            1.0, rel=1e-12
        )

    def test_negative_inputs_rejected(self):
        with pytest.raises(NegativeInput):
            phi_time(joules(-1.0), seconds(1.0))
        with pytest.raises(NegativeInput):
            phi_time(joules(1.0), seconds(-1.0))


class TestMlMinTime:
    def test_one_electron_volt(self):
        t = ml_min_time(Quantity(EV, ENERGY, "J"))
        assert t.magnitude == pytest.approx(ML_TIME_1EV, rel=1e-12)

    def test_identity_with_phi_time(self):
        for e in (1e-21, 1.0, 3.7e5):
            assert phi_time(joules(e), ml_min_time(joules(e))) == pytest.approx(
                1.0, rel=1e-12
            )

    def test_doubling_energy_halves_time(self):
        assert ml_min_time(joules(2.0)).magnitude == pytest.approx(
            ml_min_time(joules(1.0)).magnitude / 2.0, rel=1e-15
        )

    def test_non_positive_rejected(self):
        with pytest.raises(NonPositiveEnergy):
            ml_min_time(joules(0.0))


class TestPhiSpace:
    def test_equilibrium_has_no_memory(self):
        assert phi_space(1e6 * BIT, 1e6 * BIT).magnitude == 0.0

    def test_zero_entropy_gives_everything(self):
        assert phi_space(1e6 * BIT, 0 * BIT).magnitude == 1e6

    def test_large_scale_arithmetic(self):
        got = phi_space(1.5e77 * BIT, 0.5e77 * BIT)
        assert got.magnitude == pytest.approx(1e77, rel=1e-12)

    def test_out_of_range(self):
        with pytest.raises(EntropyOutOfRange):
            phi_space(1 * BIT, 2 * BIT)


class TestLandauer:
    def test_room_temperature_bit(self):
        got = landauer_cost(kelvin_t(300.0), 1)
        assert got.magnitude == pytest.approx(LANDAUER_300K_1BIT, rel=1e-12)

    def test_zero_bits(self):
        assert landauer_cost(kelvin_t(300.0), 0).magnitude == 0.0

    def test_kt_order_of_magnitude(self):
        # k_B T at 300 K is within 25% of the 5e-21 J rule of thumb
        kt = CONSTANTS.k_B.magnitude * 300.0
        assert abs(kt - 5e-21) / 5e-21 < 0.25

    def test_non_positive_temperature(self):
        with pytest.raises(NonPositiveTemperature):
            landauer_cost(kelvin_t(0.0), 1)


class TestBinaryEntropy:
    def test_half_is_one_bit(self):
        assert binary_entropy(0.5).magnitude == 1.0

    def test_endpoints_are_zero(self):
        assert binary_entropy(0.0).magnitude == 0.0
        assert binary_entropy(1.0).magnitude == 0.0

    def test_scalar_example(self):
        assert binary_entropy(1e-3).magnitude == pytest.approx(
            H_1E_MINUS_3_BITS, rel=1e-12
        )

    def test_symmetry(self):
        for eps in (0.01, 0.2, 0.4):
            assert binary_entropy(eps).magnitude == pytest.approx(
                binary_entropy(1.0 - eps).magnitude, rel=1e-12
            )

    def test_out_of_range(self):
        with pytest.raises(ProbabilityOutOfRange):
            binary_entropy(-0.1)
        with pytest.raises(ProbabilityOutOfRange):
            binary_entropy(1.1)


class TestErrorCorrectionSpace:
    def test_exact_example(self):
        got = error_correction_space(1e6, 1e-3, "exact")
        assert got.magnitude == pytest.approx(EC_EXACT_1E6_1E_MINUS3, rel=1e-12)

    def test_asymptotic_example(self):
        got = error_correction_space(1e6, 1e-3, "asymptotic")
        assert got.magnitude == pytest.approx(EC_ASYM_1E6_1E_MINUS3, rel=1e-12)

    def test_error_free_needs_nothing(self):
        assert error_correction_space(1e6, 0.0, "exact").magnitude == 0.0
        assert error_correction_space(1e6, 0.0, "asymptotic").magnitude == 0.0

    def test_exact_dominates_asymptotic(self):
        for eps in (1e-6, 1e-4, 1e-2, 0.3):
            exact = error_correction_space(100.0, eps, "exact").magnitude
            asym = error_correction_space(100.0, eps, "asymptotic").magnitude
            assert exact >= asym

    def test_linear_in_op_count(self):
        base = error_correction_space(1.0, 1e-3, "exact").magnitude
        for t in (10.0, 1e4, 1e9):
            got = error_correction_space(t, 1e-3, "exact").magnitude
            assert got == pytest.approx(t * base, rel=1e-12)

    def test_ratio_tends_to_one_monotonically(self):
        ratios = []
        for eps in (1e-2, 1e-4, 1e-6):
            exact = error_correction_space(1.0, eps, "exact").magnitude
            asym = error_correction_space(1.0, eps, "asymptotic").magnitude
            ratios.append(exact / asym)
        assert 1.0 <= ratios[-1] <= 1.2
        assert ratios[0] > ratios[1] > ratios[2] >= 1.0

    def test_rate_above_half_rejected(self):
        with pytest.raises(ProbabilityOutOfRange):
            error_correction_space(10.0, 0.6)


class TestFreePhi:
    def test_identity_on_consumed_energy(self):
        assert free_phi(joules(1.0)).magnitude == 1.0

    def test_metabolism_op_budget_in_band(self):
        # 100 W for 1 s at one covalent-bond energy per op
        ops = free_phi(joules(100.0)).magnitude / 1.6e-19
        assert ops == pytest.approx(6.25e20, rel=1e-12)
        assert 1e20 <= ops <= 1e22

    def test_op_equivalent_of_minimal_action(self):
        assert free_phi_op_equivalent(
            joules(math.pi * HBAR / 2.0), seconds(1.0)
        ) == pytest.approx(1.0, rel=1e-12)

    def test_negative_rejected(self):
        with pytest.raises(NegativeInput):
            free_phi(joules(-1.0))


class TestFreePhiThermo:
    def test_no_depth_no_cost(self):
        assert free_phi_thermo(kelvin_t(300.0), 5 * BIT, 5 * BIT).magnitude == 0.0

    def test_one_bit_depth_equals_landauer(self):
        got = free_phi_thermo(kelvin_t(300.0), 1 * BIT, 0 * BIT)
        assert got.magnitude == pytest.approx(LANDAUER_300K_1BIT, rel=1e-12)

    def test_linearity_in_depth(self):
        one = free_phi_thermo(kelvin_t(77.0), 1 * BIT, 0 * BIT).magnitude
        two = free_phi_thermo(kelvin_t(77.0), 2 * BIT, 0 * BIT).magnitude
        assert two == pytest.approx(2.0 * one, rel=1e-12)

    def test_matches_landauer_cost_generally(self):
        for depth in (0.5, 3.0, 1e6):
            a = free_phi_thermo(kelvin_t(250.0), depth * BIT, 0 * BIT).magnitude
            b = landauer_cost(kelvin_t(250.0), depth).magnitude
            assert a == pytest.approx(b, rel=1e-12)


class TestComplexityReport:
    def test_bundle_is_consistent(self):
        rep = complexity_report(
            E=joules(1e-15),
            t=seconds(1.0),
            s_max=10 * BIT,
            s=4 * BIT,
            T=kelvin_t(300.0),
            label="demo",
        )
        assert rep.phi_time_ops > 0
        assert rep.phi_space_bits.magnitude == 6.0
        assert rep.free_phi.magnitude == pytest.approx(
            rep.landauer_cost.magnitude, rel=1e-12
        )
        assert rep.metadata["label"] == "demo"

    def test_negative_counts_rejected(self):
        with pytest.raises(NegativeInput):
            ComplexityReport(
                phi_time_ops=-1.0,
                phi_space_bits=0 * BIT,
                free_phi=joules(0.0),
                landauer_cost=joules(0.0),
            )
