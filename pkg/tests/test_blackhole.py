"""Black hole computer model: closed forms, scaling laws, Page curve, errors."""

import io
import math

import pytest

from _oracles import binary_entropy_bits, bisect_error_rate
from physcomp import blackhole as bh
from physcomp.errors import NonPositiveMass, TimeOutOfRange
from physcomp.measures import phi_time
from physcomp.units import CONSTANTS, ENERGY, MASS, TIME, Quantity

C = CONSTANTS.c.magnitude
M_SUN = CONSTANTS.solar_mass
M_P = CONSTANTS.planck_mass.magnitude

# frozen scalar oracles for one solar mass with the pinned constants
SUN_LIFETIME_YEARS = 2.097105533248958e67
SUN_RADIUS_M = 2954.007736491099
SUN_TEMPERATURE_K = 6.168677824358304e-08
SUN_ENTROPY_NATS = 1.0494297066288975e77
QUOTED_LIFETIME_YEARS = 2.140e67

MASS_SET = [
    Quantity(1.0, MASS, "kg"),
    Quantity(1e6, MASS, "kg"),
    M_SUN,
]


def kg(x):
    return Quantity(x, MASS, "kg")


class TestCharacterize:
    def test_solar_mass_lifetime_matches_quote_within_5_percent(self):
        rep = bh.characterize(M_SUN)
        assert rep.lifetime_years == pytest.approx(SUN_LIFETIME_YEARS, rel=1e-12)
        # the quoted figure is sensitive to the pinned solar mass (M^3)
        assert abs(rep.lifetime_years - QUOTED_LIFETIME_YEARS) / QUOTED_LIFETIME_YEARS < 0.05

    def test_solar_mass_scalar_fields(self):
        rep = bh.characterize(M_SUN)
        assert rep.radius.magnitude == pytest.approx(SUN_RADIUS_M, rel=1e-12)
        assert rep.temperature.magnitude == pytest.approx(SUN_TEMPERATURE_K, rel=1e-12)
        assert rep.entropy_nats == pytest.approx(SUN_ENTROPY_NATS, rel=1e-12)
        assert rep.entropy_bits == pytest.approx(
            SUN_ENTROPY_NATS / math.log(2.0), rel=1e-12
        )

    def test_free_energy_is_half_rest_energy(self):
        for m in MASS_SET:
            rep = bh.characterize(m)
            rest = m.magnitude * C**2
            assert rep.free_energy.magnitude / rest == pytest.approx(0.5, abs=1e-12)

    def test_thermal_energy_is_other_half(self):
        # k_B T * S_nats = M c^2 / 2
        for m in MASS_SET:
            rep = bh.characterize(m)
            ts = CONSTANTS.k_B.magnitude * rep.temperature.magnitude * rep.entropy_nats
            assert ts == pytest.approx(m.magnitude * C**2 / 2.0, rel=1e-12)

    def test_serial_computer_identity(self):
        # minimum flip time at the per-bit energy share equals pi^2 R / c
        hbar = CONSTANTS.hbar.magnitude
        for m in MASS_SET:
            rep = bh.characterize(m)
            e_per_bit = m.magnitude * C**2 / rep.entropy_nats
            ml_time = math.pi * hbar / (2.0 * e_per_bit)
            assert ml_time == pytest.approx(rep.bit_flip_time.magnitude, rel=1e-12)

    def test_positive_fields(self):
        rep = bh.characterize(kg(1.0))
        assert rep.radius.magnitude > 0
        assert rep.temperature.magnitude > 0
        assert rep.lifetime.magnitude > 0
        assert rep.total_ops > 0
        assert rep.page_time_paper.magnitude == rep.lifetime.magnitude / 2.0

    def test_non_positive_mass_rejected(self):
        with pytest.raises(NonPositiveMass):
            bh.characterize(kg(0.0))
        with pytest.raises(NonPositiveMass):
            bh.characterize(kg(-1.0))


class TestScalingLaws:
    def test_lifetime_cubes(self):
        t1 = bh.lifetime(kg(1.0)).magnitude
        t2 = bh.lifetime(kg(2.0)).magnitude
        assert t2 / t1 == pytest.approx(8.0, rel=1e-12)

    def test_total_ops_fourth_power(self):
        n1 = bh.total_ops(kg(3.0))
        n2 = bh.total_ops(kg(6.0))
        assert n2 / n1 == pytest.approx(16.0, rel=1e-12)

    def test_ops_scale_invariant(self):
        ratios = [bh.total_ops(kg(m)) / (m / M_P) ** 4 for m in (1.0, 10.0, 100.0)]
        assert ratios[1] == pytest.approx(ratios[0], rel=1e-9)
        assert ratios[2] == pytest.approx(ratios[0], rel=1e-9)

    def test_ops_per_second_matches_phi_time(self):
        for m in (1.0, 1e10):
            rate = bh.ops_per_second(kg(m)).magnitude
            budget = phi_time(
                Quantity(m * C**2, ENERGY, "J"), Quantity(1.0, TIME, "s")
            )
            assert rate == pytest.approx(budget, rel=1e-12)


class TestEvaporation:
    def test_endpoints(self):
        m0 = kg(1e6)
        t_m = bh.lifetime(m0)
        assert bh.mass_at_time(m0, Quantity(0.0, TIME, "s")).magnitude == 1e6
        assert bh.mass_at_time(m0, t_m).magnitude == 0.0

    def test_half_life_closed_form(self):
        m0 = kg(1e6)
        t_half = Quantity(bh.lifetime(m0).magnitude / 2.0, TIME, "s")
        got = bh.mass_at_time(m0, t_half).magnitude
        assert got == pytest.approx(1e6 * 2.0 ** (-1.0 / 3.0), rel=1e-12)

    def test_matches_numerical_integration_of_flux_law(self):
        # independent oracle: RK4 on dM/dt = -hbar c^4 / (15360 pi G^2 M^2)
        hbar, g_newton = CONSTANTS.hbar.magnitude, CONSTANTS.G.magnitude
        m0 = 1e6
        t_m = bh.lifetime(kg(m0)).magnitude

        def dm_dt(m):
            return -hbar * C**4 / (15360.0 * math.pi * g_newton**2 * m * m)

        t_end = 0.9 * t_m
        n_steps = 2000
        h = t_end / n_steps
        m = m0
        for _ in range(n_steps):
            k1 = dm_dt(m)
            k2 = dm_dt(m + 0.5 * h * k1)
            k3 = dm_dt(m + 0.5 * h * k2)
            k4 = dm_dt(m + h * k3)
            m += h * (k1 + 2 * k2 + 2 * k3 + k4) / 6.0
        got = bh.mass_at_time(kg(m0), Quantity(t_end, TIME, "s")).magnitude
        assert got == pytest.approx(m, rel=1e-6)

    def test_time_out_of_range(self):
        m0 = kg(1.0)
        with pytest.raises(TimeOutOfRange):
            bh.mass_at_time(m0, Quantity(-1.0, TIME, "s"))
        with pytest.raises(TimeOutOfRange):
            bh.mass_at_time(m0, Quantity(bh.lifetime(m0).magnitude * 1.01, TIME, "s"))


class TestPageCurve:
    def test_radiation_entropy_vanishes_at_endpoints(self):
        samples = bh.page_curve(kg(1e6), 101)
        assert samples[0].radiation_entropy_bits == 0.0
        assert samples[-1].radiation_entropy_bits == 0.0

    def test_peak_at_crossover_fraction(self):
        n = 2001
        samples = bh.page_curve(kg(1e6), n)
        k = max(range(n), key=lambda i: samples[i].radiation_entropy_bits)
        t_m = bh.lifetime(kg(1e6)).magnitude
        frac = samples[k].t.magnitude / t_m
        assert abs(frac - bh.PAGE_FRACTION) <= 1.0 / (n - 1)

    def test_hole_entropy_monotone_decreasing(self):
        samples = bh.page_curve(kg(1e6), 101)
        hole = [s.hole_entropy_bits for s in samples]
        assert all(a >= b for a, b in zip(hole, hole[1:]))

    def test_csv_format(self):
        samples = bh.page_curve(kg(1e6), 3)
        buf = io.StringIO()
        bh.write_timeline_csv(samples, buf)
        lines = buf.getvalue().strip().split("\n")
        assert lines[0] == "t_seconds,mass_kg,hole_entropy_bits,radiation_entropy_bits"
        assert len(lines) == 4
        first = lines[1].split(",")
        assert float(first[0]) == 0.0
        assert float(first[1]) == 1e6
        # 17 significant digits round-trip the doubles exactly
        assert float(lines[2].split(",")[1]) == bh.mass_at_time(
            kg(1e6), Quantity(bh.lifetime(kg(1e6)).magnitude / 2.0, TIME, "s")
        ).magnitude


class TestMaxErrorRate:
    def test_synthetic_case_against_oracle(self):
        got = bh.solve_error_rate(1e6, 1e3)
        want = bisect_error_rate(1e6, 1e3)
        assert got == pytest.approx(want, rel=1e-2)
        assert got == pytest.approx(6.5153e-5, rel=1e-3)

    def test_strictly_decreasing_in_mass(self):
        rates = [bh.max_error_rate(kg(m)) for m in (1e-6, 1e-5, 1e-4, 1e-3)]
        assert all(a > b for a, b in zip(rates, rates[1:]))

    def test_definitional_round_trip(self):
        for m in (1e-6, 1.0, 1e6):
            eps = bh.max_error_rate(kg(m))
            s_bits = bh.entropy_nats(kg(m)) / math.log(2.0)
            assert binary_entropy_bits(eps) * bh.total_ops(kg(m)) == pytest.approx(
                s_bits, rel=1e-9
            )

    def test_sub_planckian_bound_is_vacuous(self):
        assert bh.max_error_rate(kg(M_P * 0.5)) == 0.5

    def test_asymptotic_scaling_is_inverse_square_up_to_log(self):
        # eps_max * (M/m_P)^2 should vary only logarithmically in M:
        # multiplying it by the log of the ops/capacity ratio flattens it
        scaled = []
        for m in (1e-4, 1e-2, 1.0, 1e2):
            eps = bh.max_error_rate(kg(m))
            ratio = bh.total_ops(kg(m)) / (bh.entropy_nats(kg(m)) / math.log(2.0))
            scaled.append(eps * ratio * math.log2(ratio))
        assert max(scaled) / min(scaled) < 2.0
