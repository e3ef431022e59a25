import math

import pytest

from stringcasimir import (
    DomainError,
    NPieceConfig,
    StringConfig,
    ThermalConfig,
    casimir_2n_thermal,
    casimir_2n_thermal_x0,
    casimir_two_piece,
    casimir_two_piece_thermal,
    frequency_ratio,
    high_t_limit,
    mirror_limit,
)

# frozen from 40-digit direct summation of the raw dispersion-ratio formula
_ORACLE_TWO_PIECE = -0.0070700029524425411494   # s=2, x=0.3, T=0.4, L=pi
_ORACLE_2N = -0.29870927317441174203            # N=3, x=0.2, T=0.3, L=pi


class TestTwoPieceThermal:
    def test_against_high_precision_sum(self):
        res = casimir_two_piece_thermal(StringConfig(2, 0.3, math.pi), ThermalConfig(0.4))
        assert res.value == pytest.approx(_ORACLE_TWO_PIECE, abs=1e-13)
        assert res.method == "matsubara"

    def test_equal_pieces_vanish(self):
        res = casimir_two_piece_thermal(StringConfig(1, 0.3), ThermalConfig(0.7))
        assert res.value == 0.0

    def test_uniform_vanishes(self):
        res = casimir_two_piece_thermal(StringConfig(3, 1.0), ThermalConfig(0.7))
        assert res.value == 0.0
        assert res.method == "analytic-limit"

    def test_low_temperature_matches_zero_t(self):
        cfg = StringConfig(3, 0.2, math.pi)
        cold = casimir_two_piece_thermal(cfg, ThermalConfig(0.01 / math.pi))
        assert abs(cold.value - casimir_two_piece(cfg).value) < 1e-4

    def test_zero_temperature_rejected(self):
        with pytest.raises(DomainError):
            casimir_two_piece_thermal(StringConfig(2, 0.3), ThermalConfig(0.0))

    def test_nonpositive_on_grid(self):
        for s in (1.5, 3.0):
            for x in (0.0, 0.4, 0.9):
                for t in (0.2, 1.0, 5.0):
                    res = casimir_two_piece_thermal(StringConfig(s, x), ThermalConfig(t))
                    assert res.value <= 0.0

    def test_thermal_shift_bounded_by_fitted_quadratic(self):
        # |E(T) - E(0)| < C T^2 with C fitted at the largest temperature
        cfg = StringConfig(2, 0.5, math.pi)
        e0 = casimir_two_piece(cfg).value
        t0 = 0.4
        c = abs(casimir_two_piece_thermal(cfg, ThermalConfig(t0)).value - e0) / t0**2
        for t in (t0 / 2, t0 / 4):
            err = abs(casimir_two_piece_thermal(cfg, ThermalConfig(t)).value - e0)
            assert err < 1.05 * c * t * t


class TestHighTLimit:
    def test_equal_pieces_vanish(self):
        assert high_t_limit(StringConfig(1, 0.4), ThermalConfig(2.0)).value == 0.0

    def test_closed_form_value(self):
        res = high_t_limit(StringConfig(2, 0.5), ThermalConfig(1.0))
        assert res.value == pytest.approx(0.5 * math.log(80.0 / 81.0), rel=1e-13)
        assert res.value == pytest.approx(-0.006211259999, abs=1e-9)

    def test_dominates_once_thermal_frequency_wins(self):
        cfg = StringConfig(2, 0.3, math.pi)
        th = ThermalConfig(2.0 * 2.0 * math.pi / cfg.piece_length_i)  # ratio = 2
        assert frequency_ratio(cfg, th) == pytest.approx(2.0, rel=1e-14)
        full = casimir_two_piece_thermal(cfg, th).value
        approx = high_t_limit(cfg, th).value
        assert abs(full / approx - 1.0) < 1e-6


class TestMirrorLimit:
    def test_values(self):
        assert mirror_limit(0.5, ThermalConfig(1.0)).value == pytest.approx(
            -0.5 * math.log(9.0 / 8.0), rel=1e-13
        )
        assert mirror_limit(1.0 / 3.0, ThermalConfig(2.0)).value == pytest.approx(
            -math.log(4.0 / 3.0), rel=1e-13
        )

    def test_printed_form_drops_temperature(self):
        with_t = mirror_limit(0.5, ThermalConfig(3.0)).value
        bare = mirror_limit(0.5, ThermalConfig(3.0), printed_form=True).value
        assert with_t == pytest.approx(3.0 * bare, rel=1e-14)

    def test_matches_large_companion_high_t(self):
        th = ThermalConfig(1.0)
        for x in (0.5, 0.9):
            big = high_t_limit(StringConfig(1e6, x), th).value
            lim = mirror_limit(x, th).value
            assert abs(big - lim) < 1e-6
        # at x = 0.9 the truncation term (T/2) * 4/(s F) is below 1e-8
        assert abs(high_t_limit(StringConfig(1e6, 0.9), th).value
                   - mirror_limit(0.9, th).value) < 1e-8

    def test_vanishes_toward_uniform(self):
        assert abs(mirror_limit(0.999999, ThermalConfig(1.0)).value) < 1e-5

    def test_domain(self):
        with pytest.raises(DomainError):
            mirror_limit(0.0, ThermalConfig(1.0))
        with pytest.raises(DomainError):
            mirror_limit(1.0, ThermalConfig(1.0))


class TestNPieceThermal:
    def test_against_high_precision_sum(self):
        res = casimir_2n_thermal(NPieceConfig(3, 0.2, math.pi), ThermalConfig(0.3))
        assert res.value == pytest.approx(_ORACLE_2N, abs=1e-13)

    def test_uniform_vanishes(self):
        assert casimir_2n_thermal(NPieceConfig(3, 1.0), ThermalConfig(0.7)).value == 0.0

    def test_single_pair_vanishes(self):
        assert casimir_2n_thermal(NPieceConfig(1, 0.3), ThermalConfig(0.7)).value == 0.0

    @pytest.mark.parametrize("n", list(range(1, 7)))
    def test_decoupled_routes_agree(self, n):
        th = ThermalConfig(0.5)
        general = casimir_2n_thermal(NPieceConfig(n, 0.0, math.pi), th).value
        direct = casimir_2n_thermal_x0(n, th, math.pi).value
        assert abs(general - direct) < 1e-10

    def test_nonpositive(self):
        for n in (2, 5):
            for x in (0.0, 0.3, 0.8):
                for t in (0.1, 1.0):
                    assert casimir_2n_thermal(NPieceConfig(n, x), ThermalConfig(t)).value <= 0


class TestNPieceThermalDecoupled:
    def test_single_pair_vanishes(self):
        assert casimir_2n_thermal_x0(1, ThermalConfig(2.0), math.pi).value == 0.0

    def test_high_temperature_negligible(self):
        # T L = 10: every n >= 1 summand is exponentially small and the
        # zero-mode term is omitted, so the sum is within 1e-6 of zero
        th = ThermalConfig(10.0 / math.pi)
        res = casimir_2n_thermal_x0(2, th, math.pi)
        assert abs(res.value) < 1e-6

    @pytest.mark.parametrize("t_l", [0.01, 0.1])
    def test_two_pair_modular_closed_form(self, t_l):
        # independent oracle: 2T sum ln tanh(pi n T L / 2) =
        #   -pi/(2L) + T ln(4/(T L))  up to exponentially small corrections
        length = math.pi
        t = t_l / length
        res = casimir_2n_thermal_x0(2, ThermalConfig(t), length)
        predicted = -math.pi / (2 * length) + t * math.log(4.0 / (t * length))
        assert res.value == pytest.approx(predicted, abs=1e-12)

    def test_low_temperature_approach_has_logarithmic_offset(self):
        # the T -> 0 defect of the zero-mode-stripped sum is exactly
        # T ln(4/(T L)); verify the offset shrinks but is NOT quadratic
        length = math.pi
        zero_t = -0.5
        errs = []
        for t_l in (0.02, 0.01, 0.005):
            t = t_l / length
            val = casimir_2n_thermal_x0(2, ThermalConfig(t), length).value
            errs.append(abs(val - zero_t))
        assert errs[2] < errs[1] < errs[0]
        assert errs[1] / errs[2] < 4.0  # slower than quadratic


class TestFrequencyRatio:
    def test_examples(self):
        cfg = StringConfig(1, 0.5, math.pi)
        assert frequency_ratio(cfg, ThermalConfig(4.0)) == pytest.approx(1.0, rel=1e-14)
        assert frequency_ratio(cfg, ThermalConfig(0.0)) == 0.0
        crossover = 2.0 * math.pi / cfg.piece_length_i
        assert frequency_ratio(cfg, ThermalConfig(crossover)) == pytest.approx(1.0, rel=1e-14)
