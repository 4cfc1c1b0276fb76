import numpy as np
from django.test import SimpleTestCase

from arof_ttd.beamforming.array_factor import (
    ArrayGeometry,
    BeamPattern,
    angle_grid,
    array_factor,
    predicted_angle,
    weights_from_delays,
)
from arof_ttd.beamforming.coverage import coverage_sweep, slope_coverage_sweep
from arof_ttd.beamforming.squint import squint_metric
from arof_ttd.beamforming.steering import peak_angle
from arof_ttd.constants import SPEED_OF_LIGHT, ServiceBand, SteeringMode
from arof_ttd.exceptions import InvalidInput, NoPeak
from arof_ttd.runner.chain import run_chain
from arof_ttd.tests.utils import fixture, parse_fixture_with

SUB6 = ArrayGeometry.half_wavelength(4, 3e9)
MMWAVE = ArrayGeometry.half_wavelength(4, 28e9)


def steered_delays(geom: ArrayGeometry, angle: float) -> np.ndarray:
    tau = -np.cos(np.radians(angle)) * geom.spacing / SPEED_OF_LIGHT
    return tau * geom.indices


class TestArrayFactor(SimpleTestCase):
    def test_geometry(self):
        self.assertAlmostEqual(SUB6.spacing, 0.05, places=3)
        self.assertAlmostEqual(MMWAVE.spacing / SUB6.spacing, 3 / 28, places=12)
        with self.assertRaises(InvalidInput):
            ArrayGeometry(1, 0.05)

    def test_broadside(self):
        pattern = array_factor(np.ones(4), 3e9, SUB6, angle_grid())
        self.assertEqual(pattern.magnitude_db.max(), 0.0)
        self.assertAlmostEqual(peak_angle(pattern).peak_angle, 90.0, places=6)

    def test_pattern_is_normalized_whatever_the_weight_scale(self):
        weights = 7.5 * weights_from_delays(steered_delays(SUB6, 120.0), 3e9)
        pattern = array_factor(weights, 3e9, SUB6, angle_grid())
        self.assertAlmostEqual(pattern.magnitude_db.max(), 0.0, places=12)

    def test_steered_peak(self):
        for angle in (30.0, 60.0, 124.7, 158.5):
            weights = weights_from_delays(steered_delays(SUB6, angle), 3e9)
            result = peak_angle(array_factor(weights, 3e9, SUB6, angle_grid()))
            self.assertAlmostEqual(result.peak_angle, angle, delta=0.01)
            self.assertGreater(result.peak_width_3db, 0)
            self.assertLess(result.sidelobe_level_db, -3)

    def test_grating_lobes_resolved_toward_the_expected_angle(self):
        delays = steered_delays(MMWAVE, 158.5)
        weights = weights_from_delays(delays, 31e9)
        pattern = array_factor(weights, 31e9, MMWAVE, angle_grid())
        self.assertAlmostEqual(peak_angle(pattern, near=158.5).peak_angle, 158.5, delta=0.05)
        self.assertLess(peak_angle(pattern, near=20.0).peak_angle, 90.0)

    def test_predicted_angle(self):
        self.assertAlmostEqual(
            predicted_angle(2 * 47.3647e-12, SUB6.spacing), 124.7, delta=0.5
        )
        self.assertAlmostEqual(predicted_angle(0.0, SUB6.spacing), 90.0)
        self.assertIsNone(predicted_angle(1e-9, SUB6.spacing))

    def test_flat_pattern(self):
        pattern = BeamPattern(freq=3e9, angles=angle_grid(step=1.0), magnitude_db=np.zeros(181))
        with self.assertRaises(NoPeak):
            peak_angle(pattern)

    def test_invalid_inputs(self):
        with self.assertRaises(InvalidInput):
            array_factor(np.ones(3), 3e9, SUB6, angle_grid())
        with self.assertRaises(InvalidInput):
            array_factor(np.zeros(4), 3e9, SUB6, angle_grid())
        with self.assertRaises(InvalidInput):
            angle_grid(10.0, 5.0, 1.0)


class TestChainSteering(SimpleTestCase):
    def test_reference_peaks(self):
        result = run_chain(fixture("reference"))
        for band in ServiceBand:
            self.assertEqual(len(result.steering[band]), 3)
            for item in result.steering[band]:
                self.assertAlmostEqual(item.result.peak_angle, 158.48, delta=0.5)

    def test_co_directed_beams(self):
        result = run_chain(fixture("codirectional"))
        peaks = [item.result.peak_angle for band in ServiceBand for item in result.steering[band]]
        self.assertEqual(len(peaks), 6)
        common = float(np.mean(peaks))
        self.assertAlmostEqual(common, 124.7, delta=0.5)
        for angle in peaks:
            self.assertAlmostEqual(angle, common, delta=0.5)

    def test_zero_delay_is_broadside(self):
        result = run_chain(parse_fixture_with("codirectional", cfbg__delta_t="0 ps", cfbg3__mode="off"))
        for band in ServiceBand:
            for item in result.steering[band]:
                self.assertAlmostEqual(item.result.peak_angle, 90.0, delta=0.01)


class TestSquint(SimpleTestCase):
    def test_ttd_does_not_squint(self):
        result = squint_metric(
            MMWAVE, steered_delays(MMWAVE, 158.5), 28e9, (28e9, 30e9, 31e9), SteeringMode.TTD
        )
        self.assertLessEqual(result.spread, 0.1)
        self.assertEqual(result.out_of_range, ())

    def test_phase_shifters_squint(self):
        result = squint_metric(
            MMWAVE, steered_delays(MMWAVE, 158.5), 28e9, (28e9, 30e9, 31e9), "phase_shift"
        )
        self.assertGreaterEqual(abs(result.peaks[31e9] - result.peaks[28e9]), 10.0)
        self.assertAlmostEqual(result.peaks[31e9], 147.2, delta=0.5)
        self.assertEqual(result.spread, abs(result.peaks[31e9] - result.peaks[28e9]))

    def test_out_of_range_frequencies_are_excluded(self):
        # phase shifters set near endfire at 28 GHz overshoot the visible region below it
        result = squint_metric(
            MMWAVE, steered_delays(MMWAVE, 175.0), 28e9, (20e9, 28e9), SteeringMode.PHASE_SHIFT
        )
        self.assertEqual(result.out_of_range, (20e9,))
        self.assertEqual(set(result.peaks), {28e9})

    def test_invalid_inputs(self):
        with self.assertRaises(InvalidInput):
            squint_metric(MMWAVE, np.zeros(4), 28e9, ())
        with self.assertRaises(InvalidInput):
            squint_metric(MMWAVE, np.zeros(3), 28e9, (28e9,))


class TestCoverage(SimpleTestCase):
    def test_slope_sweep_covers_the_half_plane(self):
        points = slope_coverage_sweep(
            fixture("coverage"), (-83.2e-12, 83.2e-12), 9, bands=(ServiceBand.SUB6,)
        )
        angles = [point.peak_angle for point in points]
        self.assertLess(min(angles), 5.0)
        self.assertGreater(max(angles), 175.0)
        self.assertTrue(all(later > earlier for earlier, later in zip(angles, angles[1:], strict=False)))
        self.assertEqual({point.sign for point in points}, {1, -1})

    def test_chirp_sweep_mirrors_with_the_grating_orientation(self):
        points = coverage_sweep(fixture("reference"), (0.7e-9, 4e-9), 3, signs=(1, -1))
        self.assertEqual(len(points), 12)
        forward = {(p.band, p.chirp): p.peak_angle for p in points if p.sign == 1}
        reverse = {(p.band, p.chirp): p.peak_angle for p in points if p.sign == -1}
        for key, angle in forward.items():
            self.assertGreater(angle, 90.0)
            self.assertAlmostEqual(reverse[key], 180.0 - angle, delta=0.05)

    def test_steps_must_be_positive(self):
        with self.assertRaises(InvalidInput):
            coverage_sweep(fixture("reference"), (0.7e-9, 4e-9), 0)
