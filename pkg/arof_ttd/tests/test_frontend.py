import numpy as np
from django.test import SimpleTestCase

from arof_ttd.constants import ServiceBand
from arof_ttd.exceptions import InvalidInput
from arof_ttd.frontend.demux import ChannelPlan, demux
from arof_ttd.frontend.detection import (
    RfTone,
    bandpass,
    beat_terms,
    merge_tones,
    normalize_phase,
    photodetect,
)
from arof_ttd.frontend.interleaver import PortFilterSpec, interleave
from arof_ttd.optics.spectrum import OpticalSpectrum
from arof_ttd.tests.utils import coupled_comb, fixture

ORIGIN = 193.5e12


def random_spectrum(offsets, seed=0) -> OpticalSpectrum:
    rng = np.random.default_rng(seed)
    amps = rng.normal(size=len(offsets)) + 1j * rng.normal(size=len(offsets))
    return OpticalSpectrum.from_arrays(ORIGIN + np.asarray(offsets, dtype=float), amps)


class TestInterleaver(SimpleTestCase):
    def test_partition(self):
        spec = random_spectrum(1e9 * np.arange(-100, 101))
        port1, port2 = interleave(spec, PortFilterSpec(origin=ORIGIN))
        self.assertEqual(len(port1) + len(port2), len(spec))
        self.assertEqual(sorted(port1.lines + port2.lines), sorted(spec.lines))
        self.assertFalse(set(port1.freqs.tolist()) & set(port2.freqs.tolist()))

    def test_closed_window_is_periodic(self):
        filt = PortFilterSpec(origin=ORIGIN)
        offsets = np.array([0, 3, 12.5, 13, 25, 47, 50, 53, -50, -37.5]) * 1e9
        expected = [True, True, True, False, False, False, True, True, True, True]
        self.assertEqual(filt.port1_mask(ORIGIN + offsets).tolist(), expected)

    def test_invalid_window(self):
        with self.assertRaises(InvalidInput):
            PortFilterSpec(period=50e9, port1_low=0, port1_high=50e9)
        with self.assertRaises(InvalidInput):
            PortFilterSpec(period=0)

    def test_reference_comb_split(self):
        cfg = fixture("reference")
        port1, port2 = interleave(coupled_comb("reference"), cfg.interleaver)
        laser1, laser2 = cfg.laser1.frequency, cfg.laser2.frequency

        def offsets(port):
            return set(np.round(np.mod(port.freqs - laser1, 50e9) / 1e9).astype(int).tolist())

        self.assertEqual(offsets(port1), {0, 3, 5, 6})
        self.assertEqual(offsets(port2), {25, 44, 45, 47})

        def has_line(port, freq):
            return bool(np.any(np.abs(port.freqs - freq) <= 1.0))

        for q in range(-2, 3):
            carrier = laser1 + q * 50e9
            self.assertTrue(has_line(port1, carrier))
            for tone in (3e9, 5e9, 6e9):
                # beats at 3, 5, 6 GHz on port 1
                self.assertTrue(has_line(port1, carrier + tone))
                self.assertFalse(has_line(port1, carrier - tone))
                self.assertTrue(has_line(port2, carrier - tone))

            lambda2 = laser2 + q * 50e9
            self.assertTrue(has_line(port2, lambda2))
            for beat in (28e9, 30e9, 31e9):
                self.assertTrue(has_line(port2, lambda2 - beat), f"no {beat / 1e9:g} GHz beat")


class TestDemux(SimpleTestCase):
    def plan(self):
        return ChannelPlan.regular(
            band=ServiceBand.SUB6,
            first_channel=ORIGIN,
            spacing=50e9,
            n_elements=3,
            window_low=-12.5e9,
            window_high=37.5e9,
        )

    def test_windows_and_references(self):
        plan = self.plan()
        self.assertEqual(plan.windows[1], (ORIGIN + 37.5e9, ORIGIN + 87.5e9))
        self.assertEqual(plan.references, (ORIGIN, ORIGIN + 50e9, ORIGIN + 100e9))
        self.assertEqual(plan.span, (ORIGIN - 12.5e9, ORIGIN + 137.5e9))

    def test_routing(self):
        spec = random_spectrum(np.array([0, 3, 50, 53, 100]) * 1e9)
        result = demux(spec, self.plan())
        self.assertEqual(len(result), 3)
        self.assertEqual(result[0].freqs.tolist(), [ORIGIN, ORIGIN + 3e9])
        self.assertEqual(result.dead_elements, (2,))

    def test_lines_outside_every_window_are_dropped(self):
        spec = random_spectrum(np.array([-20, 0, 3, 200]) * 1e9)
        result = demux(spec, self.plan())
        self.assertEqual(sum(len(channel) for channel in result), 2)

    def test_overlapping_windows(self):
        with self.assertRaises(InvalidInput):
            ChannelPlan(
                band=ServiceBand.SUB6,
                windows=((0.0, 10.0), (5.0, 15.0)),
            )

    def test_empty_window(self):
        with self.assertRaises(InvalidInput):
            ChannelPlan(band=ServiceBand.SUB6, windows=((10.0, 10.0),))


class TestDetection(SimpleTestCase):
    OFFSETS = np.array([0, 3, 5, 6]) * 1e9

    def test_photodetect_matches_sampled_intensity(self):
        spec = random_spectrum(self.OFFSETS, seed=3)
        current = photodetect(spec, responsivity=0.8)

        # one 1 ns period of the baseband intensity, 1 GHz bins
        samples = 64
        t = np.arange(samples) * 1e-9 / samples
        field = np.sum(
            spec.amps[:, None] * np.exp(2j * np.pi * self.OFFSETS[:, None] * t[None, :]), axis=0
        )
        bins = np.fft.fft(0.8 * np.abs(field) ** 2) / samples

        self.assertAlmostEqual(current.dc, bins[0].real, places=12)
        self.assertEqual([tone.freq for tone in current.tones], [1e9, 2e9, 3e9, 5e9, 6e9])
        for tone in current.tones:
            expected = 2 * bins[int(round(tone.freq / 1e9))]
            self.assertAlmostEqual(abs(tone.phasor - expected), 0.0, places=10)

    def test_parseval(self):
        spec = random_spectrum(self.OFFSETS, seed=5)
        current = photodetect(spec)
        samples = 64
        t = np.arange(samples) * 1e-9 / samples
        field = np.sum(
            spec.amps[:, None] * np.exp(2j * np.pi * self.OFFSETS[:, None] * t[None, :]), axis=0
        )
        intensity = np.abs(field) ** 2
        mean_square = np.mean(intensity**2)
        from_tones = current.dc**2 + sum(tone.amp**2 for tone in current.tones) / 2
        self.assertAlmostEqual(mean_square / from_tones, 1.0, places=10)

    def test_common_shift_and_phase_leave_tones_unchanged(self):
        spec = random_spectrum(self.OFFSETS, seed=1)
        shifted = OpticalSpectrum.from_arrays(spec.freqs + 75e9, spec.amps * np.exp(1j * 0.7))
        original = photodetect(spec)
        moved = photodetect(shifted)
        self.assertAlmostEqual(original.dc, moved.dc, places=12)
        for first, second in zip(original.tones, moved.tones, strict=True):
            self.assertEqual(first.freq, second.freq)
            self.assertAlmostEqual(abs(first.phasor - second.phasor), 0.0, places=12)

    def test_single_line_gives_dc_only(self):
        current = photodetect(random_spectrum([0.0]))
        self.assertEqual(current.tones, ())
        self.assertGreater(current.dc, 0)

    def test_beat_terms_keep_their_partners(self):
        terms = beat_terms(random_spectrum(self.OFFSETS))
        self.assertEqual(len(terms), 6)
        three = [term for term in terms if term.freq == 3e9]
        self.assertEqual(
            sorted((term.lower, term.upper) for term in three),
            [(ORIGIN, ORIGIN + 3e9), (ORIGIN + 3e9, ORIGIN + 6e9)],
        )
        self.assertEqual(len(merge_tones(terms)), 5)

    def test_bandpass(self):
        tones = [RfTone(freq, 1.0, 0.0) for freq in (1e9, 2.5e9, 3e9, 7e9, 8e9)]
        self.assertEqual([tone.freq for tone in bandpass(tones, 2.5e9, 7e9)], [3e9])
        with self.assertRaises(InvalidInput):
            bandpass(tones, 7e9, 2.5e9)

    def test_normalize_phase(self):
        self.assertEqual(normalize_phase(-np.pi), np.pi)
        self.assertAlmostEqual(normalize_phase(3 * np.pi / 2), -np.pi / 2)
