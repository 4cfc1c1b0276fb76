from django.core.exceptions import ImproperlyConfigured
from django.test import SimpleTestCase, override_settings

from arof_ttd.log import default_get_log_extra_context
from arof_ttd.runner.tables import format_cell
from arof_ttd.settings import DEFAULTS, ttd_settings


class TestSettings(SimpleTestCase):
    def test_defaults(self):
        self.assertEqual(ttd_settings.BESSEL_TRUNCATION_ORDER, 5)
        self.assertEqual(ttd_settings.REFERENCE_CHANNEL_SPACING, 50e9)
        self.assertEqual(ttd_settings.SIGNIFICANT_DIGITS, DEFAULTS["SIGNIFICANT_DIGITS"])

    def test_import_string_setting_is_resolved(self):
        self.assertIs(ttd_settings.LOG_EXTRA_CONTEXT_FUNCTION, default_get_log_extra_context)

    def test_user_settings_override_defaults(self):
        with override_settings(AROF_TTD={"SIGNIFICANT_DIGITS": 4}):
            self.assertEqual(format_cell(1.23456789), "1.235")
        self.assertEqual(format_cell(1.23456789), "1.23456789")

    def test_unknown_setting(self):
        with self.assertRaises(AttributeError):
            _ = ttd_settings.NOT_A_SETTING

    def test_invalid_values_are_rejected(self):
        for attr, value in (
            ("SWEEP_MAX_WORKERS", 0),
            ("SIGNIFICANT_DIGITS", 2.5),
            ("CHIRP_RANGE", (4.0, 1.0)),
            ("PRUNE_THRESHOLD", 1.5),
        ):
            with self.subTest(attr=attr), override_settings(AROF_TTD={attr: value}):
                with self.assertRaisesMessage(ImproperlyConfigured, attr):
                    getattr(ttd_settings, attr)

    def test_callable_setting(self):
        def extra(stage, scenario=""):
            return {"arof_stage": stage.upper(), "arof_scenario": scenario}

        with override_settings(AROF_TTD={"LOG_EXTRA_CONTEXT_FUNCTION": extra}):
            self.assertIs(ttd_settings.LOG_EXTRA_CONTEXT_FUNCTION, extra)
        with override_settings(AROF_TTD={"LOG_EXTRA_CONTEXT_FUNCTION": "arof_ttd.nothing.here"}):
            with self.assertRaises(ImportError):
                _ = ttd_settings.LOG_EXTRA_CONTEXT_FUNCTION

    def test_settings_reload_after_override(self):
        with override_settings(AROF_TTD={"SWEEP_MAX_WORKERS": 3}):
            self.assertEqual(ttd_settings.SWEEP_MAX_WORKERS, 3)
        self.assertEqual(ttd_settings.SWEEP_MAX_WORKERS, 1)
