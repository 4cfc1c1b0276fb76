import json

from django.test import SimpleTestCase, override_settings
from rest_framework.exceptions import ValidationError

from arof_ttd.exceptions import (
    EXIT_RUNTIME,
    EXIT_VALIDATION,
    ChirpOutOfRange,
    ConfigSyntaxError,
    ConfigValidationError,
    DeadElement,
    EmitError,
    InvalidInput,
    NoPeak,
    get_exception_exit_code_and_details,
)
from arof_ttd.log import chain_stage, default_get_log_extra_context, get_current_stage


class TestExceptions(SimpleTestCase):
    def test_exit_codes(self):
        for exc in (InvalidInput(), ChirpOutOfRange(), ConfigSyntaxError(), ConfigValidationError()):
            self.assertEqual(get_exception_exit_code_and_details(exc)[0], EXIT_VALIDATION)
        for exc in (NoPeak(), DeadElement(1, "sub6"), EmitError("/tmp/x.csv")):
            self.assertEqual(get_exception_exit_code_and_details(exc)[0], EXIT_RUNTIME)

    def test_details_are_json(self):
        code, details = get_exception_exit_code_and_details(InvalidInput("bad value"))
        self.assertEqual(code, EXIT_VALIDATION)
        self.assertEqual(json.loads(details), {"message": "bad value", "code": "invalid_input"})

    def test_drf_validation_error(self):
        code, _details = get_exception_exit_code_and_details(ValidationError("nope"))
        self.assertEqual(code, EXIT_VALIDATION)

    @override_settings(DEBUG=False)
    def test_unknown_exception_hides_message(self):
        self.assertEqual(
            get_exception_exit_code_and_details(ValueError("secret")), (EXIT_RUNTIME, "ValueError")
        )

    @override_settings(DEBUG=True)
    def test_unknown_exception_debug(self):
        self.assertEqual(
            get_exception_exit_code_and_details(ValueError("secret")), (EXIT_RUNTIME, "secret")
        )

    def test_config_syntax_error_line(self):
        exc = ConfigSyntaxError("unexpected '='", line=3)
        self.assertEqual(exc.line, 3)
        self.assertIn("line 3", str(exc))

    def test_dead_element_names_element_and_band(self):
        exc = DeadElement(2, "mmwave")
        self.assertEqual((exc.element_index, exc.band), (2, "mmwave"))
        self.assertIn("Element 2", str(exc))

    def test_emit_error_names_path(self):
        self.assertIn("/nowhere/out.csv", str(EmitError("/nowhere/out.csv", "No such file")))


class TestChainStage(SimpleTestCase):
    def test_stage_is_attached_to_errors(self):
        with self.assertRaises(NoPeak) as context, chain_stage("beamforming"):
            self.assertEqual(get_current_stage(), "beamforming")
            raise NoPeak("flat")
        self.assertEqual(context.exception.stage, "beamforming")
        self.assertEqual(str(context.exception), "[beamforming] flat")
        self.assertEqual(context.exception.get_full_details()["stage"], "beamforming")
        self.assertEqual(get_current_stage(), "")

    def test_innermost_stage_wins(self):
        with self.assertRaises(NoPeak) as context, chain_stage("outer"), chain_stage("inner"):
            raise NoPeak()
        self.assertEqual(context.exception.stage, "inner")

    def test_log_extra_context(self):
        self.assertEqual(
            default_get_log_extra_context("dispersive_delay", "chirp_sweep"),
            {"arof_stage": "dispersive_delay", "arof_scenario": "chirp_sweep"},
        )
