"""
This module contains all the exceptions that can be raised by the simulator.

It builds on top of DRF APIException and adds a process exit code to the exceptions.
https://www.django-rest-framework.org/api-guide/exceptions/#apiexception
"""

import json
from typing import Literal

from django.conf import settings
from django.utils.translation import gettext_lazy as _
from rest_framework.exceptions import APIException, ValidationError

LOGGING_LEVEL = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_RUNTIME = 3


class SimulationException(APIException):
    """
    Base class for simulator exceptions.
    Subclasses should provide `.exit_code` and `.default_detail` properties.
    `.stage` is filled with the chain stage the error was raised in, if any.
    """

    exit_code: int = EXIT_RUNTIME
    logging_level: LOGGING_LEVEL = "WARNING"

    def __init__(self, detail=None, code=None, stage=None):
        super().__init__(detail=detail, code=code)
        self.stage = stage

    def get_full_details(self):
        details = super().get_full_details()
        if self.stage and isinstance(details, dict):
            details = {**details, "stage": self.stage}
        return details

    def __str__(self):
        message = super().__str__()
        if self.stage:
            return f"[{self.stage}] {message}"
        return message


class InvalidInput(SimulationException):
    exit_code = EXIT_VALIDATION
    default_detail = _("Invalid input.")
    default_code = "invalid_input"


class ChannelOverlap(SimulationException):
    """
    A modulation tone is too large for the channel spacing, so sidebands would land in
    a neighbouring channel.
    """

    exit_code = EXIT_VALIDATION
    default_detail = _("Tone overlaps a neighbouring channel.")
    default_code = "channel_overlap"


class AliasingError(SimulationException):
    """
    Two input lines are an integer number of drive periods apart: the MZM harmonics
    would merge distinct channels.
    """

    exit_code = EXIT_VALIDATION
    default_detail = _("MZM harmonics alias distinct input lines.")
    default_code = "aliasing"


class TruncationError(SimulationException):
    exit_code = EXIT_VALIDATION
    default_detail = _("Bessel truncation order too small for the drive level.")
    default_code = "truncation"


class ChirpOutOfRange(SimulationException):
    exit_code = EXIT_VALIDATION
    default_detail = _("Total chirp outside the calibrated range.")
    default_code = "chirp_out_of_range"


class ConfigSyntaxError(SimulationException):
    """
    Raised by the config parser. `.line` is the 1-based line of the offending input.
    """

    exit_code = EXIT_VALIDATION
    default_detail = _("Config syntax error.")
    default_code = "config_syntax"

    def __init__(self, detail=None, code=None, line=None):
        if line is not None and detail is not None:
            detail = f"line {line}: {detail}"
        super().__init__(detail=detail, code=code)
        self.line = line


class ConfigValidationError(SimulationException):
    """
    Raised when a syntactically valid config fails validation. The detail is a list of
    messages, prefixed with their line number when the key exists in the file.
    """

    exit_code = EXIT_VALIDATION
    default_detail = _("Invalid config.")
    default_code = "config_invalid"

    @property
    def messages(self) -> list[str]:
        if isinstance(self.detail, list):
            return [str(item) for item in self.detail]
        return [str(self.detail)]

    def __str__(self):
        return "\n".join(self.messages)


class DegenerateBeat(SimulationException):
    default_detail = _("Beat partners share the same frequency.")
    default_code = "degenerate_beat"


class DeadElement(SimulationException):
    logging_level = "ERROR"
    default_detail = _("Antenna element receives no service tone.")
    default_code = "dead_element"

    def __init__(self, element_index, band, detail=None, stage=None):
        self.element_index = element_index
        self.band = band
        if detail is None:
            detail = f"Element {element_index} of band {band} receives no service tone."
        super().__init__(detail=detail, stage=stage)


class NoPeak(SimulationException):
    default_detail = _("Beam pattern is flat, no peak to extract.")
    default_code = "no_peak"


class PhaseAmbiguity(SimulationException):
    default_detail = _("Phase increments cannot be unwrapped without a delay prediction.")
    default_code = "phase_ambiguity"


class EmitError(SimulationException):
    logging_level = "ERROR"
    default_detail = _("Could not write the result table.")
    default_code = "emit_failed"

    def __init__(self, path, detail=None):
        self.path = str(path)
        super().__init__(detail=f"{self.path}: {detail or self.default_detail}")


def get_exception_exit_code_and_details(exc: Exception) -> tuple[int, str]:
    """
    Get the process exit code and details from the exception.
    DRF `ValidationError` maps to the validation exit code.
    Other exceptions map to the runtime exit code. Their details are the exception class name.
    In debug mode, the details are the exception message.
    """

    if isinstance(exc, SimulationException):
        return exc.exit_code, json.dumps(exc.get_full_details())
    if isinstance(exc, ValidationError):
        return EXIT_VALIDATION, json.dumps(exc.get_full_details())
    if isinstance(exc, APIException):
        return EXIT_RUNTIME, json.dumps(exc.get_full_details())
    details = type(exc).__name__
    if settings.DEBUG:
        details = str(exc)
    return EXIT_RUNTIME, details
