"""
Settings for the simulator are all namespaced in the AROF_TTD setting.
For example your project's `settings.py` file might look like this:

AROF_TTD = {
    "DEFAULT_LASER_POWER": 2e-3,
    "SWEEP_MAX_WORKERS": 1,
    ...
}

This module provides the `ttd_settings` object, that is used to access
simulator settings, checking for user settings first, then falling
back to the defaults.
"""

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured
from django.core.signals import setting_changed
from django.utils.module_loading import import_string

__all__ = ["ttd_settings"]


DEFAULTS = {
    # Laser power in W used when a scenario does not set one
    "DEFAULT_LASER_POWER": 1e-3,
    # Lines (and RF tones) closer than this in Hz are coherently summed
    "MERGE_TOLERANCE": 1e3,
    # Lines whose magnitude is below this fraction of the strongest line are dropped
    "PRUNE_THRESHOLD": 1e-9,
    # Default max Bessel order N of the MZM expansion
    "BESSEL_TRUNCATION_ORDER": 5,
    # Largest accepted 1 - sum(J_q(x)^2) over |q| <= N
    "BESSEL_ENERGY_TOLERANCE": 1e-6,
    # Channel spacing in Hz at which the grating delay difference is quoted
    "REFERENCE_CHANNEL_SPACING": 50e9,
    # (total chirp in nm, delay difference in ps) pairs the calibration constant is fitted to
    "CHIRP_CALIBRATION_POINTS": ((0.7, 77.6), (4.0, 13.4)),
    # Supported total chirp range in nm
    "CHIRP_RANGE": (0.1, 10.0),
    # Group index used by the physical delay estimate of a grating
    "FIBER_GROUP_INDEX": 1.468,
    # Photodiode responsivity in A/W
    "DEFAULT_RESPONSIVITY": 1.0,
    # Electrical amplifier scalar gain
    "DEFAULT_AMPLIFIER_GAIN": 1.0,
    # Default angle grid step in degrees
    "ANGLE_GRID_STEP": 0.01,
    # Local maxima within this many dB of the global maximum are considered tied lobes
    "LOBE_TIE_TOLERANCE_DB": 1e-3,
    # Use unit amplitude weights built from the feed phases in the array factor
    "EQUALIZE_ELEMENT_AMPLITUDES": True,
    # Thread pool size for sweeps. 1 runs the steps sequentially
    "SWEEP_MAX_WORKERS": 4,
    # Significant digits of floats written by emit
    "SIGNIFICANT_DIGITS": 10,
    # Get extra data for the log records emitted inside a chain stage
    "LOG_EXTRA_CONTEXT_FUNCTION": "arof_ttd.log.default_get_log_extra_context",
}


# List of settings that may be in string import notation.
IMPORT_STRINGS = [
    "LOG_EXTRA_CONTEXT_FUNCTION",
]


# Settings whose value must pass a check, with the expectation reported when it does not
CHECKS = {
    "MERGE_TOLERANCE": (lambda val: val > 0, "a positive frequency in Hz"),
    "PRUNE_THRESHOLD": (lambda val: 0 <= val < 1, "a fraction in [0, 1)"),
    "BESSEL_TRUNCATION_ORDER": (lambda val: int(val) == val >= 1, "an integer >= 1"),
    "REFERENCE_CHANNEL_SPACING": (lambda val: val > 0, "a positive frequency in Hz"),
    "CHIRP_CALIBRATION_POINTS": (lambda val: len(val) >= 1, "at least one (chirp, delay) pair"),
    "CHIRP_RANGE": (lambda val: 0 < val[0] < val[1], "a (low, high) pair with 0 < low < high"),
    "ANGLE_GRID_STEP": (lambda val: val > 0, "a positive step in degrees"),
    "SWEEP_MAX_WORKERS": (lambda val: int(val) == val >= 1, "an integer >= 1"),
    "SIGNIFICANT_DIGITS": (lambda val: int(val) == val and 1 <= val <= 17, "an integer in [1, 17]"),
    "LOG_EXTRA_CONTEXT_FUNCTION": (callable, "a callable or its import path"),
}


def import_from_string(val, setting_name):
    """
    Attempt to import a callable from a string representation.
    """
    try:
        return import_string(val)
    except ImportError as e:
        raise ImportError(
            f"Could not import '{val}' for AROF_TTD setting '{setting_name}'."
        ) from e


def check_setting(attr, val):
    if attr not in CHECKS:
        return val
    check, expected = CHECKS[attr]
    try:
        valid = check(val)
    except (TypeError, ValueError, IndexError):
        valid = False
    if not valid:
        raise ImproperlyConfigured(f"AROF_TTD setting '{attr}' must be {expected}, got {val!r}.")
    return val


class TTDSettings:
    """
    A settings object that allows simulator settings to be accessed as
    properties. For example:

        from arof_ttd.settings import ttd_settings
        print(ttd_settings.MERGE_TOLERANCE)

    String import paths are resolved to the callable they name, and every value is
    checked the first time it is read.
    """

    def __init__(self, user_settings=None, defaults=None, import_strings=None):
        if user_settings:
            self._user_settings = user_settings
        self.defaults = defaults or DEFAULTS
        self.import_strings = import_strings or IMPORT_STRINGS
        self._cached_attrs = set()

    @property
    def user_settings(self):
        if not hasattr(self, "_user_settings"):
            self._user_settings = getattr(settings, "AROF_TTD", {})
        return self._user_settings

    def __getattr__(self, attr):
        if attr not in self.defaults:
            raise AttributeError("Invalid AROF_TTD setting: '%s'" % attr)
        val = self.user_settings.get(attr, self.defaults[attr])
        if attr in self.import_strings and isinstance(val, str):
            val = import_from_string(val, attr)
        val = check_setting(attr, val)

        self._cached_attrs.add(attr)
        setattr(self, attr, val)
        return val

    def reload(self):
        for attr in self._cached_attrs:
            delattr(self, attr)
        self._cached_attrs.clear()
        if hasattr(self, "_user_settings"):
            delattr(self, "_user_settings")


ttd_settings = TTDSettings(None, DEFAULTS, IMPORT_STRINGS)


def reload_ttd_settings(*args, **kwargs):
    if kwargs["setting"] == "AROF_TTD":
        ttd_settings.reload()


setting_changed.connect(reload_ttd_settings)
