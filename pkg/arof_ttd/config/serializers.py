"""
DRF serializers validating parsed config assignments into a `ScenarioConfig`.

The serializer data is `{section: {key: values}}` where values is the tuple of `Quantity` and
`Word` items the parser produced for the key.
"""

import logging

from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

from arof_ttd.config.parser import Quantity, Word
from arof_ttd.config.scenario import (
    ArrayConfig,
    BandConfig,
    Cfbg3Config,
    DelayConfig,
    DemuxConfig,
    DetectorConfig,
    GridConfig,
    LaserConfig,
    ScenarioConfig,
    SweepSpec,
)
from arof_ttd.constants import SPEED_OF_LIGHT, Cfbg3Mode
from arof_ttd.exceptions import InvalidInput, SimulationException
from arof_ttd.frontend.feeds import check_nominal_chain
from arof_ttd.frontend.interleaver import PortFilterSpec
from arof_ttd.optics.modulation import MzmConfig, ToneSet
from arof_ttd.settings import ttd_settings

logger = logging.getLogger("arof_ttd.config")


class QuantityField(serializers.Field):
    """
    A single number, converted to SI. A unit suffix must belong to `dimension`.
    """

    default_error_messages = {
        "single": _("Expected a single number."),
        "number": _("Expected a number, got '{word}'."),
        "dimension": _("Unit '{unit}' is not a {dimension} unit."),
        "positive": _("Must be > 0."),
    }

    def __init__(self, dimension=None, positive=False, **kwargs):
        self.dimension = dimension
        self.positive = positive
        super().__init__(**kwargs)

    def convert(self, item, default_unit=None) -> float:
        if isinstance(item, Word):
            self.fail("number", word=item.text)
        if item.dimension is not None and item.dimension != self.dimension:
            self.fail("dimension", unit=item.unit, dimension=self.dimension or "dimensionless")
        value = item.to_si(default_unit)
        if self.positive and not value > 0:
            self.fail("positive")
        return value

    def to_internal_value(self, data):
        if len(data) != 1:
            self.fail("single")
        return self.convert(data[0])

    def to_representation(self, value):
        return value


class QuantityListField(QuantityField):
    """
    Comma list of numbers. A unit on the last item applies to the items without one.
    """

    def to_internal_value(self, data):
        trailing = data[-1].unit if isinstance(data[-1], Quantity) else None
        return tuple(self.convert(item, default_unit=trailing) for item in data)


class CountField(serializers.Field):
    default_error_messages = {
        "integer": _("Expected a whole number."),
        "min_value": _("Must be >= {min_value}."),
    }

    def __init__(self, min_value=1, **kwargs):
        self.min_value = min_value
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        if len(data) != 1 or not isinstance(data[0], Quantity) or data[0].unit is not None:
            self.fail("integer")
        value = data[0].magnitude
        if value != int(value):
            self.fail("integer")
        if value < self.min_value:
            self.fail("min_value", min_value=self.min_value)
        return int(value)

    def to_representation(self, value):
        return value


class SignField(CountField):
    default_error_messages = {"sign": _("Expected +1 or -1.")}

    def __init__(self, **kwargs):
        super().__init__(min_value=-1, **kwargs)

    def to_internal_value(self, data):
        value = super().to_internal_value(data)
        if value not in (1, -1):
            self.fail("sign")
        return value


class WordField(serializers.ChoiceField):
    default_error_messages = {"word": _("Expected a single word.")}

    def to_internal_value(self, data):
        if len(data) != 1 or not isinstance(data[0], Word):
            self.fail("word")
        return super().to_internal_value(data[0].text)


class NameField(serializers.Field):
    default_error_messages = {"word": _("Expected a single section.key name.")}

    def to_internal_value(self, data):
        if len(data) != 1 or not isinstance(data[0], Word) or "." not in data[0].text:
            self.fail("word")
        return data[0].text

    def to_representation(self, value):
        return value


class LaserSerializer(serializers.Serializer):
    frequency = QuantityField("frequency", positive=True)
    power = QuantityField("power", positive=True, required=False)


class ToneSerializer(serializers.Serializer):
    tones = QuantityListField("frequency", positive=True)


class MzmSerializer(serializers.Serializer):
    drive_freq = QuantityField("frequency", positive=True, required=False)
    v_drive = QuantityField("voltage", required=False)
    v_pi = QuantityField("voltage", positive=True, required=False)
    bias_sign = SignField(required=False)
    truncation_order = CountField(required=False)


class DelaySerializer(serializers.Serializer):
    chirp = QuantityField("length", positive=True, required=False)
    delta_t = QuantityField("time", required=False)
    sign = SignField(required=False)
    grating_length = QuantityField("length", positive=True, required=False)
    center_wavelength = QuantityField("length", positive=True, required=False)
    calibration = QuantityField(None, positive=True, required=False)

    def validate(self, attrs):
        if "chirp" in attrs and "delta_t" in attrs:
            raise serializers.ValidationError(_("Set either chirp or delta_t, not both."))
        return attrs


class Cfbg3Serializer(serializers.Serializer):
    mode = WordField(choices=[mode.value for mode in Cfbg3Mode], required=False)
    target_delta_t = QuantityField("time", required=False)


class InterleaverSerializer(serializers.Serializer):
    period = QuantityField("frequency", positive=True, required=False)
    port1_low = QuantityField("frequency", required=False)
    port1_high = QuantityField("frequency", required=False)
    origin = QuantityField("frequency", required=False)


class DemuxSerializer(serializers.Serializer):
    first_channel = QuantityField("frequency", positive=True, required=False)
    spacing = QuantityField("frequency", positive=True, required=False)
    window_low = QuantityField("frequency", required=False)
    window_high = QuantityField("frequency", required=False)


class ArraySerializer(serializers.Serializer):
    elements = CountField(min_value=2, required=False)


class BandSerializer(serializers.Serializer):
    design_frequency = QuantityField("frequency", positive=True, required=False)
    spacing = QuantityField("length", positive=True, required=False)
    passband_low = QuantityField("frequency", required=False)
    passband_high = QuantityField("frequency", required=False)


class DetectorSerializer(serializers.Serializer):
    responsivity = QuantityField(None, positive=True, required=False)
    amplifier_gain = QuantityField(None, positive=True, required=False)


class GridSerializer(serializers.Serializer):
    start = QuantityField("angle", required=False)
    stop = QuantityField("angle", required=False)
    step = QuantityField("angle", positive=True, required=False)


class SweepSerializer(serializers.Serializer):
    variable = NameField()
    start = QuantityField(None)
    stop = QuantityField(None)
    step = QuantityField(None)

    def to_internal_value(self, data):
        # the dimension of the bounds is the one of the swept key
        variable = data.get("variable")
        dimension = None
        if variable and isinstance(variable[0], Word):
            dimension = variable_dimension(variable[0].text)
        for name in ("start", "stop", "step"):
            self.fields[name].dimension = dimension
        return super().to_internal_value(data)


# section -> (serializer, required)
SECTION_SERIALIZERS = {
    "laser1": (LaserSerializer, True),
    "laser2": (LaserSerializer, True),
    "rf": (ToneSerializer, True),
    "mzm1": (MzmSerializer, False),
    "mzm2": (MzmSerializer, False),
    "cfbg": (DelaySerializer, False),
    "cfbg3": (Cfbg3Serializer, False),
    "interleaver": (InterleaverSerializer, False),
    "demux": (DemuxSerializer, False),
    "array": (ArraySerializer, False),
    "sub6": (BandSerializer, False),
    "mmwave": (BandSerializer, False),
    "detector": (DetectorSerializer, False),
    "grid": (GridSerializer, False),
    "sweep": (SweepSerializer, False),
}

BAND_DEFAULTS = {
    "sub6": {"design_frequency": 3e9, "passband_low": 2.5e9, "passband_high": 7e9},
    "mmwave": {"design_frequency": 28e9, "passband_low": 20e9, "passband_high": 40e9},
}


def _build(section, cls, attrs):
    try:
        return cls(**attrs)
    except SimulationException as exc:
        raise serializers.ValidationError({section: [str(exc.detail)]}) from exc


def check_chain(scenario: ScenarioConfig):
    """
    Failures the chain would hit at run time that are known from the config alone.
    """
    scenario.cu_delay_law()
    scenario.rrh_delay_law()
    check_nominal_chain(scenario)


def check_sweep(scenario: ScenarioConfig, sweep_spec: SweepSpec):
    """
    Run `check_chain` on the config of every sweep step.
    """
    for value in sweep_spec.values():
        try:
            check_chain(scenario.with_value(sweep_spec.variable, float(value)))
        except SimulationException as exc:
            raise InvalidInput(
                f"Sweep step {sweep_spec.variable} = {value:g}: {exc.detail}"
            ) from exc


class ScenarioSerializer(serializers.Serializer):
    """
    Whole scenario. Every section is always present in the data (empty when absent from the
    file), so missing required keys are reported one by one.
    """

    laser1 = LaserSerializer()
    laser2 = LaserSerializer()
    rf = ToneSerializer()
    mzm1 = MzmSerializer()
    mzm2 = MzmSerializer()
    cfbg = DelaySerializer()
    cfbg3 = Cfbg3Serializer()
    interleaver = InterleaverSerializer()
    demux = DemuxSerializer()
    array = ArraySerializer()
    sub6 = BandSerializer()
    mmwave = BandSerializer()
    detector = DetectorSerializer()
    grid = GridSerializer()
    sweep = SweepSerializer(required=False)

    def __init__(self, *args, name="scenario", **kwargs):
        self.scenario_name = name
        super().__init__(*args, **kwargs)

    def _lasers(self, attrs):
        lasers = {}
        for section in ("laser1", "laser2"):
            values = {"power": ttd_settings.DEFAULT_LASER_POWER, **attrs[section]}
            lasers[section] = _build(section, LaserConfig, values)
        return lasers

    def _demux(self, attrs, laser1: LaserConfig, elements: int):
        spacing = attrs["demux"].get("spacing", ttd_settings.REFERENCE_CHANNEL_SPACING)
        values = {
            "first_channel": laser1.frequency - spacing * ((elements - 1) // 2),
            "spacing": spacing,
            "window_low": -spacing / 4,
            "window_high": spacing * 3 / 4,
            **attrs["demux"],
        }
        return _build("demux", DemuxConfig, values)

    def _band(self, attrs, section):
        values = {**BAND_DEFAULTS[section], **attrs[section]}
        values.setdefault("spacing", SPEED_OF_LIGHT / values["design_frequency"] / 2)
        return _build(section, BandConfig, values)

    def validate(self, attrs):
        lasers = self._lasers(attrs)
        array = _build("array", ArrayConfig, attrs["array"])
        grid_values = {"step": ttd_settings.ANGLE_GRID_STEP, **attrs["grid"]}
        cfbg3_values = dict(attrs["cfbg3"])
        if "mode" in cfbg3_values:
            cfbg3_values["mode"] = Cfbg3Mode(cfbg3_values["mode"])
        sections = {
            **lasers,
            "rf": _build("rf", ToneSet, attrs["rf"]),
            "mzm1": _build("mzm1", MzmConfig, attrs["mzm1"]),
            "mzm2": _build("mzm2", MzmConfig, attrs["mzm2"]),
            "cfbg": _build("cfbg", DelayConfig, attrs["cfbg"]),
            "cfbg3": _build("cfbg3", Cfbg3Config, cfbg3_values),
            "interleaver": _build(
                "interleaver",
                PortFilterSpec,
                {"origin": lasers["laser1"].frequency, **attrs["interleaver"]},
            ),
            "demux": self._demux(attrs, lasers["laser1"], array.elements),
            "array": array,
            "sub6": self._band(attrs, "sub6"),
            "mmwave": self._band(attrs, "mmwave"),
            "detector": _build("detector", DetectorConfig, attrs["detector"]),
            "grid": _build("grid", GridConfig, grid_values),
        }
        if attrs.get("sweep"):
            sections["sweep"] = _build("sweep", SweepSpec, attrs["sweep"])

        try:
            scenario = ScenarioConfig(name=self.scenario_name, **sections)
            check_chain(scenario)
            if scenario.sweep is not None:
                check_sweep(scenario, scenario.sweep)
        except SimulationException as exc:
            raise serializers.ValidationError([str(exc)]) from exc
        return {"scenario": scenario}

    def create(self, validated_data) -> ScenarioConfig:
        return validated_data["scenario"]


def section_keys(section: str) -> set[str]:
    return set(section_fields(section))


def variable_dimension(variable: str) -> str | None:
    """
    Unit dimension of a `section.key` value, None when it is a plain number.
    """
    section, _sep, key = variable.partition(".")
    if section not in SECTION_SERIALIZERS:
        return None
    field = section_fields(section).get(key)
    return getattr(field, "dimension", None)


def section_fields(section: str) -> dict:
    serializer_class, _required = SECTION_SERIALIZERS[section]
    return dict(serializer_class().fields)
