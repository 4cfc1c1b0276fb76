from enum import Enum

from scipy import constants

SPEED_OF_LIGHT = constants.c
PICO = constants.pico
NANO = constants.nano
GIGA = constants.giga
TERA = constants.tera


# TODO - replace (str, Enum) by StrEnum when python requirements > 3.11
class ServiceBand(str, Enum):
    """
    Service bands fed by the two interleaver ports.
    """

    SUB6 = "sub6"
    MMWAVE = "mmwave"


class Cfbg3Mode(str, Enum):
    """
    How the RRH grating on the mmWave path is chosen.
    """

    ALIGNED = "aligned"
    """
    Slope k = (d2 - d1) n / d1 so that mmWave beams point where sub-6GHz beams point.
    """

    TARGET = "target"
    """
    Slope chosen so the cascaded mmWave delay difference equals `cfbg3.target_delta_t`.
    """

    OFF = "off"
    """
    No grating on the mmWave path.
    """


class SteeringMode(str, Enum):
    TTD = "ttd"
    PHASE_SHIFT = "phase_shift"


# Unit suffixes accepted by the config format: suffix -> (dimension, SI factor)
UNITS = {
    "Hz": ("frequency", 1.0),
    "kHz": ("frequency", constants.kilo),
    "MHz": ("frequency", constants.mega),
    "GHz": ("frequency", GIGA),
    "THz": ("frequency", TERA),
    "s": ("time", 1.0),
    "ms": ("time", constants.milli),
    "us": ("time", constants.micro),
    "ns": ("time", NANO),
    "ps": ("time", PICO),
    "fs": ("time", constants.femto),
    "m": ("length", 1.0),
    "mm": ("length", constants.milli),
    "um": ("length", constants.micro),
    "nm": ("length", NANO),
    "W": ("power", 1.0),
    "mW": ("power", constants.milli),
    "uW": ("power", constants.micro),
    "V": ("voltage", 1.0),
    "mV": ("voltage", constants.milli),
    "deg": ("angle", 1.0),
    "rad": ("angle", 180.0 / constants.pi),
}
