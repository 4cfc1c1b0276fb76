from functools import lru_cache

from arof_ttd.config import load_config, parse_config
from arof_ttd.config.loader import FIXTURES_DIR
from arof_ttd.optics.modulation import direct_modulate, mzm_modulate
from arof_ttd.optics.spectrum import OpticalSpectrum, couple, laser_line


@lru_cache
def fixture(name: str):
    return load_config(name)


def fixture_text(name: str) -> str:
    return (FIXTURES_DIR / f"{name}.cfg").read_text(encoding="utf-8")


def fixture_with(name: str, **replacements) -> str:
    """
    Fixture text with whole `key = value` lines replaced or appended.
    Keys use `__` for the dot: `rf__tones="3, 5, 6.5 GHz"`.
    """
    keys = {key.replace("__", "."): value for key, value in replacements.items()}
    lines = []
    for line in fixture_text(name).splitlines():
        key = line.partition("=")[0].strip()
        if key in keys:
            lines.append(f"{key} = {keys.pop(key)}")
        else:
            lines.append(line)
    lines.extend(f"{key} = {value}" for key, value in keys.items())
    return "\n".join(lines) + "\n"


def parse_fixture_with(name: str, **replacements):
    return parse_config(fixture_with(name, **replacements), name=name)


def coupled_comb(name: str = "reference") -> OpticalSpectrum:
    """
    Both branches of the fixture's central unit coupled into one fiber, before any delay.
    """
    cfg = fixture(name)
    lambda1 = mzm_modulate(
        direct_modulate(laser_line(cfg.laser1.power, cfg.laser1.frequency), cfg.rf), cfg.mzm1
    )
    lambda2 = mzm_modulate(laser_line(cfg.laser2.power, cfg.laser2.frequency), cfg.mzm2)
    return couple(lambda1, lambda2)
