"""
Scenario configuration: the flat `section.key = value` format, its validation and the bundled
fixtures.
"""

from arof_ttd.config.loader import load_config, parse_config, parse_sweep
from arof_ttd.config.scenario import ScenarioConfig, SweepSpec

__all__ = ["ScenarioConfig", "SweepSpec", "load_config", "parse_config", "parse_sweep"]
