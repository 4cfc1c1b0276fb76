import logging
from concurrent.futures import ThreadPoolExecutor

from arof_ttd.config.scenario import ScenarioConfig, SweepSpec
from arof_ttd.config.serializers import check_sweep, variable_dimension
from arof_ttd.constants import PICO, UNITS, ServiceBand
from arof_ttd.exceptions import InvalidInput
from arof_ttd.runner.chain import run_chain
from arof_ttd.runner.tables import ResultTable
from arof_ttd.settings import ttd_settings

logger = logging.getLogger("arof_ttd.runner")

# unit the swept value is reported in, per dimension
DISPLAY_UNITS = {
    "frequency": "GHz",
    "time": "ps",
    "length": "nm",
    "power": "mW",
    "voltage": "V",
    "angle": "deg",
}
DISPLAY_UNIT_OVERRIDES = {
    "cfbg.grating_length": "mm",
    "sub6.spacing": "mm",
    "mmwave.spacing": "mm",
}


def display_unit(variable: str) -> str:
    if variable in DISPLAY_UNIT_OVERRIDES:
        return DISPLAY_UNIT_OVERRIDES[variable]
    return DISPLAY_UNITS.get(variable_dimension(variable), "")


def _sweep_row(index: int, value: float, unit: str, cfg: ScenarioConfig):
    result = run_chain(cfg)
    scale = UNITS[unit][1] if unit else 1.0
    return (
        index,
        value / scale,
        cfg.delta_t(ServiceBand.SUB6) / PICO,
        cfg.delta_t(ServiceBand.MMWAVE) / PICO,
        result.design_steering(ServiceBand.SUB6).result.peak_angle,
        result.design_steering(ServiceBand.MMWAVE).result.peak_angle,
    )


def run_sweep(cfg: ScenarioConfig, sweep_spec: SweepSpec | None = None) -> ResultTable:
    """
    Run the chain once per sweep step. Rows follow the step order whatever the completion
    order of the workers.
    """
    if sweep_spec is None:
        sweep_spec = cfg.sweep
    elif sweep_spec != cfg.sweep:
        # the sweep section of a config is checked when the config is parsed
        check_sweep(cfg, sweep_spec)
    if sweep_spec is None:
        raise InvalidInput(f"Config '{cfg.name}' has no sweep section and no sweep was given.")

    values = [float(value) for value in sweep_spec.values()]
    scenarios = [cfg.with_value(sweep_spec.variable, value) for value in values]
    unit = display_unit(sweep_spec.variable)
    logger.info("Sweeping %s over %s steps", sweep_spec.variable, len(values))

    arguments = (range(len(values)), values, [unit] * len(values), scenarios)
    workers = ttd_settings.SWEEP_MAX_WORKERS
    if workers > 1 and len(values) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_row, *arguments))
    else:
        rows = list(map(_sweep_row, *arguments))

    return ResultTable(
        columns=(
            "step",
            sweep_spec.variable,
            "delta_t_sub6",
            "delta_t_mmwave",
            "angle_sub6",
            "angle_mmwave",
        ),
        units=("", unit, "ps", "ps", "deg", "deg"),
        rows=tuple(rows),
    )
