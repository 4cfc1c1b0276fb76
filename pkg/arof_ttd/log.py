"""
logging utils
"""

import contextvars
import logging
import logging.config
from contextlib import contextmanager

from arof_ttd.exceptions import SimulationException

_current_stage = contextvars.ContextVar("arof_stage", default="")
_current_scenario = contextvars.ContextVar("arof_scenario", default="")


def get_current_stage() -> str:
    return _current_stage.get()


def default_get_log_extra_context(stage: str, scenario: str = ""):
    """
    This method is the default used for the ttd_settings: LOG_EXTRA_CONTEXT_FUNCTION.
    It allow logs to have extra data about the chain stage they were emitted in.
    """
    return {
        "arof_stage": stage,
        "arof_scenario": scenario,
    }


@contextmanager
def scenario_context(name: str):
    token = _current_scenario.set(name)
    try:
        yield
    finally:
        _current_scenario.reset(token)


@contextmanager
def chain_stage(stage: str):
    """
    Mark the enclosed code as one stage of the chain.
    Simulation exceptions escaping the block are tagged with the stage name if they
    do not carry one yet.
    """
    token = _current_stage.set(stage)
    try:
        yield
    except SimulationException as exc:
        if not exc.stage:
            exc.stage = stage
        raise
    finally:
        _current_stage.reset(token)


def set_log_record_factory():
    """
    This method is not used by default. You just have to execute it in your app code.
    Preferentially at some entrypoint (the standalone cli does).
    If this method is called before any log you can use arof_stage and arof_scenario in your
    log formatter
    """
    from arof_ttd.settings import ttd_settings

    old_factory = logging.getLogRecordFactory()

    def record_factory(*args, **kwargs):
        record = old_factory(*args, **kwargs)
        extra_context = ttd_settings.LOG_EXTRA_CONTEXT_FUNCTION(
            _current_stage.get(), _current_scenario.get()
        )
        for key, value in extra_context.items():
            setattr(record, key, value)
        return record

    logging.setLogRecordFactory(record_factory)
