import logging
from pathlib import Path

from rest_framework.settings import api_settings

from arof_ttd.config.parser import Assignment, Word, parse_assignments, parse_values
from arof_ttd.config.scenario import ScenarioConfig, SweepSpec
from arof_ttd.config.serializers import (
    SECTION_SERIALIZERS,
    ScenarioSerializer,
    SweepSerializer,
    section_keys,
)
from arof_ttd.exceptions import ConfigSyntaxError, ConfigValidationError, InvalidInput

logger = logging.getLogger("arof_ttd.config")

FIXTURES_DIR = Path(__file__).resolve().parent / "fixtures"


# Short names of the bundled scenarios
FIXTURE_ALIASES = {
    "table2": "reference",
    "fig5": "coverage",
    "fig6": "codirectional",
    "fig7": "chirp_sweep",
}


def bundled_fixtures() -> list[str]:
    """
    Every name `load_config` resolves to a bundled scenario, aliases included.
    """
    return sorted([*(path.stem for path in FIXTURES_DIR.glob("*.cfg")), *FIXTURE_ALIASES])


def _check_keys(assignments: list[Assignment]):
    messages = []
    for assignment in assignments:
        if assignment.section not in SECTION_SERIALIZERS:
            messages.append(f"line {assignment.line}: unknown section '{assignment.section}'")
        elif assignment.field_name not in section_keys(assignment.section):
            messages.append(f"line {assignment.line}: unknown key '{assignment.key}'")
    if messages:
        raise ConfigValidationError(messages)


def _format_errors(errors, lines: dict[str, int]) -> list[str]:
    """
    Flatten serializer errors into `line N: section.key: message` strings.
    Keys absent from the file carry no line.
    """
    messages = []

    def add(key, detail):
        line = lines.get(key)
        if line is None:
            section_lines = [value for name, value in lines.items() if name.startswith(f"{key}.")]
            line = min(section_lines, default=None)
        prefix = f"line {line}: " if line is not None else ""
        label = f"{key}: " if key else ""
        messages.append(f"{prefix}{label}{detail}")

    for section, detail in errors.items():
        if section == api_settings.NON_FIELD_ERRORS_KEY:
            for item in detail:
                messages.append(str(item))
        elif isinstance(detail, dict):
            for key, items in detail.items():
                full_key = section if key == api_settings.NON_FIELD_ERRORS_KEY else f"{section}.{key}"
                for item in items:
                    add(full_key, item)
        else:
            for item in detail:
                add(section, item)
    return messages


def parse_config(text: str, name: str = "scenario") -> ScenarioConfig:
    """
    Parse and validate config text. Absent optional keys get their defaults and the
    nominal chain is checked before the config is returned.
    """
    assignments = parse_assignments(text)
    _check_keys(assignments)

    data = {section: {} for section in SECTION_SERIALIZERS if section != "sweep"}
    lines = {}
    for assignment in assignments:
        data.setdefault(assignment.section, {})[assignment.field_name] = assignment.values
        lines[assignment.key] = assignment.line

    serializer = ScenarioSerializer(data=data, name=name)
    if not serializer.is_valid():
        messages = _format_errors(serializer.errors, lines)
        for message in messages:
            logger.debug("Config %s: %s", name, message)
        raise ConfigValidationError(messages)
    return serializer.save()


def load_config(name_or_path: str | Path) -> ScenarioConfig:
    """
    Load a config file, or a bundled fixture by name (table2, fig5, fig6, fig7 or their
    long names reference, coverage, codirectional, chirp_sweep).
    The config is named after the fixture name given, or the file stem.
    """
    path = Path(name_or_path)
    name = path.stem
    if not path.is_file():
        name = str(name_or_path)
        fixture = FIXTURES_DIR / f"{FIXTURE_ALIASES.get(name, name)}.cfg"
        if not fixture.is_file():
            raise InvalidInput(
                f"No config file or bundled fixture named '{name_or_path}' "
                f"(fixtures: {', '.join(bundled_fixtures())})."
            )
        path = fixture
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InvalidInput(f"{path}: {exc}") from exc
    logger.info("Loading config %s", path)
    return parse_config(text, name=name)


def parse_sweep(text: str) -> SweepSpec:
    """
    Parse a `VAR=START:STOP:STEP` sweep argument.
    """
    variable, separator, bounds = text.partition("=")
    parts = bounds.split(":")
    if not separator or len(parts) != 3:
        raise ConfigSyntaxError(f"Expected VAR=START:STOP:STEP, got '{text}'.")
    data = {"variable": (Word(variable.strip()),)}
    for key, part in zip(("start", "stop", "step"), parts, strict=True):
        data[key] = parse_values(part)

    serializer = SweepSerializer(data=data)
    if not serializer.is_valid():
        raise ConfigValidationError(_format_errors({"sweep": serializer.errors}, {}))
    return SweepSpec(**serializer.validated_data)
