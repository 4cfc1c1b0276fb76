"""
Plot-ready result tables and their CSV form: a header row, a units row, then the data rows,
LF line endings, floats with SIGNIFICANT_DIGITS significant digits.
"""

import io
import logging
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import pandas as pd

from arof_ttd.exceptions import EmitError, InvalidInput
from arof_ttd.settings import ttd_settings

logger = logging.getLogger("arof_ttd.runner")


def format_cell(value) -> str:
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.{ttd_settings.SIGNIFICANT_DIGITS}g}"
    return str(value)


def parse_cell(text: str):
    for convert in (int, float):
        try:
            return convert(text)
        except ValueError:
            continue
    return text


def _normalize(value):
    """
    Cell value as it reads back from its rendering.
    """
    if isinstance(value, float) and math.isfinite(value):
        return float(format_cell(value))
    if hasattr(value, "item"):
        return _normalize(value.item())
    return value


@dataclass(frozen=True)
class ResultTable:
    columns: tuple[str, ...]
    units: tuple[str, ...]
    rows: tuple[tuple, ...] = ()

    def __post_init__(self):
        columns = tuple(self.columns)
        units = tuple(self.units)
        if len(units) != len(columns):
            raise InvalidInput(f"{len(columns)} columns but {len(units)} units.")
        rows = tuple(tuple(_normalize(value) for value in row) for row in self.rows)
        for row in rows:
            if len(row) != len(columns):
                raise InvalidInput(f"Row {row} does not have {len(columns)} cells.")
        for text in (*columns, *units, *(cell for row in rows for cell in row)):
            if isinstance(text, str) and ("," in text or "\n" in text):
                raise InvalidInput(f"Table text may not contain ',' or a newline: {text!r}.")
        for cell in (cell for row in rows for cell in row):
            # text cells must read back as text
            if isinstance(cell, str) and parse_cell(cell) is not cell:
                raise InvalidInput(f"Text cell {cell!r} reads back as a number.")
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "units", units)
        object.__setattr__(self, "rows", rows)

    def column(self, name: str) -> list:
        index = self.columns.index(name)
        return [row[index] for row in self.rows]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(list(self.rows), columns=list(self.columns))

    def __len__(self):
        return len(self.rows)


def to_text(table: ResultTable) -> str:
    text = ",".join(table.columns) + "\n" + ",".join(table.units) + "\n"
    if table.rows:
        cells = pd.DataFrame([[format_cell(value) for value in row] for row in table.rows])
        text += cells.to_csv(header=False, index=False, lineterminator="\n")
    return text


def parse_table(text: str) -> ResultTable:
    lines = text.split("\n")
    if len(lines) < 2:
        raise InvalidInput("A result table needs a header row and a units row.")
    columns = tuple(lines[0].split(","))
    units = tuple(lines[1].split(","))
    if not any(line for line in lines[2:]):
        return ResultTable(columns=columns, units=units)
    cells = pd.read_csv(
        io.StringIO(text),
        header=None,
        skiprows=2,
        dtype=str,
        keep_default_na=False,
        skip_blank_lines=False,
    )
    rows = tuple(tuple(parse_cell(value) for value in row) for row in cells.itertuples(index=False))
    return ResultTable(columns=columns, units=units, rows=rows)


def emit(table: ResultTable, path: str | Path | None = None, stream=None):
    """
    Write the table to `path`, or to `stream` (stdout by default).
    """
    text = to_text(table)
    if path is None:
        (stream or sys.stdout).write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    except OSError as exc:
        raise EmitError(path, exc.strerror or str(exc)) from exc
    logger.info("Wrote %s rows to %s", len(table), path)
