"""
Lark grammar of the scenario config format.

One `section.key = value` assignment per line, `#` starts a comment. A value is a number with
an optional unit suffix, a bare word, or a comma separated list of them.
"""

import typing

from lark import Lark, Transformer
from lark.exceptions import (
    UnexpectedCharacters,
    UnexpectedEOF,
    UnexpectedInput,
    UnexpectedToken,
    VisitError,
)

from arof_ttd.constants import UNITS
from arof_ttd.exceptions import ConfigSyntaxError

BNF = r"""
start: (_NL | statement _NL)* statement?

statement: NAME "=" values
values: value ("," value)*
value: SIGNED_NUMBER NAME? -> quantity
     | NAME -> word

NAME: /[A-Za-z_][A-Za-z0-9_.\/]*/
COMMENT: /#[^\n]*/
_NL: /(\r?\n[\t ]*)+/

%import common.SIGNED_NUMBER
%import common.WS_INLINE
%ignore WS_INLINE
%ignore COMMENT
"""


class Quantity(typing.NamedTuple):
    magnitude: float
    unit: str | None

    def to_si(self, default_unit: str | None = None) -> float:
        unit = self.unit or default_unit
        if unit is None:
            return self.magnitude
        return self.magnitude * UNITS[unit][1]

    @property
    def dimension(self) -> str | None:
        if self.unit is None:
            return None
        return UNITS[self.unit][0]


class Word(typing.NamedTuple):
    text: str


class Assignment(typing.NamedTuple):
    key: str
    values: tuple[Quantity | Word, ...]
    line: int

    @property
    def section(self) -> str:
        return self.key.partition(".")[0]

    @property
    def field_name(self) -> str:
        return self.key.partition(".")[2]


class ConfigTransformer(Transformer):
    """Converts the syntax tree into Assignment namedtuples"""

    def start(self, items):
        return [item for item in items if isinstance(item, Assignment)]

    def statement(self, items):
        name, values = items
        return Assignment(str(name), values, name.line)

    def values(self, items):
        return tuple(items)

    def quantity(self, items):
        unit = str(items[1]) if len(items) > 1 else None
        if unit is not None and unit not in UNITS:
            raise ConfigSyntaxError(f"Unknown unit '{unit}'.", line=items[1].line)
        return Quantity(float(items[0]), unit)

    def word(self, items):
        return Word(str(items[0]))


_parser = Lark(BNF, start=["start", "values"], parser="lalr", maybe_placeholders=False)


def _syntax_error(exc: UnexpectedInput) -> ConfigSyntaxError:
    if isinstance(exc, UnexpectedCharacters):
        detail = f"unexpected character '{exc.char}'"
    elif isinstance(exc, UnexpectedEOF):
        detail = "unexpected end of input"
    elif isinstance(exc, UnexpectedToken) and exc.token.type == "$END":
        detail = "unexpected end of input"
    elif isinstance(exc, UnexpectedToken):
        detail = f"unexpected '{exc.token}'"
    else:
        detail = str(exc)
    line = getattr(exc, "line", None)
    return ConfigSyntaxError(detail, line=line if line and line > 0 else None)


def _transform(tree):
    try:
        return ConfigTransformer().transform(tree)
    except VisitError as exc:
        if isinstance(exc.orig_exc, ConfigSyntaxError):
            raise exc.orig_exc from None
        raise


def parse_assignments(text: str) -> list[Assignment]:
    """
    Parse config text into its assignments. Repeated keys are refused.
    """
    if text and not text.endswith("\n"):
        text += "\n"
    try:
        tree = _parser.parse(text, start="start")
    except UnexpectedInput as exc:
        raise _syntax_error(exc) from exc

    assignments = _transform(tree)
    seen = {}
    for assignment in assignments:
        if "." not in assignment.key:
            raise ConfigSyntaxError(
                f"'{assignment.key}' is not a section.key name", line=assignment.line
            )
        if assignment.key in seen:
            raise ConfigSyntaxError(
                f"'{assignment.key}' already set on line {seen[assignment.key]}",
                line=assignment.line,
            )
        seen[assignment.key] = assignment.line
    return assignments


def parse_values(text: str) -> tuple[Quantity | Word, ...]:
    """
    Parse a standalone value list such as `0.7nm` or `3, 5, 6 GHz`.
    """
    try:
        tree = _parser.parse(text.strip(), start="values")
    except UnexpectedInput as exc:
        raise _syntax_error(exc) from exc
    return _transform(tree)
