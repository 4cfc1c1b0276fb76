import io
import os
import tempfile

from django.test import SimpleTestCase

from arof_ttd.exceptions import EmitError, InvalidInput
from arof_ttd.runner.tables import ResultTable, emit, format_cell, parse_cell, parse_table, to_text


def sample_table() -> ResultTable:
    return ResultTable(
        columns=("band", "freq", "peak_angle", "count"),
        units=("", "GHz", "deg", ""),
        rows=(
            ("sub6", 3.0, 158.5612345678912, 4),
            ("mmwave", 28.0, 1.2345e-13, 0),
            ("mmwave", 31.0, -99.375, 12),
        ),
    )


class TestResultTable(SimpleTestCase):
    def test_rendering(self):
        text = to_text(sample_table())
        self.assertEqual(
            text.splitlines()[:3],
            ["band,freq,peak_angle,count", ",GHz,deg,", "sub6,3,158.5612346,4"],
        )
        self.assertNotIn("\r", text)
        self.assertTrue(text.endswith("\n"))

    def test_round_trip(self):
        table = sample_table()
        self.assertEqual(parse_table(to_text(table)), table)

    def test_emit_and_reparse_file(self):
        table = sample_table()
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "out.csv")
            emit(table, path)
            with open(path, "rb") as handle:
                raw = handle.read()
        self.assertNotIn(b"\r\n", raw)
        self.assertEqual(parse_table(raw.decode("utf-8")), table)

    def test_emit_to_stream(self):
        stream = io.StringIO()
        emit(sample_table(), stream=stream)
        self.assertEqual(stream.getvalue(), to_text(sample_table()))

    def test_empty_table(self):
        table = ResultTable(columns=("a", "b"), units=("s", ""))
        self.assertEqual(to_text(table), "a,b\ns,\n")
        self.assertEqual(parse_table(to_text(table)), table)
        self.assertEqual(len(table), 0)

    def test_emit_error_names_the_path(self):
        path = os.path.join(tempfile.gettempdir(), "no_such_directory_arof", "out.csv")
        with self.assertRaises(EmitError) as context:
            emit(sample_table(), path)
        self.assertEqual(context.exception.path, path)
        self.assertIn(path, str(context.exception))

    def test_rows_are_normalized_to_significant_digits(self):
        table = ResultTable(columns=("x",), units=("",), rows=((1 / 3,),))
        self.assertEqual(table.rows[0][0], 0.3333333333)

    def test_column_and_frame(self):
        table = sample_table()
        self.assertEqual(table.column("count"), [4, 0, 12])
        self.assertEqual(list(table.to_frame().columns), list(table.columns))

    def test_invalid_tables(self):
        with self.assertRaises(InvalidInput):
            ResultTable(columns=("a", "b"), units=("",))
        with self.assertRaises(InvalidInput):
            ResultTable(columns=("a",), units=("",), rows=((1, 2),))
        with self.assertRaises(InvalidInput):
            ResultTable(columns=("a",), units=("",), rows=(("x,y",),))

    def test_cells(self):
        self.assertEqual(format_cell(True), "1")
        self.assertEqual(format_cell(12), "12")
        self.assertEqual(format_cell(0.1 + 0.2), "0.3")
        self.assertEqual(parse_cell("12"), 12)
        self.assertEqual(parse_cell("1e-13"), 1e-13)
        self.assertEqual(parse_cell("sub6"), "sub6")
        self.assertEqual(parse_cell(""), "")

    def test_text_cells_that_read_as_numbers(self):
        for text in ("3", "-1.5", "1e-13", "nan", "inf"):
            with self.subTest(text=text), self.assertRaises(InvalidInput) as context:
                ResultTable(columns=("a",), units=("",), rows=((text,),))
            self.assertIn("reads back as a number", str(context.exception))

        table = ResultTable(columns=("a", "b"), units=("", ""), rows=(("score", ""), ("3 GHz", 3)))
        self.assertEqual(parse_table(to_text(table)), table)
