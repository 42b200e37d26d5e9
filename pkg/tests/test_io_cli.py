"""Parsing, JSON reports and the command-line interface."""

import io
import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sextic.analysis import analyze
from sextic.cli import EXIT_INTERNAL, EXIT_OK, EXIT_REJECTED, run
from sextic.errors import ParseError, UnknownVariable
from sextic.families import TABLE_ROWS, table_member
from sextic.io.parse import parse_polynomial as P
from sextic.io.parse import split_records
from sextic.io.report import SCHEMA, dumps, report_json
from sextic.verdict import Flags
from sextic.wps import RING

X1, Y1, X2, Y2, X3 = RING.gens()


def test_parse_syntax():
    assert P("x1^2 + 2*x1*y1") == X1 * X1 + X1 * Y1 * 2
    assert P("x1**2") == X1 * X1
    assert P("2(x1 + y1)") == (X1 + Y1) * 2
    assert P("-1/2*x2 + (-x2)") == X2 * Fraction(-3, 2)
    assert P("x1*-2") == X1 * -2
    with pytest.raises(ParseError):
        P("x2^2 y2")


def test_parse_errors_have_positions():
    with pytest.raises(UnknownVariable) as info:
        P("x1 + z", line=3)
    assert (info.value.line, info.value.column) == (3, 6)
    for bad in ("", "x1 +", "x1 $ y1", "1/0", "(x1"):
        with pytest.raises(ParseError):
            P(bad)


@given(st.integers(0, 10**6), st.sampled_from(TABLE_ROWS))
def test_printed_polynomials_parse_back(seed, row):
    F = table_member(random.Random(seed), row)
    assert P(str(F)) == F


def test_split_records():
    text = "# header\nx3^2 + x2^3\n+ x1^6\n\n\n# second\nx3^2 + y2^3  # tail\n"
    recs = list(split_records(text))
    assert [r.line for r in recs] == [2, 7]
    assert P(recs[0].text) == X3**2 + X2**3 + X1**6


# -- reports -----------------------------------------------------------------------


def test_report_is_deterministic():
    F = table_member(random.Random(3), TABLE_ROWS[5])
    a = dumps(report_json(analyze(F, Flags(True, True))))
    b = dumps(report_json(analyze(F, Flags(True, True))))
    assert a == b
    d = json.loads(a)
    assert d["schema"] == SCHEMA and d["verdict"]["tag"] == "Rational"
    assert d["witness_verified"] is True
    assert "timing_seconds" not in d


# -- CLI ------------------------------------------------------------------------------


def _run(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run(argv, out)
    return code, out.getvalue()


def test_cli_analyze_json():
    code, out = _run(["analyze", "--json", "x3^2 + x2^2*y2 + y2^2*x1^2 + x1^6 + y1^6"])
    d = json.loads(out)
    assert code == EXIT_OK
    assert d["case"] == "Eq2" and d["verdict"]["tag"] == "Rational"
    assert d["verdict"]["witness"]["solved_variable"] == "u"


def test_cli_flags_and_text():
    code, out = _run(
        ["analyze", "--assert-terminal", "--assert-q-factorial", "x3^2 + x2*y2*(x2+y2) + x1^6 + y1^6"]
    )
    assert code == EXIT_OK
    assert "verdict:" in out


def test_cli_rejections():
    code, out = _run(["analyze", "--json", "x3^2 + x2^2"])
    assert code == EXIT_REJECTED
    assert json.loads(out)["error"]["type"] == "WrongDegree"
    code, out = _run(["analyze", "--json", "x3^2 + x5"])
    err = json.loads(out)["error"]
    assert code == EXIT_REJECTED and err["type"] == "UnknownVariable" and err["column"] == 8
    code, _ = _run(["analyze"])
    assert code == EXIT_REJECTED


def test_cli_geometry_obstruction_is_not_an_error():
    code, out = _run(["analyze", "--json", "x3^2 + x1^6 + y1^6 + x1^2*x2^2"])
    assert code == EXIT_OK
    assert json.loads(out)["verdict"]["tag"] == "Undetermined"


def test_cli_batch(monkeypatch, tmp_path):
    path = tmp_path / "batch.txt"
    path.write_text("x3^2 + x2^3 + x1^6 + y1^6\n\nx3^2 + x2\n\nx3^2 + x2^2*y2 + x1^6 + y1^6\n")
    code, out = _run(["analyze", "--json", "--input", str(path)])
    d = json.loads(out)
    assert code == EXIT_REJECTED
    assert [r["record_line"] for r in d["records"]] == [1, 3, 5]
    code2, out2 = _run(["analyze", "--json", "--input", "-", "--jobs", "2"], path.read_text(), monkeypatch)
    assert (code2, out2) == (code, out)


def test_cli_other_commands():
    code, out = _run(["ledger", "--json", "--expr", "A^3 + E^3"])
    d = json.loads(out)
    assert code == EXIT_OK
    assert [r["value"] for r in d["identities"]] == ["0", "1", "4", "9/2"]
    code, out = _run(["lattice-check", "--json", "--l", "2"])
    assert code == EXIT_OK and json.loads(out)["results"][0]["ok"]
    code, out = _run(["discriminant", "--json", "--convention", "conic", "x3^2 + x2^2*y2 + x1*y1*y2^2 + x1^6 + y1^6"])
    assert code == EXIT_OK and json.loads(out)["discriminant"]["genus"] == 9
    code, out = _run(["witness", "--json", "x3^2 + x2^3 + x2*y2*x1^2 + x1^6 + y1^6"])
    assert code == EXIT_OK and json.loads(out)["verified"] is True
    code, out = _run(["witness", "--json", "x3^2 + x2^3 + x1^6 + y1^6"])
    assert code == EXIT_OK and json.loads(out)["error"]["type"] == "NotTerminalAtHalfPoint"
    code, out = _run(["eckardt", "--json", "x3^2 + x2^3 + y2^3 + x1^3"])
    assert code == EXIT_OK and "y1" in json.loads(out)["sextic"]


def test_cli_internal_exit_code_constant():
    assert EXIT_INTERNAL == 1


def test_cli_fermat_type_with_flags_is_non_rational():
    argv = ["analyze", "--json", "--assert-terminal", "--assert-q-factorial", "x3^2 + x2^3 + y2^3 + x1^6 + y1^6"]
    code, out = _run(argv)
    d = json.loads(out)
    assert code == EXIT_OK
    assert d["case"] == "Eq3"
    assert d["verdict"]["tag"] == "NonRational"
    assert d["verdict"]["conditional_on"] == {"terminal": True, "q_factorial": True}
