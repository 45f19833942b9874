# :coding: utf-8

import json

import pytest

import borosmoll.config
import borosmoll.report
import borosmoll.verify
from borosmoll.cache import RowCache
from borosmoll.exactnum import QuadSurd, Rational
from borosmoll.integral import IntegralResult
from borosmoll.verify import CellVerdict


@pytest.fixture()
def verify_report():
    """Return report verifying 'rulc' for m=2 and m=3."""
    config = borosmoll.config.create("verify", 2, 3, checks=["rulc"])
    report = borosmoll.verify.verify_suite(
        2, 3, checks=["rulc"], cache=RowCache(),
        config=borosmoll.config.echo(config)
    )
    report.wall_time = 0.25
    return report


def _verdict_mapping(m, i, numerator, denominator, decimal, bound):
    return {
        "check": "rulc",
        "m": m,
        "i": i,
        "relation": "<",
        "passed": True,
        "strict": True,
        "margin_sign": 1,
        "lhs": {
            "numerator": numerator,
            "denominator": denominator,
            "decimal": decimal
        },
        "rhs": {
            "numerator": bound,
            "denominator": "1",
            "decimal": "{}.000000".format(bound)
        }
    }


def test_encode_rational():
    """Encode rational with exact strings."""
    assert borosmoll.report.encode_rational(Rational(-43, 15)) == {
        "numerator": "-43", "denominator": "15"
    }


def test_encode_value_surd():
    """Encode quadratic surd."""
    value = QuadSurd(Rational(31, 12), Rational(1, 12), 13)
    assert borosmoll.report.encode_value(value, 6) == {
        "p": {"numerator": "31", "denominator": "12"},
        "q": {"numerator": "1", "denominator": "12"},
        "radicand": "13",
        "decimal": "2.883796"
    }


def test_encode_value_large_rational():
    """Encode rational exceeding 64-bit integers as strings."""
    value = Rational(2 ** 80 + 1, 3)
    mapping = borosmoll.report.encode_value(value, 2)
    assert mapping["numerator"] == str(2 ** 80 + 1)
    assert mapping["denominator"] == "3"


@pytest.mark.parametrize("value, expected", [
    (Rational(43, 15), "43/15"),
    (QuadSurd(Rational(31, 12), Rational(1, 12), 13), "31/12 + 1/12*sqrt(13)"),
    (QuadSurd(0, -1, 2), "0 - 1*sqrt(2)"),
    ((Rational(3, 4), Rational(1)), "(3/4, 1)"),
], ids=[
    "rational",
    "surd",
    "negative-surd",
    "interval",
])
def test_exact_string(value, expected):
    """Return exact string of value."""
    assert borosmoll.report.exact_string(value) == expected


def test_encode_verdict_interval():
    """Encode verdict with interval."""
    verdict = CellVerdict(
        "sandwich", 2, 1, "in", True, True, 1, Rational(25, 28),
        (Rational(3, 4), Rational(1))
    )
    mapping = borosmoll.report.encode_verdict(verdict, 3)
    assert mapping["rhs"] == {
        "lower": {"numerator": "3", "denominator": "4", "decimal": "0.750"},
        "upper": {"numerator": "1", "denominator": "1", "decimal": "1.000"},
    }
    assert mapping["lhs"]["decimal"] == "0.893"


def test_format_report_json(verify_report):
    """Format verify report as JSON."""
    config = borosmoll.config.create(
        "verify", 2, 3, checks=["rulc"], format="json", all_cells=True
    )
    document = json.loads(
        borosmoll.report.format_report(verify_report, config)
    )

    assert document["footer"] == {"wall_time": 0.25}
    assert document["body"] == {
        "name": "verify",
        "config": {
            "command": "verify",
            "float_digits": 6,
            "m_min": 2,
            "m_max": 3,
            "checks": ["rulc"]
        },
        "observational": False,
        "passed": True,
        "counts": {"rulc": {"cells": 3, "passed": 3, "strict": 3}},
        "vacuous": [],
        "notes": [],
        "summary": {},
        "failures": [],
        "verdicts": [
            _verdict_mapping(2, 1, "25", "7", "3.571429", "4"),
            _verdict_mapping(3, 1, "7396", "2695", "2.744341", "3"),
            _verdict_mapping(3, 2, "245", "86", "2.848837", "3"),
        ]
    }


def test_format_report_json_deterministic(verify_report):
    """Format identical bodies for identical reports."""
    config = borosmoll.config.create(
        "verify", 2, 3, checks=["rulc"], format="json"
    )
    first = borosmoll.report.format_report(verify_report, config)

    verify_report.wall_time = 12.0
    second = borosmoll.report.format_report(verify_report, config)

    assert json.loads(first)["body"] == json.loads(second)["body"]
    assert first.split("\"footer\"")[0] == second.split("\"footer\"")[0]


def test_format_report_csv(verify_report):
    """Format verify report as CSV."""
    config = borosmoll.config.create(
        "verify", 2, 3, checks=["rulc"], format="csv"
    )
    assert borosmoll.report.format_report(verify_report, config) == (
        "check,m,i,relation,passed,strict,margin_sign,lhs,rhs,lhs_decimal,"
        "rhs_decimal"
    )

    config = config._replace(all_cells=True)
    lines = borosmoll.report.format_report(verify_report, config).split("\n")
    assert len(lines) == 4
    assert lines[1] == "rulc,2,1,<,1,1,1,25/7,4,3.571429,4.000000"


def test_format_report_text(verify_report):
    """Format verify report as text."""
    config = borosmoll.config.create("verify", 2, 3, checks=["rulc"])
    assert borosmoll.report.format_report(verify_report, config) == (
        "# verify\n"
        "# checks: ['rulc']\n"
        "# command: verify\n"
        "# float_digits: 6\n"
        "# m_max: 3\n"
        "# m_min: 2\n"
        "rulc: 3 cells, 3 passed, 3 strict\n"
        "result: pass\n"
        "# wall-time: 0.250s"
    )


def test_format_report_text_failures():
    """Format failing verdicts as text."""
    report = borosmoll.verify.ScanReport("verify")
    report.add(
        CellVerdict(
            "crosspath", 3, 1, "=", False, False, 1, Rational(11),
            Rational(43, 4)
        )
    )
    report.mark_vacuous("rulc", 1)

    config = borosmoll.config.create("verify", 1, 3, checks=["rulc"])
    lines = borosmoll.report.format_report(report, config).split("\n")
    assert lines[1:] == [
        "crosspath: 1 cells, 0 passed, 0 strict",
        "rulc: 0 cells, 0 passed, 0 strict",
        "vacuous: rulc m=1",
        "failures:",
        "  crosspath m=3 i=1: 11.000000 = 10.750000 [FAIL]",
        "result: fail",
        "# wall-time: 0.000s",
    ]


def test_report_data_summary():
    """Encode summary of scan report."""
    report = borosmoll.verify.scan_conjectures(6, 6)
    data = borosmoll.report.report_data(report, 6)
    assert data["summary"] == {
        "6": {
            "log_concave": True,
            "ultra_lc": False,
            "reverse_ultra_lc": True,
            "n": 2
        }
    }
    assert "verdicts" not in data


@pytest.mark.parametrize("output_format, expected", [
    ("csv", "2,0,21,8\n2,1,15,4\n2,2,3,2"),
    (
        "text",
        "m=2 [recurrence]\n"
        "  d_0(2) = 21/8 (2.625000)\n"
        "  d_1(2) = 15/4 (3.750000)\n"
        "  d_2(2) = 3/2 (1.500000)\n"
        "# wall-time: 0.000s"
    ),
], ids=[
    "csv",
    "text",
])
def test_format_rows(output_format, expected):
    """Format coefficient rows."""
    config = borosmoll.config.create("row", 2, 2, format=output_format)
    rows = RowCache().rows(2, 2)
    assert borosmoll.report.format_rows(rows, config) == expected


def test_format_rows_json():
    """Format coefficient rows as JSON."""
    config = borosmoll.config.create("row", 1, 1, format="json")
    rows = RowCache().rows(1, 1)
    document = json.loads(
        borosmoll.report.format_rows(rows, config, wall_time=1.0)
    )
    assert document == {
        "body": {
            "config": {
                "command": "row", "float_digits": 6, "m_min": 1, "m_max": 1
            },
            "rows": [
                {
                    "m": 1,
                    "source": "recurrence",
                    "coefficients": [
                        {
                            "numerator": "3", "denominator": "2",
                            "decimal": "1.500000"
                        },
                        {
                            "numerator": "1", "denominator": "1",
                            "decimal": "1.000000"
                        },
                    ]
                }
            ]
        },
        "footer": {"wall_time": 1.0}
    }


def test_format_table_text():
    """Format normalized ratio table as text."""
    cache = RowCache()
    config = borosmoll.config.create("table", 8, 8)
    values = borosmoll.verify.normalized_ratios(8, cache)
    monotonicity = borosmoll.verify.monotonicity_report(8, cache)

    assert borosmoll.report.format_table(
        values, monotonicity, config, wall_time=0.5
    ) == (
        "# c_i(8)/u_i(8)\n"
        "   1  0.956593\n"
        "   2  0.969751\n"
        "   3  0.978293\n"
        "   4  0.983956\n"
        "   5  0.987811\n"
        "   6  0.990507\n"
        "   7  0.992445\n"
        "# strictly increasing: yes\n"
        "# wall-time: 0.500s"
    )


def test_format_table_csv():
    """Format normalized ratio table as CSV."""
    cache = RowCache()
    config = borosmoll.config.create("table", 2, 2, format="csv")
    values = borosmoll.verify.normalized_ratios(2, cache)
    monotonicity = borosmoll.verify.monotonicity_report(2, cache)

    assert borosmoll.report.format_table(values, monotonicity, config) == (
        "m,i,numerator,denominator,decimal\n"
        "2,1,25,28,0.892857"
    )


def test_format_table_json():
    """Format normalized ratio table as JSON."""
    cache = RowCache()
    config = borosmoll.config.create("table", 3, 3, format="json")
    values = borosmoll.verify.normalized_ratios(3, cache)
    monotonicity = borosmoll.verify.monotonicity_report(3, cache)

    body = json.loads(
        borosmoll.report.format_table(values, monotonicity, config)
    )["body"]
    assert body["m"] == 3
    assert body["config"] == {
        "command": "table", "float_digits": 6, "m_max": 3
    }
    assert [value["i"] for value in body["values"]] == [1, 2]
    assert body["monotonicity"]["observational"] is True


@pytest.mark.parametrize("result, expected", [
    (IntegralResult(0, 1.0, 0.7853, 0.7853, 1e-12, 1e-14, True), "pass"),
    (IntegralResult(0, 1.0, 0.7853, 0.79, 1e-3, 1e-14, True), "fail"),
    (
        IntegralResult(0, 1.0, 0.7853, 0.7853, 1e-12, 1e-6, False),
        "inconclusive"
    ),
], ids=[
    "pass",
    "fail",
    "inconclusive",
])
def test_integral_status(result, expected):
    """Return status of quadrature result."""
    config = borosmoll.config.create("integral", 0, 0)
    assert borosmoll.report.integral_status(result, config) == expected


def test_format_integral():
    """Format quadrature results."""
    results = [
        IntegralResult(0, 1.0, 0.75, 0.75, 1e-12, 1e-14, True),
        IntegralResult(1, 0.5, 0.5, 0.25, 1.0, 1e-14, True),
    ]

    config = borosmoll.config.create("integral", 0, 1, a_values=[1.0, 0.5])
    assert borosmoll.report.format_integral(results, config) == (
        "# quartic integral, tolerance 1e-08\n"
        "m=0 a=1.0: residual=1.000e-12 [pass]\n"
        "m=1 a=0.5: residual=1.000e+00 [fail]\n"
        "# wall-time: 0.000s"
    )

    config = config._replace(format="csv")
    assert borosmoll.report.format_integral(results, config).split("\n") == [
        "m,a,numeric,closed_form,residual,error_estimate,status",
        "0,1.0,0.75,0.75,1e-12,1e-14,pass",
        "1,0.5,0.5,0.25,1.0,1e-14,fail",
    ]

    config = config._replace(format="json")
    body = json.loads(borosmoll.report.format_integral(results, config))
    assert body["body"]["results"][1] == {
        "m": 1,
        "a": 0.5,
        "numeric": 0.5,
        "closed_form": 0.25,
        "residual": 1.0,
        "error_estimate": 1e-14,
        "status": "fail"
    }
