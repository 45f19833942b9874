# :coding: utf-8

import csv
import io
import json

import borosmoll.config
from borosmoll.exactnum import Rational, QuadSurd, render

#: Columns of verdict rows in CSV outputs.
VERDICT_COLUMNS = (
    "check", "m", "i", "relation", "passed", "strict", "margin_sign",
    "lhs", "rhs", "lhs_decimal", "rhs_decimal"
)


def encode_rational(value):
    """Return mapping with exact numerator and denominator strings."""
    value = Rational(value)
    return {
        "numerator": str(value.numerator),
        "denominator": str(value.denominator)
    }


def encode_value(value, digits):
    """Return JSON-compatible mapping for exact *value*.

    Rationals are encoded as::

        {"numerator": "43", "denominator": "15", "decimal": "2.866667"}

    Quadratic surds ``p + q*sqrt(d)`` are encoded as::

        {"p": {...}, "q": {...}, "radicand": "13", "decimal": "2.883796"}

    """
    if isinstance(value, QuadSurd):
        return {
            "p": encode_rational(value.p),
            "q": encode_rational(value.q),
            "radicand": str(value.d),
            "decimal": render(value, digits)
        }

    mapping = encode_rational(value)
    mapping["decimal"] = render(value, digits)
    return mapping


def _is_interval(value):
    return isinstance(value, tuple) and not isinstance(value, QuadSurd)


def exact_string(value):
    """Return exact string for *value*, such as "43/15" or "31/12 +
    1/12*sqrt(13)"."""
    if _is_interval(value):
        return "({}, {})".format(*[exact_string(item) for item in value])

    return str(value)


def encode_verdict(verdict, digits):
    """Return JSON-compatible mapping for *verdict*."""
    if _is_interval(verdict.rhs):
        lower, upper = verdict.rhs
        rhs = {
            "lower": encode_value(lower, digits),
            "upper": encode_value(upper, digits)
        }
    else:
        rhs = encode_value(verdict.rhs, digits)

    return {
        "check": verdict.check,
        "m": verdict.m,
        "i": verdict.i,
        "relation": verdict.relation,
        "passed": verdict.passed,
        "strict": verdict.strict,
        "margin_sign": verdict.margin_sign,
        "lhs": encode_value(verdict.lhs, digits),
        "rhs": rhs
    }


def report_data(report, digits, record_all=False):
    """Return deterministic mapping describing a
    :class:`~borosmoll.verify.ScanReport`.

    :param record_all: Indicate whether every verdict is listed under
        "verdicts" in addition to the failures.

    """
    data = {
        "name": report.name,
        "config": report.config,
        "observational": report.observational,
        "passed": report.passed,
        "counts": report.counts(),
        "vacuous": [
            {"check": check, "m": m} for check, m in report.vacuous
        ],
        "notes": list(report.notes),
        "summary": {
            str(key): dict(value._asdict())
            for key, value in sorted(report.summary.items())
        },
        "failures": [
            encode_verdict(verdict, digits) for verdict in report.failures()
        ]
    }

    if record_all:
        data["verdicts"] = [
            encode_verdict(verdict, digits) for verdict in report.verdicts
        ]

    return data


def dump_json(body, wall_time):
    """Return JSON document with *body* and a footer holding *wall_time*."""
    return json.dumps(
        {"body": body, "footer": {"wall_time": wall_time}},
        sort_keys=True, indent=4
    )


def _write_csv(columns, rows, header=True):
    stream = io.StringIO()
    writer = csv.DictWriter(
        stream, fieldnames=columns, lineterminator="\n"
    )
    if header:
        writer.writeheader()

    writer.writerows(rows)
    return stream.getvalue().rstrip("\n")


def _footer(wall_time):
    return "# wall-time: {:0.3f}s".format(wall_time or 0.0)


def format_rows(rows, config, wall_time=None):
    """Return rows formatted as configured.

    CSV lines follow the order of the row-cache file without header::

        2,0,21,8

    """
    digits = config.float_digits

    if config.format == "csv":
        return _write_csv(
            ("m", "i", "numerator", "denominator"),
            [
                {
                    "m": row.m, "i": i,
                    "numerator": value.numerator,
                    "denominator": value.denominator
                }
                for row in rows for i, value in enumerate(row.coeffs)
            ],
            header=False
        )

    if config.format == "json":
        return dump_json(
            {
                "config": borosmoll.config.echo(config),
                "rows": [
                    {
                        "m": row.m,
                        "source": row.source,
                        "coefficients": [
                            encode_value(value, digits) for value in row.coeffs
                        ]
                    }
                    for row in rows
                ]
            },
            wall_time
        )

    lines = []
    for row in rows:
        lines.append("m={} [{}]".format(row.m, row.source))
        lines.extend(
            "  d_{}({}) = {} ({})".format(
                i, row.m, value, render(value, digits)
            )
            for i, value in enumerate(row.coeffs)
        )

    lines.append(_footer(wall_time))
    return "\n".join(lines)


def _verdict_row(verdict, digits):
    lhs, rhs = verdict.display(digits)
    return {
        "check": verdict.check,
        "m": verdict.m,
        "i": "" if verdict.i is None else verdict.i,
        "relation": verdict.relation,
        "passed": int(verdict.passed),
        "strict": int(verdict.strict),
        "margin_sign": verdict.margin_sign,
        "lhs": exact_string(verdict.lhs),
        "rhs": exact_string(verdict.rhs),
        "lhs_decimal": lhs,
        "rhs_decimal": rhs
    }


def _verdict_line(verdict, digits):
    lhs, rhs = verdict.display(digits)
    return "  {} m={} i={}: {} {} {} [{}]".format(
        verdict.check, verdict.m, "-" if verdict.i is None else verdict.i,
        lhs, verdict.relation, rhs,
        "strict" if verdict.strict else (
            "pass" if verdict.passed else "FAIL"
        )
    )


def _report_lines(report, digits, record_all=False):
    """Return text lines describing *report*."""
    lines = ["# {}{}".format(
        report.name, " (observational)" if report.observational else ""
    )]

    for key, value in sorted(report.config.items()):
        lines.append("# {}: {}".format(key, value))

    for note in report.notes:
        lines.append("# note: {}".format(note))

    for check, count in report.counts().items():
        lines.append(
            "{}: {} cells, {} passed, {} strict".format(
                check, count["cells"], count["passed"], count["strict"]
            )
        )

    vacuous = report.vacuous
    if vacuous:
        lines.append(
            "vacuous: {}".format(
                ", ".join("{} m={}".format(check, m) for check, m in vacuous)
            )
        )

    for key, value in sorted(report.summary.items()):
        lines.append(
            "summary {}: {}".format(
                key, ", ".join(
                    "{}={}".format(field, getattr(value, field))
                    for field in value._fields
                )
            )
        )

    failures = report.failures()
    if failures:
        lines.append("failures:")
        lines.extend(_verdict_line(verdict, digits) for verdict in failures)

    if record_all:
        lines.append("verdicts:")
        lines.extend(
            _verdict_line(verdict, digits) for verdict in report.verdicts
        )

    lines.append(
        "result: {}".format("pass" if report.passed else "fail")
    )
    return lines


def format_report(report, config):
    """Return :class:`~borosmoll.verify.ScanReport` formatted as configured.

    CSV lists failing verdicts, or every verdict when *all_cells* is set in
    *config*.

    """
    digits = config.float_digits

    if config.format == "csv":
        verdicts = report.verdicts if config.all_cells else report.failures()
        return _write_csv(
            VERDICT_COLUMNS, [_verdict_row(v, digits) for v in verdicts]
        )

    if config.format == "json":
        return dump_json(
            report_data(report, digits, record_all=config.all_cells),
            report.wall_time
        )

    lines = _report_lines(report, digits, record_all=config.all_cells)
    lines.append(_footer(report.wall_time))
    return "\n".join(lines)


def format_table(values, monotonicity, config, wall_time=None):
    """Return table of ``c_i(m) / u_i(m)`` formatted as configured.

    :param values: list of (i, value) from
        :func:`borosmoll.verify.normalized_ratios`.

    :param monotonicity: observational
        :class:`~borosmoll.verify.ScanReport` on the same row.

    """
    digits = config.float_digits
    m = config.m_max

    if config.format == "csv":
        return _write_csv(
            ("m", "i", "numerator", "denominator", "decimal"),
            [
                {
                    "m": m, "i": i,
                    "numerator": value.numerator,
                    "denominator": value.denominator,
                    "decimal": render(value, digits)
                }
                for i, value in values
            ]
        )

    if config.format == "json":
        return dump_json(
            {
                "config": borosmoll.config.echo(config),
                "m": m,
                "values": [
                    {"i": i, "value": encode_value(value, digits)}
                    for i, value in values
                ],
                "monotonicity": report_data(monotonicity, digits)
            },
            wall_time
        )

    lines = ["# c_i({0})/u_i({0})".format(m)]
    lines.extend(
        "{:>4}  {}".format(i, render(value, digits)) for i, value in values
    )
    lines.append(
        "# strictly increasing: {}".format(
            "yes" if monotonicity.passed else "no"
        )
    )
    lines.append(_footer(wall_time))
    return "\n".join(lines)


def integral_status(result, config):
    """Return "pass", "fail" or "inconclusive" for an integral *result*."""
    if not result.converged:
        return "inconclusive"

    return "pass" if result.residual <= config.tolerance else "fail"


def format_integral(results, config, wall_time=None):
    """Return quadrature results formatted as configured."""
    rows = [
        {
            "m": result.m,
            "a": result.a,
            "numeric": result.numeric,
            "closed_form": result.closed_form,
            "residual": result.residual,
            "error_estimate": result.error_estimate,
            "status": integral_status(result, config)
        }
        for result in results
    ]

    if config.format == "csv":
        return _write_csv(
            ("m", "a", "numeric", "closed_form", "residual",
             "error_estimate", "status"),
            [
                dict(row, **{
                    key: repr(row[key]) for key in (
                        "a", "numeric", "closed_form", "residual",
                        "error_estimate"
                    )
                })
                for row in rows
            ]
        )

    if config.format == "json":
        return dump_json(
            {"config": borosmoll.config.echo(config), "results": rows},
            wall_time
        )

    lines = ["# quartic integral, tolerance {!r}".format(config.tolerance)]
    lines.extend(
        "m={m} a={a!r}: residual={residual:.3e} [{status}]".format(**row)
        for row in rows
    )
    lines.append(_footer(wall_time))
    return "\n".join(lines)

