# :coding: utf-8

import collections

import borosmoll.verify
from borosmoll.exception import UsageError

#: Commands which can be run.
COMMANDS = ("row", "verify", "scan", "table", "bessel", "integral")

#: Output formats.
FORMATS = ("text", "json", "csv")

#: Default values of optional fields.
DEFAULTS = {
    "checks": None,
    "format": "text",
    "float_digits": 6,
    "cache_path": None,
    "tolerance": 1e-8,
    "a_values": (0.0, 0.5, 1.0, 2.0),
    "strict_integral": False,
    "n_offset": 4,
    "workers": 1,
    "all_cells": False,
    "write_cache": False,
}

#: Validated configuration of one command run.
CliConfig = collections.namedtuple(
    "CliConfig", ["command", "m_min", "m_max"] + sorted(DEFAULTS)
)


def create(command, m_min, m_max, **options):
    """Return validated :class:`CliConfig` instance.

    :param command: one of :data:`COMMANDS`.

    :param m_min: first row (or degree for "bessel").

    :param m_max: last row (or degree for "bessel") included.

    :param options: optional fields of :class:`CliConfig`. Missing fields are
        set from :data:`DEFAULTS`.

    :raise borosmoll.exception.UsageError: if a value is invalid. Check names
        are resolved here so that unknown names are rejected before any
        computation.

    """
    unknown = set(options) - set(DEFAULTS)
    if unknown:
        raise UsageError(
            "Unknown options: {}".format(", ".join(sorted(unknown)))
        )

    mapping = dict(DEFAULTS)
    mapping.update(
        (key, value) for key, value in options.items() if value is not None
    )

    if command not in COMMANDS:
        raise UsageError("Unknown command {!r}.".format(command))

    if m_min < 0 or m_max < m_min:
        raise UsageError(
            "Range {}..{} is empty or negative.".format(m_min, m_max)
        )

    if mapping["format"] not in FORMATS:
        raise UsageError("Unknown format {!r}.".format(mapping["format"]))

    if mapping["float_digits"] < 1:
        raise UsageError(
            "Float digits must be at least 1, got {}.".format(
                mapping["float_digits"]
            )
        )

    if not mapping["tolerance"] > 0:
        raise UsageError(
            "Tolerance must be positive, got {}.".format(mapping["tolerance"])
        )

    if any(not value > -1 for value in mapping["a_values"]):
        raise UsageError("Parameter a must be greater than -1.")

    if not 0 <= mapping["n_offset"] <= 4:
        raise UsageError(
            "Offset must be in range 0..4, got {}.".format(
                mapping["n_offset"]
            )
        )

    if mapping["workers"] < 1:
        raise UsageError("At least one worker is required.")

    if mapping["write_cache"] and not mapping["cache_path"]:
        raise UsageError("A cache path is required to write the cache.")

    if command == "verify":
        mapping["checks"] = borosmoll.verify.resolve_checks(mapping["checks"])
    elif mapping["checks"]:
        raise UsageError("Checks can only be selected for 'verify'.")

    mapping["a_values"] = tuple(float(value) for value in mapping["a_values"])

    return CliConfig(command=command, m_min=m_min, m_max=m_max, **mapping)


def echo(config):
    """Return mapping echoing *config* in reports.

    Only fields relevant to the command are kept, and the cache path is
    omitted to keep reports independent of the file system.

    """
    fields = {
        "row": ("m_min", "m_max"),
        "verify": ("m_min", "m_max", "checks"),
        "scan": ("m_min", "m_max", "n_offset"),
        "table": ("m_max",),
        "bessel": ("m_max",),
        "integral": ("m_max", "a_values", "tolerance"),
    }[config.command]

    mapping = {"command": config.command, "float_digits": config.float_digits}
    for field in fields:
        value = getattr(config, field)
        if isinstance(value, tuple):
            value = list(value)

        mapping[field] = value

    return mapping
