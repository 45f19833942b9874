# :coding: utf-8

import textwrap

import click
import wiz
import wiz.config

import borosmoll
import borosmoll._logging
import borosmoll.config
import borosmoll.verify
from borosmoll import __version__
from borosmoll.exception import BorosMollError, CacheError, UsageError

# Initiate logging handler to display potential warning when fetching config.
borosmoll._logging.initiate()

#: Retrieve configuration mapping to initialize default values.
_CONFIG = wiz.config.fetch()

#: Default values from the "borosmoll" section of the configuration.
_SETTINGS = _CONFIG.get("borosmoll", {})

#: Click default context for all commands.
CONTEXT_SETTINGS = dict(
    max_content_width=90,
    help_option_names=["-h", "--help"],
)


@click.group(
    context_settings=CONTEXT_SETTINGS
)
@click.version_option(version=__version__)
@click.option(
    "-v", "--verbosity",
    help="Set the logging output verbosity.",
    type=click.Choice(borosmoll._logging.LEVEL_MAPPING.keys()),
    default="info"
)
def main(**kwargs):
    """Exact verification of Boros-Moll coefficient inequalities."""
    borosmoll._logging.initiate(console_level=kwargs["verbosity"])


def _report_options(function):
    """Decorate command *function* with options shared by all commands."""
    options = [
        click.option(
            "-f", "--format", "output_format",
            help="Output format.",
            type=click.Choice(borosmoll.config.FORMATS),
            show_default=True,
            default="text"
        ),
        click.option(
            "--float-digits",
            help="Number of decimals for values rendered in reports.",
            type=int,
            show_default=True,
            default=_SETTINGS.get("float_digits", 6)
        ),
        click.option(
            "--cache-path",
            help=(
                "Row-cache file to load coefficients from. Rows missing from "
                "the file are computed."
            ),
            type=click.Path(dir_okay=False),
            metavar="PATH",
            default=_SETTINGS.get("cache_path")
        ),
    ]

    for option in reversed(options):
        function = option(function)

    return function


def _execute(command, m_min, m_max, **kwargs):
    """Create configuration and run *command*, exiting with its code."""
    kwargs["format"] = kwargs.pop("output_format")

    try:
        config = borosmoll.config.create(command, m_min, m_max, **kwargs)
        code = borosmoll.run(config)

    except (UsageError, CacheError) as error:
        raise click.UsageError(str(error))

    except BorosMollError as error:
        raise click.ClickException(str(error))

    click.get_current_context().exit(code)


@main.command(
    name="row",
    help=textwrap.dedent(
        """
        Display coefficients d_i(m) for one or several rows.

        Command example:

        \b
        >>> borosmoll row --m 2
        >>> borosmoll row --m 10 --m-min 0 --format csv
        >>> borosmoll row --m 60 --cache-path rows.tsv --write-cache
        """
    ),
    short_help="Display coefficient rows.",
    context_settings=CONTEXT_SETTINGS
)
@click.option(
    "--m", "m",
    help="Last row displayed.",
    type=int,
    required=True
)
@click.option(
    "--m-min",
    help="First row displayed. Default is the last row.",
    type=int,
    default=None
)
@click.option(
    "--write-cache",
    help="Export all rows up to the last row into the cache path.",
    is_flag=True,
    default=False
)
@_report_options
def row(**kwargs):
    """Display coefficient rows."""
    m_min = kwargs.pop("m_min")
    m = kwargs.pop("m")
    _execute("row", m if m_min is None else m_min, m, **kwargs)


@main.command(
    name="verify",
    help=textwrap.dedent(
        """
        Verify bounds, identities and recurrences exactly over a range of
        rows.

        Checks can be selected by identifier or by group ("identity",
        "quadratic", "step"). All checks are run by default.

        Command example:

        \b
        >>> borosmoll verify --m-max 100 --checks rulc,lower,t,q
        >>> borosmoll verify --m-max 50 --format json
        """
    ),
    short_help="Verify bounds and identities.",
    context_settings=CONTEXT_SETTINGS
)
@click.option(
    "--m-min",
    help="First row verified.",
    type=int,
    show_default=True,
    default=2
)
@click.option(
    "--m-max",
    help="Last row verified.",
    type=int,
    show_default=True,
    default=_SETTINGS.get("verify_m_max", 100)
)
@click.option(
    "-c", "--checks",
    help="Comma-separated list of checks. Default is all checks.",
    metavar="CHECKS",
    default=None
)
@click.option(
    "-w", "--workers",
    help="Number of processes used to verify rows.",
    type=int,
    show_default=True,
    default=_SETTINGS.get("process_count", borosmoll.verify.PROCESS_COUNT)
)
@click.option(
    "--all-cells",
    help="Report every verdict instead of failures only.",
    is_flag=True,
    default=False
)
@_report_options
def verify(**kwargs):
    """Verify bounds and identities."""
    checks = kwargs.pop("checks")
    if checks is not None:
        checks = [name for name in checks.split(",") if name.strip()]

    _execute(
        "verify", kwargs.pop("m_min"), kwargs.pop("m_max"), checks=checks,
        **kwargs
    )


@main.command(
    name="scan",
    help=textwrap.dedent(
        """
        Scan both conjectures on the sequence d_(i+1)d_(i-1)/d_i^2.

        The reverse ultra log-concavity is tested with the binomial parameter
        n = m - OFFSET.

        Command example:

        \b
        >>> borosmoll scan --m-max 150
        >>> borosmoll scan --m-min 6 --m-max 40 --n-offset 0
        """
    ),
    short_help="Scan conjectures.",
    context_settings=CONTEXT_SETTINGS
)
@click.option(
    "--m-min",
    help="First row scanned.",
    type=int,
    show_default=True,
    default=6
)
@click.option(
    "--m-max",
    help="Last row scanned.",
    type=int,
    show_default=True,
    default=_SETTINGS.get("scan_m_max", 150)
)
@click.option(
    "--n-offset",
    help="Offset between m and the binomial parameter.",
    type=click.IntRange(0, 4),
    show_default=True,
    default=4
)
@click.option(
    "--all-cells",
    help="Report every verdict instead of counterexamples only.",
    is_flag=True,
    default=False
)
@_report_options
def scan(**kwargs):
    """Scan conjectures."""
    _execute("scan", kwargs.pop("m_min"), kwargs.pop("m_max"), **kwargs)


@main.command(
    name="table",
    help=textwrap.dedent(
        """
        Display c_i(m)/u_i(m) for 1 <= i <= m-1 and observe whether the
        values increase with i.

        Command example:

        \b
        >>> borosmoll table --m 8 --float-digits 6
        """
    ),
    short_help="Display normalized ratio table.",
    context_settings=CONTEXT_SETTINGS
)
@click.option(
    "--m", "m",
    help="Row displayed.",
    type=int,
    show_default=True,
    default=8
)
@_report_options
def table(**kwargs):
    """Display normalized ratio table."""
    m = kwargs.pop("m")
    _execute("table", m, m, **kwargs)


@main.command(
    name="bessel",
    help=textwrap.dedent(
        """
        Verify that Bessel polynomial coefficients are log-concave and
        reverse ultra log-concave.

        Command example:

        \b
        >>> borosmoll bessel --n-max 50
        """
    ),
    short_help="Verify Bessel polynomials.",
    context_settings=CONTEXT_SETTINGS
)
@click.option(
    "--n-max",
    help="Last degree verified.",
    type=int,
    show_default=True,
    default=_SETTINGS.get("bessel_n_max", 50)
)
@click.option(
    "--all-cells",
    help="Report every verdict instead of failures only.",
    is_flag=True,
    default=False
)
@_report_options
def bessel(**kwargs):
    """Verify Bessel polynomials."""
    n_max = kwargs.pop("n_max")
    _execute("bessel", min(2, n_max), n_max, **kwargs)


@main.command(
    name="integral",
    help=textwrap.dedent(
        """
        Compare the quartic integral evaluated by adaptive quadrature with
        its closed form in P_m(a).

        Results are floating point evaluations. A quadrature which does not
        converge is reported as inconclusive.

        Command example:

        \b
        >>> borosmoll integral --m-max 5
        >>> borosmoll integral --m-max 3 --a 0 --a 1.5 --strict-integral
        """
    ),
    short_help="Evaluate the quartic integral oracle.",
    context_settings=CONTEXT_SETTINGS
)
@click.option(
    "--m-min",
    help="First row evaluated.",
    type=int,
    show_default=True,
    default=0
)
@click.option(
    "--m-max",
    help="Last row evaluated.",
    type=int,
    show_default=True,
    default=5
)
@click.option(
    "--a", "a_values",
    help="Value of the parameter a (can be used several times).",
    type=float,
    multiple=True,
    default=None
)
@click.option(
    "--tolerance",
    help="Maximum relative residual accepted.",
    type=float,
    show_default=True,
    default=_SETTINGS.get("integral_tolerance", 1e-8)
)
@click.option(
    "--strict-integral",
    help="Fail when the quadrature is inconclusive.",
    is_flag=True,
    default=False
)
@_report_options
def integral(**kwargs):
    """Evaluate the quartic integral oracle."""
    kwargs["a_values"] = kwargs["a_values"] or None
    _execute("integral", kwargs.pop("m_min"), kwargs.pop("m_max"), **kwargs)
