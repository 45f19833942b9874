# :coding: utf-8

import logging
import os
import time

import click

import borosmoll.cache
import borosmoll.config
import borosmoll.integral
import borosmoll.report
import borosmoll.verify

from borosmoll._version import __version__


def run(config, echo=click.echo):
    """Execute command described by *config* and write report.

    :param config: :class:`borosmoll.config.CliConfig` instance.

    :param echo: callable receiving the report string. Default is
        :func:`click.echo`.

    :raise borosmoll.exception.CacheError: if the row-cache file is
        malformed.

    :return: exit code. 0 when every non-vacuous claim holds (or when the
        quadrature is only inconclusive), 1 when a failure is found.
        Observational reports never change the exit code.

    """
    logger = logging.getLogger(__name__ + ".run")

    cache = fetch_cache(config.cache_path)
    settings = borosmoll.config.echo(config)
    start = time.time()

    logger.debug("Run {!r}".format(config))

    if config.command == "row":
        rows = cache.rows(config.m_min, config.m_max)

        if config.write_cache:
            borosmoll.cache.dump(cache, config.cache_path, m_max=config.m_max)

        echo(
            borosmoll.report.format_rows(
                rows, config, wall_time=time.time() - start
            )
        )
        return 0

    if config.command == "table":
        values = borosmoll.verify.normalized_ratios(config.m_max, cache)
        monotonicity = borosmoll.verify.monotonicity_report(
            config.m_max, cache, config=settings
        )
        echo(
            borosmoll.report.format_table(
                values, monotonicity, config, wall_time=time.time() - start
            )
        )
        return 0

    if config.command == "integral":
        results = [
            borosmoll.integral.integral_residual(m, a, cache)
            for m in range(config.m_min, config.m_max + 1)
            for a in config.a_values
        ]

        echo(
            borosmoll.report.format_integral(
                results, config, wall_time=time.time() - start
            )
        )

        statuses = set(
            borosmoll.report.integral_status(result, config)
            for result in results
        )
        if "fail" in statuses:
            return 1

        if "inconclusive" in statuses:
            logger.warning("Quadrature inconclusive for some evaluations.")
            return 1 if config.strict_integral else 0

        return 0

    if config.command == "verify":
        report = borosmoll.verify.verify_suite(
            config.m_min, config.m_max,
            checks=config.checks,
            cache=cache,
            workers=config.workers,
            config=settings
        )

    elif config.command == "scan":
        report = borosmoll.verify.scan_conjectures(
            config.m_min, config.m_max,
            cache=cache,
            n_offset=config.n_offset,
            config=settings
        )

    else:
        report = borosmoll.verify.verify_bessel(config.m_max, config=settings)

    echo(borosmoll.report.format_report(report, config))

    if report.observational or report.passed:
        return 0

    return 1


def fetch_cache(path=None):
    """Return :class:`borosmoll.cache.RowCache` instance for *path*.

    The cache is loaded from *path* when the file exists, otherwise an
    empty cache is returned.

    """
    if path is not None and os.path.isfile(path):
        return borosmoll.cache.load(path)

    return borosmoll.cache.RowCache(path=path)
