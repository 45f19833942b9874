# :coding: utf-8

import logging
import os
import threading

import wiz.filesystem

import borosmoll.coefficient
from borosmoll.coefficient import CoeffRow, CACHE_FILE
from borosmoll.exactnum import Rational
from borosmoll.exception import CacheError, UsageError


class RowCache(object):
    """Mapping of coefficient rows indexed by *m*.

    Missing rows are computed on demand with
    :func:`borosmoll.coefficient.next_row_rec21`, starting from the highest
    cached row below the row requested (or from row 0).

    Reads are lock-free while extending the cache is serialized.

    """

    def __init__(self, rows=None, path=None):
        """Initialize cache with optional *rows* and backing file *path*."""
        self._rows = {}
        self._lock = threading.Lock()
        self.path = path

        for row in rows or []:
            self.add(row)

    def __contains__(self, m):
        return m in self._rows

    def __len__(self):
        return len(self._rows)

    def __iter__(self):
        return iter(self._rows[m] for m in sorted(self._rows))

    def add(self, row):
        """Record *row*.

        :raise borosmoll.exception.UsageError: if a different row is already
            recorded for the same *m*.

        """
        with self._lock:
            existing = self._rows.get(row.m)
            if existing is not None and not existing.same_values(row):
                raise UsageError(
                    "A different row is already cached for m={}.".format(row.m)
                )

            self._rows.setdefault(row.m, row)

    def row(self, m):
        """Return :class:`~borosmoll.coefficient.CoeffRow` for *m*."""
        row = self._rows.get(m)
        if row is not None:
            return row

        if m < 0:
            raise UsageError(
                "Row index must be non-negative, got {}.".format(m)
            )

        with self._lock:
            start = max((_m for _m in self._rows if _m < m), default=None)

            if start is None:
                row = next(borosmoll.coefficient.iterate_rows(0))
                self._rows[0] = row
            else:
                row = self._rows[start]

            while row.m < m:
                row = self._rows.get(row.m + 1) or (
                    borosmoll.coefficient.next_row_rec21(row)
                )
                self._rows.setdefault(row.m, row)

        return self._rows[m]

    def rows(self, m_min, m_max):
        """Return list of rows from *m_min* to *m_max* included."""
        self.row(m_max)
        return [self.row(m) for m in range(m_min, m_max + 1)]


def load(path):
    """Return :class:`RowCache` loaded from *path*.

    The file contains one coefficient per line::

        m<TAB>i<TAB>numerator<TAB>denominator

    Empty lines and lines starting with "#" are ignored. Every row must be
    complete (indices 0 to m) and hold canonical, strictly positive rationals.

    :param path: path to the row-cache file.

    :raise borosmoll.exception.CacheError: if the file is malformed. The error
        message contains the line number of the offending line.

    """
    logger = logging.getLogger(__name__ + ".load")

    entries = {}
    last_lines = {}

    with open(path, "r") as stream:
        for number, line in enumerate(stream, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue

            fields = line.split("\t")
            if len(fields) != 4:
                raise CacheError(
                    "Expected 4 tab-separated fields, got {}.".format(
                        len(fields)
                    ),
                    path=path, line=number
                )

            try:
                m, i, numerator, denominator = [int(f) for f in fields]
            except ValueError:
                raise CacheError(
                    "Fields must be decimal integers: {!r}.".format(line),
                    path=path, line=number
                )

            if m < 0 or not 0 <= i <= m:
                raise CacheError(
                    "Invalid index pair m={}, i={}.".format(m, i),
                    path=path, line=number
                )

            if denominator <= 0:
                raise CacheError(
                    "Denominator must be positive, got {}.".format(
                        denominator
                    ),
                    path=path, line=number
                )

            value = Rational(numerator, denominator)
            if value.numerator != numerator:
                raise CacheError(
                    "Rational {}/{} is not in canonical form.".format(
                        numerator, denominator
                    ),
                    path=path, line=number
                )

            mapping = entries.setdefault(m, {})
            if i in mapping:
                raise CacheError(
                    "Duplicated coefficient for m={}, i={}.".format(m, i),
                    path=path, line=number
                )

            mapping[i] = value
            last_lines[m] = number

    cache = RowCache(path=path)

    for m in sorted(entries):
        mapping = entries[m]
        missing = sorted(set(range(m + 1)) - set(mapping))
        if missing:
            raise CacheError(
                "Row {} is missing indices {}.".format(
                    m, ", ".join(str(i) for i in missing)
                ),
                path=path, line=last_lines[m]
            )

        try:
            row = CoeffRow(m, [mapping[i] for i in range(m + 1)], CACHE_FILE)
        except UsageError as error:
            raise CacheError(str(error), path=path, line=last_lines[m])

        cache.add(row)

    logger.debug("{} rows loaded from {!r}".format(len(cache), path))
    return cache


def dump(cache, path, m_max=None):
    """Export rows from *cache* to *path*.

    :param cache: :class:`RowCache` instance.

    :param path: destination of the row-cache file.

    :param m_max: None or last row to export. If set, all rows up to *m_max*
        are computed first.

    """
    logger = logging.getLogger(__name__ + ".dump")

    if m_max is not None:
        cache.row(m_max)

    directory = os.path.dirname(path)
    if directory:
        wiz.filesystem.ensure_directory(directory)

    rows = [row for row in cache if m_max is None or row.m <= m_max]

    with open(path, "w") as stream:
        for row in rows:
            for i, value in enumerate(row.coeffs):
                stream.write(
                    "{}\t{}\t{}\t{}\n".format(
                        row.m, i, value.numerator, value.denominator
                    )
                )

    logger.info("{} rows exported to {!r}".format(len(rows), path))
