"""Reading and writing boiling-point datasets as CSV files with header ``name,skeleton,bp_celsius``."""

from __future__ import annotations

import logging
import math
import re
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

import pandas as pd

from ..encoding import canonical_form, parse_tree
from ..trees import PendentRootedTree

logger = logging.getLogger(__name__)

COLUMNS = ("name", "skeleton", "bp_celsius")
QUOTING_HINT = 'Skeletons containing commas must be quoted, as in "O(C(C,C))".'


class DatasetError(ValueError):
    """Raised when a dataset file is malformed.

    Attributes:
        line (int | None): One-based line number in the file, the header being line 1.
        column (str | None): Name of the offending field.

    """

    def __init__(self, message: str, line: int | None = None, column: str | None = None) -> None:
        where = "" if line is None else f"line {line}" + ("" if column is None else f", column {column!r}")
        super().__init__(f"{where}: {message}" if where else message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class DataRecord:
    """An alcohol with its observed boiling point in °C."""

    name: str
    skeleton: PendentRootedTree
    bp_celsius: float


def parse_record(name: str, skeleton: str, bp_celsius: str, line: int | None = None) -> DataRecord:
    """Validate the three fields of one dataset row.

    Example:
        >>> parse_record("ethanol", "O(C(C))", "78.0").bp_celsius
        78.0

    """
    try:
        tree = parse_tree(skeleton.strip())
    except ValueError as error:
        raise DatasetError(str(error), line, "skeleton") from error
    if not isinstance(tree, PendentRootedTree) or tree.order < 3:
        msg = f"Expected an alcohol skeleton 'O(...)' with at least 2 carbons, but got {skeleton!r}."
        raise DatasetError(msg, line, "skeleton")
    try:
        value = float(bp_celsius)
    except ValueError as error:
        msg = f"Expected a numeric boiling point, but got {bp_celsius!r}."
        raise DatasetError(msg, line, "bp_celsius") from error
    if not math.isfinite(value):
        msg = f"Expected a finite boiling point, but got {bp_celsius!r}."
        raise DatasetError(msg, line, "bp_celsius")
    return DataRecord(name=name, skeleton=tree, bp_celsius=value)


def load_dataset(path: str | Path) -> list[DataRecord]:
    """Read a UTF-8 CSV dataset.

    Records with the same canonical skeleton are all kept and reported with a warning. A skeleton with
    branches contains commas and must be quoted, e.g. ``2-methyl-2-propanol,"O(C(C,C,C))",82.4``, the way
    :func:`save_dataset` writes it.

    Args:
        path (str | Path): CSV file with header ``name,skeleton,bp_celsius``.

    Raises:
        DatasetError: With the line (and field) of the first malformed row, including rows split by an
            unquoted skeleton.

    """
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8", skipinitialspace=True)
    except pd.errors.ParserError as error:
        found = re.search(r"line (\d+)", str(error))
        raise DatasetError(f"{error} {QUOTING_HINT}", int(found.group(1)) if found else None) from error
    except pd.errors.EmptyDataError as error:
        raise DatasetError("Expected a header line, but the file is empty.", 1) from error

    if tuple(frame.columns) != COLUMNS:
        msg = f"Expected header {','.join(COLUMNS)}, but got {','.join(map(str, frame.columns))}."
        raise DatasetError(msg, 1)
    if len(frame) and not isinstance(frame.index, pd.RangeIndex):
        # Extra fields in the first row turn its leading fields into an index.
        msg = f"Expected {len(COLUMNS)} fields, but the row has more. {QUOTING_HINT}"
        raise DatasetError(msg, 2, "skeleton")

    records = []
    first_seen: dict[str, int] = {}
    for index, row in enumerate(frame.itertuples(index=False)):
        line = index + 2
        for column, value in zip(COLUMNS, row):
            if not isinstance(value, str) or not value.strip():
                raise DatasetError("Expected a non-empty field.", line, column)
        record = parse_record(row.name.strip(), row.skeleton, row.bp_celsius, line)
        code = canonical_form(record.skeleton)
        if code in first_seen:
            logger.warning(
                "Line %d repeats the skeleton %s first seen on line %d", line, code, first_seen[code]
            )
        else:
            first_seen[code] = line
        records.append(record)
    logger.debug("Loaded %d records from %s", len(records), path)
    return records


def save_dataset(records: Sequence[DataRecord], path: str | Path) -> None:
    """Write records as CSV, skeletons in canonical form."""
    frame = pd.DataFrame(
        [(record.name, canonical_form(record.skeleton), repr(record.bp_celsius)) for record in records],
        columns=list(COLUMNS),
    )
    frame.to_csv(path, index=False, encoding="utf-8")
    logger.debug("Saved %d records to %s", len(records), path)
