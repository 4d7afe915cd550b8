"""CSV readers for paired-sample and regression data files."""

import csv
import math
import re
from pathlib import Path
from typing import Literal

import numpy as np

from complex_correntropy.exceptions import CorrentropyError
from complex_correntropy.logging_config import get_logger

logger = get_logger(__name__)

PAIRED_COLUMNS = {
    "real": ("x", "y"),
    "complex": ("x_re", "x_im", "y_re", "y_im"),
}

_INPUT_COLUMN = re.compile(r"^x(\d+)_(re|im)$")


class DatasetError(CorrentropyError):
    """Exception raised for unreadable or malformed data files."""

    exit_code = 2


def _read_rows(path: Path, required: tuple[str, ...]) -> list[tuple[int, dict[str, float]]]:
    if not path.exists():
        raise DatasetError(f"Data file not found: {path}")

    rows = []
    try:
        with open(path, newline="", encoding="utf-8") as f:
            reader = csv.DictReader(f)
            header = [name.strip() for name in (reader.fieldnames or [])]
            missing = [name for name in required if name not in header]
            if missing:
                raise DatasetError(
                    f"{path}: line 1: missing columns {', '.join(missing)}",
                    f"Expected header containing: {','.join(required)}",
                )
            reader.fieldnames = header
            for record in reader:
                line = reader.line_num
                if None in record or any(record.get(name) is None for name in header):
                    raise DatasetError(f"{path}: line {line}: expected {len(header)} fields")
                values = {}
                for name in required:
                    text = record[name].strip()
                    try:
                        value = float(text)
                    except ValueError:
                        raise DatasetError(
                            f"{path}: line {line}: column '{name}' is not a number: '{text}'"
                        ) from None
                    if not math.isfinite(value):
                        raise DatasetError(f"{path}: line {line}: column '{name}' is not finite")
                    values[name] = value
                rows.append((line, values))
    except (OSError, UnicodeDecodeError, csv.Error) as e:
        raise DatasetError(f"Failed to read data file {path}", str(e)) from e

    if not rows:
        raise DatasetError(f"{path}: no data rows")
    logger.debug(f"Read {len(rows)} rows from {path}")
    return rows


def read_paired_samples(
    path: str | Path, mode: Literal["real", "complex"]
) -> tuple[np.ndarray, np.ndarray]:
    """Read paired sequences for the correntropy estimators.

    Real mode expects columns ``x,y``; complex mode ``x_re,x_im,y_re,y_im``.

    Raises:
        DatasetError: Naming the offending line for malformed rows
    """
    if mode not in PAIRED_COLUMNS:
        raise DatasetError(f"unknown mode '{mode}', expected one of {sorted(PAIRED_COLUMNS)}")
    rows = _read_rows(Path(path), PAIRED_COLUMNS[mode])
    if mode == "real":
        x = np.array([r["x"] for _, r in rows])
        y = np.array([r["y"] for _, r in rows])
    else:
        x = np.array([complex(r["x_re"], r["x_im"]) for _, r in rows])
        y = np.array([complex(r["y_re"], r["y_im"]) for _, r in rows])
    return x, y


def regression_columns(header: list[str]) -> tuple[str, ...]:
    """Column names ``x1_re,x1_im,...,xM_re,xM_im,d_re,d_im`` implied by a header."""
    taps = sorted(
        {int(match.group(1)) for name in header if (match := _INPUT_COLUMN.match(name.strip()))}
    )
    if not taps:
        raise DatasetError("no input columns found; expected x1_re,x1_im,...,d_re,d_im")
    m = len(taps)
    if taps != list(range(1, m + 1)):
        raise DatasetError(f"input columns must be numbered 1..M, found {taps}")
    names: list[str] = []
    for k in range(1, m + 1):
        names.extend((f"x{k}_re", f"x{k}_im"))
    return (*names, "d_re", "d_im")


def read_regression_data(path: str | Path) -> tuple[np.ndarray, np.ndarray]:
    """Read an N x M complex input matrix and desired signal.

    Raises:
        DatasetError: If the header or any row is malformed
    """
    path = Path(path)
    if not path.exists():
        raise DatasetError(f"Data file not found: {path}")
    try:
        with open(path, newline="", encoding="utf-8") as f:
            header = next(csv.reader(f), [])
    except (OSError, UnicodeDecodeError, csv.Error) as e:
        raise DatasetError(f"Failed to read data file {path}", str(e)) from e
    columns = regression_columns(header)
    rows = _read_rows(path, columns)

    m = (len(columns) - 2) // 2
    X = np.array(
        [[complex(r[f"x{k}_re"], r[f"x{k}_im"]) for k in range(1, m + 1)] for _, r in rows]
    )
    d = np.array([complex(r["d_re"], r["d_im"]) for _, r in rows])
    return X, d
