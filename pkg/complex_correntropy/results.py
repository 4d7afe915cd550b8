"""Result file writers.

All numeric output is written with ``format(value, ".17g")`` so files are
locale-independent and round-trip every float exactly. CSV files use ``\\n``
line endings and UTF-8.
"""

import csv
import json
from pathlib import Path
from typing import Any

from complex_correntropy.exceptions import ConfigurationError
from complex_correntropy.filters import BatchSolution
from complex_correntropy.logging_config import get_logger
from complex_correntropy.models.experiment import RunManifest, TraceKey, WsnrTrace

logger = get_logger(__name__)

WSNR_FILENAME = "wsnr.csv"
MANIFEST_FILENAME = "manifest.json"
WSNR_HEADER = ("iteration", "algorithm", "sigma", "wsnr_db")


def format_number(value: float) -> str:
    return format(float(value), ".17g")


def _write_json(path: Path, payload: Any) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            json.dump(payload, f, indent=2)
            f.write("\n")
    except OSError as e:
        raise ConfigurationError(f"Failed to write {path}", str(e)) from e


class ResultWriter:
    """Writes the artifacts of an ``identify`` run into one output directory."""

    def __init__(self, out_dir: str | Path):
        self.out_dir = Path(out_dir)
        try:
            self.out_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise ConfigurationError(
                f"Cannot create output directory {self.out_dir}", str(e)
            ) from e
        if not self.out_dir.is_dir():
            raise ConfigurationError(f"Output path is not a directory: {self.out_dir}")

    @property
    def wsnr_path(self) -> Path:
        return self.out_dir / WSNR_FILENAME

    @property
    def manifest_path(self) -> Path:
        return self.out_dir / MANIFEST_FILENAME

    def write_wsnr(self, trace: WsnrTrace, keys: list[TraceKey]) -> Path:
        """Write the long-format learning curves.

        Rows are iteration-major (1-based) with filters in ``keys`` order; the
        sigma column is empty for filters without a kernel size.
        """
        missing = [key.label for key in keys if key not in trace.series]
        if missing:
            raise ConfigurationError(f"trace has no series for {', '.join(missing)}")

        try:
            with open(self.wsnr_path, "w", encoding="utf-8", newline="") as f:
                writer = csv.writer(f, lineterminator="\n")
                writer.writerow(WSNR_HEADER)
                for i in range(trace.n_iterations):
                    for key in keys:
                        sigma = "" if key.sigma is None else format_number(key.sigma)
                        writer.writerow(
                            (i + 1, key.algorithm, sigma, format_number(trace[key][i]))
                        )
        except OSError as e:
            raise ConfigurationError(f"Failed to write {self.wsnr_path}", str(e)) from e

        logger.info(f"Wrote {trace.n_iterations * len(keys)} rows to {self.wsnr_path}")
        return self.wsnr_path

    def write_manifest(self, manifest: RunManifest) -> Path:
        _write_json(self.manifest_path, manifest.model_dump(mode="json"))
        logger.info(f"Wrote manifest to {self.manifest_path}")
        return self.manifest_path


def batch_solution_payload(solution: BatchSolution, sigma: float) -> dict[str, Any]:
    return {
        "weights": [{"re": float(w.real), "im": float(w.imag)} for w in solution.weights],
        "iterations": solution.iterations,
        "converged": solution.converged,
        "sigma": sigma,
        "cost": solution.cost,
    }


def write_batch_solution(path: str | Path, solution: BatchSolution, sigma: float) -> Path:
    """Write a batch fixed-point result as JSON."""
    path = Path(path)
    _write_json(path, batch_solution_payload(solution, sigma))
    logger.info(f"Wrote batch solution to {path}")
    return path
