"""Main CLI entry point for complex correntropy experiments."""

import math
from datetime import datetime, timezone
from pathlib import Path

import typer
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from complex_correntropy.exceptions import ConfigurationError, CorrentropyError
from complex_correntropy.logging_config import get_logger, setup_logging

UTC = timezone.utc  # datetime.UTC is 3.11+

app = typer.Typer(
    name="mccc",
    help="Complex correntropy estimators, MCCC solvers and system-identification experiments",
    add_completion=False,
)

console = Console()
err_console = Console(stderr=True)
logger = get_logger(__name__)


# Global callback to set up logging
@app.callback()
def main_callback(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose logging"),
    log_file: str | None = typer.Option(None, "--log-file", help="Path to log file"),
):
    """Global options for all commands."""
    log_path = Path(log_file) if log_file else None
    setup_logging(verbose=verbose, log_file=log_path)
    logger.debug("Logging initialized")


def _fail(error: CorrentropyError) -> None:
    """Report a library error and exit with its status code."""
    logger.error(f"{type(error).__name__}: {error.message}")
    err_console.print(f"[red]Error:[/red] {escape(error.message)}", soft_wrap=True)
    if error.details:
        err_console.print(f"\n{escape(error.details)}", soft_wrap=True)
    raise typer.Exit(code=error.exit_code)


def _unexpected(error: Exception) -> None:
    logger.error(f"Unexpected error: {error}", exc_info=True)
    err_console.print(f"[red]Unexpected error:[/red] {escape(str(error))}")
    err_console.print("\nRun with --verbose --log-file debug.log for more details")
    raise typer.Exit(code=1)


def _check_sigma(sigma: float) -> None:
    from complex_correntropy.models.signal import KERNEL_SIZE_MAX, KERNEL_SIZE_MIN

    if not (math.isfinite(sigma) and KERNEL_SIZE_MIN <= sigma <= KERNEL_SIZE_MAX):
        message = (
            f"--sigma must be a finite value in [{KERNEL_SIZE_MIN:g}, {KERNEL_SIZE_MAX:g}], "
            f"got {sigma}"
        )
        err_console.print(f"[red]Error:[/red] {escape(message)}", soft_wrap=True)
        raise typer.Exit(code=2)


@app.command()
def version() -> None:
    """Show version information."""
    from complex_correntropy import __version__

    typer.echo(f"complex-correntropy version {__version__}")


@app.command()
def identify(
    config_path: Path = typer.Argument(..., help="Experiment config (JSON)"),
    out_dir: Path = typer.Option(..., "--out", "-o", help="Directory for wsnr.csv and manifest.json"),
    seed: int | None = typer.Option(None, "--seed", help="Override the config seed", min=0),
    jobs: int = typer.Option(1, "--jobs", "-j", help="Trials to run in parallel (-1 for all cores)"),
) -> None:
    """
    Run a Monte Carlo system-identification experiment.

    Streams synthetic data through one MCCC filter per kernel size and the
    complex RLS baseline, averages the WSNR learning curves over all trials and
    writes them as long-format CSV next to a manifest echoing the resolved config.
    """
    from complex_correntropy import __version__
    from complex_correntropy.config import load_experiment_config
    from complex_correntropy.harness import monte_carlo_average, trace_keys
    from complex_correntropy.models.experiment import RunManifest
    from complex_correntropy.results import MANIFEST_FILENAME, WSNR_FILENAME, ResultWriter

    try:
        started = datetime.now(UTC)
        cfg = load_experiment_config(config_path, seed=seed)
        writer = ResultWriter(out_dir)

        trace = monte_carlo_average(cfg, n_jobs=jobs)
        keys = trace_keys(cfg)
        writer.write_wsnr(trace, keys)

        manifest = RunManifest(
            config_echo=cfg,
            tool_version=__version__,
            started=started,
            finished=datetime.now(UTC),
            outputs=[WSNR_FILENAME, MANIFEST_FILENAME],
        )
        writer.write_manifest(manifest)

        table = Table(title=f"Steady-state WSNR ({cfg.n_trials} trials, last 50 iterations)")
        table.add_column("Filter", style="cyan")
        table.add_column("WSNR (dB)", style="magenta", justify="right")
        for key in keys:
            table.add_row(key.label, f"{trace.steady_state(key):.2f}")
        console.print(table)
        console.print(f"\n[bold]Results:[/bold] {escape(str(writer.wsnr_path))}")
        console.print(f"[bold]Manifest:[/bold] {escape(str(writer.manifest_path))}")

    except CorrentropyError as e:
        _fail(e)
    except Exception as e:
        _unexpected(e)


@app.command()
def correntropy(
    data_path: Path = typer.Argument(..., help="CSV of paired samples"),
    sigma: float = typer.Option(..., "--sigma", "-s", help="Kernel size (> 0)"),
    mode: str = typer.Option(
        "complex", "--mode", "-m", help="real (columns x,y) or complex (x_re,x_im,y_re,y_im)"
    ),
) -> None:
    """Print the correntropy estimate of two paired sequences."""
    from complex_correntropy.correntropy import complex_correntropy, correntropy_real
    from complex_correntropy.datasets import read_paired_samples
    from complex_correntropy.models.signal import KernelConfig
    from complex_correntropy.results import format_number

    _check_sigma(sigma)
    if mode not in ("real", "complex"):
        err_console.print(f"[red]Error:[/red] --mode must be 'real' or 'complex', got '{mode}'")
        raise typer.Exit(code=2)

    try:
        x, y = read_paired_samples(data_path, mode)  # type: ignore[arg-type]
        cfg = KernelConfig(sigma=sigma)
        value = correntropy_real(x, y, cfg) if mode == "real" else complex_correntropy(x, y, cfg)
        logger.info(f"{mode} correntropy of {len(x)} pairs at sigma={sigma}: {value}")
        typer.echo(format_number(value))
    except CorrentropyError as e:
        _fail(e)
    except Exception as e:
        _unexpected(e)


@app.command()
def batch_solve(
    data_path: Path = typer.Argument(..., help="CSV with x1_re,x1_im,...,xM_re,xM_im,d_re,d_im"),
    sigma: float = typer.Option(..., "--sigma", "-s", help="Kernel size (> 0)"),
    out_path: Path = typer.Option(..., "--out", "-o", help="Output JSON file"),
    max_iter: int = typer.Option(100, "--max-iter", help="Maximum fixed-point sweeps"),
    tol: float = typer.Option(1e-8, "--tol", help="Relative weight-change tolerance"),
    reg_delta: float = typer.Option(0.0, "--reg-delta", help="Diagonal regularizer"),
) -> None:
    """
    Solve for MCCC weights on a data block with the batch fixed-point iteration.

    Starts from zero weights and writes the weights, sweep count, convergence
    flag and final cost as JSON.
    """
    from pydantic import ValidationError

    from complex_correntropy.config import format_validation_error
    from complex_correntropy.datasets import read_regression_data
    from complex_correntropy.filters import mccc_batch_fixed_point
    from complex_correntropy.models.filter import SolverOptions
    from complex_correntropy.results import write_batch_solution

    _check_sigma(sigma)

    try:
        try:
            opts = SolverOptions(sigma=sigma, max_iter=max_iter, tol=tol, reg_delta=reg_delta)
        except ValidationError as e:
            raise ConfigurationError("Invalid solver options", format_validation_error(e)) from e

        X, d = read_regression_data(data_path)
        solution = mccc_batch_fixed_point(X, d, opts)
        write_batch_solution(out_path, solution, sigma)

        status = "[green]converged[/green]" if solution.converged else "[yellow]not converged[/yellow]"
        console.print(
            f"{status} after {solution.iterations} sweeps; wrote {escape(str(out_path))}"
        )
    except CorrentropyError as e:
        _fail(e)
    except Exception as e:
        _unexpected(e)


if __name__ == "__main__":
    app()
