"""CLI entry point for kpartite-interval (kic)."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from src.config import configure_logging, default_budget, load_config, set_config_value
from src.constructions.coloring import CompleteColoring, EdgeColoring
from src.constructions.complete import complete_graph_coloring
from src.constructions.compress import compress
from src.constructions.factorization import blowup_min_coloring
from src.constructions.lift import lift_coloring
from src.constructions.max_span import max_span_coloring
from src.constructions.spectrum import spectrum_sweep
from src.errors import (
    BadT,
    ColoringError,
    InvalidSpec,
    SearchFault,
    TargetInfeasibleAtBudget,
    UsageFault,
)
from src.graphs.base import PartiteSpec
from src.graphs.bounds import bound_report, max_span_bound
from src.output.document import Provenance, ProvenanceSource, read_document, write_document
from src.output.export import EXPORT_FORMATS, export_coloring
from src.output.tables import bounds_table, parse_range, render_bounds_csv
from src.solver.exact import exact_W, exact_w, feasible_spectrum, format_spectrum
from src.solver.search import (
    SolveStatus,
    find_interval_coloring,
    instance_for_complete,
    instance_for_spec,
)
from src.verifier.checks import format_verification_report, verify
from src.verifier.palette_audit import palette_formula_check

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_SEARCH = 2
EXIT_USAGE = 3

console = Console()
err_console = Console(stderr=True)

FORMAT_OPTION = click.option(
    "--format", "fmt", type=click.Choice(["text", "structured"]), default="text",
    help="Human-readable text or JSON",
)


def _fail(message: str) -> None:
    err_console.print(f"[red]Error:[/red] {escape(message)}")


class KicGroup(click.Group):
    """Runs commands and turns package errors into exit codes."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            code = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.ClickException as exc:
            exc.show()
            sys.exit(EXIT_USAGE)
        except click.Abort:
            _fail("aborted")
            sys.exit(EXIT_USAGE)
        except (UsageFault, ValidationError, OSError) as exc:
            _fail(str(exc))
            sys.exit(EXIT_USAGE)
        except SearchFault as exc:
            _fail(str(exc))
            sys.exit(EXIT_SEARCH)
        except ColoringError as exc:
            _fail(str(exc))
            sys.exit(EXIT_VERIFY_FAILED)
        sys.exit(code if isinstance(code, int) else EXIT_OK)


@click.group(cls=KicGroup)
@click.version_option(version="0.1.0", prog_name="kic")
@click.option("--log-level", default=None, help="Logging level (default from config)")
@click.pass_context
def main(ctx: click.Context, log_level: str | None):
    """Interval edge colorings of complete k-partite graphs (kic).

    Construct, lift, compress, verify and exhaustively search interval
    colorings of K_n^k and K_m.
    """
    cfg = load_config()
    configure_logging(log_level or cfg["log_level"])
    ctx.obj = cfg


def _config(ctx: click.Context) -> dict:
    return ctx.obj if ctx.obj is not None else load_config()


def _output_path(ctx: click.Context, out: Path | None, name: str) -> Path:
    return out if out is not None else Path(_config(ctx)["output_dir"]) / name


def _kpartite_name(coloring: EdgeColoring) -> str:
    return f"kpartite_k{coloring.spec.k}_n{coloring.spec.n}_t{coloring.t}.json"


def _complete_name(coloring: CompleteColoring) -> str:
    return f"complete_m{coloring.m}_t{coloring.t}.json"


def _compress_to(coloring, t: int | None):
    """Compress down to exactly ``t`` colors, if given."""
    if t is None or t == coloring.t:
        return coloring
    delta = coloring.max_degree()
    if not delta <= t <= coloring.t:
        raise BadT(f"t={t} is outside {delta}..{coloring.t} for {coloring.label}")
    while coloring.t > t:
        coloring = compress(coloring)
    return coloring


def _report_written(fmt: str, coloring, path: Path, source: ProvenanceSource) -> None:
    if fmt == "structured":
        click.echo(json.dumps({
            "label": coloring.label,
            "t": coloring.t,
            "path": str(path),
            "source": source.value,
        }, indent=2))
    else:
        console.print(f"[green]Wrote {escape(coloring.label)} with t = {coloring.t} to {escape(str(path))}[/green]")


def _search_spinner() -> Progress:
    return Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=err_console,
        transient=True,
    )


# ── Construct ──

@main.command()
@click.option("--k", "k", type=int, required=True, help="Number of parts")
@click.option("--n", "n", type=int, required=True, help="Vertices per part")
@click.option(
    "--method", type=click.Choice(["theorem3", "max-span", "blowup", "lift", "solver"]), default="theorem3",
    help="Construction; max-span is an alias for theorem3",
)
@click.option("--t", "t", type=int, default=None, help="Color count (required for solver)")
@click.option("--base", type=click.Path(path_type=Path), default=None, help="K_k base document for lift")
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Output document path")
@FORMAT_OPTION
@click.pass_context
def construct(ctx, k: int, n: int, method: str, t: int | None, base: Path | None,
              out: Path | None, fmt: str):
    """Construct an interval coloring of K_n^k and write it as a document."""
    spec = PartiteSpec(k=k, n=n)
    parent = None

    if method in ("theorem3", "max-span"):
        source = ProvenanceSource.MAX_SPAN
        coloring = _compress_to(max_span_coloring(spec), t)
    elif method == "blowup":
        source = ProvenanceSource.BLOWUP
        coloring = blowup_min_coloring(spec)
        if t is not None and t != coloring.t:
            raise BadT(f"the blow-up always uses t = (k-1)·n = {coloring.t}")
    elif method == "lift":
        if base is None:
            raise InvalidSpec("--method lift requires --base")
        source = ProvenanceSource.LIFT
        parent = str(base)
        base_coloring = read_document(base).to_coloring()
        if not isinstance(base_coloring, CompleteColoring) or base_coloring.m != k:
            raise InvalidSpec(f"{base} is not a coloring of K_{k}")
        coloring = _compress_to(lift_coloring(base_coloring, n), t)
    else:
        if t is None:
            raise InvalidSpec("--method solver requires --t")
        source = ProvenanceSource.SOLVER
        cfg = _config(ctx)
        with _search_spinner() as progress:
            progress.add_task(f"Searching {spec} at t={t}...", total=None)
            outcome = find_interval_coloring(
                spec, t, default_budget(cfg), symmetry=cfg["symmetry"], workers=cfg["workers"]
            )
        if outcome.status != SolveStatus.WITNESS:
            reason = "proven infeasible" if outcome.status == SolveStatus.PROVEN_INFEASIBLE else "budget exhausted"
            raise TargetInfeasibleAtBudget(f"{spec} at t={t}: {reason}", outcome=outcome)
        coloring = outcome.witness

    path = write_document(
        coloring,
        _output_path(ctx, out, _kpartite_name(coloring)),
        Provenance(source=source, parent=parent),
    )
    _report_written(fmt, coloring, path, source)


# ── Verify ──

@main.command("verify")
@click.argument("file", type=click.Path(path_type=Path))
@click.option("--palettes", is_flag=True, help="Also audit max-span closed-form palettes")
@FORMAT_OPTION
def verify_cmd(file: Path, palettes: bool, fmt: str):
    """Verify a coloring document. Exit 0 on pass, 1 on failure."""
    coloring = read_document(file).to_coloring()
    report = verify(coloring)

    mismatches = []
    if palettes:
        if not isinstance(coloring, EdgeColoring):
            raise InvalidSpec("--palettes applies to K_n^k documents only")
        _, mismatches = palette_formula_check(coloring)

    passed = report.passed and not mismatches
    if fmt == "structured":
        payload = report.model_dump(mode="json")
        payload["passed"] = report.passed
        if palettes:
            payload["palette_mismatches"] = [m.model_dump(mode="json") for m in mismatches]
        click.echo(json.dumps(payload, indent=2))
    else:
        console.print(format_verification_report(report), markup=False, highlight=False)
        if palettes:
            status = "PASS" if not mismatches else f"FAIL ({len(mismatches)} mismatches)"
            console.print(f"  [{status}] closed-form palettes", markup=False, highlight=False)
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


# ── Spectrum ──

@main.command()
@click.option("--k", "k", type=int, required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--mode", type=click.Choice(["construct", "oracle"]), default="construct")
@click.option("--t-max", type=int, default=None, help="Largest t for oracle mode")
@click.option("--base", type=click.Path(path_type=Path), default=None, help="K_k base document for the lift")
@click.option("--search-base", is_flag=True, help="Search for a K_k base when none is available")
@click.option("--out-dir", type=click.Path(path_type=Path), default=None)
@FORMAT_OPTION
@click.pass_context
def spectrum(ctx, k: int, n: int, mode: str, t_max: int | None, base: Path | None,
             search_base: bool, out_dir: Path | None, fmt: str):
    """Colorings for every t in the constructive range, or the oracle's feasibility map."""
    spec = PartiteSpec(k=k, n=n)
    cfg = _config(ctx)
    budget = default_budget(cfg)

    if mode == "oracle":
        with _search_spinner() as progress:
            progress.add_task(f"Scanning {spec}...", total=None)
            result = feasible_spectrum(spec, t_max, budget, workers=cfg["workers"], symmetry=cfg["symmetry"])
        if fmt == "structured":
            click.echo(json.dumps({str(t): value.value for t, value in result.items()}, indent=2))
        else:
            console.print(f"{spec}: {format_spectrum(result)}", markup=False, highlight=False)
        return

    base_coloring = None
    if base is not None:
        base_coloring = read_document(base).to_coloring()
        if not isinstance(base_coloring, CompleteColoring):
            raise InvalidSpec(f"{base} is not a complete-graph coloring")
    colorings = spectrum_sweep(spec, base_coloring, search_base, budget)

    directory = out_dir or Path(cfg["output_dir"]) / f"spectrum_k{k}_n{n}"
    top_t = max(colorings)
    written = {}
    top_name = _kpartite_name(colorings[top_t])
    for t, coloring in colorings.items():
        if t == top_t:
            top_source = ProvenanceSource.MAX_SPAN if top_t == max_span_bound(spec) else ProvenanceSource.LIFT
            provenance = Provenance(source=top_source, notes=f"top of the spectrum of {spec}")
        else:
            provenance = Provenance(source=ProvenanceSource.COMPRESS, parent=top_name)
        written[t] = write_document(coloring, directory / _kpartite_name(coloring), provenance)

    if fmt == "structured":
        click.echo(json.dumps({str(t): str(path) for t, path in written.items()}, indent=2))
        return
    table = Table(title=f"Spectrum of {spec}")
    table.add_column("t", style="cyan")
    table.add_column("File")
    for t, path in written.items():
        table.add_row(str(t), str(path))
    console.print(table)


# ── Bounds ──

@main.command()
@click.option("--k-range", required=True, help='k values, e.g. "2-12" or "2,4,8"')
@click.option("--n-range", required=True, help='n values, e.g. "1-6"')
@click.option("--oracle-max-edges", type=int, default=0, help="Run the oracle on instances this small")
@click.option("--out", type=click.Path(path_type=Path), default=None, help="CSV path (default stdout)")
@click.pass_context
def bounds(ctx, k_range: str, n_range: str, oracle_max_edges: int, out: Path | None):
    """CSV of degree, chromatic index, w and the lower bounds on W."""
    rows = bounds_table(
        parse_range(k_range), parse_range(n_range), oracle_max_edges, default_budget(_config(ctx))
    )
    text = render_bounds_csv(rows)
    if out is None:
        click.echo(text, nl=False)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")
        console.print(f"[green]Wrote {len(rows)} rows to {escape(str(out))}[/green]")


@main.command("bounds-report")
@click.option("--k", "k", type=int, required=True)
@click.option("--n", "n", type=int, required=True)
@FORMAT_OPTION
def bounds_report(k: int, n: int, fmt: str):
    """Every closed-form quantity for a single K_n^k."""
    report = bound_report(PartiteSpec(k=k, n=n))
    if fmt == "structured":
        click.echo(report.model_dump_json(indent=2))
        return
    table = Table(title=f"Bounds for {PartiteSpec(k=k, n=n)}")
    table.add_column("Quantity", style="cyan")
    table.add_column("Value", style="bold")
    for name, value in report.model_dump(mode="json").items():
        table.add_row(name, "-" if value is None else str(value))
    console.print(table)


# ── Export ──

@main.command()
@click.argument("file", type=click.Path(path_type=Path))
@click.option("--format", "fmt", type=click.Choice(EXPORT_FORMATS), default="edgelist")
def export(file: Path, fmt: str):
    """Print a verified document as an edge list or color matrices."""
    coloring = read_document(file).to_coloring()
    report = verify(coloring)
    if not report.passed:
        _fail(f"{file} does not verify ({len(report.violations)} violations)")
        return EXIT_VERIFY_FAILED
    click.echo(export_coloring(coloring, fmt), nl=False)


# ── Complete graphs, lift, compress ──

@main.command()
@click.option("--m", "m", type=int, required=True, help="Even order of K_m")
@click.option("--t", "t", type=int, default=None, help="Target colors (default 2m-1-p-q)")
@click.option("--out", type=click.Path(path_type=Path), default=None)
@FORMAT_OPTION
@click.pass_context
def complete(ctx, m: int, t: int | None, out: Path | None, fmt: str):
    """Write a verified interval coloring of K_m reaching the target t."""
    cfg = _config(ctx)
    with _search_spinner() as progress:
        progress.add_task(f"Coloring K_{m}...", total=None)
        coloring = complete_graph_coloring(m, t, default_budget(cfg), workers=cfg["workers"])
    source = ProvenanceSource.BLOWUP if coloring.t == m - 1 else ProvenanceSource.SOLVER
    path = write_document(
        coloring, _output_path(ctx, out, _complete_name(coloring)), Provenance(source=source)
    )
    _report_written(fmt, coloring, path, source)


@main.command()
@click.argument("base", type=click.Path(path_type=Path))
@click.option("--n", "n", type=int, required=True)
@click.option("--out", type=click.Path(path_type=Path), default=None)
@FORMAT_OPTION
@click.pass_context
def lift(ctx, base: Path, n: int, out: Path | None, fmt: str):
    """Lift a K_k base document to K_n^k."""
    base_coloring = read_document(base).to_coloring()
    if not isinstance(base_coloring, CompleteColoring):
        raise InvalidSpec(f"{base} is not a complete-graph coloring")
    coloring = lift_coloring(base_coloring, n)
    path = write_document(
        coloring,
        _output_path(ctx, out, _kpartite_name(coloring)),
        Provenance(source=ProvenanceSource.LIFT, parent=str(base)),
    )
    _report_written(fmt, coloring, path, ProvenanceSource.LIFT)


@main.command("compress")
@click.argument("file", type=click.Path(path_type=Path))
@click.option("--steps", type=click.IntRange(min=1), default=1, help="Number of colors to remove")
@click.option("--out", type=click.Path(path_type=Path), default=None)
@FORMAT_OPTION
@click.pass_context
def compress_cmd(ctx, file: Path, steps: int, out: Path | None, fmt: str):
    """Compress a verified document by ``steps`` colors."""
    coloring = read_document(file).to_coloring()
    for _ in range(steps):
        coloring = compress(coloring)
    name = _kpartite_name(coloring) if isinstance(coloring, EdgeColoring) else _complete_name(coloring)
    path = write_document(
        coloring,
        _output_path(ctx, out, name),
        Provenance(source=ProvenanceSource.COMPRESS, parent=str(file)),
    )
    _report_written(fmt, coloring, path, ProvenanceSource.COMPRESS)


# ── Solve ──

@main.command()
@click.option("--k", "k", type=int, default=None)
@click.option("--n", "n", type=int, default=None)
@click.option("--m", "m", type=int, default=None, help="Search K_m instead of K_n^k")
@click.option("--what", type=click.Choice(["t", "w", "W"]), default="t")
@click.option("--t", "t", type=int, default=None, help="Color count for --what t")
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Write the witness here")
@FORMAT_OPTION
@click.pass_context
def solve(ctx, k: int | None, n: int | None, m: int | None, what: str, t: int | None,
          out: Path | None, fmt: str):
    """Oracle queries: feasibility at one t, or exact w / W."""
    if m is not None and (k is not None or n is not None):
        raise InvalidSpec("give either --m or both --k and --n")
    if m is None and (k is None or n is None):
        raise InvalidSpec("give either --m or both --k and --n")
    instance = instance_for_complete(m) if m is not None else instance_for_spec(PartiteSpec(k=k, n=n))
    cfg = _config(ctx)
    budget = default_budget(cfg)

    if what == "t":
        if t is None:
            raise InvalidSpec("--what t requires --t")
        with _search_spinner() as progress:
            progress.add_task(f"Searching {instance.label} at t={t}...", total=None)
            outcome = find_interval_coloring(
                instance, t, budget, symmetry=cfg["symmetry"],
                workers=cfg["workers"],
            )
        if outcome.witness is not None and out is not None:
            write_document(outcome.witness, out, Provenance(source=ProvenanceSource.SOLVER))
        if fmt == "structured":
            click.echo(json.dumps({
                "label": instance.label,
                "t": t,
                "status": outcome.status.value,
                "nodes_explored": outcome.nodes_explored,
                "colors": list(outcome.witness.colors) if outcome.witness else None,
            }, indent=2))
        else:
            console.print(
                f"{instance.label} at t={t}: {outcome.status.value} ({outcome.nodes_explored} nodes)",
                markup=False, highlight=False,
            )
        return EXIT_OK if outcome.status == SolveStatus.WITNESS else EXIT_SEARCH

    query = exact_w if what == "w" else exact_W
    value = query(instance, budget, workers=cfg["workers"], symmetry=cfg["symmetry"])
    if fmt == "structured":
        click.echo(json.dumps({"label": instance.label, what: value}, indent=2))
    else:
        console.print(f"{what}({instance.label}) = {'Unknown' if value is None else value}",
                      markup=False, highlight=False)
    return EXIT_OK if value is not None else EXIT_SEARCH


# ── Config ──

@main.group()
def config():
    """Manage configuration settings."""
    pass


@config.command("set")
@click.argument("key")
@click.argument("value")
def config_set(key: str, value: str):
    """Set a configuration value."""
    try:
        set_config_value(key, value)
    except KeyError as exc:
        _fail(str(exc.args[0]))
        return EXIT_USAGE
    except ValueError as exc:
        _fail(f"bad value for {key}: {exc}")
        return EXIT_USAGE
    console.print(f"Set {key} = {value}")


@config.command("show")
def config_show():
    """Show current configuration."""
    cfg = load_config()
    table = Table(title="Configuration")
    table.add_column("Key")
    table.add_column("Value")
    for k, v in cfg.items():
        table.add_row(k, str(v))
    console.print(table)


if __name__ == "__main__":
    main()
