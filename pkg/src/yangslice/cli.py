"""Command-line entry point: ``yangslice verify|report|list-checks``."""

from __future__ import annotations

import sys

import click

from .suite import CITATIONS, GROUPS, ConfigError, emit_report, load_config, parse_report, run_suite

EXIT_CONFIG = 2


def _write(data: bytes, output: str | None) -> None:
    if output:
        with open(output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


@click.group()
def main():
    """Exact verification of shifted Yangian, GKLO and slice identities."""


@main.command()
@click.argument("group", type=click.Choice(GROUPS + ("all",)))
@click.option("--config", "config_path", required=True, type=click.Path(dir_okay=False), help="YAML run configuration.")
@click.option("--seed", type=int, default=None, help="Overrides the seed in the configuration.")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True, help="Worker processes.")
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]), default="text", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write the report here instead of stdout.")
@click.option("--timings", is_flag=True, help="Include wall times (structured output is then not reproducible).")
def verify(group, config_path, seed, jobs, fmt, output, timings):
    """Run one check group, or every enabled group with ``all``."""
    try:
        cfg = load_config(config_path, seed)
    except ConfigError as exc:
        click.echo(f"configuration error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)
    records, status = run_suite(cfg, None if group == "all" else [group], jobs)
    _write(emit_report(records, fmt, timings=timings), output)
    sys.exit(status)


@main.command()
@click.option("--input", "source", type=click.File("rb"), default="-", help="Structured report; '-' reads stdin.")
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]), default="text", show_default=True)
@click.option("--timings", is_flag=True, help="Show recorded wall times.")
def report(source, fmt, timings):
    """Re-render a structured report; exits 1 if it records a failure."""
    try:
        records = parse_report(source.read())
    except (ValueError, KeyError, TypeError) as exc:
        click.echo(f"report error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)
    _write(emit_report(records, fmt, timings=timings), None)
    sys.exit(1 if any(r.status == "fail" for r in records) else 0)


@main.command("list-checks")
def list_checks():
    """Check groups and what each establishes."""
    for g in GROUPS:
        click.echo(f"{g:<11} {CITATIONS[g]}")


if __name__ == "__main__":
    main()
