from pathlib import Path

import typer
from rich.console import Console
from rich.table import Table

from ..errors import PresentationFormatError, UnitsepError
from ..presentations import parse_presentation_file
from ..report import AnalysisReport, ErrorReport, analyze
from .base import EXIT_ERROR, CommandBase

console = Console()

VERDICT_STYLES = {
    "SubgroupSeparable": "green",
    "NotSubgroupSeparable": "red",
    "OpenCase": "yellow",
    "Undetermined": "magenta",
}


class AnalyzeCommand(CommandBase):
    def execute(self, spec: str | None, presentation: Path | None, as_json: bool):
        """decompose QG for a group spec or presentation file and print the verdict"""
        try:
            report = self.analyze(spec, presentation)
        except UnitsepError as e:
            if not as_json:
                raise
            typer.echo(ErrorReport.from_error(e).model_dump_json(indent=2))
            raise typer.Exit(EXIT_ERROR) from e

        if as_json:
            typer.echo(report.model_dump_json(indent=2))
        else:
            render(report)

    def analyze(self, spec: str | None, presentation: Path | None) -> AnalysisReport:
        if presentation is not None:
            try:
                text = presentation.read_text(encoding="utf-8")
            except OSError as e:
                raise PresentationFormatError(f"cannot read {presentation}: {e}") from e
            return analyze(parse_presentation_file(text), self.settings)
        if spec is not None:
            return analyze(spec, self.settings)
        raise PresentationFormatError(
            "nothing to analyze", "pass a group spec or --presentation FILE"
        )


def render(report: AnalysisReport) -> None:
    group = report.group
    console.print(
        f"[bold cyan]{group.label}[/bold cyan] order {group.order}, "
        f"abelianization {' x '.join(f'C{n}' for n in group.abelian_invariants) or '1'}, "
        f"center of order {group.center_order}"
    )
    if group.route == "factorized":
        console.print(
            f"computed as {group.core} tensored with the abelian factor "
            f"{' x '.join(f'C{n}' for n in group.abelian_factor)}"
        )

    table = Table(title="simple components", show_header=True, header_style="bold magenta")
    table.add_column("component", style="cyan")
    table.add_column("degree", justify="right")
    table.add_column("center")
    table.add_column("division part")
    table.add_column("dim", justify="right")
    table.add_column("class")
    table.add_column("VC")
    for c in report.components:
        if c.division_kind == "quaternion":
            part = f"{c.symbol} {c.status} ({c.tier})"
        else:
            part = c.division_kind
        vc = {True: "[green]yes[/green]", False: "[red]no[/red]", None: "[grey50]?[/grey50]"}[c.vc]
        table.add_row(
            c.pretty, str(c.matrix_degree), c.center_pretty, part, str(c.q_dimension),
            " | ".join(cls.value for cls in c.classes), vc,
        )
    console.print(table)
    console.print(f"QG = {report.decomposition}")

    verdict = report.verdict
    style = VERDICT_STYLES[verdict.value.value]
    console.print(f"verdict: [bold {style}]{verdict.value.value}[/bold {style}]")
    for reason in verdict.reasons:
        console.print(f"  - {reason}")
    if report.theorem_membership:
        console.print(f"theorem list entry: {report.theorem_membership}")
    if report.derived_placement:
        console.print("[yellow]the non-VC component placement is derived, not quoted[/yellow]")
    for line in report.criterion_disagreements:
        console.print(f"[yellow]division criteria differ: {line}[/yellow]")

    oracle = report.oracle
    if oracle.ran:
        route = "factorized " if oracle.factorized else ""
        console.print(
            f"{route}character table check over F_{oracle.prime}: {oracle.components} components, "
            f"{oracle.rational_orbits} rational orbits, {oracle.cyclotomic_classes} classes"
        )
    else:
        console.print("[grey50]character table check skipped[/grey50]")
