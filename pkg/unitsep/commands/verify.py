import time

import typer
from rich.console import Console
from rich.table import Table

from ..suite import run_suite
from .base import EXIT_MISMATCH, CommandBase

console = Console()


class VerifyCommand(CommandBase):
    def execute(self, only_failures: bool = False):
        """reproduce the decompositions, verdicts and checks on the bundled catalog"""
        start_time = time.time()
        with console.status("running suite...") as status:
            result = run_suite(self.settings, progress=lambda s: status.update(f"running {s}..."))
        duration = time.time() - start_time

        rich_table = Table(title="claims", show_header=True, header_style="bold magenta")
        rich_table.add_column("claim", style="cyan")
        rich_table.add_column("anchor")
        rich_table.add_column("computed")
        rich_table.add_column("expected")
        rich_table.add_column("match")
        for claim in result.claims:
            if only_failures and claim.passed is not False:
                continue
            match = {True: "[green]ok[/green]", False: "[red]MISMATCH[/red]", None: "[yellow]reported[/yellow]"}[
                claim.passed
            ]
            rich_table.add_row(claim.name, claim.anchor, claim.computed, claim.expected, match)
        console.print(rich_table)

        failed = len(result.mismatches)
        total = sum(1 for c in result.claims if c.passed is not None)
        console.print(
            f"checked [bold cyan]{total}[/bold cyan] claim(s) in {duration:.1f} seconds, "
            f"[bold {'red' if failed else 'green'}]{failed}[/bold {'red' if failed else 'green'}] mismatch(es)"
        )
        if failed:
            raise typer.Exit(EXIT_MISMATCH)
