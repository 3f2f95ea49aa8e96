from rich.console import Console
from rich.table import Table

from ..catalog import Family, catalog
from ..presentations import parse_spec, predicted_order, resolve
from .base import CommandBase

console = Console()


class CatalogCommand(CommandBase):
    def execute(self, family: Family | None = None, resolve_orders: bool = False):
        """list the bundled groups with their expectations"""
        entries = [e for e in catalog() if family is None or e.family is family]

        rich_table = Table(title="catalog", show_header=True, header_style="bold magenta")
        rich_table.add_column("spec", style="cyan")
        rich_table.add_column("family")
        rich_table.add_column("order", justify="right")
        rich_table.add_column("expected decomposition")
        rich_table.add_column("expected verdict")
        rich_table.add_column("provenance")

        for entry in entries:
            order = predicted_order(parse_spec(entry.spec))
            if order is None and resolve_orders:
                order = resolve(entry.spec, self.settings.max_order, self.settings.max_cosets).order
            spec = f"{entry.spec}  [grey50]{entry.note}[/grey50]" if entry.note else entry.spec
            rich_table.add_row(
                spec,
                entry.family.value,
                str(order) if order is not None else "[grey50]?[/grey50]",
                entry.expected_decomposition or "[grey50]n/a[/grey50]",
                entry.expected_verdict.value if entry.expected_verdict else "[grey50]n/a[/grey50]",
                ", ".join(p.value for p in entry.provenance),
            )
        console.print(rich_table)
        console.print(f"[bold cyan]{len(entries)}[/bold cyan] group(s)")
