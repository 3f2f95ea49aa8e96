from enum import Enum
from pathlib import Path
from typing import Annotated

import typer
from rich.console import Console
from typer import Context

from . import __version__, config
from .catalog import Family
from .classify import DivisionCriterion
from .commands import settings as settings_app
from .commands.analyze import AnalyzeCommand
from .commands.catalog import CatalogCommand
from .commands.schema import SchemaCommand
from .commands.verify import VerifyCommand
from .logs import setup_logging

app = typer.Typer()
console = Console()


class Toggle(str, Enum):
    on = "on"
    off = "off"


def _toggle(value: Toggle | None) -> bool | None:
    return None if value is None else value is Toggle.on


def version_callback(value: bool) -> None:
    if value:
        console.print(f"unitsep version: {__version__}")
        raise typer.Exit()


@app.callback(invoke_without_command=True)
def main(
    ctx: Context,
    verbose: Annotated[
        bool, typer.Option("--verbose", "-v", help="log pipeline progress")
    ] = False,
    version: Annotated[
        bool | None,
        typer.Option(
            "--version",
            callback=version_callback,
            is_eager=True,
            help="show version and exit",
        ),
    ] = None,
):
    """wedderburn decompositions of rational group algebras and subgroup separability of unit groups"""
    setup_logging(verbose)
    ctx.obj = {"settings": config.load_config()}


# register command modules that are full typer apps
app.add_typer(settings_app.app, name="settings")


MaxOrder = Annotated[
    int | None, typer.Option("--max-order", min=1, help="largest group materialised as a table")
]
Bianchi = Annotated[
    Toggle | None,
    typer.Option("--bianchi-extension", help="treat M2 over any imaginary quadratic field as separable"),
]
Criterion = Annotated[
    DivisionCriterion | None,
    typer.Option("--division-criterion", help="rule for H(Q(zeta_p)): residue degree or p mod 8"),
]
Oracle = Annotated[
    Toggle | None, typer.Option("--oracle", help="cross-check against the character table")
]


# define command entrypoints that call methods on the instantiated classes
@app.command()
def analyze(
    ctx: Context,
    spec: Annotated[
        str | None, typer.Argument(help="group spec, e.g. 'Q8 x C7' or 'sdp(3,8,2)'")
    ] = None,
    presentation: Annotated[
        Path | None,
        typer.Option(
            "--presentation",
            "-p",
            exists=True,
            dir_okay=False,
            readable=True,
            help="read the group from a presentation file",
        ),
    ] = None,
    as_json: Annotated[bool, typer.Option("--json", help="print the report as json")] = False,
    max_order: MaxOrder = None,
    bianchi_extension: Bianchi = None,
    division_criterion: Criterion = None,
    oracle: Oracle = None,
):
    """decompose QG and decide subgroup separability of ZG^*"""
    settings = config.override(
        ctx.obj["settings"],
        max_order=max_order,
        bianchi_extension=_toggle(bianchi_extension),
        division_criterion=division_criterion,
        oracle=_toggle(oracle),
    )
    AnalyzeCommand(settings).run(spec=spec, presentation=presentation, as_json=as_json)


@app.command(name="verify-paper")
def verify_paper(
    ctx: Context,
    max_order: MaxOrder = None,
    bianchi_extension: Bianchi = None,
    division_criterion: Criterion = None,
    oracle: Oracle = None,
    workers: Annotated[
        int | None, typer.Option("--workers", "-w", min=1, help="catalog groups analysed in parallel")
    ] = None,
    only_failures: Annotated[
        bool, typer.Option("--failures", help="list mismatched claims only")
    ] = False,
):
    """run the reproduction suite over the bundled catalog"""
    settings = config.override(
        ctx.obj["settings"],
        max_order=max_order,
        bianchi_extension=_toggle(bianchi_extension),
        division_criterion=division_criterion,
        oracle=_toggle(oracle),
        workers=workers,
    )
    VerifyCommand(settings).run(only_failures=only_failures)


@app.command()
def catalog(
    ctx: Context,
    family: Annotated[
        Family | None, typer.Option("--family", "-f", help="list one family only")
    ] = None,
    resolve_orders: Annotated[
        bool, typer.Option("--orders", help="build presented groups to show their order")
    ] = False,
):
    """list the bundled groups"""
    CatalogCommand(ctx.obj["settings"]).run(family=family, resolve_orders=resolve_orders)


@app.command()
def schema(ctx: Context):
    """print the json schema of analyze reports"""
    SchemaCommand(ctx.obj["settings"]).run()
