from typing import Annotated

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table
from typer import Context

from .. import config
from .base import EXIT_ERROR

app = typer.Typer(invoke_without_command=True)
console = Console()


def _format(value) -> str:
    if isinstance(value, bool):
        return "[green]on[/green]" if value else "[red]off[/red]"
    return str(getattr(value, "value", value))


def _show_settings():
    """loads and displays current settings"""
    settings = config.load_config()
    table = Table("setting", "value", "description")
    for name, field in config.Settings.model_fields.items():
        table.add_row(name, _format(getattr(settings, name)), field.description or "")
    console.print(table)
    console.print(f"[grey50]stored in {config.settings_path()}[/grey50]")


@app.callback(invoke_without_command=True)
def main(ctx: Context):
    """manage analysis settings"""
    if ctx.invoked_subcommand is None:
        _show_settings()


@app.command()
def show():
    """show current settings"""
    _show_settings()


@app.command(name="set")
def set_value(
    key: Annotated[str, typer.Argument(help="the setting to change")],
    value: Annotated[str, typer.Argument(help="the new value")],
):
    """change one stored setting"""
    settings = config.load_config()
    try:
        settings = config.with_value(settings, key, value)
    except KeyError as e:
        known = ", ".join(config.Settings.model_fields)
        console.print(f"[red]error: unknown setting '{key}', expected one of {known}[/red]")
        raise typer.Exit(EXIT_ERROR) from e
    except ValidationError as e:
        console.print(f"[red]error: invalid value for {key}: {e.errors()[0]['msg']}[/red]")
        raise typer.Exit(EXIT_ERROR) from e
    config.save_config(settings)
    console.print(f"{key} set to: {_format(getattr(settings, key))}")


@app.command()
def reset():
    """restore the default settings"""
    config.save_config(config.Settings())
    console.print("settings restored to defaults")
