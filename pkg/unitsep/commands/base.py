from abc import ABC, abstractmethod

import typer
from rich.console import Console

from ..config import Settings
from ..errors import UnitsepError

console = Console()

EXIT_MISMATCH = 1
EXIT_ERROR = 2


class CommandBase(ABC):
    """
    an abstract base class for commands
    """

    def __init__(self, settings: Settings):
        self.settings = settings

    def run(self, *args, **kwargs):
        """
        method called by typer. wraps the command logic in a generic error handler
        """
        try:
            return self.execute(*args, **kwargs)
        except (typer.Abort, typer.Exit):
            # re-raise abort and exit exceptions to let typer handle them
            raise
        except UnitsepError as e:
            console.print(f"[bold red]error: {e}[/bold red]")
            if e.hint:
                console.print(f"[yellow]hint: {e.hint}[/yellow]")
            raise typer.Exit(EXIT_ERROR) from e
        except Exception as e:
            console.print(f"[bold red]an unexpected error occurred: {e}[/bold red]")
            raise typer.Exit(EXIT_ERROR) from e

    @abstractmethod
    def execute(self, *args, **kwargs):
        """
        the main entry method for the cmd logic
        """
        ...
