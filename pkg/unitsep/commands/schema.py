import json

import typer

from ..report import AnalysisReport
from .base import CommandBase


class SchemaCommand(CommandBase):
    def execute(self):
        """print the json schema of analyze --json output"""
        typer.echo(json.dumps(AnalysisReport.model_json_schema(), indent=2, sort_keys=True))
