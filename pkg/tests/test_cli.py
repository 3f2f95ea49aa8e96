import json

from typer.testing import CliRunner

from unitsep import __version__, config
from unitsep.app import app

runner = CliRunner()


def test_version():
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert f"unitsep version: {__version__}" in result.output


def test_analyze_json():
    result = runner.invoke(app, ["analyze", "D8", "--json"])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["verdict"]["value"] == "SubgroupSeparable"
    assert report["group"]["order"] == 8
    assert report["theorem_membership"] == "D8"


def test_analyze_table():
    result = runner.invoke(app, ["analyze", "Q8 x C3"])
    assert result.exit_code == 0
    assert "SubgroupSeparable" in result.output
    assert "QG = " in result.output


def test_analyze_flags_override_settings():
    result = runner.invoke(app, ["analyze", "Q16", "--json", "--oracle", "off", "--bianchi-extension", "on"])
    assert result.exit_code == 0
    flags = json.loads(result.stdout)["flags"]
    assert flags["oracle"] is False
    assert flags["bianchi_extension"] is True


def test_analyze_reports_bad_specs():
    result = runner.invoke(app, ["analyze", "Z5"])
    assert result.exit_code == 2
    assert "error" in result.output


def test_analyze_needs_input():
    result = runner.invoke(app, ["analyze"])
    assert result.exit_code == 2


def test_analyze_above_max_order():
    result = runner.invoke(app, ["analyze", "Q8 x Q8", "--max-order", "32"])
    assert result.exit_code == 2
    assert "hint" in result.output


def test_analyze_presentation_file(tmp_path):
    path = tmp_path / "q8.txt"
    path.write_text("gens: x y\nx^4 = 1\nx^2 = y^2\ny^-1 x y = x^-1\n", encoding="utf-8")
    result = runner.invoke(app, ["analyze", "--presentation", str(path), "--json"])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["group"]["order"] == 8
    assert report["verdict"]["value"] == "SubgroupSeparable"


def test_bad_presentation_file(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("x^2 = 1\n", encoding="utf-8")
    result = runner.invoke(app, ["analyze", "-p", str(path)])
    assert result.exit_code == 2


def test_catalog_family():
    result = runner.invoke(app, ["catalog", "--family", "theorem"])
    assert result.exit_code == 0
    assert "24 group(s)" in result.output


def test_schema():
    result = runner.invoke(app, ["schema"])
    assert result.exit_code == 0
    schema = json.loads(result.stdout)
    assert "verdict" in schema["properties"]


def test_settings_round_trip():
    result = runner.invoke(app, ["settings", "set", "max_order", "64"])
    assert result.exit_code == 0
    assert config.load_config().max_order == 64

    result = runner.invoke(app, ["settings", "set", "division_criterion", "paper"])
    assert result.exit_code == 0
    assert config.load_config().division_criterion.value == "paper"

    result = runner.invoke(app, ["settings", "reset"])
    assert result.exit_code == 0
    assert config.load_config() == config.Settings()


def test_settings_reject_bad_values():
    assert runner.invoke(app, ["settings", "set", "bogus", "1"]).exit_code == 2
    assert runner.invoke(app, ["settings", "set", "max_order", "zero"]).exit_code == 2
    assert runner.invoke(app, ["settings", "set", "max_order", "0"]).exit_code == 2


def test_settings_show():
    result = runner.invoke(app, ["settings"])
    assert result.exit_code == 0
    assert "max_order" in result.output


def test_analyze_json_errors_are_structured():
    result = runner.invoke(app, ["analyze", "Q8 x Q8", "--max-order", "32", "--json"])
    assert result.exit_code == 2
    error = json.loads(result.stdout)
    assert error["kind"] == "GroupTooLarge"
    assert "64" in error["error"]
    assert error["hint"]
    assert error["schema_version"] == "1"


def test_unreadable_settings_fall_back_to_defaults(data_dir):
    path = data_dir / "settings.json"
    path.write_text("{not json", encoding="utf-8")
    assert config.load_config() == config.Settings()
    path.write_text('{"max_order": 0}', encoding="utf-8")
    assert config.load_config() == config.Settings()
