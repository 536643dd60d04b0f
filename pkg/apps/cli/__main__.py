from apps.cli.main import cli

cli(prog_name="qser")
