import click

from haarpy.cli import main
from haarpy.haar import row_norm


@main.command(name="row-norm", help="Custom command")
@click.option("--d", "degree", type=int, default=2)
def row_norm_command(degree):
    print(row_norm(degree))
