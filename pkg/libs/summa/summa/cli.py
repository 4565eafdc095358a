import logging
import sys
from typing import Any, Callable, Optional

import click
from pydantic import ValidationError
from theflow.settings import settings as flowsettings
from trogon import tui

from summa.exceptions import SummaException

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def setup_logging(verbose: int):
    """Log to stderr at SUMMA_LOG_LEVEL, or INFO/DEBUG with -v/-vv"""
    if verbose >= 2:
        level: Any = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(flowsettings, "SUMMA_LOG_LEVEL", "WARNING")
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)


def build_config(kind: str, config_path: Optional[str], **flags):
    """Merge a config file with command-line flags; flags win"""
    from summa.runner import ExperimentConfig

    overrides = {key: value for key, value in flags.items() if value is not None}
    overrides["kind"] = kind
    if config_path:
        return ExperimentConfig.from_file(config_path, **overrides)
    return ExperimentConfig(**overrides)


def execute(kind: str, run: Callable, failed: Callable, **options):
    """Resolve the config, run the experiment, emit its output and exit.

    `failed(payload)` tells whether the outcome should exit with status 1.
    """
    from summa.runner import emit, write_provenance

    setup_logging(options.pop("verbose"))
    serial = options.pop("serial")
    options["concurrent"] = False if serial else None

    try:
        config = build_config(kind, options.pop("config_path"), **options)
        logger.info(f"Resolved config: {config.model_dump(mode='json')}")
        payload = run(config)
        text = emit(payload, config.format, config.out)
        if config.out:
            path = write_provenance(config, config.out)
            logger.info(f"Wrote provenance to {path}")
        else:
            click.echo(text, nl=False)
    except (SummaException, ValidationError) as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_USAGE)
    except OSError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_USAGE)

    sys.exit(EXIT_FAILED if failed(payload) else EXIT_OK)


def any_violation(records) -> bool:
    from summa.runner import VIOLATION

    return any(record.status == VIOLATION for record in records)


def unexpected_verdict(result) -> bool:
    if not result.matches_expectation:
        logger.error(
            f"{result.family} probe: verdict {result.verdict.value}, "
            f"expected {result.expected.value}"
        )
        return True
    return False


def options(*decorators):
    def wrapper(func):
        for decorator in reversed(decorators):
            func = decorator(func)
        return func

    return wrapper


common_options = options(
    click.option(
        "--config",
        "config_path",
        type=click.Path(exists=True, dir_okay=False),
        help="JSON or YAML experiment config; flags override its values.",
    ),
    click.option("--seed", type=int, help="Seed of every random draw."),
    click.option(
        "--field",
        type=click.Choice(["real", "complex"]),
        help="Scalar field.",
    ),
    click.option("--out", type=click.Path(dir_okay=False), help="Output file."),
    click.option("--format", type=click.Choice(["csv", "json"]), help="Output format."),
    click.option(
        "--serial",
        is_flag=True,
        default=False,
        help="Run trials, restarts and probe points one at a time.",
    ),
    click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG."),
)

form_options = options(
    click.option("--m", "m", type=int, help="Arity of the forms."),
    click.option("--k", "k", type=int, help="Number of partition blocks."),
    click.option(
        "--p",
        "pspec",
        help='Exponents p_1,...,p_m (comma list; "inf" and "a/b" allowed).',
    ),
    click.option("--partition", help="Block multiplicities n_1,...,n_k."),
    click.option("--q", "q", help="Mixed exponent q_1,...,q_k."),
    click.option("--s", "s", help="Flat exponent, repeated k times."),
)

estimator_options = options(
    click.option("--restarts", type=int, help="Ascent restarts per norm."),
    click.option("--max-iters", type=int, help="Ascent sweeps per restart."),
)


@tui(command="ui", help="Open the terminal UI")
@click.group()
def main():
    """Numerical checks of Bohnenblust-Hille and Hardy-Littlewood inequalities"""


@main.command()
@common_options
@form_options
@estimator_options
@click.option("--n", "n", type=int, help="Extent N of every slot.")
@click.option("--trials", type=int, help="Random forms to test.")
@click.option(
    "--form",
    help='JSON form fixture, or the built-in "hadamard".',
)
def verify(**kwargs):
    """Check LHS <= C * ||T|| on random forms or a fixture"""
    from summa.runner import run_verify

    execute("verify", run_verify, any_violation, **kwargs)


@main.command("ksz-probe")
@common_options
@form_options
@estimator_options
@click.option("--n-list", help="Extents N to probe (comma list).")
@click.option("--draws", type=int, help="Random sign forms per N.")
def ksz_probe(**kwargs):
    """Ratio growth along random sign (Kahane-Salem-Zygmund) forms"""
    from summa.runner import run_probe

    execute("ksz-probe", run_probe, unexpected_verdict, **kwargs)


@main.command("zalduendo-probe")
@common_options
@form_options
@click.option("--n-list", help="Extents N to probe (comma list).")
@click.option("--beta", type=float, help="Diagonal decay j^beta.")
def zalduendo_probe(**kwargs):
    """Partial-sum divergence along diagonal forms j^beta"""
    from summa.runner import run_probe

    execute("zalduendo-probe", run_probe, unexpected_verdict, **kwargs)


def table_command(kind: str, doc: str):
    @common_options
    @click.option("--m", "m", type=int, help="Arity; all of 1..6 when omitted.")
    @click.option("--k", "k", type=int, help="Blocks; all of 1..m when omitted.")
    @click.option(
        "--p",
        "p_values",
        help="Uniform exponents to tabulate (comma list).",
    )
    def command(**kwargs):
        from summa.runner import run_tables

        execute(kind, run_tables, lambda rows: False, **kwargs)

    command.__doc__ = doc
    return main.command(kind)(command)


constants = table_command("constants", "Constant estimates per (k, m, p)")
exponent = table_command("exponent", "Optimal exponents per (k, m, p)")


@main.command()
@common_options
@estimator_options
@click.option("--trials", type=int, help="Random forms per suite config.")
def sweep(**kwargs):
    """Verify the default suite spanning every regime"""
    from summa.runner import run_sweep

    execute("sweep", run_sweep, any_violation, **kwargs)


if __name__ == "__main__":
    main()
