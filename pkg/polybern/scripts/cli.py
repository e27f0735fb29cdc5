"""The CLI command line tool
"""

import json
import logging
import sys

import click
import pandas
from toolz.curried import pipe
from toolz.curried import map as map_

from .. import test as polybern_test
from ..checks import SUITES
from ..exact import to_decimal
from ..formulas import FormulaId, PolyBernoulliQuery, pb_table, pb_value
from ..func import get_config, write_text
from ..oracles import (
    EnumerationBoundError,
    callan_permutations,
    count_callan_bruteforce,
)


EPILOG = "Values are exact and printed as decimal strings"

FORMULA_NAMES = [x.value for x in FormulaId]


@click.group(epilog=EPILOG)
@click.option("--verbose", "-v", is_flag=True, help="log debug messages to stderr")
def cli(verbose):
    """Compute and verify the poly-Bernoulli numbers B_{n,k} = B_n^(-k)"""
    if verbose:
        logging.basicConfig(level=logging.DEBUG)


@cli.command(epilog=EPILOG)
@click.argument("n", type=click.IntRange(min=0))
@click.argument("k", type=click.IntRange(min=0))
@click.option(
    "--formula",
    "-f",
    help="the formula to evaluate, or all of them",
    default=FormulaId.BASIC.value,
    show_default=True,
    type=click.Choice(FORMULA_NAMES + ["all"]),
)
def value(n, k, formula):
    """Print a single poly-Bernoulli number

    With `--formula all` every formula is printed on its own line followed
    by AGREE, or DISAGREE and exit code 1.

    Args:
      n: the row index
      k: the magnitude of the negative index
      formula: a formula name or "all"
    """
    query = PolyBernoulliQuery(n, k)
    if formula != "all":
        evaluation = pb_value(query, formula)
        click.echo(to_decimal(evaluation.value))
        notify_fallback(evaluation)
        return

    evaluations = [pb_value(query, x) for x in FormulaId]
    for evaluation in evaluations:
        click.echo(f"{evaluation.formula.value} {to_decimal(evaluation.value)}")
    for evaluation in evaluations:
        notify_fallback(evaluation)
    if len({x.value for x in evaluations}) == 1:
        click.secho("AGREE", fg="green")
    else:
        click.secho("DISAGREE", fg="red")
        sys.exit(1)


def notify_fallback(evaluation):
    """Tell stderr when a border cell was answered with the basic formula

    Args:
      evaluation: an Evaluation
    """
    if evaluation.fallback:
        click.secho(
            f"{evaluation.formula.value} is stated for n, k > 0, "
            f"answered with {evaluation.used.value}",
            fg="yellow",
            err=True,
        )


@cli.command(epilog=EPILOG)
@click.argument("max_n", type=click.IntRange(min=0))
@click.argument("max_k", type=click.IntRange(min=0))
@click.option(
    "--formula",
    "-f",
    help="the formula used for every cell",
    default=FormulaId.BASIC.value,
    show_default=True,
    type=click.Choice(FORMULA_NAMES),
)
@click.option(
    "--format",
    "format_",
    help="output format",
    default="plain",
    show_default=True,
    type=click.Choice(["plain", "csv", "json"]),
)
@click.option(
    "--out",
    "-o",
    help="destination file (default: standard output)",
    default=None,
    type=click.Path(dir_okay=False),
)
def table(max_n, max_k, formula, format_, out):
    """Print the table of B_{n,k} for 0 <= n <= MAX_N, 0 <= k <= MAX_K

    Args:
      max_n: the last row
      max_k: the last column
      formula: the formula name
      format_: plain, csv or json
      out: optional destination file
    """
    text = render_table(max_n, max_k, FormulaId(formula), format_)
    if out is None:
        click.echo(text, nl=False)
        return

    try:
        write_text(out, text)
    except OSError as error:
        click.secho(f"{out} is not writable: {error.strerror}", fg="red", err=True)
        sys.exit(2)
    output(out)


def table_frame(max_n, max_k, formula):
    """The table as a data frame of decimal strings indexed by n and k

    Args:
      max_n: the last row
      max_k: the last column
      formula: a FormulaId

    Returns:
      a pandas.DataFrame

    >>> table_frame(2, 2, FormulaId.THM6).loc[2, 2]
    '14'
    """
    return pipe(
        pb_table(max_n, max_k, formula),
        map_(lambda row: [to_decimal(x.value) for x in row]),
        list,
        pandas.DataFrame,
    )


def render_table(max_n, max_k, formula, format_):
    """Render the table as plain text, CSV or JSON

    Args:
      max_n: the last row
      max_k: the last column
      formula: a FormulaId
      format_: plain, csv or json

    Returns:
      the rendered text ending with a newline

    >>> print(render_table(1, 3, FormulaId.BASIC, "plain"), end="")
    1 1 1 1
    1 2 4 8
    >>> print(render_table(1, 2, FormulaId.BASIC, "csv"), end="")
    n,0,1,2
    0,1,1,1
    1,1,2,4
    """
    frame = table_frame(max_n, max_k, formula)
    if format_ == "plain":
        return frame.to_csv(sep=" ", header=False, index=False, lineterminator="\n")
    if format_ == "csv":
        return frame.to_csv(index_label="n", lineterminator="\n")
    return (
        json.dumps(
            {
                "max_n": max_n,
                "max_k": max_k,
                "formula": formula.value,
                "values": frame.values.tolist(),
            },
            indent=2,
        )
        + "\n"
    )


@cli.command(epilog=EPILOG)
@click.argument(
    "suite",
    default="all",
    type=click.Choice(list(SUITES) + ["all"]),
)
@click.option(
    "--max",
    "max_",
    help="largest n and k of the formula agreement grid",
    default=None,
    type=click.IntRange(min=0),
)
@click.option(
    "--max-sum",
    help="largest n + k for the Callan enumeration",
    default=None,
    type=click.IntRange(min=0),
)
@click.option(
    "--max-cells",
    help="largest n * k for the lonesum enumeration",
    default=None,
    type=click.IntRange(min=0),
)
def check(suite, max_, max_sum, max_cells):
    """Run the verification suites

    Defaults for the ranges come from the `check` configuration section.
    Exits with code 1 when a case fails.

    Args:
      suite: identities, oracles or all
      max_: range of the identities suite
      max_sum: Callan range of the oracles suite
      max_cells: lonesum range of the oracles suite
    """
    defaults = get_config().check
    or_default = lambda x, default: default if x is None else x
    arguments = {
        "identities": {"max_": or_default(max_, defaults.max)},
        "oracles": {
            "max_sum": or_default(max_sum, defaults.max_sum),
            "max_cells": or_default(max_cells, defaults.max_cells),
        },
    }
    reports = [
        SUITES[name](**arguments[name])
        for name in (list(SUITES) if suite == "all" else [suite])
    ]
    for report in reports:
        click.echo(
            f"{report.suite}: {report.cases_run} cases, "
            f"{len(report.failures)} failures"
        )
        for failure in report.failures:
            click.secho(f"  {failure}", fg="red")
    if not all(x.ok for x in reports):
        sys.exit(1)


@cli.command(name="enumerate", epilog=EPILOG)
@click.argument("n", type=click.IntRange(min=0))
@click.argument("k", type=click.IntRange(min=0))
@click.option(
    "--list",
    "list_",
    is_flag=True,
    help="print every Callan permutation instead of the count",
)
def enumerate_(n, k, list_):
    """Count or list the Callan permutations of size (N, K)

    Args:
      n: number of left values
      k: number of right values
      list_: whether to list the permutations
    """
    try:
        if list_:
            for perm in callan_permutations(n, k):
                click.echo(str(perm))
        else:
            click.echo(to_decimal(count_callan_bruteforce(n, k)))
    except EnumerationBoundError as error:
        click.secho(str(error), fg="red", err=True)
        sys.exit(2)


@cli.command(epilog=EPILOG)
def test():  # pragma: no cover
    """Run the polybern tests"""
    polybern_test()


def output(local_filepath):
    """Output the formatted name of a written file to stdout

    Args:
      local_filepath: the file path string
    """
    formatted_path = click.format_filename(local_filepath)
    click.secho(message=f"Writing: {formatted_path}", fg="green")
