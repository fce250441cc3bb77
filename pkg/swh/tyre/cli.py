# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information

import contextlib
import logging

# WARNING: do not import unnecessary things here to keep cli startup time under
# control
import os

import click

from swh.core.cli import CONTEXT_SETTINGS
from swh.core.cli import swh as swh_cli_group


class CommandError(click.ClickException):
    """Regex or I/O failure; exits with status 2."""

    exit_code = 2


@contextlib.contextmanager
def reported_errors():
    from swh.tyre.exc import Error

    try:
        yield
    except KeyError as e:
        raise CommandError(e.args[0])
    except (Error, OSError, ValueError) as e:
        raise CommandError(str(e))


@swh_cli_group.group(name="tyre", context_settings=CONTEXT_SETTINGS)
@click.option(
    "--config-file",
    "-C",
    default=None,
    type=click.Path(
        exists=True,
        dir_okay=False,
    ),
    help="Configuration file.",
)
@click.option(
    "--checked/--unchecked",
    default=None,
    help="Verify machine shapes and stacks while running (default from config)",
)
@click.pass_context
def tyre_cli_group(ctx, config_file, checked):
    """Typed regular expression tools."""
    from swh.tyre.config import DEFAULT_CONFIG, load_and_check_config

    if not config_file:
        config_file = os.environ.get("SWH_CONFIG_FILENAME")

    if config_file:
        with reported_errors():
            conf = load_and_check_config(config_file)
    else:
        conf = dict(DEFAULT_CONFIG)

    if checked is not None:
        conf["checked"] = checked

    ctx.ensure_object(dict)

    ctx.obj["config"] = conf


input_option = click.option(
    "--input",
    "input_file",
    type=click.File("r", encoding="utf-8"),
    default="-",
    show_default=True,
    help="Input file",
)
greedy_option = click.option(
    "--greedy/--no-greedy",
    default=None,
    help="Longest (default from config) or shortest matches",
)


def _greedy(ctx, greedy):
    return ctx.obj["config"]["greedy"] if greedy is None else greedy


def _compile(ctx, literal):
    """Typed regex and machine of ``literal``."""
    from swh.tyre.machine import check_machine
    from swh.tyre.tyre import machine, r

    typed = r(literal)
    m = machine(typed)
    if ctx.obj["config"]["checked"]:
        check_machine(m)
    return typed, m


def _recursion(ctx):
    from swh.tyre.utils import deep_recursion

    return deep_recursion(ctx.obj["config"]["recursion_limit"])


def _strip_newline(text):
    return text[:-1] if text.endswith("\n") else text


def _lines(text):
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def _json(value):
    import json

    from swh.tyre.values import value_to_json

    return json.dumps(value_to_json(value), ensure_ascii=False)


@tyre_cli_group.command("match")
@click.argument("regex")
@input_option
@click.option("--line", is_flag=True, help="Match each line, print matching ones")
@click.pass_context
def match(ctx, regex, input_file, line):
    """Check that the input matches REGEX.

    Exits with status 0 on a match, 1 otherwise.
    """
    from swh.tyre import runtime

    checked = ctx.obj["config"]["checked"]
    with reported_errors(), _recursion(ctx):
        _, m = _compile(ctx, regex)
        text = input_file.read()
        if not line:
            matched = runtime.match(m, _strip_newline(text), checked)
        else:
            matched = False
            for current in _lines(text):
                if runtime.match(m, current, checked):
                    click.echo(current)
                    matched = True
                else:
                    logging.debug("no match: %r", current)
    ctx.exit(0 if matched else 1)


@tyre_cli_group.command("parse")
@click.argument("regex")
@input_option
@click.option(
    "--json/--render",
    "as_json",
    default=True,
    help="Print the parse tree as JSON (default) or in trace notation",
)
@click.pass_context
def parse(ctx, regex, input_file, as_json):
    """Parse the input with REGEX and print the parse tree."""
    from swh.tyre import runtime
    from swh.tyre.values import render_value

    with reported_errors(), _recursion(ctx):
        _, m = _compile(ctx, regex)
        value = runtime.run_full(
            m, _strip_newline(input_file.read()), ctx.obj["config"]["checked"]
        )
    if value is None:
        click.echo("no match")
        ctx.exit(1)
    click.echo(_json(value) if as_json else render_value(value))


def expand_template(template, matched, value):
    """Replace ``$json`` by the JSON parse tree and ``$0`` by the match."""
    return _json(value).join(
        part.replace("$0", matched) for part in template.split("$json")
    )


@tyre_cli_group.command("substitute")
@click.argument("regex")
@click.option("--template", required=True, help="Replacement; $0 and $json expand")
@input_option
@greedy_option
@click.pass_context
def substitute(ctx, regex, template, input_file, greedy):
    """Replace every match of REGEX in each input line."""
    from swh.tyre import runtime

    greedy = _greedy(ctx, greedy)
    checked = ctx.obj["config"]["checked"]
    with reported_errors(), _recursion(ctx):
        _, m = _compile(ctx, regex)
        for current in _lines(input_file.read()):
            found, rest = runtime.segments(m, current, greedy, checked)
            click.echo(
                "".join(
                    s.gap + expand_template(template, s.matched, s.value)
                    for s in found
                )
                + rest
            )


@tyre_cli_group.command("tokenize")
@click.argument("regex")
@input_option
@greedy_option
@click.pass_context
def tokenize(ctx, regex, input_file, greedy):
    """Split the input into consecutive REGEX tokens, one JSON value per line.

    Stops at the first position where no token starts.
    """
    from swh.tyre import runtime

    greedy = _greedy(ctx, greedy)
    with reported_errors(), _recursion(ctx):
        _, m = _compile(ctx, regex)
        chars = iter(lambda: input_file.read(1), "")
        for value in runtime.tokens(m, chars, greedy, ctx.obj["config"]["checked"]):
            click.echo(_json(value))


@tyre_cli_group.command("dump")
@click.argument("regex")
@click.option("--dump", "what", flag_value="machine", default=True, help="Machine")
@click.option(
    "--dump-nfa", "what", flag_value="nfa", help="Group NFA, unmerged and merged"
)
@click.option("--trace", "trace_input", default=None, help="Trace parsing this text")
@click.pass_context
def dump(ctx, regex, what, trace_input):
    """Print the machine of REGEX as JSON, or an execution trace."""
    import json

    from swh.tyre import group, runtime
    from swh.tyre.machine import dump_machine

    with reported_errors(), _recursion(ctx):
        typed, m = _compile(ctx, regex)
        if trace_input is not None:
            click.echo("step\tchar\tfrom\tto\tinstruction\tstack")
            for row in runtime.trace(m, trace_input):
                click.echo(
                    "\t".join(
                        [
                            str(row.step),
                            "" if row.char is None else row.char,
                            "init" if row.step == 0 else str(row.source),
                            "accept" if row.target is None else str(row.target),
                            row.instruction,
                            row.stack,
                        ]
                    )
                )
        elif what == "nfa":
            nfa = group.build_nfa(typed)
            document = {
                "before": group.dump_nfa(nfa),
                "after": group.dump_nfa(group.merge_states(nfa)),
            }
            click.echo(json.dumps(document, ensure_ascii=False))
        else:
            click.echo(json.dumps(dump_machine(m), ensure_ascii=False))


def _sizes(ctx, param, value):
    try:
        sizes = [int(v) for v in value.replace(",", " ").split()]
    except ValueError:
        raise click.BadParameter("sizes must be integers")
    if not sizes or min(sizes) < 1:
        raise click.BadParameter("sizes must be positive integers")
    return sizes


@tyre_cli_group.command("bench")
@click.option(
    "--family",
    required=True,
    help="Regex family: concat, star, star2, alt, alt-balanced, alt-grouped "
    "or alt-balanced-grouped",
)
@click.option(
    "--sizes",
    default="1000 2000 4000",
    show_default=True,
    callback=_sizes,
    help="Sizes n, separated by spaces or commas",
)
@click.option("--samples", type=int, default=None, help="Samples per size")
@click.option(
    "--out",
    type=click.File("w"),
    default="-",
    show_default=True,
    help="CSV output file",
)
@click.pass_context
def bench(ctx, family, sizes, samples, out):
    """Time compiling and parsing a family of generated regexes."""
    from swh.tyre.bench import Bench

    if samples is None:
        samples = ctx.obj["config"]["bench"]["samples"]
    with reported_errors():
        Bench(
            family, sizes, samples, ctx.obj["config"]["recursion_limit"]
        ).run(out)


def main():
    return tyre_cli_group(auto_envvar_prefix="SWH_TYRE")


if __name__ == "__main__":
    main()
