# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information

"""Regex-level API.

These functions take typed regexes (built with :mod:`swh.tyre.core` or
:func:`r`) and exchange plain Python values (see
:func:`swh.tyre.values.to_python`). Machines are compiled on first use and
cached per regex object.

:func:`parse` returns ``None`` when the input does not match; for regexes of
an optional shape, whose absent value is also ``None``, use :func:`match` to
tell both apart.
"""

from functools import lru_cache
from typing import Any, Callable, Iterable, Iterator, List, Optional, Tuple

from swh.tyre import runtime
from swh.tyre.compiler import compile
from swh.tyre.core import TypedRegex, is_consuming
from swh.tyre.exc import NotConsuming
from swh.tyre.literal import compile_literal
from swh.tyre.machine import MooreMachine
from swh.tyre.values import to_python


def r(literal: str) -> TypedRegex:
    """Typed regex of a regex literal.

    Raises:
        MalformedLiteral: if ``literal`` does not parse.
    """
    return compile_literal(literal)[1]


@lru_cache(maxsize=256)
def machine(re: TypedRegex) -> MooreMachine:
    return compile(re)


def _host(re: TypedRegex, value) -> Any:
    return None if value is None else to_python(value, re.shape)


def _consuming(re: TypedRegex) -> MooreMachine:
    if not is_consuming(re):
        raise NotConsuming()
    return machine(re)


def match(re: TypedRegex, text: str, checked: bool = False) -> bool:
    return runtime.match(machine(re), text, checked)


def parse(re: TypedRegex, text: str, checked: bool = False) -> Optional[Any]:
    return _host(re, runtime.run_full(machine(re), text, checked))


def parse_prefix(
    re: TypedRegex, text: str, greedy: bool = True, checked: bool = False
) -> Tuple[Optional[Any], str]:
    result, rest = runtime.parse_prefix(machine(re), text, greedy, checked)
    return _host(re, result.value), rest


def disjoint_matches(
    re: TypedRegex, text: str, greedy: bool = True, checked: bool = False
) -> Tuple[List[Tuple[str, Any]], str]:
    """All non-overlapping matches of ``re`` in ``text``, left to right.

    Raises:
        NotConsuming: if ``re`` may match the empty string.
    """
    found, rest = runtime.disjoint_matches(_consuming(re), text, greedy, checked)
    return [(matched, _host(re, value)) for matched, value in found], rest


def substitute(
    re: TypedRegex,
    text: str,
    replacer: Callable[[Any], str],
    greedy: bool = True,
    checked: bool = False,
) -> str:
    """Replace every match of ``re`` in ``text`` by ``replacer(parse tree)``.

    Raises:
        NotConsuming: if ``re`` may match the empty string.
    """
    return runtime.substitute(
        _consuming(re), text, lambda value: replacer(_host(re, value)), greedy, checked
    )


def get_token(
    re: TypedRegex, stream: Iterable[str], greedy: bool = True, checked: bool = False
) -> Tuple[Optional[Any], runtime.CharStream]:
    value, rest = runtime.get_token(machine(re), stream, greedy, checked)
    return _host(re, value), rest


def tokens(
    re: TypedRegex, stream: Iterable[str], greedy: bool = True, checked: bool = False
) -> Iterator[Any]:
    for value in runtime.tokens(machine(re), stream, greedy, checked):
        yield _host(re, value)
