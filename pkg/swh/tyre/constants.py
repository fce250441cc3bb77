# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information

from typing import Tuple

from typing_extensions import Literal, get_args

SPECIAL_CHARS = "()[]|?*+.!\\"
"""Characters with a meaning in regex literals; a backslash escapes them."""

ESCAPABLE_CHARS = SPECIAL_CHARS + "-"
"""Characters accepted after a backslash (``-`` for bracket classes)."""

POSTFIX_OPERATORS = "?*+!"

MIN_CHAR = "\u0000"
MAX_CHAR = "\U0010ffff"
"""Bounds of the condition used for ``.``"""

DEFAULT_GREEDY = True
"""Default prefix mode of tokenisation and substitution."""

DEFAULT_RECURSION_LIMIT = 100000
"""Recursion limit used while compiling and running deep regexes."""

DEFAULT_BENCH_SAMPLES = 20
"""Number of timing samples per input size."""

BenchFamily = Literal[
    "concat",
    "star",
    "star2",
    "alt",
    "alt-balanced",
    "alt-grouped",
    "alt-balanced-grouped",
]

BENCH_FAMILIES: Tuple[str, ...] = get_args(BenchFamily)

BENCH_CSV_COLUMNS = ("family", "n", "sample", "compile_ns", "parse_ns")
