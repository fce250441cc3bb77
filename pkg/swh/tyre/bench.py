# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information

"""Parsing-time benchmarks over families of generated regexes.

=======================  ===========================  =========
family                   regex                        input
=======================  ===========================  =========
concat                   ``a`` repeated n times       a^n
star                     ``a*``                       a^n
star2                    ``((a*c)|a)*b``              a^n b
alt                      n-way ``a|a|...``, nested    a
                         on the left
alt-balanced             n-way ``a|a|...``, balanced  a
alt-grouped              ``alt`` under ``ignore``     a
alt-balanced-grouped     ``alt-balanced`` under       a
                         ``ignore``
=======================  ===========================  =========

Compilation and parsing are timed separately, in nanoseconds, and written
as CSV rows ``family,n,sample,compile_ns,parse_ns``.
"""

import csv
import logging
import time
from typing import Callable, Dict, Iterable, List, Optional, TextIO, Tuple, cast

from swh.tyre import core, runtime
from swh.tyre.compiler import compile
from swh.tyre.constants import (
    BENCH_CSV_COLUMNS,
    BENCH_FAMILIES,
    DEFAULT_BENCH_SAMPLES,
    DEFAULT_RECURSION_LIMIT,
    BenchFamily,
)
from swh.tyre.literal import (
    Alt,
    Concat,
    Exactly,
    UntypedRegex,
    from_untyped,
    parse_literal,
)
from swh.tyre.utils import deep_recursion

logger = logging.getLogger(__name__)


def concat_chain(n: int) -> UntypedRegex:
    re: UntypedRegex = Exactly("a")
    for _ in range(n - 1):
        re = Concat(Exactly("a"), re)
    return re


def alt_spine(n: int) -> UntypedRegex:
    re: UntypedRegex = Exactly("a")
    for _ in range(n - 1):
        re = Alt(re, Exactly("a"))
    return re


def alt_balanced(n: int) -> UntypedRegex:
    if n == 1:
        return Exactly("a")
    return Alt(alt_balanced(n // 2), alt_balanced(n - n // 2))


def family_case(
    family: BenchFamily, n: int
) -> Tuple[Callable[[], core.TypedRegex], str]:
    """Regex builder and input text of ``family`` at size ``n``.

    Raises:
        ValueError: on an unknown family or a size below 1.
    """
    if n < 1:
        raise ValueError("benchmark sizes must be positive, got %d" % n)
    cases: Dict[str, Tuple[Callable[[], core.TypedRegex], str]] = {
        "concat": (lambda: from_untyped(concat_chain(n)), "a" * n),
        "star": (lambda: from_untyped(parse_literal("a*")), "a" * n),
        "star2": (lambda: from_untyped(parse_literal("((a*c)|a)*b")), "a" * n + "b"),
        "alt": (lambda: from_untyped(alt_spine(n)), "a"),
        "alt-balanced": (lambda: from_untyped(alt_balanced(n)), "a"),
        "alt-grouped": (lambda: core.ignore(from_untyped(alt_spine(n))), "a"),
        "alt-balanced-grouped": (
            lambda: core.ignore(from_untyped(alt_balanced(n))),
            "a",
        ),
    }
    if family not in cases:
        raise ValueError(
            "unknown benchmark family %r, expected one of %s"
            % (family, ", ".join(BENCH_FAMILIES))
        )
    return cases[family]


def measure(family: BenchFamily, n: int) -> Tuple[int, int]:
    """Time one compilation and one parse; return both in nanoseconds."""
    build, text = family_case(family, n)
    start = time.perf_counter_ns()
    m = compile(build())
    compiled = time.perf_counter_ns()
    value = runtime.run_full(m, text)
    parsed = time.perf_counter_ns()
    if value is None:
        raise RuntimeError(f"{family} regex of size {n} rejected its own input")
    return compiled - start, parsed - compiled


class Bench:
    def __init__(
        self,
        family: str,
        sizes: Iterable[int],
        samples: int = DEFAULT_BENCH_SAMPLES,
        recursion_limit: int = DEFAULT_RECURSION_LIMIT,
    ):
        if family not in BENCH_FAMILIES:
            raise ValueError(
                "unknown benchmark family %r, expected one of %s"
                % (family, ", ".join(BENCH_FAMILIES))
            )
        if samples < 1:
            raise ValueError("at least one sample is needed, got %d" % samples)
        self.family = cast(BenchFamily, family)
        self.sizes = list(sizes)
        self.samples = samples
        self.recursion_limit = recursion_limit

    def rows(self) -> Iterable[Tuple[str, int, int, int, int]]:
        with deep_recursion(self.recursion_limit):
            for n in self.sizes:
                for sample in range(self.samples):
                    compile_ns, parse_ns = measure(self.family, n)
                    logger.info(
                        f"{self.family} n={n} sample={sample}: "
                        f"compile {compile_ns}ns, parse {parse_ns}ns"
                    )
                    yield self.family, n, sample, compile_ns, parse_ns

    def run(self, out: Optional[TextIO] = None) -> List[Tuple[str, int, int, int, int]]:
        """Run every sample; write the CSV to ``out`` when given."""
        writer = None
        if out is not None:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(BENCH_CSV_COLUMNS)
        result = []
        for row in self.rows():
            if writer is not None:
                writer.writerow(row)
                out.flush()  # type: ignore[union-attr]
            result.append(row)
        return result


def mean_parse_times(
    rows: Iterable[Tuple[str, int, int, int, int]]
) -> Dict[int, float]:
    """Mean parse time per size."""
    totals: Dict[int, List[int]] = {}
    for _, n, _, _, parse_ns in rows:
        totals.setdefault(n, []).append(parse_ns)
    return {n: sum(times) / len(times) for n, times in totals.items()}
