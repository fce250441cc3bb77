# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information

import io

import pytest

from swh.tyre import bench, runtime
from swh.tyre.bench import (
    Bench,
    alt_balanced,
    alt_spine,
    concat_chain,
    family_case,
    mean_parse_times,
    measure,
)
from swh.tyre.compiler import compile
from swh.tyre.constants import BENCH_FAMILIES
from swh.tyre.literal import Alt, Concat, Exactly, render


def test_generated_regexes():
    assert render(concat_chain(3)) == "(a(aa))"
    assert render(alt_spine(3)) == "((a|a)|a)"
    assert render(alt_balanced(4)) == "((a|a)|(a|a))"
    assert alt_balanced(1) == Exactly("a")


def _depth(re):
    if isinstance(re, (Alt, Concat)):
        return 1 + max(_depth(c) for c in re.children)
    return 0


def test_balanced_alternation_is_shallow():
    assert _depth(alt_spine(64)) == 63
    assert _depth(alt_balanced(64)) == 6
    assert _depth(alt_balanced(100)) == 7


@pytest.mark.parametrize("family", BENCH_FAMILIES)
def test_family_cases_match_their_input(family):
    build, text = family_case(family, 16)
    assert runtime.match(compile(build()), text)


@pytest.mark.parametrize(
    "family,n", [("nope", 10), ("star", 0), ("alt", -1)], ids=["family", "zero", "neg"]
)
def test_family_case_errors(family, n):
    with pytest.raises(ValueError):
        family_case(family, n)


def test_measure(mocker):
    mocker.patch.object(bench.time, "perf_counter_ns", side_effect=[100, 250, 1000])
    assert measure("star", 10) == (150, 750)


def test_bench_rows(mocker):
    measure = mocker.patch("swh.tyre.bench.measure", return_value=(5, 7))
    rows = Bench("star2", [10, 20], samples=3).rows()
    assert list(rows) == [
        ("star2", n, sample, 5, 7) for n in (10, 20) for sample in range(3)
    ]
    assert measure.call_count == 6


def test_bench_run_writes_csv(mocker):
    mocker.patch("swh.tyre.bench.measure", side_effect=[(1, 2), (3, 4)])
    out = io.StringIO()
    rows = Bench("alt", [10], samples=2).run(out)
    assert rows == [("alt", 10, 0, 1, 2), ("alt", 10, 1, 3, 4)]
    assert out.getvalue() == (
        "family,n,sample,compile_ns,parse_ns\nalt,10,0,1,2\nalt,10,1,3,4\n"
    )


def test_bench_errors():
    with pytest.raises(ValueError, match="unknown benchmark family"):
        Bench("nope", [10])
    with pytest.raises(ValueError, match="at least one sample"):
        Bench("star", [10], samples=0)


def test_mean_parse_times():
    rows = [("star", 10, 0, 0, 4), ("star", 10, 1, 0, 6), ("star", 20, 0, 0, 9)]
    assert mean_parse_times(rows) == {10: 5.0, 20: 9.0}


def test_deep_concatenation():
    # deeper than the default interpreter recursion limit
    rows = Bench("concat", [2000], samples=1).run()
    assert len(rows) == 1


def _ratio(family, n0, samples):
    times = mean_parse_times(Bench(family, [n0, 4 * n0], samples).rows())
    return times[4 * n0] / times[n0]


@pytest.mark.tyre_bench
def test_star2_parsing_is_linear(bench_options):
    assert _ratio("star2", bench_options["n0"], bench_options["samples"]) <= 6


@pytest.mark.tyre_bench
def test_alternation_parsing_is_superlinear(bench_options):
    n0, samples = bench_options["alt_n0"], bench_options["samples"]
    ungrouped = _ratio("alt", n0, samples)
    assert ungrouped >= 8
    assert _ratio("alt-grouped", n0, samples) < ungrouped
