# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information

import random

import pytest

from swh.tyre.exc import MalformedLiteral
from swh.tyre.literal import (
    Alt,
    Any,
    Concat,
    Epsilon,
    Exactly,
    Keep,
    OneOf,
    Optional,
    Rep0,
    Rep1,
    To,
    compile_literal,
    from_untyped,
    keep,
    keep_shape,
    parse_literal,
    render,
    shape,
    simplify,
)
from swh.tyre.values import (
    BOOL,
    CHAR,
    NAT,
    UNIT,
    ListS,
    OptionS,
    PairS,
    SumS,
)

from .regex_testing import (
    all_untyped,
    oracle_match,
    random_literal_ast,
    random_untyped,
    strings,
    typed_match,
)

A, B, C = Exactly("a"), Exactly("b"), Exactly("c")


@pytest.mark.parametrize(
    "text,expected",
    [
        ("a", A),
        ("ab", Concat(A, B)),
        ("abc", Concat(A, Concat(B, C))),
        ("a|b|c", Alt(A, Alt(B, C))),
        ("ab|c", Alt(Concat(A, B), C)),
        ("", Epsilon()),
        ("a|", Alt(A, Epsilon())),
        ("()", Epsilon()),
        ("a*?", Optional(Rep0(A))),
        ("a+!", Keep(Rep1(A))),
        ("a!!", Keep(A)),
        (".", Any()),
        ("[a-z]", To("a", "z")),
        ("[ba]", OneOf("ab")),
        ("[a-cx]", OneOf("abcx")),
        ("[a-a]", To("a", "a")),
        ("[a-]", OneOf("-a")),
        ("[-a]", OneOf("-a")),
        ("[\\]\\-]", OneOf("-]")),
        ("\\(\\*", Concat(Exactly("("), Exactly("*"))),
        ("a-b", Concat(A, Concat(Exactly("-"), B))),
        ("(a|b)c", Concat(Alt(A, B), C)),
    ],
)
def test_parse_literal(text, expected):
    assert parse_literal(text) == expected


@pytest.mark.parametrize(
    "text,position,message",
    [
        ("(ab", 0, "unbalanced parenthesis"),
        ("ab)", 2, "unbalanced parenthesis"),
        ("[ab", 0, "unbalanced bracket"),
        ("a]", 1, "unbalanced bracket"),
        ("*a", 0, "dangling postfix operator"),
        ("a|+", 2, "dangling postfix operator"),
        ("(?)", 1, "dangling postfix operator"),
        ("ab\\", 3, "trailing backslash"),
        ("\\q", 1, "bad escape"),
        ("[]", 0, "empty bracket class"),
        ("a[z-a]", 2, "bad range"),
    ],
)
def test_parse_literal_malformed(text, position, message):
    with pytest.raises(MalformedLiteral, match=message) as excinfo:
        parse_literal(text)
    assert excinfo.value.position == position
    assert str(excinfo.value).startswith(
        "malformed regex literal at position %d" % position
    )


def test_render():
    assert render(parse_literal("ab|c*")) == "((ab)|(c)*)"
    assert render(parse_literal("[0-9]+!")) == "(([0-9])+)!"
    assert render(OneOf("-]a")) == "[\\-\\]a]"
    assert render(Exactly("|")) == "\\|"
    assert render(Exactly("-")) == "-"
    assert render(Epsilon()) == "()"


def test_render_parse_round_trip():
    rng = random.Random(0x7E5)
    for _ in range(1000):
        re = random_literal_ast(rng, 4)
        assert parse_literal(render(re)) == re, render(re)


def test_keep_is_idempotent():
    assert keep(keep(A)) == Keep(A)
    assert parse_literal("((a)!)!") == Keep(A)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("a", UNIT),
        ("[0-9]!", CHAR),
        ("A[0-9]!", CHAR),
        ("a!*", NAT),
        ("(a*)!", NAT),
        ("(a|b)!", BOOL),
        ("([a-z]|b)!", OptionS(CHAR)),
        ("(b|[a-z])!", OptionS(CHAR)),
        ("([a-z]*|b)!", ListS(CHAR)),
        ("([a-z]?)!", OptionS(CHAR)),
        ("(a?)!", OptionS(UNIT)),
        ("([a-z][0-9])!", PairS(CHAR, CHAR)),
        ("([a-z]|[0-9])!", SumS(CHAR, CHAR)),
        ("[a-z]![0-9]!", PairS(CHAR, CHAR)),
        ("(a!)(b!)", UNIT),
        ("([a]!)([b]!)", PairS(CHAR, CHAR)),
        ("((([a-z])+)!)|(hj)", ListS(CHAR)),
        (
            "((ab*[vkw]([a-z])+)|(hj))!",
            OptionS(PairS(NAT, PairS(CHAR, ListS(CHAR)))),
        ),
        ("(([0-9]!)([0-9]!)?):(([0-9])([0-9]))", PairS(CHAR, OptionS(CHAR))),
    ],
)
def test_shape(text, expected):
    re = parse_literal(text)
    assert shape(re) == expected
    assert compile_literal(text)[0] == expected


def test_keep_shape():
    assert keep_shape(parse_literal("a")) == UNIT
    assert keep_shape(parse_literal("[a-z]b")) == CHAR
    assert keep_shape(parse_literal("[a-z]+")) == ListS(CHAR)


@pytest.mark.parametrize(
    "raw,expected",
    [
        (PairS(UNIT, UNIT), UNIT),
        (PairS(CHAR, UNIT), CHAR),
        (PairS(UNIT, NAT), NAT),
        (ListS(UNIT), NAT),
        (SumS(UNIT, UNIT), BOOL),
        (SumS(CHAR, UNIT), OptionS(CHAR)),
        (SumS(UNIT, CHAR), OptionS(CHAR)),
        (OptionS(ListS(CHAR)), ListS(CHAR)),
        (SumS(ListS(CHAR), UNIT), ListS(CHAR)),
        (ListS(PairS(UNIT, UNIT)), NAT),
        (PairS(PairS(UNIT, UNIT), SumS(UNIT, UNIT)), BOOL),
        (OptionS(UNIT), OptionS(UNIT)),
        (SumS(CHAR, NAT), SumS(CHAR, NAT)),
    ],
)
def test_simplify(raw, expected):
    assert simplify(raw) == expected
    assert simplify(expected) == expected


def test_lowering_agrees_with_shape():
    for re in all_untyped(2):
        assert from_untyped(re).shape == shape(re), render(re)


def test_lowering_agrees_with_matching():
    texts = strings(3)
    for re in all_untyped(2):
        typed = from_untyped(re)
        for text in texts:
            expected = oracle_match(re, text)
            assert typed_match(typed, text) == expected, (render(re), text)


def _descriptors(depth):
    if depth == 0:
        return [UNIT, CHAR, NAT]
    smaller = _descriptors(depth - 1)
    found = list(smaller)
    found += [OptionS(s) for s in smaller] + [ListS(s) for s in smaller]
    found += [PairS(a, b) for a in smaller for b in smaller]
    found += [SumS(a, b) for a in smaller for b in smaller]
    return found


def test_simplify_is_idempotent():
    for raw in _descriptors(2):
        once = simplify(raw)
        assert simplify(once) == once, raw


def test_shapes_are_simplified():
    for re in all_untyped(2):
        assert simplify(shape(re)) == shape(re), render(re)


def test_random_lowering_agrees_with_matching():
    rng = random.Random(6)
    texts = strings(6)
    for _ in range(150):
        re = random_untyped(rng, 4)
        typed = from_untyped(re)
        for text in texts:
            expected = oracle_match(re, text)
            assert typed_match(typed, text) == expected, (render(re), text)
