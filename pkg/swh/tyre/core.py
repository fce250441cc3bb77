# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information

"""Typed regexes: character conditions, the core AST and smart constructors.

Every :class:`TypedRegex` node knows the :class:`~swh.tyre.values.Shape` of
the parse trees it yields (its ``shape`` attribute). Nodes are immutable and
compared by identity, since they may hold opaque conversion functions.

Conversions (:class:`Conv`) and predicates (:class:`PredC`) must be free of
side effects. Digits yield arbitrary-precision Python integers.
"""

from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Any, Callable, Optional, Union

from swh.tyre.constants import MAX_CHAR, MIN_CHAR
from swh.tyre.exc import ShapeMismatch
from swh.tyre.values import (
    ABSENT,
    CHAR,
    EMPTY_LIST,
    NAT,
    STRING,
    UNIT,
    UNIT_VALUE,
    ListS,
    OptionS,
    PairS,
    ParseValue,
    Shape,
    SumS,
    VBool,
    VLeft,
    VNat,
    VPair,
    VRight,
    from_python,
    to_python,
)


@dataclass(frozen=True)
class OneOfC:
    """Any of the given characters; kept sorted and deduplicated."""

    chars: str

    def __post_init__(self):
        if not self.chars:
            raise ValueError("empty character set")
        object.__setattr__(self, "chars", "".join(sorted(set(self.chars))))

    def __str__(self):
        return self.chars


@dataclass(frozen=True)
class RangeC:
    lo: str
    hi: str

    def __post_init__(self):
        if len(self.lo) != 1 or len(self.hi) != 1:
            raise ValueError("range bounds must be single characters")
        if self.lo > self.hi:
            raise ValueError("bad character range %r-%r" % (self.lo, self.hi))

    def __str__(self):
        return "%s-%s" % (self.lo, self.hi)


@dataclass(frozen=True, eq=False)
class PredC:
    """Opaque predicate; never equal to another condition."""

    fn: Callable[[str], bool]
    name: str = "<pred>"

    def __str__(self):
        return self.name


CharCond = Union[OneOfC, RangeC, PredC]


def satisfies(cond: CharCond, char: str) -> bool:
    if isinstance(cond, OneOfC):
        return char in cond.chars
    if isinstance(cond, RangeC):
        return cond.lo <= char <= cond.hi
    return bool(cond.fn(char))


class TypedRegex:
    """Base class of the typed regex AST nodes."""

    shape: Shape


@dataclass(frozen=True, eq=False)
class Empty(TypedRegex):
    """Regex for the empty word."""

    @property
    def shape(self) -> Shape:
        return UNIT


@dataclass(frozen=True, eq=False)
class MatchChar(TypedRegex):
    cond: CharCond

    @property
    def shape(self) -> Shape:
        return CHAR


@dataclass(frozen=True, eq=False)
class Seq(TypedRegex):
    fst: TypedRegex
    snd: TypedRegex

    @cached_property
    def shape(self) -> Shape:
        return PairS(self.fst.shape, self.snd.shape)


@dataclass(frozen=True, eq=False)
class AltT(TypedRegex):
    left: TypedRegex
    right: TypedRegex

    @cached_property
    def shape(self) -> Shape:
        return SumS(self.left.shape, self.right.shape)


@dataclass(frozen=True, eq=False)
class Rep(TypedRegex):
    """Kleene star."""

    inner: TypedRegex

    @cached_property
    def shape(self) -> Shape:
        return ListS(self.inner.shape)


@dataclass(frozen=True, eq=False)
class Conv(TypedRegex):
    """Shape transformation applied to the parse tree of ``inner``."""

    inner: TypedRegex
    fn: Callable[[ParseValue], ParseValue]
    into: Shape
    name: str = field(default="conv")

    @property
    def shape(self) -> Shape:
        return self.into


@dataclass(frozen=True, eq=False)
class Group(TypedRegex):
    """Forfeit structured parsing and yield the matched substring."""

    inner: TypedRegex

    @property
    def shape(self) -> Shape:
        return STRING


# conversions


def const_unit(value: ParseValue) -> ParseValue:
    return UNIT_VALUE


def first(value: ParseValue) -> ParseValue:
    return value.fst  # type: ignore[union-attr]


def second(value: ParseValue) -> ParseValue:
    return value.snd  # type: ignore[union-attr]


def identity(value: ParseValue) -> ParseValue:
    return value


def collapse(value: ParseValue) -> ParseValue:
    return value.value  # type: ignore[union-attr]


def char_to_nat(value: ParseValue) -> ParseValue:
    return VNat(ord(value.char) - ord("0"))  # type: ignore[union-attr]


def prepend(value: ParseValue) -> ParseValue:
    return value.snd.cons(value.fst)  # type: ignore[union-attr]


def length(value: ParseValue) -> ParseValue:
    return VNat(len(value))  # type: ignore[arg-type]


def sum_to_bool(value: ParseValue) -> ParseValue:
    return VBool(isinstance(value, VLeft))


def swap_option(value: ParseValue) -> ParseValue:
    if isinstance(value, VLeft):
        return ABSENT
    return VLeft(value.value)  # type: ignore[union-attr]


def option_to_list(value: ParseValue) -> ParseValue:
    if isinstance(value, VLeft):
        return value.value
    return EMPTY_LIST


# smart constructors


def conv(
    re: TypedRegex, fn: Callable[[ParseValue], ParseValue], into: Shape, name="conv"
) -> TypedRegex:
    return Conv(re, fn, into, name)


def map(f: Callable[[Any], Any], re: TypedRegex, shape: Optional[Shape] = None):
    """Apply the host-level function ``f`` to the parse trees of ``re``.

    ``f`` receives and returns plain Python values (see
    :func:`swh.tyre.values.to_python`); ``shape`` describes its result and
    defaults to the shape of ``re``.
    """
    source = re.shape
    into = source if shape is None else shape

    def apply(value: ParseValue) -> ParseValue:
        return from_python(f(to_python(value, source)), into)

    return Conv(re, apply, into, getattr(f, "__name__", "map"))


def alt(left: TypedRegex, right: TypedRegex) -> TypedRegex:
    return AltT(left, right)


def or_(left: TypedRegex, right: TypedRegex) -> TypedRegex:
    """Untagged alternation of two regexes with the same shape."""
    if left.shape != right.shape:
        raise ShapeMismatch(left.shape, right.shape)
    return Conv(AltT(left, right), collapse, left.shape, "collapse")


def seq(fst: TypedRegex, snd: TypedRegex) -> TypedRegex:
    return Seq(fst, snd)


def discard_left(left: TypedRegex, right: TypedRegex) -> TypedRegex:
    return Conv(Seq(left, right), second, right.shape, "snd")


def discard_right(left: TypedRegex, right: TypedRegex) -> TypedRegex:
    return Conv(Seq(left, right), first, left.shape, "fst")


def empty() -> TypedRegex:
    return Empty()


def one_of(chars: str) -> TypedRegex:
    return MatchChar(OneOfC(chars))


def char_range(lo: str, hi: str) -> TypedRegex:
    return MatchChar(RangeC(lo, hi))


def any_char() -> TypedRegex:
    return MatchChar(RangeC(MIN_CHAR, MAX_CHAR))


def pred(fn: Callable[[str], bool], name: str = "<pred>") -> TypedRegex:
    return MatchChar(PredC(fn, name))


def match_char(char: str) -> TypedRegex:
    return Conv(MatchChar(OneOfC(char)), const_unit, UNIT, "unit")


def digit() -> TypedRegex:
    return Conv(MatchChar(RangeC("0", "9")), char_to_nat, NAT, "digit")


def text(s: str) -> TypedRegex:
    """Match exactly ``s``, yielding unit."""
    if not s:
        return Empty()
    return reduce(
        lambda acc, char: discard_left(match_char(char), acc),
        reversed(s[:-1]),
        match_char(s[-1]),
    )


def rep0(re: TypedRegex) -> TypedRegex:
    return Rep(re)


def rep1(re: TypedRegex) -> TypedRegex:
    return Conv(Seq(re, Rep(re)), prepend, ListS(re.shape), "cons")


def opt(re: TypedRegex) -> TypedRegex:
    return Conv(AltT(re, Empty()), identity, OptionS(re.shape), "option")


def ignore(re: TypedRegex) -> TypedRegex:
    return Group(re)


def is_consuming(re: TypedRegex) -> bool:
    """Whether ``re`` only matches non-empty strings."""
    if isinstance(re, Empty):
        return False
    if isinstance(re, MatchChar):
        return True
    if isinstance(re, Seq):
        return is_consuming(re.fst) or is_consuming(re.snd)
    if isinstance(re, AltT):
        return is_consuming(re.left) and is_consuming(re.right)
    if isinstance(re, Rep):
        return False
    if isinstance(re, (Conv, Group)):
        return is_consuming(re.inner)
    raise TypeError("not a typed regex: %r" % (re,))


def inject_left(value: ParseValue) -> ParseValue:
    return VLeft(value)


def inject_right(value: ParseValue) -> ParseValue:
    return VRight(value)


def make_pair(x: ParseValue, y: ParseValue) -> ParseValue:
    return VPair(x, y)


def snoc_item(xs: ParseValue, x: ParseValue) -> ParseValue:
    return xs.snoc(x)  # type: ignore[union-attr]

