# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information

"""Regex string literals.

Grammar, loosest binding first::

    alt     := concat ('|' alt)?
    concat  := postfix*                    (empty concat is the empty word)
    postfix := atom ('?' | '*' | '+' | '!')*
    atom    := '(' alt ')' | '[' item+ ']' | '.' | '\\' special | char
    item    := bchar ('-' bchar)?

Concatenation and alternation nest to the right. ``!`` keeps a sub-regex:
only kept parts contribute structure to the parse tree, everything else
flattens to unit.
"""

from dataclasses import dataclass
from typing import Callable, List, Tuple, Union

from swh.tyre import core
from swh.tyre.constants import (
    ESCAPABLE_CHARS,
    MAX_CHAR,
    MIN_CHAR,
    POSTFIX_OPERATORS,
    SPECIAL_CHARS,
)
from swh.tyre.exc import MalformedLiteral
from swh.tyre.values import (
    BOOL,
    CHAR,
    NAT,
    UNIT,
    ListS,
    OptionS,
    PairS,
    ParseValue,
    Shape,
    SumS,
    UnitS,
)


class UntypedRegex:
    """Base class of the literal-level regex AST."""

    @property
    def children(self) -> Tuple["UntypedRegex", ...]:
        return ()

    @property
    def has_keep(self) -> bool:
        """Whether some sub-regex is kept; computed once per node."""
        if "_has_keep" not in self.__dict__:
            _mark_keeps(self)
        return self.__dict__["_has_keep"]


def _mark_keeps(root: UntypedRegex) -> None:
    # post-order walk without recursion, for regexes nested thousands deep
    todo: List[Tuple[UntypedRegex, bool]] = [(root, False)]
    while todo:
        re, expanded = todo.pop()
        if "_has_keep" in re.__dict__:
            continue
        if not expanded:
            todo.append((re, True))
            todo.extend((child, False) for child in re.children)
            continue
        re.__dict__["_has_keep"] = isinstance(re, Keep) or any(
            child.__dict__["_has_keep"] for child in re.children
        )


@dataclass(frozen=True)
class Exactly(UntypedRegex):
    char: str


@dataclass(frozen=True)
class OneOf(UntypedRegex):
    chars: str

    def __post_init__(self):
        object.__setattr__(self, "chars", "".join(sorted(set(self.chars))))


@dataclass(frozen=True)
class To(UntypedRegex):
    lo: str
    hi: str


@dataclass(frozen=True)
class Any(UntypedRegex):
    pass


@dataclass(frozen=True)
class Epsilon(UntypedRegex):
    pass


@dataclass(frozen=True)
class Concat(UntypedRegex):
    fst: UntypedRegex
    snd: UntypedRegex

    @property
    def children(self):
        return (self.fst, self.snd)


@dataclass(frozen=True)
class Alt(UntypedRegex):
    left: UntypedRegex
    right: UntypedRegex

    @property
    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Optional(UntypedRegex):
    inner: UntypedRegex

    @property
    def children(self):
        return (self.inner,)


@dataclass(frozen=True)
class Rep0(UntypedRegex):
    inner: UntypedRegex

    @property
    def children(self):
        return (self.inner,)


@dataclass(frozen=True)
class Rep1(UntypedRegex):
    inner: UntypedRegex

    @property
    def children(self):
        return (self.inner,)


@dataclass(frozen=True)
class Keep(UntypedRegex):
    inner: UntypedRegex

    @property
    def children(self):
        return (self.inner,)


def keep(re: UntypedRegex) -> UntypedRegex:
    return re if isinstance(re, Keep) else Keep(re)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, message: str, position: int = -1):
        return MalformedLiteral(self.pos if position < 0 else position, message)

    def parse(self) -> UntypedRegex:
        re = self.alt()
        if self.pos < len(self.text):
            # only a stray ')' stops the top-level alternation early
            raise self.error("unbalanced parenthesis")
        return re

    def alt(self) -> UntypedRegex:
        left = self.concat()
        if self.peek() == "|":
            self.pos += 1
            return Alt(left, self.alt())
        return left

    def concat(self) -> UntypedRegex:
        items: List[UntypedRegex] = []
        while self.peek() not in ("", "|", ")"):
            items.append(self.postfix())
        if not items:
            return Epsilon()
        re = items.pop()
        while items:
            re = Concat(items.pop(), re)
        return re

    def postfix(self) -> UntypedRegex:
        re = self.atom()
        while self.peek() and self.peek() in POSTFIX_OPERATORS:
            op = self.peek()
            self.pos += 1
            if op == "?":
                re = Optional(re)
            elif op == "*":
                re = Rep0(re)
            elif op == "+":
                re = Rep1(re)
            else:
                re = keep(re)
        return re

    def atom(self) -> UntypedRegex:
        start = self.pos
        char = self.peek()
        if char == "(":
            self.pos += 1
            re = self.alt()
            if self.peek() != ")":
                raise self.error("unbalanced parenthesis", start)
            self.pos += 1
            return re
        if char == "[":
            return self.bracket()
        if char == "]":
            raise self.error("unbalanced bracket")
        if char == ".":
            self.pos += 1
            return Any()
        if char in POSTFIX_OPERATORS:
            raise self.error("dangling postfix operator %r" % char)
        return Exactly(self.char())

    def char(self) -> str:
        char = self.peek()
        if char == "\\":
            self.pos += 1
            char = self.peek()
            if not char:
                raise self.error("trailing backslash")
            if char not in ESCAPABLE_CHARS:
                raise self.error("bad escape \\%s" % char)
        self.pos += 1
        return char

    def bracket(self) -> UntypedRegex:
        start = self.pos
        self.pos += 1
        items: List[Tuple[str, str, bool]] = []
        while self.peek() != "]":
            if not self.peek():
                raise self.error("unbalanced bracket", start)
            item_pos = self.pos
            lo = self.char()
            if self.peek() == "-" and self.text[self.pos + 1 : self.pos + 2] not in (
                "",
                "]",
            ):
                self.pos += 1
                hi = self.char()
                if lo > hi:
                    raise self.error("bad range %s-%s" % (lo, hi), item_pos)
                items.append((lo, hi, True))
            else:
                items.append((lo, lo, False))
        self.pos += 1
        if not items:
            raise self.error("empty bracket class", start)
        if len(items) == 1 and items[0][2]:
            return To(items[0][0], items[0][1])
        return OneOf(
            "".join(chr(c) for lo, hi, _ in items for c in range(ord(lo), ord(hi) + 1))
        )


def parse_literal(text: str) -> UntypedRegex:
    """Parse a regex literal.

    Raises:
        MalformedLiteral: on unbalanced brackets or parentheses, a dangling
          postfix operator, an empty bracket class, a bad range, a bad escape
          or a trailing backslash.
    """
    return _Parser(text).parse()


def _escape(char: str, specials: str = SPECIAL_CHARS) -> str:
    return "\\" + char if char in specials else char


def render(re: UntypedRegex) -> str:
    """Render ``re`` as a fully parenthesised literal parsing back to ``re``."""
    if isinstance(re, Exactly):
        return _escape(re.char)
    if isinstance(re, OneOf):
        return "[%s]" % "".join(_escape(c, ESCAPABLE_CHARS) for c in re.chars)
    if isinstance(re, To):
        lo, hi = _escape(re.lo, ESCAPABLE_CHARS), _escape(re.hi, ESCAPABLE_CHARS)
        return "[%s-%s]" % (lo, hi)
    if isinstance(re, Any):
        return "."
    if isinstance(re, Epsilon):
        return "()"
    if isinstance(re, Concat):
        return "(%s%s)" % (render(re.fst), render(re.snd))
    if isinstance(re, Alt):
        return "(%s|%s)" % (render(re.left), render(re.right))
    postfix = {Optional: "?", Rep0: "*", Rep1: "+", Keep: "!"}
    return "(%s)%s" % (render(re.inner), postfix[type(re)])  # type: ignore


Step = Tuple[Shape, Callable[[ParseValue], ParseValue], str]


def _simplify_step(shape: Shape) -> Union[Step, None]:
    """One top-level simplification of a shape with simplified components,
    together with the parse-tree conversion realising it."""
    if isinstance(shape, PairS):
        if isinstance(shape.fst, UnitS) and isinstance(shape.snd, UnitS):
            return UNIT, core.const_unit, "unit"
        if isinstance(shape.snd, UnitS):
            return shape.fst, core.first, "fst"
        if isinstance(shape.fst, UnitS):
            return shape.snd, core.second, "snd"
    elif isinstance(shape, ListS):
        if isinstance(shape.inner, UnitS):
            return NAT, core.length, "length"
    elif isinstance(shape, SumS):
        if isinstance(shape.left, UnitS) and isinstance(shape.right, UnitS):
            return BOOL, core.sum_to_bool, "bool"
        if isinstance(shape.right, UnitS):
            return OptionS(shape.left), core.identity, "option"
        if isinstance(shape.left, UnitS):
            return OptionS(shape.right), core.swap_option, "option"
    elif isinstance(shape, OptionS):
        if isinstance(shape.inner, ListS):
            return shape.inner, core.option_to_list, "list"
    return None


def _normalise_shape(shape: Shape) -> Shape:
    step = _simplify_step(shape)
    while step is not None:
        shape = step[0]
        step = _simplify_step(shape)
    return shape


def simplify(shape: Shape) -> Shape:
    """Remove redundant units from ``shape``, bottom-up, to a fixpoint."""
    if isinstance(shape, PairS):
        shape = PairS(simplify(shape.fst), simplify(shape.snd))
    elif isinstance(shape, SumS):
        shape = SumS(simplify(shape.left), simplify(shape.right))
    elif isinstance(shape, OptionS):
        shape = OptionS(simplify(shape.inner))
    elif isinstance(shape, ListS):
        shape = ListS(simplify(shape.inner))
    return _normalise_shape(shape)


def _shape(re: UntypedRegex, kept: bool) -> Shape:
    if not kept and not re.has_keep:
        return UNIT
    if isinstance(re, Keep):
        return _shape(re.inner, True)
    if isinstance(re, (Exactly, Epsilon)):
        return UNIT
    if isinstance(re, (OneOf, To, Any)):
        return CHAR
    if isinstance(re, Concat):
        raw: Shape = PairS(_shape(re.fst, kept), _shape(re.snd, kept))
    elif isinstance(re, Alt):
        raw = SumS(_shape(re.left, kept), _shape(re.right, kept))
    elif isinstance(re, Optional):
        raw = OptionS(_shape(re.inner, kept))
    elif isinstance(re, (Rep0, Rep1)):
        raw = ListS(_shape(re.inner, kept))
    else:
        raise TypeError("not an untyped regex: %r" % (re,))
    return _normalise_shape(raw)


def shape(re: UntypedRegex) -> Shape:
    """Shape of the parse trees of ``re``; unkept parts flatten to unit."""
    return _shape(re, False)


def keep_shape(re: UntypedRegex) -> Shape:
    """Shape of the parse trees of ``re`` when it is entirely kept."""
    return _shape(re, True)


def _normalise(re: core.TypedRegex) -> core.TypedRegex:
    step = _simplify_step(re.shape)
    while step is not None:
        into, fn, name = step
        re = core.Conv(re, fn, into, name)
        step = _simplify_step(into)
    return re


def _lower(re: UntypedRegex, kept: bool) -> core.TypedRegex:
    if not kept and not re.has_keep:
        lowered = _lower(re, True)
        if isinstance(lowered.shape, UnitS):
            return lowered
        return core.Conv(lowered, core.const_unit, UNIT, "unit")
    if isinstance(re, Keep):
        return _lower(re.inner, True)
    if isinstance(re, Exactly):
        return core.match_char(re.char)
    if isinstance(re, OneOf):
        return core.one_of(re.chars)
    if isinstance(re, To):
        return core.char_range(re.lo, re.hi)
    if isinstance(re, Any):
        return core.char_range(MIN_CHAR, MAX_CHAR)
    if isinstance(re, Epsilon):
        return core.empty()
    if isinstance(re, Concat):
        return _normalise(core.seq(_lower(re.fst, kept), _lower(re.snd, kept)))
    if isinstance(re, Alt):
        return _normalise(core.alt(_lower(re.left, kept), _lower(re.right, kept)))
    if isinstance(re, Optional):
        return _normalise(core.opt(_lower(re.inner, kept)))
    if isinstance(re, Rep0):
        return _normalise(core.rep0(_lower(re.inner, kept)))
    if isinstance(re, Rep1):
        return _normalise(core.rep1(_lower(re.inner, kept)))
    raise TypeError("not an untyped regex: %r" % (re,))


def from_untyped(re: UntypedRegex) -> core.TypedRegex:
    """Lower ``re`` to a typed regex yielding parse trees of ``shape(re)``."""
    return _lower(re, False)


def compile_literal(text: str) -> Tuple[Shape, core.TypedRegex]:
    typed = from_untyped(parse_literal(text))
    return typed.shape, typed
