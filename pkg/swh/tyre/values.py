# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information

"""Parse-tree shapes and the dynamic values conforming to them.

A :class:`Shape` describes the type of the parse trees a regex produces. A
:class:`ParseValue` is the runtime carrier of such a tree. Optional shapes are
encoded at the value level as a sum of the payload and unit: ``VLeft(x)`` is a
present value, ``VRight(VUnit())`` an absent one.

Nat values are Python ``int`` objects, hence of arbitrary precision.
"""

from dataclasses import dataclass
from typing import Any, Generic, Iterable, Optional, Tuple, TypeVar, Union

from swh.tyre.exc import ShapeMismatch
from swh.tyre.snoclist import EMPTY, SnocList


class Shape:
    """Base class of shape descriptors."""

    def __str__(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class UnitS(Shape):
    def __str__(self):
        return "Unit"


@dataclass(frozen=True)
class CharS(Shape):
    def __str__(self):
        return "Char"


@dataclass(frozen=True)
class StringS(Shape):
    def __str__(self):
        return "String"


@dataclass(frozen=True)
class NatS(Shape):
    def __str__(self):
        return "Nat"


@dataclass(frozen=True)
class BoolS(Shape):
    def __str__(self):
        return "Bool"


@dataclass(frozen=True)
class PairS(Shape):
    fst: Shape
    snd: Shape

    def __str__(self):
        return "(%s, %s)" % (self.fst, self.snd)


def _arg(shape: Shape) -> str:
    if isinstance(shape, (SumS, OptionS, ListS)):
        return "(%s)" % shape
    return str(shape)


@dataclass(frozen=True)
class SumS(Shape):
    left: Shape
    right: Shape

    def __str__(self):
        return "Either %s %s" % (_arg(self.left), _arg(self.right))


@dataclass(frozen=True)
class OptionS(Shape):
    inner: Shape

    def __str__(self):
        return "Maybe %s" % _arg(self.inner)


@dataclass(frozen=True)
class ListS(Shape):
    inner: Shape

    def __str__(self):
        return "List %s" % _arg(self.inner)


UNIT = UnitS()
CHAR = CharS()
STRING = StringS()
NAT = NatS()
BOOL = BoolS()


@dataclass(frozen=True)
class VUnit:
    pass


@dataclass(frozen=True)
class VChar:
    char: str


class VString:
    """String parse tree; built lazily from the recorded characters."""

    __slots__ = ("_chars", "_value")

    def __init__(self, value: Union[str, SnocList] = ""):
        self._chars: Optional[SnocList] = None
        self._value: Optional[str] = None
        if isinstance(value, str):
            self._value = value
        else:
            self._chars = value

    @property
    def value(self) -> str:
        if self._value is None:
            self._value = "".join(self._chars or ())
            self._chars = None
        return self._value

    def __eq__(self, other):
        if not isinstance(other, VString):
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return "VString(%r)" % self.value


@dataclass(frozen=True)
class VNat:
    value: int


@dataclass(frozen=True)
class VBool:
    value: bool


@dataclass(frozen=True)
class VPair:
    fst: "ParseValue"
    snd: "ParseValue"


@dataclass(frozen=True)
class VLeft:
    value: "ParseValue"


@dataclass(frozen=True)
class VRight:
    value: "ParseValue"


class VList:
    """List parse tree.

    Repetitions grow the list on the right with :meth:`snoc`; one-or-more
    repetitions put their first item in front with :meth:`cons`, which only
    ever prefixes a short ``head``. Both are constant time.
    """

    __slots__ = ("items", "head")

    def __init__(self, items: SnocList = EMPTY, head: Tuple[Any, ...] = ()):
        self.items = items
        self.head = head

    def snoc(self, item: "ParseValue") -> "VList":
        return VList(self.items.snoc(item), self.head)

    def cons(self, item: "ParseValue") -> "VList":
        return VList(self.items, (item,) + self.head)

    def __len__(self):
        return len(self.head) + len(self.items)

    def __iter__(self):
        yield from self.head
        yield from self.items

    def __eq__(self, other):
        if not isinstance(other, VList):
            return NotImplemented
        return len(self) == len(other) and list(self) == list(other)

    def __hash__(self):
        return hash(tuple(self))

    def __repr__(self):
        return "VList(%r)" % (list(self),)


ParseValue = Union[VUnit, VChar, VString, VNat, VBool, VPair, VLeft, VRight, VList]

UNIT_VALUE = VUnit()
EMPTY_LIST = VList()
ABSENT = VRight(UNIT_VALUE)
"""The value of an optional shape when the payload is missing."""


def vlist(items: Iterable[ParseValue]) -> VList:
    return VList(SnocList.from_iterable(items))


def conforms(value: Any, shape: Shape) -> bool:
    """Check whether ``value`` is a parse tree of the given shape."""
    if isinstance(shape, UnitS):
        return isinstance(value, VUnit)
    if isinstance(shape, CharS):
        return isinstance(value, VChar) and len(value.char) == 1
    if isinstance(shape, StringS):
        return isinstance(value, VString)
    if isinstance(shape, NatS):
        return (
            isinstance(value, VNat)
            and not isinstance(value.value, bool)
            and value.value >= 0
        )
    if isinstance(shape, BoolS):
        return isinstance(value, VBool)
    if isinstance(shape, PairS):
        return (
            isinstance(value, VPair)
            and conforms(value.fst, shape.fst)
            and conforms(value.snd, shape.snd)
        )
    if isinstance(shape, SumS):
        if isinstance(value, VLeft):
            return conforms(value.value, shape.left)
        return isinstance(value, VRight) and conforms(value.value, shape.right)
    if isinstance(shape, OptionS):
        if isinstance(value, VLeft):
            return conforms(value.value, shape.inner)
        return isinstance(value, VRight) and isinstance(value.value, VUnit)
    if isinstance(shape, ListS):
        return isinstance(value, VList) and all(
            conforms(item, shape.inner) for item in value
        )
    return False


def conforms_stack(stack: Iterable[Any], shapes: Iterable[Shape]) -> bool:
    values = list(stack)
    shapes = list(shapes)
    return len(values) == len(shapes) and all(
        conforms(value, shape) for value, shape in zip(values, shapes)
    )


def value_to_json(value: ParseValue) -> Any:
    """Encode a parse tree as a JSON-serialisable object.

    unit is ``None``, chars and strings are strings, nats are numbers, bools
    are booleans, pairs are 2-element lists, sums are ``{"left": v}`` or
    ``{"right": v}`` and lists are lists.
    """
    if isinstance(value, VUnit):
        return None
    if isinstance(value, VChar):
        return value.char
    if isinstance(value, VString):
        return value.value
    if isinstance(value, (VNat, VBool)):
        return value.value
    if isinstance(value, VPair):
        return [value_to_json(value.fst), value_to_json(value.snd)]
    if isinstance(value, VLeft):
        return {"left": value_to_json(value.value)}
    if isinstance(value, VRight):
        return {"right": value_to_json(value.value)}
    if isinstance(value, VList):
        return [value_to_json(item) for item in value]
    raise TypeError("not a parse value: %r" % (value,))


def render_value(value: ParseValue) -> str:
    """Render a parse tree the way execution traces display it."""
    if isinstance(value, VUnit):
        return "()"
    if isinstance(value, VChar):
        return repr(value.char)
    if isinstance(value, VString):
        return '"%s"' % value.value
    if isinstance(value, VNat):
        return str(value.value)
    if isinstance(value, VBool):
        return str(value.value)
    if isinstance(value, VPair):
        return "(%s, %s)" % (render_value(value.fst), render_value(value.snd))
    if isinstance(value, VLeft):
        return "Left %s" % render_value(value.value)
    if isinstance(value, VRight):
        return "Right %s" % render_value(value.value)
    if isinstance(value, VList):
        return "[%s]" % ", ".join(render_value(item) for item in value)
    raise TypeError("not a parse value: %r" % (value,))


def render_stack(stack: SnocList) -> str:
    return "[< %s]" % ", ".join(render_value(value) for value in stack)


X = TypeVar("X")


@dataclass(frozen=True)
class Left(Generic[X]):
    """Host-level left injection of a sum parse tree."""

    value: X


@dataclass(frozen=True)
class Right(Generic[X]):
    """Host-level right injection of a sum parse tree."""

    value: X


def to_python(value: ParseValue, shape: Shape) -> Any:
    """Convert a parse tree into plain Python objects.

    unit is ``()``, chars and strings are ``str``, nats are ``int``, bools are
    ``bool``, pairs are tuples, sums are :class:`Left`/:class:`Right`,
    optional values are the payload or ``None`` and lists are lists.
    """
    if isinstance(shape, UnitS):
        return ()
    if isinstance(shape, CharS):
        return value.char
    if isinstance(shape, (StringS, NatS, BoolS)):
        return value.value
    if isinstance(shape, PairS):
        return (to_python(value.fst, shape.fst), to_python(value.snd, shape.snd))
    if isinstance(shape, SumS):
        if isinstance(value, VLeft):
            return Left(to_python(value.value, shape.left))
        return Right(to_python(value.value, shape.right))
    if isinstance(shape, OptionS):
        if isinstance(value, VLeft):
            return to_python(value.value, shape.inner)
        return None
    if isinstance(shape, ListS):
        return [to_python(item, shape.inner) for item in value]
    raise TypeError("unknown shape %r" % (shape,))


def from_python(obj: Any, shape: Shape) -> ParseValue:
    """Inverse of :func:`to_python`.

    Raises:
        ShapeMismatch: if ``obj`` cannot represent a parse tree of ``shape``.
    """
    if isinstance(shape, UnitS):
        if obj == () or obj is None:
            return UNIT_VALUE
    elif isinstance(shape, CharS):
        if isinstance(obj, str) and len(obj) == 1:
            return VChar(obj)
    elif isinstance(shape, StringS):
        if isinstance(obj, str):
            return VString(obj)
    elif isinstance(shape, NatS):
        if isinstance(obj, int) and not isinstance(obj, bool) and obj >= 0:
            return VNat(obj)
    elif isinstance(shape, BoolS):
        if isinstance(obj, bool):
            return VBool(obj)
    elif isinstance(shape, PairS):
        if isinstance(obj, tuple) and len(obj) == 2:
            return VPair(from_python(obj[0], shape.fst), from_python(obj[1], shape.snd))
    elif isinstance(shape, SumS):
        if isinstance(obj, Left):
            return VLeft(from_python(obj.value, shape.left))
        if isinstance(obj, Right):
            return VRight(from_python(obj.value, shape.right))
    elif isinstance(shape, OptionS):
        if obj is None:
            return ABSENT
        return VLeft(from_python(obj, shape.inner))
    elif isinstance(shape, ListS):
        if isinstance(obj, (list, tuple)):
            return vlist(from_python(item, shape.inner) for item in obj)
    raise ShapeMismatch(shape, repr(obj))
