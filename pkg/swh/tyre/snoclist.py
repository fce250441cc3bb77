# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information

from typing import Any, Generic, Iterable, Iterator, List, Optional, Tuple, TypeVar

T = TypeVar("T")


class SnocList(Generic[T]):
    """Persistent left-nested list, growing on the right.

    ``snoc`` and ``pop`` are constant time and never copy: threads forking on
    several transitions share the cells of their common prefix. Used for
    machine stacks, repetition results, recorded characters and routine
    accumulators.
    """

    __slots__ = ("_init", "_last", "_len")

    def __init__(self, init: "Optional[SnocList[T]]" = None, last: Any = None):
        self._init = init
        self._last = last
        self._len = 0 if init is None else init._len + 1

    @classmethod
    def from_iterable(cls, items: Iterable[T]) -> "SnocList[T]":
        result: SnocList[T] = EMPTY
        for item in items:
            result = result.snoc(item)
        return result

    def snoc(self, item: T) -> "SnocList[T]":
        return SnocList(self, item)

    def extend(self, items: Iterable[T]) -> "SnocList[T]":
        result = self
        for item in items:
            result = result.snoc(item)
        return result

    def pop(self) -> Tuple["SnocList[T]", T]:
        if self._init is None:
            raise IndexError("pop from empty snoc list")
        return self._init, self._last

    @property
    def last(self) -> T:
        if self._init is None:
            raise IndexError("empty snoc list has no last element")
        return self._last

    def to_list(self) -> List[T]:
        items = []
        node = self
        while node._init is not None:
            items.append(node._last)
            node = node._init
        items.reverse()
        return items

    def __iter__(self) -> Iterator[T]:
        return iter(self.to_list())

    def __len__(self) -> int:
        return self._len

    def __bool__(self) -> bool:
        return self._len > 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, SnocList):
            return NotImplemented
        if self is other:
            return True
        return self._len == other._len and self.to_list() == other.to_list()

    def __hash__(self) -> int:
        return hash(tuple(self.to_list()))

    def __repr__(self) -> str:
        return "[< %s]" % ", ".join(repr(item) for item in self.to_list())


EMPTY: SnocList = SnocList()
"""The empty snoc list, ``[<]``."""
