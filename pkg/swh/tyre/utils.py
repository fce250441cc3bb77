# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information

from contextlib import contextmanager
import sys
from typing import Iterator

from swh.tyre.constants import DEFAULT_RECURSION_LIMIT


@contextmanager
def deep_recursion(limit: int = DEFAULT_RECURSION_LIMIT) -> Iterator[None]:
    """Raise the interpreter recursion limit for the duration of the block.

    Compiling and lowering recurse once per nesting level of the regex.
    """
    previous = sys.getrecursionlimit()
    sys.setrecursionlimit(max(previous, limit))
    try:
        yield
    finally:
        sys.setrecursionlimit(previous)
