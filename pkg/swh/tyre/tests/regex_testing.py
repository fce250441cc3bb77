# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information

"""Reference matchers and regex generators shared by the test modules."""

from itertools import product
import random
from typing import FrozenSet, Iterator, List

from swh.tyre import core
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
    UntypedRegex,
    keep,
)
from swh.tyre.values import UNIT

ALPHABET = "abc"


def strings(max_len: int, alphabet: str = ALPHABET) -> List[str]:
    """Every string over ``alphabet`` of length at most ``max_len``."""
    return [
        "".join(chars)
        for length in range(max_len + 1)
        for chars in product(alphabet, repeat=length)
    ]


def _star_ends(ends_of, text: str, start: int) -> FrozenSet[int]:
    ends = {start}
    todo = [start]
    while todo:
        for end in ends_of(text, todo.pop()):
            if end not in ends:
                ends.add(end)
                todo.append(end)
    return frozenset(ends)


def oracle_ends(re: UntypedRegex, text: str, start: int) -> FrozenSet[int]:
    """Positions where a match of ``re`` starting at ``start`` may end."""

    def char_ok(ok) -> FrozenSet[int]:
        if start < len(text) and ok(text[start]):
            return frozenset({start + 1})
        return frozenset()

    if isinstance(re, Exactly):
        return char_ok(lambda c: c == re.char)
    if isinstance(re, OneOf):
        return char_ok(lambda c: c in re.chars)
    if isinstance(re, To):
        return char_ok(lambda c: re.lo <= c <= re.hi)
    if isinstance(re, Any):
        return char_ok(lambda c: True)
    if isinstance(re, Epsilon):
        return frozenset({start})
    if isinstance(re, Concat):
        return frozenset(
            end
            for middle in oracle_ends(re.fst, text, start)
            for end in oracle_ends(re.snd, text, middle)
        )
    if isinstance(re, Alt):
        return oracle_ends(re.left, text, start) | oracle_ends(re.right, text, start)
    if isinstance(re, Optional):
        return oracle_ends(re.inner, text, start) | {start}
    if isinstance(re, Rep0):
        return _star_ends(lambda t, i: oracle_ends(re.inner, t, i), text, start)
    if isinstance(re, Rep1):
        return frozenset(
            end
            for middle in oracle_ends(re.inner, text, start)
            for end in _star_ends(
                lambda t, i: oracle_ends(re.inner, t, i), text, middle
            )
        )
    if isinstance(re, Keep):
        return oracle_ends(re.inner, text, start)
    raise TypeError(re)


def oracle_match(re: UntypedRegex, text: str) -> bool:
    return len(text) in oracle_ends(re, text, 0)


def typed_ends(re: core.TypedRegex, text: str, start: int) -> FrozenSet[int]:
    """Same as :func:`oracle_ends`, on typed regexes."""
    if isinstance(re, core.Empty):
        return frozenset({start})
    if isinstance(re, core.MatchChar):
        if start < len(text) and core.satisfies(re.cond, text[start]):
            return frozenset({start + 1})
        return frozenset()
    if isinstance(re, core.Seq):
        return frozenset(
            end
            for middle in typed_ends(re.fst, text, start)
            for end in typed_ends(re.snd, text, middle)
        )
    if isinstance(re, core.AltT):
        return typed_ends(re.left, text, start) | typed_ends(re.right, text, start)
    if isinstance(re, core.Rep):
        return _star_ends(lambda t, i: typed_ends(re.inner, t, i), text, start)
    if isinstance(re, (core.Conv, core.Group)):
        return typed_ends(re.inner, text, start)
    raise TypeError(re)


def typed_match(re: core.TypedRegex, text: str) -> bool:
    return len(text) in typed_ends(re, text, 0)


def all_untyped(depth: int, alphabet: str = ALPHABET) -> Iterator[UntypedRegex]:
    """Every regex over Exactly, Concat, Alt, Rep0, Optional and Keep of at
    most the given depth."""
    if depth == 0:
        yield from (Exactly(c) for c in alphabet)
        return
    smaller = list(all_untyped(depth - 1, alphabet))
    yield from smaller
    seen = set(smaller)
    for a in smaller:
        for wrapped in (Rep0(a), Optional(a), keep(a)):
            if wrapped not in seen:
                seen.add(wrapped)
                yield wrapped
    for a, b in product(smaller, repeat=2):
        for joined in (Concat(a, b), Alt(a, b)):
            if joined not in seen:
                seen.add(joined)
                yield joined


def random_untyped(
    rng: random.Random, depth: int, alphabet: str = ALPHABET
) -> UntypedRegex:
    """A random regex over Exactly, Concat, Alt, Rep0, Optional and Keep."""
    if depth == 0 or rng.random() < 0.2:
        return Exactly(rng.choice(alphabet))
    kind = rng.choice(["concat", "alt", "rep0", "optional", "keep"])
    if kind == "concat":
        return Concat(random_untyped(rng, depth - 1), random_untyped(rng, depth - 1))
    if kind == "alt":
        return Alt(random_untyped(rng, depth - 1), random_untyped(rng, depth - 1))
    inner = random_untyped(rng, depth - 1)
    if kind == "rep0":
        return Rep0(inner)
    if kind == "optional":
        return Optional(inner)
    return keep(inner)


LITERAL_CHARS = "abz09-()[]|?*+.!\\ é"


def random_literal_ast(rng: random.Random, depth: int) -> UntypedRegex:
    """A random regex using every literal construct, special characters
    included."""
    if depth == 0 or rng.random() < 0.25:
        kind = rng.choice(["exactly", "oneof", "to", "any", "epsilon"])
        if kind == "exactly":
            return Exactly(rng.choice(LITERAL_CHARS))
        if kind == "oneof":
            return OneOf("".join(rng.sample(LITERAL_CHARS, rng.randint(1, 4))))
        if kind == "to":
            lo, hi = sorted(rng.sample(LITERAL_CHARS, 2))
            return To(lo, hi)
        if kind == "any":
            return Any()
        return Epsilon()
    kind = rng.choice(["concat", "alt", "optional", "rep0", "rep1", "keep"])
    if kind == "concat":
        return Concat(
            random_literal_ast(rng, depth - 1), random_literal_ast(rng, depth - 1)
        )
    if kind == "alt":
        return Alt(
            random_literal_ast(rng, depth - 1), random_literal_ast(rng, depth - 1)
        )
    inner = random_literal_ast(rng, depth - 1)
    return {"optional": Optional, "rep0": Rep0, "rep1": Rep1, "keep": keep}[kind](inner)


def random_typed(rng: random.Random, depth: int, alphabet: str = ALPHABET):
    """A random typed regex over the core constructors, groups included."""
    if depth == 0 or rng.random() < 0.2:
        if rng.random() < 0.1:
            return core.empty()
        return core.one_of(rng.choice(alphabet))
    kind = rng.choice(["seq", "alt", "rep", "conv", "group", "or"])
    if kind == "seq":
        return core.seq(random_typed(rng, depth - 1), random_typed(rng, depth - 1))
    if kind == "alt":
        return core.alt(random_typed(rng, depth - 1), random_typed(rng, depth - 1))
    if kind == "or":
        return core.or_(
            core.ignore(random_typed(rng, depth - 1)),
            core.ignore(random_typed(rng, depth - 1)),
        )
    inner = random_typed(rng, depth - 1)
    if kind == "rep":
        return core.rep0(inner)
    if kind == "conv":
        return core.conv(inner, core.const_unit, UNIT, "unit")
    return core.ignore(inner)
