# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information

"""Matchers for grouped regexes.

A grouped regex only yields the substring it matched, so its machine needs
no routines besides recording. It is built as a plain NFA, shrunk by merging
states with the same outgoing transitions, then wrapped into a Moore machine
that records on entry and emits the recorded string on acceptance.
"""

from dataclasses import dataclass
import logging
from typing import Any, Dict, Hashable, List, Optional, Tuple

from swh.tyre import core
from swh.tyre.core import CharCond, OneOfC, PredC, RangeC, TypedRegex
from swh.tyre.machine import (
    ACCEPT,
    Edge,
    EmitString,
    MooreMachine,
    Record,
    Target,
    render_cond,
)
from swh.tyre.values import STRING

logger = logging.getLogger(__name__)

NFAEdge = Tuple[CharCond, Tuple[Target, ...]]


@dataclass(frozen=True)
class PlainNFA:
    state_count: int
    starts: Tuple[Target, ...]
    edges: Tuple[Tuple[NFAEdge, ...], ...]
    """Per state, the guards with the states they lead to."""


def _dedup(targets) -> Tuple[Target, ...]:
    return tuple(dict.fromkeys(targets))


def _shift(nfa: PlainNFA, offset: int) -> PlainNFA:
    def move(target: Target) -> Target:
        return ACCEPT if target is ACCEPT else target + offset

    return PlainNFA(
        nfa.state_count,
        tuple(move(t) for t in nfa.starts),
        tuple(
            tuple((c, tuple(move(t) for t in ts)) for c, ts in edges)
            for edges in nfa.edges
        ),
    )


def _replace_accept(
    edges: Tuple[Tuple[NFAEdge, ...], ...], replacement: Tuple[Target, ...]
) -> Tuple[Tuple[NFAEdge, ...], ...]:
    def expand(targets: Tuple[Target, ...]) -> Tuple[Target, ...]:
        result: List[Target] = []
        for t in targets:
            if t is ACCEPT:
                result.extend(replacement)
            else:
                result.append(t)
        return _dedup(result)

    return tuple(tuple((c, expand(ts)) for c, ts in state) for state in edges)


def build_nfa(re: TypedRegex) -> PlainNFA:
    """Thompson construction of ``re`` without routines."""
    if isinstance(re, core.Empty):
        return PlainNFA(0, (ACCEPT,), ())
    if isinstance(re, core.MatchChar):
        return PlainNFA(1, (0,), (((re.cond, (ACCEPT,)),),))
    if isinstance(re, core.AltT):
        r = build_nfa(re.left)
        s = _shift(build_nfa(re.right), r.state_count)
        return PlainNFA(
            r.state_count + s.state_count,
            _dedup(r.starts + s.starts),
            r.edges + s.edges,
        )
    if isinstance(re, core.Seq):
        r = build_nfa(re.fst)
        s = _shift(build_nfa(re.snd), r.state_count)
        starts: List[Target] = []
        for t in r.starts:
            starts.extend(s.starts if t is ACCEPT else (t,))
        return PlainNFA(
            r.state_count + s.state_count,
            _dedup(starts),
            _replace_accept(r.edges, s.starts) + s.edges,
        )
    if isinstance(re, core.Rep):
        r = build_nfa(re.inner)
        loop = tuple(t for t in r.starts if t is not ACCEPT)
        return PlainNFA(
            r.state_count,
            loop + (ACCEPT,),
            _replace_accept(r.edges, loop + (ACCEPT,)),
        )
    if isinstance(re, (core.Conv, core.Group)):
        return build_nfa(re.inner)
    raise TypeError("not a typed regex: %r" % (re,))


def cond_equal(c1: CharCond, c2: CharCond) -> bool:
    """Compare conditions by constructor and arguments; predicates never
    compare equal."""
    if isinstance(c1, OneOfC) and isinstance(c2, OneOfC):
        return c1.chars == c2.chars
    if isinstance(c1, RangeC) and isinstance(c2, RangeC):
        return (c1.lo, c1.hi) == (c2.lo, c2.hi)
    return False


def _guard_key(cond: CharCond) -> Hashable:
    # consistent with cond_equal: each predicate occurrence is a key of its own
    if isinstance(cond, OneOfC):
        return ("oneof", cond.chars)
    if isinstance(cond, RangeC):
        return ("range", cond.lo, cond.hi)
    assert isinstance(cond, PredC)
    return ("pred", object())


def _signature(edges: Tuple[NFAEdge, ...]) -> Hashable:
    return frozenset((_guard_key(c), frozenset(ts)) for c, ts in edges)


def _find_mergeable(nfa: PlainNFA) -> Optional[Tuple[int, int]]:
    first_with: Dict[Hashable, int] = {}
    best: Optional[Tuple[int, int]] = None
    for state, edges in enumerate(nfa.edges):
        key = _signature(edges)
        if key in first_with:
            pair = (first_with[key], state)
            if best is None or pair < best:
                best = pair
        else:
            first_with[key] = state
    return best


def _merge(nfa: PlainNFA, keep: int, drop: int) -> PlainNFA:
    def move(target: Target) -> Target:
        if target is ACCEPT:
            return ACCEPT
        if target == drop:
            return keep
        return target - 1 if target > drop else target

    return PlainNFA(
        nfa.state_count - 1,
        _dedup(move(t) for t in nfa.starts),
        tuple(
            tuple((c, _dedup(move(t) for t in ts)) for c, ts in edges)
            for state, edges in enumerate(nfa.edges)
            if state != drop
        ),
    )


def merge_states(nfa: PlainNFA) -> PlainNFA:
    """Merge states with equal outgoing transitions until none are left.

    The pair merged at each round is the one with the smallest kept index,
    then the smallest dropped index; the dropped state is removed and every
    reference to it, starts included, is redirected to the kept one.
    """
    rounds = 0
    before = nfa.state_count
    pair = _find_mergeable(nfa)
    while pair is not None:
        keep, drop = pair
        logger.debug("merging state %d into state %d", drop, keep)
        nfa = _merge(nfa, keep, drop)
        rounds += 1
        pair = _find_mergeable(nfa)
    logger.debug(
        "merged %d states in %d rounds: %d -> %d",
        before - nfa.state_count,
        rounds,
        before,
        nfa.state_count,
    )
    return nfa


def nfa_to_machine(nfa: PlainNFA) -> MooreMachine:
    """Wrap ``nfa`` into a machine yielding the matched string."""
    record = (Record(),)
    emit = (EmitString(),)
    return MooreMachine(
        state_count=nfa.state_count,
        lookup=((),) * nfa.state_count,
        shape=STRING,
        init=tuple(
            (t, record + emit if t is ACCEPT else record) for t in nfa.starts
        ),
        edges=tuple(
            tuple(
                Edge(c, t, emit if t is ACCEPT else ())
                for c, targets in edges
                for t in targets
            )
            for edges in nfa.edges
        ),
    )


def compile_group(re: TypedRegex) -> MooreMachine:
    return nfa_to_machine(merge_states(build_nfa(re)))


def dump_nfa(nfa: PlainNFA) -> Dict[str, Any]:
    return {
        "state_count": nfa.state_count,
        "starts": list(nfa.starts),
        "edges": [
            {"from": state, "guard": render_cond(c), "to": list(targets)}
            for state, edges in enumerate(nfa.edges)
            for c, targets in edges
        ],
    }
