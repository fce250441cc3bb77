# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information

"""Thompson construction of Moore machines from typed regexes.

Routines are accumulated in snoc lists while the machine is being built, so
appending the instructions of an enclosing construct is constant time; they
are turned into tuples, in execution order, once the machine is frozen.

Edge and init-entry order is thread priority: the left operand of an
alternation or concatenation always comes first.
"""

from dataclasses import dataclass
import logging
from typing import List, Tuple

from swh.tyre import core
from swh.tyre.core import CharCond, TypedRegex
from swh.tyre.group import compile_group
from swh.tyre.machine import (
    ACCEPT,
    Edge,
    Instruction,
    MooreMachine,
    Push,
    PushChar,
    ReducePair,
    StackShape,
    Target,
    Transform,
)
from swh.tyre.snoclist import EMPTY, SnocList
from swh.tyre.values import (
    CHAR,
    EMPTY_LIST,
    UNIT,
    UNIT_VALUE,
    ListS,
    PairS,
    Shape,
    SumS,
)

logger = logging.getLogger(__name__)

Acc = SnocList  # routine accumulator, of Instruction


@dataclass
class MachineBuilder:
    """Mutable machine under construction."""

    shape: Shape
    lookup: List[StackShape]
    init: List[Tuple[Target, Acc]]
    edges: List[List[Tuple[CharCond, Target, Acc]]]

    @property
    def state_count(self) -> int:
        return len(self.lookup)

    def shifted(self, offset: int) -> "MachineBuilder":
        def move(target: Target) -> Target:
            return ACCEPT if target is ACCEPT else target + offset

        return MachineBuilder(
            self.shape,
            list(self.lookup),
            [(move(t), r) for t, r in self.init],
            [[(c, move(t), r) for c, t, r in edges] for edges in self.edges],
        )

    def append_on_accept(self, instr: Instruction) -> None:
        """Append ``instr`` to every routine reaching the accepting state."""
        self.init = [(t, r.snoc(instr) if t is ACCEPT else r) for t, r in self.init]
        self.edges = [
            [(c, t, r.snoc(instr) if t is ACCEPT else r) for c, t, r in edges]
            for edges in self.edges
        ]

    def freeze(self) -> MooreMachine:
        return MooreMachine(
            state_count=self.state_count,
            lookup=tuple(self.lookup),
            shape=self.shape,
            init=tuple((t, tuple(r)) for t, r in self.init),
            edges=tuple(
                tuple(Edge(c, t, tuple(r)) for c, t, r in edges) for edges in self.edges
            ),
        )

    @classmethod
    def thaw(cls, m: MooreMachine) -> "MachineBuilder":
        return cls(
            m.shape,
            list(m.lookup),
            [(t, SnocList.from_iterable(r)) for t, r in m.init],
            [
                [(e.cond, e.target, SnocList.from_iterable(e.routine)) for e in edges]
                for edges in m.edges
            ],
        )


def _pred(cond: CharCond) -> MachineBuilder:
    return MachineBuilder(
        CHAR, [()], [(0, EMPTY)], [[(cond, ACCEPT, EMPTY.snoc(PushChar()))]]
    )


def _empty() -> MachineBuilder:
    return MachineBuilder(UNIT, [], [(ACCEPT, EMPTY.snoc(Push(UNIT_VALUE, UNIT)))], [])


def _alt(r: MachineBuilder, s: MachineBuilder) -> MachineBuilder:
    shape = SumS(r.shape, s.shape)
    s = s.shifted(r.state_count)
    r.append_on_accept(Transform(core.inject_left, "Left", r.shape, shape))
    s.append_on_accept(Transform(core.inject_right, "Right", s.shape, shape))
    return MachineBuilder(
        shape, r.lookup + s.lookup, r.init + s.init, r.edges + s.edges
    )


def _star(r: MachineBuilder) -> MachineBuilder:
    shape = ListS(r.shape)
    push = Push(EMPTY_LIST, shape)
    snoc = ReducePair(core.snoc_item, "snoc", (shape, r.shape), shape)
    # a nullable body never loops on the empty word
    starts = [(t, ir) for t, ir in r.init if t is not ACCEPT]
    init = [(t, EMPTY.snoc(push).extend(ir)) for t, ir in starts]
    init.append((ACCEPT, EMPTY.snoc(push)))
    edges = []
    for state_edges in r.edges:
        new_edges = []
        for c, t, routine in state_edges:
            if t is not ACCEPT:
                new_edges.append((c, t, routine))
                continue
            looped = routine.snoc(snoc)
            for start, ir in starts:
                new_edges.append((c, start, looped.extend(ir)))
            new_edges.append((c, ACCEPT, looped))
        edges.append(new_edges)
    return MachineBuilder(shape, [(shape,) + s for s in r.lookup], init, edges)


def _concat(r: MachineBuilder, s: MachineBuilder) -> MachineBuilder:
    shape = PairS(r.shape, s.shape)
    pair = ReducePair(core.make_pair, "pair", (r.shape, s.shape), shape)
    s = s.shifted(r.state_count)
    s.append_on_accept(pair)

    def into_s(routine: Acc) -> List[Tuple[Target, Acc]]:
        return [(t, routine.extend(ir)) for t, ir in s.init]

    init: List[Tuple[Target, Acc]] = []
    for t, routine in r.init:
        if t is ACCEPT:
            init.extend(into_s(routine))
        else:
            init.append((t, routine))
    edges = []
    for state_edges in r.edges:
        new_edges = []
        for c, t, routine in state_edges:
            if t is ACCEPT:
                new_edges.extend((c, target, rt) for target, rt in into_s(routine))
            else:
                new_edges.append((c, t, routine))
        edges.append(new_edges)
    return MachineBuilder(
        shape,
        r.lookup + [(r.shape,) + shape_s for shape_s in s.lookup],
        init,
        edges + s.edges,
    )


def _conv(r: MachineBuilder, fn, into: Shape, name: str) -> MachineBuilder:
    r.append_on_accept(Transform(fn, name, r.shape, into))
    r.shape = into
    return r


def _build(re: TypedRegex) -> MachineBuilder:
    if isinstance(re, core.Empty):
        return _empty()
    if isinstance(re, core.MatchChar):
        return _pred(re.cond)
    if isinstance(re, core.Seq):
        return _concat(_build(re.fst), _build(re.snd))
    if isinstance(re, core.AltT):
        return _alt(_build(re.left), _build(re.right))
    if isinstance(re, core.Rep):
        return _star(_build(re.inner))
    if isinstance(re, core.Conv):
        return _conv(_build(re.inner), re.fn, re.into, re.name)
    if isinstance(re, core.Group):
        return MachineBuilder.thaw(compile_group(re.inner))
    raise TypeError("not a typed regex: %r" % (re,))


def compile(re: TypedRegex) -> MooreMachine:
    """Compile ``re`` into a Moore machine yielding ``re.shape``."""
    m = _build(re).freeze()
    logger.debug(
        "compiled %s machine: %d states, %d edges", m.shape, m.state_count, m.edge_count
    )
    return m


def build_pred(cond: CharCond) -> MooreMachine:
    return _pred(cond).freeze()


def build_empty() -> MooreMachine:
    return _empty().freeze()


def build_alt(r: MooreMachine, s: MooreMachine) -> MooreMachine:
    return _alt(MachineBuilder.thaw(r), MachineBuilder.thaw(s)).freeze()


def build_star(r: MooreMachine) -> MooreMachine:
    return _star(MachineBuilder.thaw(r)).freeze()


def build_concat(r: MooreMachine, s: MooreMachine) -> MooreMachine:
    return _concat(MachineBuilder.thaw(r), MachineBuilder.thaw(s)).freeze()


def build_conv(r: MooreMachine, fn, into: Shape, name: str = "conv") -> MooreMachine:
    return _conv(MachineBuilder.thaw(r), fn, into, name).freeze()
