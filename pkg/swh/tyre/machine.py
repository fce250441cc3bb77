# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information

"""Moore machines whose transitions carry stack routines.

Non-accepting states are ``0 .. state_count - 1``; the accepting state is
``None`` and has no outgoing edges. Every state has a stack shape
(``lookup``); the accepting state's stack holds exactly one value of the
machine's yield shape.

Routines are tuples of :class:`Instruction`. Each instruction has a shape
contract (:meth:`Instruction.post`) that :func:`validate_machine` checks
statically and that checked execution verifies on the actual stacks.
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Tuple

from swh.tyre.core import CharCond, OneOfC, PredC, RangeC, satisfies
from swh.tyre.exc import MissingChar, ShapeViolation
from swh.tyre.snoclist import EMPTY, SnocList
from swh.tyre.values import (
    CHAR,
    STRING,
    ParseValue,
    Shape,
    VChar,
    VString,
    conforms_stack,
    render_value,
)

ACCEPT = None
"""The accepting state."""

Target = Optional[int]
StackShape = Tuple[Shape, ...]


class ThreadData(NamedTuple):
    stack: SnocList = EMPTY
    recorded: SnocList = EMPTY
    rec: bool = False


def _show(shapes: StackShape) -> str:
    return "[< %s]" % ", ".join(str(s) for s in shapes)


class Instruction:
    """A stack instruction with its shape contract."""

    def post(self, pre: StackShape) -> StackShape:
        """Stack shape after the instruction runs on a stack of shape ``pre``.

        Raises:
            ShapeViolation: if ``pre`` does not satisfy the precondition.
        """
        raise NotImplementedError

    def execute(self, char: Optional[str], td: ThreadData) -> ThreadData:
        raise NotImplementedError


@dataclass(frozen=True)
class Push(Instruction):
    value: Any
    shape: Shape

    def post(self, pre):
        return pre + (self.shape,)

    def execute(self, char, td):
        return td._replace(stack=td.stack.snoc(self.value))

    def __str__(self):
        return "Push %s" % render_value(self.value)


@dataclass(frozen=True)
class PushChar(Instruction):
    """Push the character consumed by the transition."""

    def post(self, pre):
        return pre + (CHAR,)

    def execute(self, char, td):
        if char is None:
            raise MissingChar(self)
        return td._replace(stack=td.stack.snoc(VChar(char)))

    def __str__(self):
        return "PushChar"


@dataclass(frozen=True)
class ReducePair(Instruction):
    """Replace the two topmost values ``x``, ``y`` by ``fn(x, y)``."""

    fn: Callable[[ParseValue, ParseValue], ParseValue]
    name: str
    args: Tuple[Shape, Shape]
    into: Shape

    def post(self, pre):
        if pre[-2:] != self.args:
            raise ShapeViolation(
                "%s expects top %s, got %s" % (self, _show(self.args), _show(pre))
            )
        return pre[:-2] + (self.into,)

    def execute(self, char, td):
        stack, y = td.stack.pop()
        stack, x = stack.pop()
        return td._replace(stack=stack.snoc(self.fn(x, y)))

    def __str__(self):
        return "ReducePair %s" % self.name


@dataclass(frozen=True)
class Transform(Instruction):
    fn: Callable[[ParseValue], ParseValue]
    name: str
    source: Shape
    into: Shape

    def post(self, pre):
        if pre[-1:] != (self.source,):
            raise ShapeViolation(
                "%s expects top %s, got %s" % (self, self.source, _show(pre))
            )
        return pre[:-1] + (self.into,)

    def execute(self, char, td):
        stack, x = td.stack.pop()
        return td._replace(stack=stack.snoc(self.fn(x)))

    def __str__(self):
        return "Transform %s" % self.name


@dataclass(frozen=True)
class EmitString(Instruction):
    """Push the recorded characters as a string and stop recording."""

    def post(self, pre):
        return pre + (STRING,)

    def execute(self, char, td):
        return ThreadData(td.stack.snoc(VString(td.recorded)), EMPTY, False)

    def __str__(self):
        return "EmitString"


@dataclass(frozen=True)
class Record(Instruction):
    """Start recording consumed characters."""

    def post(self, pre):
        return pre

    def execute(self, char, td):
        return ThreadData(td.stack, EMPTY, True)

    def __str__(self):
        return "Record"


Routine = Tuple[Instruction, ...]


def is_init_routine(routine: Routine) -> bool:
    """Whether ``routine`` may run before any character is consumed."""
    return not any(isinstance(instr, PushChar) for instr in routine)


def routine_post(routine: Routine, pre: StackShape) -> StackShape:
    for instr in routine:
        pre = instr.post(pre)
    return pre


def exec_instruction(
    instr: Instruction,
    char: Optional[str],
    td: ThreadData,
    pre: Optional[StackShape] = None,
) -> ThreadData:
    """Run one instruction.

    When ``pre`` is given (checked mode) the stack must conform to it before,
    and to the instruction's post shape after.

    Raises:
        MissingChar: for PushChar without a current character.
        ShapeViolation: in checked mode, on a stack breaking the contract.
    """
    if pre is None:
        return instr.execute(char, td)
    if not conforms_stack(td.stack, pre):
        raise ShapeViolation("stack %r does not conform to %s" % (td.stack, _show(pre)))
    post = instr.post(pre)
    td = instr.execute(char, td)
    if not conforms_stack(td.stack, post):
        raise ShapeViolation("%s left %r, expected %s" % (instr, td.stack, _show(post)))
    return td


def exec_routine(
    routine: Routine,
    char: Optional[str],
    td: ThreadData,
    pre: Optional[StackShape] = None,
) -> ThreadData:
    for instr in routine:
        td = exec_instruction(instr, char, td, pre)
        if pre is not None:
            pre = instr.post(pre)
    return td


class Edge(NamedTuple):
    cond: CharCond
    target: Target
    routine: Routine


@dataclass(frozen=True)
class MooreMachine:
    state_count: int
    lookup: Tuple[StackShape, ...]
    shape: Shape
    init: Tuple[Tuple[Target, Routine], ...]
    edges: Tuple[Tuple[Edge, ...], ...]

    def shape_of(self, target: Target) -> StackShape:
        if target is ACCEPT:
            return (self.shape,)
        return self.lookup[target]

    def next(self, state: int, char: str) -> List[Edge]:
        return [edge for edge in self.edges[state] if satisfies(edge.cond, char)]

    @property
    def edge_count(self) -> int:
        return sum(len(edges) for edges in self.edges)

    @property
    def accepts_empty(self) -> bool:
        return any(target is ACCEPT for target, _ in self.init)


def _show_target(target: Target) -> str:
    return "accept" if target is ACCEPT else "state %d" % target


def validate_machine(m: MooreMachine) -> List[str]:
    """Check the shape contracts of every routine of ``m``.

    Returns a list of human-readable violations, empty when ``m`` is
    well-typed.
    """
    violations: List[str] = []
    if len(m.lookup) != m.state_count or len(m.edges) != m.state_count:
        violations.append(
            "machine with %d states has %d shapes and %d edge lists"
            % (m.state_count, len(m.lookup), len(m.edges))
        )
        return violations

    def target_ok(target: Target, where: str) -> bool:
        if target is ACCEPT or 0 <= target < m.state_count:
            return True
        violations.append("%s targets unknown state %d" % (where, target))
        return False

    def check(routine: Routine, pre: StackShape, target: Target, where: str):
        try:
            post = routine_post(routine, pre)
        except ShapeViolation as e:
            violations.append("%s: %s" % (where, e.args[0]))
            return
        if post != m.shape_of(target):
            violations.append(
                "%s ends with %s, %s expects %s"
                % (where, _show(post), _show_target(target), _show(m.shape_of(target)))
            )

    for i, (target, routine) in enumerate(m.init):
        where = "init entry %d" % i
        if not is_init_routine(routine):
            violations.append("%s contains PushChar" % where)
        if target_ok(target, where):
            check(routine, (), target, where)
    for state, edges in enumerate(m.edges):
        for i, edge in enumerate(edges):
            where = "edge %d of state %d" % (i, state)
            if target_ok(edge.target, where):
                check(edge.routine, m.lookup[state], edge.target, where)
    return violations


def check_machine(m: MooreMachine) -> MooreMachine:
    """Raise ShapeViolation listing every finding of :func:`validate_machine`."""
    violations = validate_machine(m)
    if violations:
        raise ShapeViolation(*violations)
    return m


def render_cond(cond: CharCond) -> str:
    if isinstance(cond, OneOfC):
        return cond.chars
    if isinstance(cond, RangeC):
        return "%s-%s" % (cond.lo, cond.hi)
    if isinstance(cond, PredC):
        return "<pred>"
    raise TypeError("not a character condition: %r" % (cond,))


def render_routine(routine: Routine) -> List[str]:
    return [str(instr) for instr in routine]


def dump_machine(m: MooreMachine) -> Dict[str, Any]:
    """JSON-ready description of ``m``; the accepting state is ``null``."""
    return {
        "state_count": m.state_count,
        "yield": str(m.shape),
        "states": [
            {"state": state, "shape": [str(s) for s in shape]}
            for state, shape in enumerate(m.lookup)
        ],
        "init": [
            {"to": target, "routine": render_routine(routine)}
            for target, routine in m.init
        ],
        "edges": [
            {
                "from": state,
                "guard": render_cond(edge.cond),
                "to": edge.target,
                "routine": render_routine(edge.routine),
            }
            for state, edges in enumerate(m.edges)
            for edge in edges
        ],
    }
