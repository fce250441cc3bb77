# Copyright (C) 2026  The Software Heritage developers
# See the AUTHORS file at the top-level directory of this distribution
# License: GNU General Public License version 3, or any later version
# See top-level LICENSE file for more information

"""Lock-step execution of Moore machines.

All threads advance together over the input. After every step, threads that
reached the same state are merged, keeping the one with the highest priority
(the earliest in init/edge order), so the pool never holds more than one
thread per state and the cost of each character is bounded by the machine.

A machine may be run by any number of callers at once: all execution state
is local to a call. ``checked=True`` verifies every stack against the shapes
of the machine while running.
"""

from collections import deque
import logging
from typing import (
    Callable,
    Deque,
    Iterable,
    Iterator,
    List,
    NamedTuple,
    Optional,
    Tuple,
)

from swh.tyre.core import satisfies
from swh.tyre.exc import NotConsuming, ShapeViolation
from swh.tyre.machine import (
    ACCEPT,
    MooreMachine,
    Target,
    ThreadData,
    exec_instruction,
    exec_routine,
)
from swh.tyre.values import ParseValue, conforms_stack, render_stack

logger = logging.getLogger(__name__)


class Thread(NamedTuple):
    state: Target
    data: ThreadData


class PrefixResult(NamedTuple):
    value: Optional[ParseValue]
    consumed: int


def _merge(m: MooreMachine, threads: List[Thread], checked: bool) -> List[Thread]:
    seen = set()
    merged = []
    for thread in threads:
        if thread.state not in seen:
            seen.add(thread.state)
            merged.append(thread)
    if checked and len(merged) > m.state_count + 1:
        raise ShapeViolation(
            "thread pool of %d exceeds %d states" % (len(merged), m.state_count)
        )
    return merged


def _check(m: MooreMachine, thread: Thread) -> Thread:
    if not conforms_stack(thread.data.stack, m.shape_of(thread.state)):
        raise ShapeViolation(
            "stack %s does not conform to the shape of state %s"
            % (render_stack(thread.data.stack), thread.state)
        )
    return thread


def init_threads(m: MooreMachine, checked: bool = False) -> List[Thread]:
    """Threads of the init entries of ``m``, in priority order."""
    if checked:
        logger.debug("running %s machine in checked mode", m.shape)
    threads = []
    for target, routine in m.init:
        data = exec_routine(routine, None, ThreadData(), () if checked else None)
        thread = Thread(target, data)
        threads.append(_check(m, thread) if checked else thread)
    return _merge(m, threads, checked)


def step(
    m: MooreMachine, threads: List[Thread], char: str, checked: bool = False
) -> List[Thread]:
    """Advance every live thread over ``char``."""
    produced = []
    for thread in threads:
        state = thread.state
        if state is ACCEPT:
            continue
        pre = m.lookup[state] if checked else None
        for edge in m.edges[state]:
            if not satisfies(edge.cond, char):
                continue
            data = thread.data
            if data.rec:
                data = data._replace(recorded=data.recorded.snoc(char))
            data = exec_routine(edge.routine, char, data, pre)
            new = Thread(edge.target, data)
            produced.append(_check(m, new) if checked else new)
    return _merge(m, produced, checked)


def _accepted(threads: List[Thread]) -> Optional[ParseValue]:
    for thread in threads:
        if thread.state is ACCEPT:
            return thread.data.stack.last
    return None


def _live(threads: List[Thread]) -> bool:
    return any(thread.state is not ACCEPT for thread in threads)


def run_full(
    m: MooreMachine, text: Iterable[str], checked: bool = False
) -> Optional[ParseValue]:
    """Parse the whole of ``text``; ``None`` when it does not match."""
    threads = init_threads(m, checked)
    for char in text:
        if not _live(threads):
            return None
        threads = step(m, threads, char, checked)
    return _accepted(threads)


def match(m: MooreMachine, text: Iterable[str], checked: bool = False) -> bool:
    return run_full(m, text, checked) is not None


def _scan(
    m: MooreMachine, chars: Iterator[str], greedy: bool, checked: bool
) -> Tuple[Optional[PrefixResult], List[str]]:
    """Run on a prefix of ``chars``; return the chosen acceptance, if any,
    and every character read. No character is read once the pool has no
    live thread left."""
    read: List[str] = []
    threads = init_threads(m, checked)
    found = None
    value = _accepted(threads)
    if value is not None:
        found = PrefixResult(value, 0)
        if not greedy:
            return found, read
    while _live(threads):
        char = next(chars, None)
        if char is None:
            break
        read.append(char)
        threads = step(m, threads, char, checked)
        value = _accepted(threads)
        if value is not None:
            found = PrefixResult(value, len(read))
            if not greedy:
                break
    return found, read


def parse_prefix(
    m: MooreMachine, text: str, greedy: bool = True, checked: bool = False
) -> Tuple[PrefixResult, str]:
    """Parse the longest (``greedy``) or shortest matching prefix of ``text``.

    Returns the result and the unparsed remainder; on failure the value is
    ``None`` and the remainder is the whole text.
    """
    found, _ = _scan(m, iter(text), greedy, checked)
    if found is None:
        return PrefixResult(None, 0), text
    return found, text[found.consumed :]


class CharStream:
    """A lazily consumed character source supporting pushback."""

    def __init__(self, source: Iterable[str]):
        self._source = iter(source)
        self._pending: Deque[str] = deque()

    def __iter__(self) -> "CharStream":
        return self

    def __next__(self) -> str:
        if self._pending:
            return self._pending.popleft()
        return next(self._source)

    def unread(self, chars: List[str]) -> None:
        self._pending.extendleft(reversed(chars))

    def at_end(self) -> bool:
        char = next(self, None)
        if char is None:
            return True
        self.unread([char])
        return False


def get_token(
    m: MooreMachine,
    stream: Iterable[str],
    greedy: bool = True,
    checked: bool = False,
) -> Tuple[Optional[ParseValue], CharStream]:
    """Parse a prefix of ``stream``, pulling characters only as needed.

    On success the returned stream starts right after the parsed prefix; on
    failure it is the original stream, nothing consumed. A greedy parse with
    a pool that never dies on an endless stream does not return.
    """
    source = stream if isinstance(stream, CharStream) else CharStream(stream)
    found, read = _scan(m, source, greedy, checked)
    if found is None:
        source.unread(read)
        return None, source
    source.unread(read[found.consumed :])
    return found.value, source


def tokens(
    m: MooreMachine,
    stream: Iterable[str],
    greedy: bool = True,
    checked: bool = False,
) -> Iterator[ParseValue]:
    """Repeated :func:`get_token` until a failure or the end of the stream."""
    source = stream if isinstance(stream, CharStream) else CharStream(stream)
    while not source.at_end():
        found, read = _scan(m, source, greedy, checked)
        if found is None or found.consumed == 0:
            source.unread(read)
            return
        source.unread(read[found.consumed :])
        yield found.value  # type: ignore[misc]


class Segment(NamedTuple):
    gap: str
    matched: str
    value: ParseValue


def segments(
    m: MooreMachine, text: str, greedy: bool = True, checked: bool = False
) -> Tuple[List[Segment], str]:
    """Split ``text`` into disjoint leftmost matches and the gaps before them.

    Returns the segments and the trailing gap after the last match.

    Raises:
        NotConsuming: if ``m`` accepts the empty string.
    """
    if m.accepts_empty:
        raise NotConsuming()
    result = []
    gap_start = pos = 0
    while pos < len(text):
        chars = (text[i] for i in range(pos, len(text)))
        found, _ = _scan(m, chars, greedy, checked)
        if found is None:
            pos += 1
            continue
        end = pos + found.consumed
        result.append(
            Segment(text[gap_start:pos], text[pos:end], found.value)  # type: ignore
        )
        gap_start = pos = end
    return result, text[gap_start:]


def disjoint_matches(
    m: MooreMachine, text: str, greedy: bool = True, checked: bool = False
) -> Tuple[List[Tuple[str, ParseValue]], str]:
    """Matched substrings with their parse trees, and the text after the last
    match."""
    found, rest = segments(m, text, greedy, checked)
    return [(s.matched, s.value) for s in found], rest


def substitute(
    m: MooreMachine,
    text: str,
    replacer: Callable[[ParseValue], str],
    greedy: bool = True,
    checked: bool = False,
) -> str:
    """Replace every disjoint match of ``m`` in ``text``."""
    found, rest = segments(m, text, greedy, checked)
    return "".join(s.gap + replacer(s.value) for s in found) + rest


class TraceRow(NamedTuple):
    step: int
    char: Optional[str]
    source: Target
    target: Target
    instruction: str
    stack: str


def trace(m: MooreMachine, text: str) -> List[TraceRow]:
    """Every instruction run while parsing ``text``, with the stack after it.

    Step 0 holds the init routines; step ``i`` the transitions over the
    ``i``-th character. Threads dropped by merging are traced too.
    """
    rows: List[TraceRow] = []

    def run(routine, char, data, step_no, source, target):
        for instr in routine:
            data = exec_instruction(instr, char, data)
            rows.append(
                TraceRow(
                    step_no,
                    char,
                    source,
                    target,
                    str(instr),
                    render_stack(data.stack),
                )
            )
        return data

    threads = []
    for target, routine in m.init:
        data = run(routine, None, ThreadData(), 0, None, target)
        threads.append(Thread(target, data))
    threads = _merge(m, threads, False)
    for step_no, char in enumerate(text, 1):
        produced = []
        for thread in threads:
            if thread.state is ACCEPT:
                continue
            for edge in m.edges[thread.state]:
                if not satisfies(edge.cond, char):
                    continue
                data = thread.data
                if data.rec:
                    data = data._replace(recorded=data.recorded.snoc(char))
                data = run(edge.routine, char, data, step_no, thread.state, edge.target)
                produced.append(Thread(edge.target, data))
        threads = _merge(m, produced, False)
    return rows
