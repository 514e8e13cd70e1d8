"""Constant amortized time generation of all Dyck words of size n.

The current word lives in a fixed circular buffer of 2n bits; the cursor
marks the word's first step.  Moving to the firstborn child, to the next
sibling, or back up to the parent's next sibling each costs one or two
bit swaps plus at most one cursor move.  Whether each move is possible
is decided from the current (k, i) label and a stack of ancestor labels,
so every dispatch test is an integer comparison.

Words come out in preorder of the generating tree, firstborn first,
starting with the pyramid.
"""
from __future__ import annotations

import enum
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

from .path_core import DyckWord
from .succession import Label, root_label

SNAPSHOT_VERSION = 1
SNAPSHOT_MAGIC = "dyckcat-genstate"


class ContractError(RuntimeError):
    """An operation was applied to a state that does not allow it."""


class Phase(enum.Enum):
    NOT_STARTED = "not-started"
    RUNNING = "running"
    DONE = "done"


class CircularWord:
    __slots__ = ("buffer", "cursor", "size")

    def __init__(self, buffer: list[int], cursor: int = 0):
        self.buffer = buffer
        self.size = len(buffer)
        self.cursor = cursor % self.size

    def _phys(self, pos: int) -> int:
        return (self.cursor + pos) % self.size

    def __getitem__(self, pos: int) -> int:
        return self.buffer[self._phys(pos)]

    def swap(self, p: int, q: int) -> None:
        """Exchange the bits at logical positions p and q."""
        a, b = self._phys(p), self._phys(q)
        buf = self.buffer
        buf[a], buf[b] = buf[b], buf[a]

    def advance(self) -> None:
        self.cursor = (self.cursor + 1) % self.size

    def retreat(self) -> None:
        self.cursor = (self.cursor - 1) % self.size

    def logical(self) -> str:
        c = self.cursor
        rot = self.buffer[c:] + self.buffer[:c]
        return "".join("1" if b else "0" for b in rot)


@dataclass
class Counters:
    swaps: int = 0
    cursor_moves: int = 0
    pushes: int = 0
    pops: int = 0
    label_updates: int = 0
    tests: int = 0
    op1: int = 0
    op2: int = 0
    op3: int = 0

    ACTION_FIELDS = ("swaps", "cursor_moves", "pushes", "pops", "label_updates", "tests")

    @property
    def total_actions(self) -> int:
        return sum(getattr(self, f) for f in self.ACTION_FIELDS)


def _next_sibling_label(label: Label) -> Label:
    k, i = label
    return Label(k - 1, i - 1 if i == k - 1 else i)


class GenState:
    """Full state of one generation run; single owner, strictly sequential."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.n = n
        self.word = CircularWord([1] * n + [0] * n)
        self.label = root_label(n)
        self.ancestors: list[Label] = []
        self.counters = Counters()
        self.emitted = 0
        self.phase = Phase.NOT_STARTED
        self.op3_run = 0
        self.max_op3_run = 0

    def logical(self) -> DyckWord:
        return DyckWord(self.word.logical())

    def __iter__(self):
        return self

    def __next__(self) -> DyckWord:
        w = next_word(self)
        if w is None:
            raise StopIteration
        return w

    # -- snapshot -----------------------------------------------------------
    def snapshot(self) -> str:
        lines = [
            f"{SNAPSHOT_MAGIC} {SNAPSHOT_VERSION}",
            f"n={self.n}",
            "buffer=" + "".join(map(str, self.word.buffer)),
            f"cursor={self.word.cursor}",
            f"label={self.label}",
            "ancestors=" + " ".join(str(a) for a in self.ancestors),
            f"emitted={self.emitted}",
            f"phase={self.phase.value}",
            f"op3_run={self.op3_run}",
            f"max_op3_run={self.max_op3_run}",
            "counters=" + ",".join(f"{k}:{v}" for k, v in asdict(self.counters).items()),
        ]
        return "\n".join(lines) + "\n"

    @classmethod
    def restore(cls, text: str) -> "GenState":
        head, *rest = text.strip("\n").split("\n")
        magic, _, version = head.partition(" ")
        if magic != SNAPSHOT_MAGIC or version != str(SNAPSHOT_VERSION):
            raise ValueError(f"unrecognised snapshot header {head!r}")
        fields = dict(line.split("=", 1) for line in rest)
        state = cls(int(fields["n"]))
        state.word = CircularWord([int(c) for c in fields["buffer"]], int(fields["cursor"]))
        if state.word.size != 2 * state.n:
            raise ValueError("buffer length does not match n")
        state.label = Label.parse(fields["label"])
        state.ancestors = [Label.parse(a) for a in fields["ancestors"].split()]
        state.emitted = int(fields["emitted"])
        state.phase = Phase(fields["phase"])
        state.op3_run = int(fields["op3_run"])
        state.max_op3_run = int(fields["max_op3_run"])
        for item in fields["counters"].split(","):
            k, v = item.split(":")
            setattr(state.counters, k, int(v))
        return state


def new_generator(n: int) -> GenState:
    return GenState(n)


def _root_firstborn(state: GenState) -> None:
    """Overturn the pyramid's apex."""
    n = state.n
    if state.phase is not Phase.RUNNING or state.emitted != 1 or state.ancestors:
        raise ContractError("root_firstborn applies once, right after the root")
    if n < 2:
        raise ContractError("the root of size 1 has no children")
    c = state.counters
    state.word.swap(n - 1, n)
    c.swaps += 1
    state.ancestors.append(state.label)
    c.pushes += 1
    state.label = Label(n - 1, n - 2)
    c.label_updates += 1
    state.emitted += 1
    state.op3_run = 0


def _apply_op1(state: GenState) -> None:
    """Descend to the firstborn: first up-step swaps with the first
    down-step of the last descent, then the cursor moves forward."""
    k, i = state.label
    if state.phase is not Phase.RUNNING or not state.ancestors or i < 1:
        raise ContractError(f"op1 needs an active non-root path, label {state.label}")
    c = state.counters
    state.word.swap(0, 2 * state.n - k)
    c.swaps += 1
    state.word.advance()
    c.cursor_moves += 1
    state.ancestors.append(state.label)
    c.pushes += 1
    state.label = Label(k, min(k, i) - 1)
    c.label_updates += 1
    c.op1 += 1
    state.emitted += 1
    state.op3_run = 0


def _apply_op2(state: GenState) -> None:
    """Next sibling: overturn the rightmost peak."""
    k, _ = state.label
    if state.phase is not Phase.RUNNING or not state.ancestors or k < 2:
        raise ContractError(f"op2 needs a path with a next sibling, label {state.label}")
    c = state.counters
    m = 2 * state.n
    state.word.swap(m - 1 - k, m - k)
    c.swaps += 1
    state.label = _next_sibling_label(state.label)
    c.label_updates += 1
    c.op2 += 1
    state.emitted += 1
    state.op3_run = 0


def _apply_op3(state: GenState) -> None:
    """Uncle: drop the trailing p_1 and overturn the parent's last peak.

    Realised as two pair swaps and one cursor step back.
    """
    if state.phase is not Phase.RUNNING or state.label.k != 1:
        raise ContractError(f"op3 needs a path ending in p_1, label {state.label}")
    if len(state.ancestors) < 2:
        raise ContractError("the last son of the root has no uncle")
    c = state.counters
    m = 2 * state.n
    parent = state.ancestors.pop()
    c.pops += 1
    kp = parent.k
    state.word.swap(m - 2, m - 1)
    state.word.swap(m - 2 - kp, m - 1 - kp)
    c.swaps += 2
    state.word.retreat()
    c.cursor_moves += 1
    state.label = _next_sibling_label(parent)
    c.label_updates += 1
    c.op3 += 1
    state.emitted += 1
    state.op3_run += 1
    state.max_op3_run = max(state.max_op3_run, state.op3_run)


def root_firstborn(state: GenState) -> DyckWord:
    _root_firstborn(state)
    return state.logical()


def apply_op1(state: GenState) -> DyckWord:
    _apply_op1(state)
    return state.logical()


def apply_op2(state: GenState) -> DyckWord:
    _apply_op2(state)
    return state.logical()


def apply_op3(state: GenState) -> DyckWord:
    _apply_op3(state)
    return state.logical()


def step(state: GenState) -> bool:
    """Advance by one path without rendering it; False once done."""
    if state.phase is Phase.DONE:
        return False
    if state.phase is Phase.NOT_STARTED:
        state.phase = Phase.RUNNING if state.n > 1 else Phase.DONE
        state.emitted = 1
        return True
    if not state.ancestors:
        _root_firstborn(state)
        return True
    c = state.counters
    c.tests += 1
    if state.label.i >= 1:
        _apply_op1(state)
        return True
    c.tests += 1
    if state.label.k >= 2:
        _apply_op2(state)
        return True
    c.tests += 1
    if len(state.ancestors) >= 2:
        _apply_op3(state)
        return True
    state.phase = Phase.DONE
    return False


def next_word(state: GenState) -> Optional[DyckWord]:
    """Advance by one path and return it; None once every path is out."""
    return state.logical() if step(state) else None


@dataclass
class RunSummary:
    n: int
    count: int
    counters: Counters
    max_op3_run: int
    wall_time: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def actions_per_path(self) -> float:
        return self.counters.total_actions / self.count


def run_all(n: int, sink: Optional[Callable[[DyckWord], object]] = None,
            state: Optional[GenState] = None) -> RunSummary:
    """Drive a generator to completion, passing every word to ``sink``.

    Pass ``state`` to resume a run; if ``sink`` raises, the state already
    reflects the word it was handed and can be resumed.
    """
    state = GenState(n) if state is None else state
    t0 = time.perf_counter()
    if sink is None:
        while step(state):
            pass
    else:
        while step(state):
            sink(state.logical())
    return RunSummary(n, state.emitted, state.counters, state.max_op3_run,
                      time.perf_counter() - t0)
