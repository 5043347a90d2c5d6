"""Dyck paths and their interchangeable representations.

A Dyck path of size n runs from (0,0) to (n,n) in unit UP and RIGHT steps
without passing below the diagonal.  Three lossless encodings are supported:
the step word itself, the area sequence (per-row count of complete boxes
between the path and the diagonal, bottom row first), and the area set (the
boxes themselves, box (i,j) covering i-1 <= x <= i, j-1 <= y <= j).

Geometry used throughout: row j's UP step sits at x = j - 1 - a_j, and row j
contributes exactly the boxes (j - a_j, j), ..., (j - 1, j).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Iterator, NamedTuple

from .errors import PreconditionError, ValidationError


class Step(Enum):
    """One step of a lattice path; the textual letters are a = UP, b = RIGHT."""

    UP = "a"
    RIGHT = "b"


_STEP_FROM_CHAR = {
    "a": Step.UP, "b": Step.RIGHT,
    "U": Step.UP, "R": Step.RIGHT,
    "1": Step.UP, "0": Step.RIGHT,
}


def catalan(n: int) -> int:
    """Count of Dyck paths (equivalently, unit interval orders) of size n."""
    if n < 0:
        raise PreconditionError(f"size must be non-negative, got {n}")
    return comb(2 * n, n) // (n + 1)


@dataclass(frozen=True, slots=True)
class DyckWord:
    """Immutable sequence of UP/RIGHT steps forming a Dyck path."""

    steps: tuple[Step, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        ups = rights = 0
        for idx, step in enumerate(self.steps):
            if step is Step.UP:
                ups += 1
            elif step is Step.RIGHT:
                rights += 1
                if rights > ups:
                    raise ValidationError(
                        f"path passes below the diagonal at step index {idx}"
                    )
            else:
                raise ValidationError(f"step index {idx} is not an UP/RIGHT step")
        if ups != rights:
            raise ValidationError(
                f"unbalanced word: {ups} up steps vs {rights} right steps"
            )

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return "".join(step.value for step in self.steps)


@dataclass(frozen=True, slots=True)
class AreaSequence:
    """Integer sequence (a_1..a_n) with a_1 = 0 and a_i <= a_{i-1} + 1."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        for j, a in enumerate(self.entries, start=1):
            if a < 0:
                raise ValidationError(f"entry {j} is negative: {a}")
            if j == 1 and a != 0:
                raise ValidationError(f"entry 1 must be 0, got {a}")
            if j > 1 and a > self.entries[j - 2] + 1:
                raise ValidationError(
                    f"entry {j} is {a}, exceeding entry {j - 1} + 1 = "
                    f"{self.entries[j - 2] + 1}"
                )

    @property
    def n(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.entries)


@dataclass(frozen=True, slots=True)
class AreaSet:
    """Set of boxes (i,j), 1 <= i < j <= n, closed under moving south-east.

    Closure means: if (i,j) is present, so is every (i',j') with
    i <= i' < j' <= j.  Exactly the box sets that arise between a Dyck path
    and the diagonal.
    """

    boxes: frozenset[tuple[int, int]]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "boxes", frozenset(self.boxes))
        if self.n < 0:
            raise ValidationError(f"ambient size must be non-negative, got {self.n}")
        for i, j in self.boxes:
            if not (1 <= i < j <= self.n):
                raise ValidationError(
                    f"box ({i},{j}) violates 1 <= i < j <= n with n = {self.n}"
                )
        for i, j in self.boxes:
            for i2 in range(i, j):
                for j2 in range(i2 + 1, j + 1):
                    if (i2, j2) not in self.boxes:
                        raise ValidationError(
                            f"staircase closure violated: ({i},{j}) present "
                            f"but ({i2},{j2}) missing"
                        )

    def __str__(self) -> str:
        pairs = ";".join(f"{i},{j}" for i, j in sorted(self.boxes))
        return f"n={self.n}:{pairs}"


class Peak(NamedTuple):
    """An UP step immediately followed by a RIGHT step."""

    word_index: int          # 0-based index of the UP step in the word
    apex: tuple[int, int]    # lattice point at the top of the UP step
    height: int              # apex y - apex x, always >= 1


def word_from_area_sequence(s: AreaSequence) -> DyckWord:
    """Path whose row-j UP step sits at x = j - 1 - a_j."""
    steps: list[Step] = []
    x = 0
    for j, a in enumerate(s.entries, start=1):
        target = j - 1 - a
        steps.extend([Step.RIGHT] * (target - x))
        steps.append(Step.UP)
        x = target
    steps.extend([Step.RIGHT] * (s.n - x))
    return DyckWord(tuple(steps))


def area_sequence_from_word(d: DyckWord) -> AreaSequence:
    """Per-row box count between the path and the diagonal, bottom row first."""
    entries: list[int] = []
    x = y = 0
    for step in d.steps:
        if step is Step.UP:
            y += 1
            entries.append(y - 1 - x)
        else:
            x += 1
    return AreaSequence(tuple(entries))


def area_set_from_area_sequence(s: AreaSequence) -> AreaSet:
    """Row j holds the a_j boxes (j - a_j, j), ..., (j - 1, j)."""
    boxes = {
        (i, j)
        for j, a in enumerate(s.entries, start=1)
        for i in range(j - a, j)
    }
    return AreaSet(frozenset(boxes), s.n)


def area_sequence_from_area_set(area: AreaSet) -> AreaSequence:
    """Count boxes per row; inverse of area_set_from_area_sequence."""
    counts = [0] * area.n
    for _, j in area.boxes:
        counts[j - 1] += 1
    return AreaSequence(tuple(counts))


def peaks(d: DyckWord) -> tuple[Peak, ...]:
    """All peaks in word order.

    The last element is the final peak; the last one attaining the maximum
    height is the final maximal peak (see final_maximal_peak).
    """
    found: list[Peak] = []
    x = y = 0
    for idx, step in enumerate(d.steps):
        if step is Step.UP:
            y += 1
            if idx + 1 < len(d.steps) and d.steps[idx + 1] is Step.RIGHT:
                found.append(Peak(idx, (x, y), y - x))
        else:
            x += 1
    return tuple(found)


def final_peak(d: DyckWord) -> Peak:
    """Last peak of the path."""
    all_peaks = peaks(d)
    if not all_peaks:
        raise PreconditionError("the empty path has no peaks")
    return all_peaks[-1]


def final_maximal_peak(d: DyckWord) -> Peak:
    """Last peak whose apex lies on the highest diagonal touched by the path."""
    all_peaks = peaks(d)
    if not all_peaks:
        raise PreconditionError("the empty path has no peaks")
    top = max(p.height for p in all_peaks)
    return [p for p in all_peaks if p.height == top][-1]


def add_final_peak(d: DyckWord, t: int) -> DyckWord:
    """Insert an UP step followed (after the t existing trailing RIGHT steps
    plus one appended RIGHT step) by exactly t + 1 RIGHT steps.

    The result has size n + 1 and its final peak apex is (n - t, n + 1).
    """
    if t < 0:
        raise PreconditionError(f"trailing-step count must be non-negative, got {t}")
    trailing = 0
    for step in reversed(d.steps):
        if step is not Step.RIGHT:
            break
        trailing += 1
    if t > trailing:
        raise PreconditionError(
            f"cannot place a final peak before {t} trailing right steps: "
            f"path has only {trailing}"
        )
    cut = len(d.steps) - t
    return DyckWord(d.steps[:cut] + (Step.UP,) + d.steps[cut:] + (Step.RIGHT,))


def enumerate_dyck(n: int) -> Iterator[DyckWord]:
    """Yield every Dyck word of size n exactly once.

    Order is lexicographic on the step word with UP < RIGHT, i.e. textual
    order of the a/b strings.  Verification shards rely on this order being
    stable.
    """
    if n < 0:
        raise PreconditionError(f"size must be non-negative, got {n}")

    def rec(prefix: list[Step], ups: int, rights: int) -> Iterator[DyckWord]:
        if len(prefix) == 2 * n:
            yield DyckWord(tuple(prefix))
            return
        if ups < n:
            prefix.append(Step.UP)
            yield from rec(prefix, ups + 1, rights)
            prefix.pop()
        if rights < ups:
            prefix.append(Step.RIGHT)
            yield from rec(prefix, ups, rights + 1)
            prefix.pop()

    return rec([], 0, 0)


def parse_word(text: str) -> DyckWord:
    """Parse a step word over a/b (also accepted: U/R, 1/0)."""
    steps = []
    for pos, ch in enumerate(text):
        step = _STEP_FROM_CHAR.get(ch)
        if step is None:
            raise ValidationError(
                f"bad step letter {ch!r} at position {pos}; expected a/b, U/R or 1/0"
            )
        steps.append(step)
    return DyckWord(tuple(steps))


def parse_area_sequence(text: str) -> AreaSequence:
    """Parse comma-separated entries; the empty string is the size-0 sequence."""
    return AreaSequence(_parse_int_vector(text))


def parse_area_set(text: str) -> AreaSet:
    """Parse the "n=N:i,j;i,j;..." encoding emitted by str(AreaSet)."""
    head, sep, body = text.partition(":")
    if not sep or not head.startswith("n="):
        raise ValidationError(
            f"area set text must look like 'n=N:i,j;...', got {text!r}"
        )
    try:
        n = int(head[2:])
    except ValueError:
        raise ValidationError(f"bad ambient size in {head!r}") from None
    boxes = set()
    if body:
        for token in body.split(";"):
            try:
                i_text, j_text = token.split(",")
                box = (int(i_text), int(j_text))
            except ValueError:
                raise ValidationError(f"bad box token {token!r}") from None
            boxes.add(box)
    return AreaSet(frozenset(boxes), n)


def _parse_int_vector(text: str) -> tuple[int, ...]:
    if text == "":
        return ()
    out = []
    for pos, token in enumerate(text.split(","), start=1):
        try:
            out.append(int(token))
        except ValueError:
            raise ValidationError(f"entry {pos} is not an integer: {token!r}") from None
    return tuple(out)
