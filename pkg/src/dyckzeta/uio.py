"""Unit interval orders on {1..n}.

An order arises from n unit-length intervals numbered left to right, with
i below j exactly when interval i ends strictly before interval j begins.
The canonical encoding is the predecessor-count vector: pred[j] is the
number of elements below j, and the elements below j are exactly
{1, ..., pred[j]}.  A vector encodes such an order iff 0 <= pred[j] <= j - 1
and pred is weakly increasing; both are enforced at construction.
"""

from __future__ import annotations

import json
from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import PreconditionError, ValidationError
from .lattice import AreaSequence, DyckWord, area_sequence_from_word, word_from_area_sequence


class Relation(Enum):
    BELOW = "below"
    ABOVE = "above"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True, slots=True)
class UnitIntervalOrder:
    """Order stored as its weakly increasing predecessor-count vector."""

    pred: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "pred", tuple(self.pred))
        for j, p in enumerate(self.pred, start=1):
            if not 0 <= p <= j - 1:
                raise ValidationError(
                    f"pred[{j}] = {p} outside 0..{j - 1}"
                )
            if j > 1 and p < self.pred[j - 2]:
                raise ValidationError(
                    f"pred[{j}] = {p} breaks weak monotonicity "
                    f"(pred[{j - 1}] = {self.pred[j - 2]})"
                )

    @property
    def n(self) -> int:
        return len(self.pred)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.pred)


@dataclass(frozen=True, slots=True)
class IntervalConfiguration:
    """Left endpoints of n unit-length intervals, weakly increasing.

    Endpoints are exact rationals; floats are rejected so that "strictly to
    the left" stays decidable.
    """

    lefts: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "lefts", tuple(_exact(x) for x in self.lefts))
        for idx in range(1, len(self.lefts)):
            if self.lefts[idx] < self.lefts[idx - 1]:
                raise ValidationError(
                    f"left endpoints must be weakly increasing: endpoint "
                    f"{idx + 1} = {self.lefts[idx]} < endpoint {idx} = "
                    f"{self.lefts[idx - 1]}"
                )

    @classmethod
    def normalized(cls, lefts: Iterable[Fraction | int]) -> "IntervalConfiguration":
        """Sort endpoints; ties keep their input order (stable)."""
        return cls(tuple(sorted(_exact(x) for x in lefts)))

    @property
    def n(self) -> int:
        return len(self.lefts)


@dataclass(frozen=True, slots=True)
class LevelProfile:
    """Longest-chain heights: 0 for minimal elements, weakly increasing."""

    levels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        for j, lv in enumerate(self.levels, start=1):
            if lv < 0:
                raise ValidationError(f"level {j} is negative: {lv}")
            if j == 1 and lv != 0:
                raise ValidationError(f"level 1 must be 0, got {lv}")
            if j > 1 and lv < self.levels[j - 2]:
                raise ValidationError(
                    f"levels must be weakly increasing: level {j} = {lv} < "
                    f"level {j - 1} = {self.levels[j - 2]}"
                )

    @property
    def n(self) -> int:
        return len(self.levels)


def _exact(x) -> Fraction:
    if isinstance(x, float):
        raise ValidationError(
            f"floating-point endpoint {x!r} rejected; use Fraction or int"
        )
    return Fraction(x)


def uio_from_intervals(config: IntervalConfiguration) -> UnitIntervalOrder:
    """Order with i below j iff interval i lies strictly left of interval j.

    With unit lengths that reads lefts[i] + 1 < lefts[j]; sorted endpoints
    make the predecessors of j a prefix, so pred[j] is a bisection count.
    """
    lefts = config.lefts
    pred = tuple(bisect_left(lefts, left - 1) for left in lefts)
    return UnitIntervalOrder(pred)


def relation(u: UnitIntervalOrder, i: int, j: int) -> Relation:
    """How elements i and j compare in u (1-based, distinct)."""
    for e in (i, j):
        if not 1 <= e <= u.n:
            raise PreconditionError(f"element {e} outside 1..{u.n}")
    if i == j:
        raise PreconditionError("relation() expects two distinct elements")
    if i <= u.pred[j - 1]:
        return Relation.BELOW
    if j <= u.pred[i - 1]:
        return Relation.ABOVE
    return Relation.INCOMPARABLE


def levels(u: UnitIntervalOrder) -> LevelProfile:
    """Level of j: 0 if j is minimal, else 1 + max level of its predecessors.

    Monotonicity of levels makes that max the level of the last predecessor.
    """
    lv: list[int] = []
    for p in u.pred:
        lv.append(0 if p == 0 else lv[p - 1] + 1)
    return LevelProfile(tuple(lv))


def a_map(u: UnitIntervalOrder) -> DyckWord:
    """Path whose area set is the incomparable pairs {(x,y) : pred[y] < x < y}.

    Row-wise that is the area sequence a_j = j - 1 - pred[j].
    """
    seq = AreaSequence(tuple(j - 1 - p for j, p in enumerate(u.pred, start=1)))
    return word_from_area_sequence(seq)


def a_inverse(d: DyckWord) -> UnitIntervalOrder:
    """Inverse of a_map: pred[j] = j - 1 - a_j."""
    seq = area_sequence_from_word(d)
    return UnitIntervalOrder(
        tuple(j - 1 - a for j, a in enumerate(seq.entries, start=1))
    )


def extend(u: UnitIntervalOrder, k: int) -> UnitIntervalOrder:
    """Append a rightmost element with predecessor count k.

    Geometrically: a new unit interval to the right of the existing ones,
    strictly right of intervals 1..k and overlapping the rest.  The new
    element is incomparable to exactly n - k elements.
    """
    floor = u.pred[-1] if u.n else 0
    if not floor <= k <= u.n:
        raise PreconditionError(
            f"extension count k = {k} outside {floor}..{u.n}"
        )
    return UnitIntervalOrder(u.pred + (k,))


def enumerate_uio(n: int) -> Iterator[UnitIntervalOrder]:
    """Yield every unit interval order on {1..n} exactly once.

    Order is lexicographic, ascending, on pred vectors; verification shards
    rely on this order being stable.
    """
    if n < 0:
        raise PreconditionError(f"size must be non-negative, got {n}")

    def rec(prefix: list[int]) -> Iterator[UnitIntervalOrder]:
        j = len(prefix)
        if j == n:
            yield UnitIntervalOrder(tuple(prefix))
            return
        for p in range(prefix[-1] if prefix else 0, j + 1):
            prefix.append(p)
            yield from rec(prefix)
            prefix.pop()

    return rec([])


def parse_pred(text: str) -> UnitIntervalOrder:
    """Parse a comma-separated predecessor-count vector such as "0,1,1,2"."""
    if text == "":
        return UnitIntervalOrder(())
    entries = []
    for pos, token in enumerate(text.split(","), start=1):
        try:
            entries.append(int(token))
        except ValueError:
            raise ValidationError(
                f"entry {pos} is not an integer: {token!r}"
            ) from None
    return UnitIntervalOrder(tuple(entries))


def parse_intervals(text: str) -> IntervalConfiguration:
    """Parse a JSON list of {"num": ..., "den": ...} left endpoints."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"bad interval JSON: {exc}") from None
    if not isinstance(raw, list):
        raise ValidationError("interval JSON must be a list of {num, den} objects")
    lefts = []
    for pos, item in enumerate(raw, start=1):
        if not isinstance(item, dict) or set(item) != {"num", "den"}:
            raise ValidationError(
                f"interval {pos} must be an object with exactly num and den"
            )
        num, den = item["num"], item["den"]
        if not isinstance(num, int) or not isinstance(den, int):
            raise ValidationError(f"interval {pos}: num and den must be integers")
        if den == 0:
            raise ValidationError(f"interval {pos}: zero denominator")
        lefts.append(Fraction(num, den))
    return IntervalConfiguration(tuple(lefts))
