"""The zeta map on Dyck paths.

Label every lattice point of a path except (0,0): the top endpoint of an UP
step gets the letter a, the right endpoint of a RIGHT step gets b.  Read the
labels along the diagonals y = x + t for t = 0, 1, 2, ..., each diagonal
bottom-left to top-right, and reinterpret the letters as steps of a new path.

Label dictionary, fixed once to avoid the classic swapped-convention bug:

    input labeling:   UP endpoint -> a,  RIGHT endpoint -> b
    output reading:   b -> UP step,      a -> RIGHT step

Both directions reuse the same two letters on purpose: the textual form of
the input word and the diagonal reading share an alphabet, so worked strings
can be compared letter for letter.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import SizeLimitError, ValidationError
from .lattice import DyckWord, Step, enumerate_dyck
from .partlist import q_map
from .uio import UnitIntervalOrder, extend, levels

#: zeta_inverse builds a full lookup table per size; past this the table
#: (Catalan(n) entries) stops being cheap.
ZETA_INVERSE_MAX_N = 12

_inverse_tables: dict[int, dict[tuple[Step, ...], DyckWord]] = {}
_inverse_lock = threading.Lock()


@dataclass(frozen=True, slots=True)
class DiagonalDecomposition:
    """Step-endpoint labels bucketed by diagonal y = x + t, sorted by x.

    per_diagonal[t] is the label sequence on diagonal t; 2n labels in all.
    Between consecutive diagonals the path crosses up and down alternately,
    so the a-count of bucket t equals the b-count of bucket t - 1.
    """

    per_diagonal: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "per_diagonal", tuple(tuple(b) for b in self.per_diagonal)
        )
        for t, bucket in enumerate(self.per_diagonal):
            for label in bucket:
                if label not in ("a", "b"):
                    raise ValidationError(f"bad label {label!r} on diagonal {t}")
        total = sum(len(b) for b in self.per_diagonal)
        if total % 2:
            raise ValidationError(f"odd label count {total}")
        if self.per_diagonal and self.per_diagonal[0].count("a"):
            raise ValidationError("diagonal 0 cannot carry up-step endpoints")
        for t in range(1, len(self.per_diagonal)):
            ups = self.per_diagonal[t].count("a")
            downs = self.per_diagonal[t - 1].count("b")
            if ups != downs:
                raise ValidationError(
                    f"strip {t} unbalanced: {ups} up crossings vs {downs} down"
                )

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.per_diagonal) // 2


def diagonal_decomposition(d: DyckWord) -> DiagonalDecomposition:
    """Bucket the 2n step-endpoint labels of d by diagonal.

    Also checks, strip by strip, that up and down crossings alternate with
    equal counts; for a valid Dyck word this always holds.
    """
    if not d.steps:
        return DiagonalDecomposition(())
    buckets: list[list[str]] = [[] for _ in range(_max_height(d) + 1)]
    pending_down: dict[int, int] = {}   # strip -> 1 if an up crossing awaits its down
    x = y = 0
    for step in d.steps:
        if step is Step.UP:
            y += 1
            t = y - x
            buckets[t].append("a")
            if pending_down.get(t):
                raise ValidationError(
                    f"strip {t}: two up crossings without a down crossing"
                )
            pending_down[t] = 1
        else:
            x += 1
            t = y - x
            buckets[t].append("b")
            if not pending_down.get(t + 1):
                raise ValidationError(
                    f"strip {t + 1}: down crossing without a preceding up crossing"
                )
            pending_down[t + 1] = 0
    if any(pending_down.values()):
        raise ValidationError("some strip ends with an unmatched up crossing")
    return DiagonalDecomposition(tuple(tuple(b) for b in buckets))


def _max_height(d: DyckWord) -> int:
    best = x = y = 0
    for step in d.steps:
        if step is Step.UP:
            y += 1
            if y - x > best:
                best = y - x
        else:
            x += 1
    return best


def zeta(d: DyckWord) -> DyckWord:
    """Concatenate the diagonal buckets and reread b as UP, a as RIGHT."""
    decomposition = diagonal_decomposition(d)
    steps = tuple(
        Step.UP if label == "b" else Step.RIGHT
        for bucket in decomposition.per_diagonal
        for label in bucket
    )
    return DyckWord(steps)


def zeta_inverse(d: DyckWord) -> DyckWord:
    """The unique path mapping to d under zeta.

    Implemented as a memoized full table per size, built on first use;
    Catalan(12) = 208012 keeps that cheap up to ZETA_INVERSE_MAX_N.  The
    table is immutable once published, so lookups are thread-safe.
    """
    n = d.n
    if n > ZETA_INVERSE_MAX_N:
        raise SizeLimitError(
            f"zeta_inverse supports n <= {ZETA_INVERSE_MAX_N}, got {n}"
        )
    table = _inverse_tables.get(n)
    if table is None:
        with _inverse_lock:
            table = _inverse_tables.get(n)
            if table is None:
                table = {zeta(e).steps: e for e in enumerate_dyck(n)}
                _inverse_tables[n] = table
    return table[d.steps]


def added_peak_parameters(u: UnitIntervalOrder, k: int) -> tuple[int, int]:
    """The two counts governing what a rightmost extension does to the paths.

    With L the level of the element appended by extend(u, k):

    r = (occurrences of L in the listing of u)
      + (occurrences of L - 1 strictly after the inserted L in the listing
         of the extension);

    s = n - k, the number of elements incomparable to the new one.

    The diagonal reading appends the extension's peak after exactly r right
    steps, while the incomparability boxes put it after s; the two counts
    agree, which the harness asserts on every extension pair.
    """
    extended = extend(u, k)
    new_level = levels(extended).levels[-1]
    small, _ = q_map(u)
    big, trace = q_map(extended)
    pos = trace.positions[-1]
    r = small.entries.count(new_level) + sum(
        1 for w in big.entries[pos + 1:] if w == new_level - 1
    )
    s = u.n - k
    return r, s
