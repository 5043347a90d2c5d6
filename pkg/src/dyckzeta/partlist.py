"""Part listings and their posets.

A part listing is any sequence w of non-negative integers.  It defines a
poset on positions 1..n: i is below j when w_j - w_i >= 2, or when
w_j - w_i = 1 and i < j.  Every such poset is isomorphic to a unique unit
interval order, and for each unit interval order there is a unique listing
that is also the area sequence of a Dyck path; the insertion algorithm in
q_map builds it one element at a time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .errors import PreconditionError, ValidationError
from .lattice import AreaSequence, DyckWord, word_from_area_sequence
from .uio import LevelProfile, UnitIntervalOrder, levels


@dataclass(frozen=True, slots=True)
class PartListing:
    """Sequence of non-negative integers, no other constraint."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        for pos, w in enumerate(self.entries, start=1):
            if w < 0:
                raise ValidationError(f"entry {pos} is negative: {w}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return ",".join(str(w) for w in self.entries)


@dataclass(frozen=True, slots=True)
class Poset:
    """Strict partial order on {1..n} as a boolean relation matrix.

    Irreflexivity, antisymmetry and transitivity are asserted on
    construction, guarding against slips in relation-building code.
    """

    n: int
    below: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "below", tuple(tuple(row) for row in self.below))
        if len(self.below) != self.n or any(len(row) != self.n for row in self.below):
            raise ValidationError(f"relation matrix is not {self.n}x{self.n}")
        m = self.below
        for i in range(self.n):
            if m[i][i]:
                raise ValidationError(f"irreflexivity violated at element {i + 1}")
            for j in range(self.n):
                if m[i][j] and m[j][i]:
                    raise ValidationError(
                        f"antisymmetry violated between {i + 1} and {j + 1}"
                    )
        for i in range(self.n):
            for j in range(self.n):
                if not m[i][j]:
                    continue
                for k in range(self.n):
                    if m[j][k] and not m[i][k]:
                        raise ValidationError(
                            f"transitivity violated: {i + 1} < {j + 1} < {k + 1}"
                        )

    def holds(self, i: int, j: int) -> bool:
        """True iff element i is below element j (1-based)."""
        return self.below[i - 1][j - 1]

    def relation_count(self) -> int:
        return sum(row.count(True) for row in self.below)

    def covers(self, i: int, j: int) -> bool:
        """True iff i is below j with nothing strictly between them."""
        return self.holds(i, j) and not any(
            self.holds(i, k) and self.holds(k, j) for k in range(1, self.n + 1)
        )


def poset_to_json(p: Poset, covers: bool = False) -> str:
    """Serialize as a JSON relation list [[i,j],...], sorted.

    With covers=True only the covering pairs are emitted; otherwise the full
    relation.
    """
    keep = p.covers if covers else p.holds
    pairs = [
        [i, j]
        for i in range(1, p.n + 1)
        for j in range(1, p.n + 1)
        if keep(i, j)
    ]
    return json.dumps({"n": p.n, "relations": pairs, "covers": covers})


def poset_from_json(text: str) -> Poset:
    """Parse the output of poset_to_json; covering input is closed
    transitively before the poset invariants are checked."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"bad poset JSON: {exc}") from None
    if (
        not isinstance(raw, dict)
        or not isinstance(raw.get("n"), int)
        or not isinstance(raw.get("relations"), list)
    ):
        raise ValidationError('poset JSON must be {"n": ..., "relations": [[i,j],...]}')
    n = raw["n"]
    below = [[False] * n for _ in range(n)]
    for pair in raw["relations"]:
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(e, int) and 1 <= e <= n for e in pair)
        ):
            raise ValidationError(f"bad relation pair {pair!r}")
        below[pair[0] - 1][pair[1] - 1] = True
    if raw.get("covers"):
        changed = True
        while changed:
            changed = False
            for i in range(n):
                for j in range(n):
                    if not below[i][j]:
                        continue
                    for k in range(n):
                        if below[j][k] and not below[i][k]:
                            below[i][k] = True
                            changed = True
    return Poset(n, tuple(tuple(row) for row in below))


@dataclass(frozen=True, slots=True)
class InsertionTrace:
    """Full record of an insertion run: levels, comparability counts C_i,
    the intermediate listings q_1..q_n, and where each letter landed."""

    levels: LevelProfile
    c: tuple[int, ...]
    words: tuple[PartListing, ...]
    positions: tuple[int, ...]

    def __post_init__(self):
        n = self.levels.n
        if not (len(self.c) == len(self.words) == len(self.positions) == n):
            raise ValidationError("trace components disagree on length")
        prev: tuple[int, ...] = ()
        for i in range(n):
            word = self.words[i].entries
            if len(word) != i + 1:
                raise ValidationError(f"intermediate word {i + 1} has wrong length")
            pos = self.positions[i]
            lv = self.levels.levels[i]
            if word != prev[:pos] + (lv,) + prev[pos:]:
                raise ValidationError(
                    f"word {i + 1} is not word {i} with {lv} inserted at {pos}"
                )
            prev = word
        if n:
            # the finished listing must be an area sequence
            AreaSequence(self.words[-1].entries)


def poset_of(w: PartListing) -> Poset:
    """Poset of a listing: i below j iff w_j - w_i >= 2, or = 1 with i < j."""
    n = w.n
    e = w.entries
    below = [
        tuple(
            i != j and (e[j] - e[i] >= 2 or (e[j] - e[i] == 1 and i < j))
            for j in range(n)
        )
        for i in range(n)
    ]
    return Poset(n, tuple(below))


def poset_from_uio(u: UnitIntervalOrder) -> Poset:
    """The order u as a relation matrix on the same labels."""
    below = [
        tuple(i + 1 <= u.pred[j] for j in range(u.n))
        for i in range(u.n)
    ]
    return Poset(u.n, tuple(below))


def _insertion_point(entries: tuple[int, ...], level: int, c: int) -> int:
    """Index at which one copy of `level` is inserted.

    Anchor just after the c-th occurrence of level - 1 (start of word when
    c = 0), then advance past the contiguous run of letters equal to `level`
    beginning there.  Occurrences of `level` elsewhere are not skipped.
    """
    if level < 0:
        raise PreconditionError(f"level must be non-negative, got {level}")
    if c < 0:
        raise PreconditionError(f"count must be non-negative, got {c}")
    if level == 0 and c != 0:
        raise PreconditionError("no letter below 0 exists, so c must be 0 at level 0")
    if c == 0:
        pos = 0
    else:
        seen = 0
        pos = -1
        for idx, x in enumerate(entries):
            if x == level - 1:
                seen += 1
                if seen == c:
                    pos = idx + 1
                    break
        if pos < 0:
            raise PreconditionError(
                f"need {c} occurrences of {level - 1}, found only {seen}"
            )
    while pos < len(entries) and entries[pos] == level:
        pos += 1
    return pos


def q_step(q_prev: PartListing, level: int, c: int) -> PartListing:
    """One insertion step: add a copy of `level` to q_prev.

    See _insertion_point for the placement rule.
    """
    pos = _insertion_point(q_prev.entries, level, c)
    e = q_prev.entries
    return PartListing(e[:pos] + (level,) + e[pos:])


def q_map(u: UnitIntervalOrder) -> tuple[PartListing, InsertionTrace]:
    """Insert the level of each element of u in turn.

    For element i, C_i counts the predecessors of i whose level is one less
    than i's; since levels are weakly increasing these predecessors are a
    contiguous block of {1, ..., pred[i]}.  The finished listing is always a
    valid area sequence, and its poset is the original order up to the
    relabeling of relabeled_poset.
    """
    profile = levels(u)
    lv = profile.levels
    words: list[PartListing] = []
    cs: list[int] = []
    positions: list[int] = []
    cur: tuple[int, ...] = ()
    for i in range(u.n):
        level = lv[i]
        c = sum(1 for j in range(u.pred[i]) if lv[j] == level - 1)
        pos = _insertion_point(cur, level, c)
        cur = cur[:pos] + (level,) + cur[pos:]
        words.append(PartListing(cur))
        cs.append(c)
        positions.append(pos)
    listing = words[-1] if words else PartListing(())
    trace = InsertionTrace(profile, tuple(cs), tuple(words), tuple(positions))
    return listing, trace


def p_map(u: UnitIntervalOrder) -> DyckWord:
    """Path whose area sequence is the listing produced by q_map."""
    listing, _ = q_map(u)
    return word_from_area_sequence(AreaSequence(listing.entries))


def f_permutation(w: PartListing) -> tuple[int, ...]:
    """Number positions by increasing entry value, ties left to right.

    All positions holding 0 get 1, 2, ... left to right, then the positions
    holding 1, and so on; entry i of the result is the number assigned to
    position i.
    """
    by_value = sorted(range(w.n), key=lambda i: (w.entries[i], i))
    f = [0] * w.n
    for number, pos in enumerate(by_value, start=1):
        f[pos] = number
    return tuple(f)


def relabeled_poset(w: PartListing) -> Poset:
    """Transport poset_of(w) along f_permutation: i below j iff their
    preimages compare in the listing's poset."""
    base = poset_of(w)
    f = f_permutation(w)
    preimage = [0] * w.n            # preimage[label - 1] = 0-based position
    for pos, label in enumerate(f):
        preimage[label - 1] = pos
    below = [
        tuple(base.below[preimage[i]][preimage[j]] for j in range(w.n))
        for i in range(w.n)
    ]
    return Poset(w.n, tuple(below))


def is_isomorphic(p1: Poset, p2: Poset) -> bool:
    """Brute-force isomorphism with degree-signature pruning; fine for n <= 9.

    A size mismatch is simply False, not an error.
    """
    if p1.n != p2.n:
        return False
    n = p1.n
    if p1.relation_count() != p2.relation_count():
        return False

    def signature(p: Poset) -> list[tuple[int, int]]:
        return [
            (
                sum(1 for i in range(n) if p.below[i][j]),
                sum(1 for k in range(n) if p.below[j][k]),
            )
            for j in range(n)
        ]

    sig1, sig2 = signature(p1), signature(p2)
    if sorted(sig1) != sorted(sig2):
        return False
    candidates = [
        [j for j in range(n) if sig2[j] == sig1[i]]
        for i in range(n)
    ]
    assigned = [-1] * n
    used = [False] * n

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        for j in candidates[i]:
            if used[j]:
                continue
            ok = all(
                p1.below[k][i] == p2.below[assigned[k]][j]
                and p1.below[i][k] == p2.below[j][assigned[k]]
                for k in range(i)
            )
            if ok:
                assigned[i] = j
                used[j] = True
                if backtrack(i + 1):
                    return True
                used[j] = False
        return False

    return backtrack(0)


def grevlex_key(w: PartListing) -> tuple[int, tuple[int, ...]]:
    """Sort key realizing graded reverse lexicographic order."""
    return (sum(w.entries), tuple(-x for x in w.entries))


def grevlex_compare(w1: PartListing, w2: PartListing) -> int:
    """-1, 0 or 1 as w1 is smaller, equal or larger in grevlex order.

    Sums compare first; on a tie the listing with the LARGER entry at the
    first differing position is the smaller one.
    """
    if w1.n != w2.n:
        raise PreconditionError(
            f"grevlex compares equal-length listings, got {w1.n} and {w2.n}"
        )
    k1, k2 = grevlex_key(w1), grevlex_key(w2)
    if k1 < k2:
        return -1
    if k1 > k2:
        return 1
    return 0


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def grevlex_min_search(u: UnitIntervalOrder, n_max_guard: int = 6) -> PartListing:
    """Grevlex-minimal listing whose poset is isomorphic to u, by exhaustion.

    Deliberately independent of the insertion algorithm: listings are
    enumerated by ascending sum and filtered through is_isomorphic, so this
    can serve as an oracle against q_map.  Some listing for u has sum at
    most n(n-1)/2 (the largest possible area-sequence sum), which bounds the
    search.
    """
    if u.n > n_max_guard:
        raise PreconditionError(
            f"exhaustive search refused for n = {u.n} > guard {n_max_guard}"
        )
    n = u.n
    target = poset_from_uio(u)
    for total in range(n * (n - 1) // 2 + 1):
        best = None
        best_key = None
        for entries in _compositions(total, n):
            w = PartListing(entries)
            key = grevlex_key(w)
            if best_key is not None and key >= best_key:
                continue
            if is_isomorphic(poset_of(w), target):
                best, best_key = w, key
        if best is not None:
            return best
    raise RuntimeError("unreachable: every unit interval order has a part listing")
