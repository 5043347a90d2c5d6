"""Shared oracles and hypothesis strategies.

The oracles here are deliberately independent of the library's conversion
formulas: they re-derive expected values by drawing the path and testing
box membership, or by direct recurrences.
"""

from collections import defaultdict

from hypothesis import strategies as st

from dyckzeta import AreaSequence, UnitIntervalOrder


def catalan_by_recurrence(up_to):
    """c_0..c_up_to via c_{k+1} = sum_i c_i * c_{k-i}."""
    c = [1]
    for k in range(up_to):
        c.append(sum(c[i] * c[k - i] for i in range(k + 1)))
    return c


def drawn_boxes(word):
    """Boxes between the drawn path and the diagonal, by membership test.

    Box (i,j) covers i-1 <= x <= i, j-1 <= y <= j.  It lies strictly above
    the diagonal iff i < j, and between path and diagonal iff the path's
    vertical crossing of the strip j-1 <= y <= j is weakly left of the box.
    """
    n = len(word) // 2
    crossing = {}
    x = y = 0
    for ch in word:
        if ch == "a":
            y += 1
            crossing[y] = x
        else:
            x += 1
    return {
        (i, j)
        for j in range(1, n + 1)
        for i in range(1, j)
        if crossing[j] <= i - 1
    }


def drawn_area_sequence(word):
    """Per-row counts of drawn_boxes, bottom row first."""
    n = len(word) // 2
    counts = [0] * n
    for _, j in drawn_boxes(word):
        counts[j - 1] += 1
    return tuple(counts)


def strip_crossings(word):
    """Per-strip crossing sequences: 'u' for an up step into strip t from
    below, 'd' for a right step leaving it downward."""
    seqs = defaultdict(list)
    x = y = 0
    for ch in word:
        if ch == "a":
            y += 1
            seqs[y - x].append("u")
        else:
            x += 1
            seqs[y - x + 1].append("d")
    return dict(seqs)


@st.composite
def area_sequences(draw, max_n=20):
    n = draw(st.integers(min_value=0, max_value=max_n))
    entries = []
    for j in range(n):
        ceiling = 0 if j == 0 else entries[-1] + 1
        entries.append(draw(st.integers(min_value=0, max_value=ceiling)))
    return AreaSequence(tuple(entries))


@st.composite
def pred_vectors(draw, max_n=12):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pred = []
    for j in range(n):
        floor = pred[-1] if pred else 0
        pred.append(draw(st.integers(min_value=floor, max_value=j)))
    return UnitIntervalOrder(tuple(pred))
