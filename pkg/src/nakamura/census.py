"""Census of complete simple games with a single shift-minimal winning row.

For a composition ``(n_1, ..., n_t)`` of n, the admissible single rows are
``m_1 in 1..n_1``, ``m_j in 1..n_j - 1`` for the middle classes,
``m_t in 0..n_t - 1`` (and ``m_1 in 1..n_1`` alone when t = 1).  The
Nakamura number of each such game comes from the prefix-sum closed form,
infinite exactly when ``m_1 = n_1``.  The weighted subclass is selected by
the critical-threshold LP over count vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Iterator, Optional

from .bounds import is_weighted_vectors
from .games import (
    CapacityError,
    CompleteGame,
    maximal_losing_vectors,
    minimal_winning_vectors,
    prefix_sums,
    shift_incomparable,
)

COMPLETE_R1 = "complete_r1"
WEIGHTED_R1 = "weighted_r1"

# Default census caps; larger runs must opt in explicitly.
COMPLETE_CAP = 16
WEIGHTED_CAP = 12


def compositions(n: int, parts: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Compositions of n in (length, lexicographic) order."""
    lengths = range(1, n + 1) if parts is None else [parts]
    for t in lengths:
        yield from _compositions_len(n, t)


def _compositions_len(n: int, t: int) -> Iterator[tuple[int, ...]]:
    if t == 1:
        yield (n,)
        return
    for first in range(1, n - t + 2):
        for rest in _compositions_len(n - first, t - 1):
            yield (first,) + rest


def _rows_r1(sizes: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    t = len(sizes)
    if t == 1:
        for m in range(1, sizes[0] + 1):
            yield (m,)
        return
    ranges = [range(1, sizes[0] + 1)]
    for j in range(1, t - 1):
        ranges.append(range(1, sizes[j]))
    ranges.append(range(0, sizes[t - 1]))

    def rec(j: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if j == t:
            yield tuple(acc)
            return
        for m in ranges[j]:
            acc.append(m)
            yield from rec(j + 1, acc)
            acc.pop()

    yield from rec(0, [])


def enumerate_r1(
    n: int, *, shards: int = 1, shard: int = 0
) -> Iterator[CompleteGame]:
    """All complete games on n players with one shift-minimal winning row.

    Deterministic order: class count ascending, composition lexicographic,
    row lexicographic.  With ``shards`` > 1 only the compositions whose
    running index is congruent to ``shard`` are produced, so shard outputs
    partition the full stream.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= shard < shards:
        raise ValueError("shard index out of range")
    for idx, sizes in enumerate(compositions(n)):
        if idx % shards != shard:
            continue
        for row in _rows_r1(sizes):
            yield CompleteGame(sizes, (row,))


def count_r1(n: int) -> int:
    """Closed-form count of (composition, row) pairs; independent of the
    streaming enumerator, used to cross-check census totals."""
    total = n  # the single-class games
    for sizes in compositions(n):
        t = len(sizes)
        if t == 1:
            continue
        ways = sizes[0] * sizes[-1]
        for j in range(1, t - 1):
            ways *= sizes[j] - 1
        total += ways
    return total


def r1_value(sizes, row) -> Optional[int]:
    """Nakamura number of a single-row complete game; None when infinite."""
    if row[0] == sizes[0]:
        return None
    o = prefix_sums(sizes)
    p = prefix_sums(row)
    return max(ceil(o[i] / (o[i] - p[i])) for i in range(len(sizes)))


@dataclass(frozen=True)
class CensusRow:
    """Counts of games per Nakamura value (None key = infinite)."""

    n: int
    klass: str
    counts: dict

    def total(self) -> int:
        return sum(self.counts.values())

    def column(self, value: Optional[int]) -> int:
        return self.counts.get(value, 0)


def merge_rows(rows) -> CensusRow:
    """Associative merge of shard census rows for the same (n, class)."""
    rows = list(rows)
    n = rows[0].n
    klass = rows[0].klass
    if any(r.n != n or r.klass != klass for r in rows):
        raise ValueError("cannot merge census rows of different kinds")
    counts: dict = {}
    for r in rows:
        for k, v in r.counts.items():
            counts[k] = counts.get(k, 0) + v
    return CensusRow(n, klass, counts)


def census(
    n: int,
    klass: str = COMPLETE_R1,
    *,
    cap: Optional[int] = None,
    shards: int = 1,
    shard: int = 0,
) -> CensusRow:
    """Count single-row complete (or weighted) games per Nakamura value."""
    if klass not in (COMPLETE_R1, WEIGHTED_R1):
        raise ValueError(f"unknown census class {klass!r}")
    limit = cap if cap is not None else (
        COMPLETE_CAP if klass == COMPLETE_R1 else WEIGHTED_CAP
    )
    if n > limit:
        raise CapacityError(
            f"census for n={n} exceeds the configured cap of {limit}"
        )
    counts: dict = {}
    for g in enumerate_r1(n, shards=shards, shard=shard):
        if klass == WEIGHTED_R1 and not _r1_is_weighted(g):
            continue
        v = r1_value(g.class_sizes, g.shift_min[0])
        counts[v] = counts.get(v, 0) + 1
    return CensusRow(n, klass, counts)


def _r1_is_weighted(g: CompleteGame) -> bool:
    winning = minimal_winning_vectors(g)
    losing = maximal_losing_vectors(g)
    return is_weighted_vectors(g.class_sizes, winning, losing)


# ---------------------------------------------------------------------------
# complete games with any number of shift-minimal rows (small n only)


def enumerate_complete(
    n: int, parts: Optional[int] = None
) -> Iterator[CompleteGame]:
    """All complete games on n players, optionally with a fixed class count.

    Enumerates, per composition, every antichain (under prefix-sum
    dominance) of count vectors whose rows also separate neighboring
    classes.  Intended for small n (the state space grows like the number
    of antichains of the vector lattice).
    """
    for sizes in compositions(n, parts):
        t = len(sizes)
        lattice = []

        def fill(j: int, acc: list[int]) -> None:
            if j == t:
                lattice.append(tuple(acc))
                return
            for c in range(sizes[j] + 1):
                acc.append(c)
                fill(j + 1, acc)
                acc.pop()

        fill(0, [])
        lattice.sort(reverse=True)
        lattice = [v for v in lattice if any(v)]

        chosen: list[tuple[int, ...]] = []

        def separates() -> bool:
            if t == 1:
                return chosen[0][0] > 0
            for j in range(t - 1):
                if not any(
                    row[j] > 0 and row[j + 1] < sizes[j + 1] for row in chosen
                ):
                    return False
            return True

        def grow(start: int) -> Iterator[CompleteGame]:
            if chosen and separates():
                yield CompleteGame(sizes, tuple(chosen))
            for k in range(start, len(lattice)):
                v = lattice[k]
                if all(shift_incomparable(v, row) for row in chosen):
                    chosen.append(v)
                    yield from grow(k + 1)
                    chosen.pop()

        yield from grow(0)
