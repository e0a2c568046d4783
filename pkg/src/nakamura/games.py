"""Voting game representations and structural classification.

Three representations are supported:

* ``WeightedRep`` -- a quota/weight vector ``[q; w_1, ..., w_n]`` with exact
  rational entries.  A coalition wins iff its weight sum reaches the quota.
* ``SimpleGame`` -- the antichain of minimal winning coalitions of a monotone
  game.  Coalitions are bit masks over at most 64 players; bit ``i - 1``
  stands for player ``i`` (players are 1-based in all I/O).
* ``CompleteGame`` -- class sizes ``(n_1, ..., n_t)`` plus the matrix of
  shift-minimal winning count vectors, for games whose desirability relation
  is total.

No floating point is ever used in a winning/losing decision; all weight
arithmetic is done in ``fractions.Fraction`` or plain integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple, Optional, Sequence

import numpy as np

MAX_PLAYERS = 64

# Largest n for which dual antichains of a generic simple game (no weighted
# or complete provenance) are computed via a dense 2^n table.
DENSE_TABLE_CAP = 24

# Guard for expanding a complete game's vector lattice.
LATTICE_CAP = 1 << 22


class GameError(Exception):
    """Base class for all game-construction and analysis errors."""


class CapacityError(GameError):
    """Raised when an input exceeds a documented size limit."""


class InvalidGameError(GameError):
    """Raised when input data violates a representation invariant."""


class InvariantError(GameError):
    """Internal consistency failure (bug trap)."""


class CompleteParameterError(InvalidGameError):
    """Class-size/matrix data violating the complete-game conditions.

    ``violations`` is a list of ``(condition, message)`` pairs where
    ``condition`` is one of ``"i"``, ``"ii"``, ``"iii"``, ``"iv"`` and the
    message names the offending row/column indices.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(f"({c}) {m}" for c, m in self.violations))


# ---------------------------------------------------------------------------
# coalition masks


def mask_from_players(players: Sequence[int], n: int) -> int:
    """Bit mask for a coalition given as 1-based player indices."""
    mask = 0
    for p in players:
        if not 1 <= p <= n:
            raise InvalidGameError(f"player {p} out of range 1..{n}")
        mask |= 1 << (p - 1)
    return mask


def players_from_mask(mask: int) -> tuple[int, ...]:
    """Sorted 1-based player indices of a coalition mask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def sort_coalitions(masks) -> tuple[int, ...]:
    """Canonical order: lexicographic by sorted player tuple."""
    return tuple(sorted(masks, key=players_from_mask))


# ---------------------------------------------------------------------------
# weighted representations


@dataclass(frozen=True)
class WeightedRep:
    """Weighted representation ``[q; w_1, ..., w_n]`` with rational entries.

    Both integral and rational representations are accepted;
    ``integral_input`` records which form was given.  ``integral()`` derives
    the smallest integral multiple, which is the form used by bounds that
    need integer weights.
    """

    quota: Fraction
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "quota", Fraction(self.quota))
        object.__setattr__(
            self, "weights", tuple(Fraction(w) for w in self.weights)
        )
        if len(self.weights) > MAX_PLAYERS:
            raise CapacityError(
                f"{len(self.weights)} players exceed the capacity of {MAX_PLAYERS}"
            )
        if not self.weights:
            raise InvalidGameError("a weighted game needs at least one player")
        if self.quota <= 0:
            raise InvalidGameError("quota must be positive")
        if any(w < 0 for w in self.weights):
            raise InvalidGameError("weights must be non-negative")
        if sum(self.weights) < self.quota:
            raise InvalidGameError(
                "grand coalition is losing (weight sum below quota)"
            )
        object.__setattr__(self, "_integral", self._compute_integral())

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    @property
    def integral_input(self) -> bool:
        return self.quota.denominator == 1 and all(
            w.denominator == 1 for w in self.weights
        )

    def _compute_integral(self) -> tuple[int, tuple[int, ...]]:
        denoms = [self.quota.denominator] + [w.denominator for w in self.weights]
        scale = lcm(*denoms)
        nums = [int(self.quota * scale)] + [int(w * scale) for w in self.weights]
        g = 0
        for v in nums:
            g = gcd(g, v)
        g = g or 1
        return nums[0] // g, tuple(v // g for v in nums[1:])

    def integral(self) -> tuple[int, tuple[int, ...]]:
        """Smallest integral multiple ``(qhat, what)`` of this representation."""
        return self._integral

    def normalized(self) -> tuple[Fraction, tuple[Fraction, ...]]:
        """Representation ``(q', w')`` scaled so that the weights sum to 1."""
        s = self.total
        return self.quota / s, tuple(w / s for w in self.weights)

    def weight_of(self, mask: int) -> Fraction:
        w = Fraction(0)
        i = 0
        while mask:
            if mask & 1:
                w += self.weights[i]
            mask >>= 1
            i += 1
        return w


def weight_groups(rep: WeightedRep) -> list[list[int]]:
    """Players grouped by equal weight, heaviest group first (0-based).

    Players of equal weight are interchangeable, so these groups refine the
    desirability classes; that is all the class-level reductions below need.
    """
    by_weight: dict[Fraction, list[int]] = {}
    for i, w in enumerate(rep.weights):
        by_weight.setdefault(w, []).append(i)
    return [by_weight[w] for w in sorted(by_weight, reverse=True)]


def min_winning_vectors_weighted(rep: WeightedRep) -> list[tuple[int, ...]]:
    """Componentwise-minimal winning count vectors over equal-weight groups.

    Groups follow ``weight_groups`` order (heaviest first).  The search adds
    counts group by group; once a prefix reaches the quota, larger counts in
    the same group cannot be minimal, and branches whose remaining weight
    cannot reach the quota are cut.
    """
    groups = weight_groups(rep)
    qhat, what = rep.integral()
    gw = [what[g[0]] for g in groups]
    sizes = [len(g) for g in groups]
    t = len(groups)
    suffix = [0] * (t + 1)
    for g in range(t - 1, -1, -1):
        suffix[g] = suffix[g + 1] + sizes[g] * gw[g]
    out: list[tuple[int, ...]] = []

    def rec(g: int, counts: list[int], total: int, lightest) -> None:
        if total >= qhat:
            if lightest is not None and total - lightest < qhat:
                out.append(tuple(counts) + (0,) * (t - g))
            return
        if g == t or total + suffix[g] < qhat:
            return
        if gw[g] == 0:
            # zero-weight players never occur in a minimal winning coalition
            counts.append(0)
            rec(g + 1, counts, total, lightest)
            counts.pop()
            return
        for c in range(sizes[g] + 1):
            t2 = total + c * gw[g]
            counts.append(c)
            rec(g + 1, counts, t2, gw[g] if c else lightest)
            counts.pop()
            if t2 >= qhat:
                break

    rec(0, [], 0, None)
    return out


# ---------------------------------------------------------------------------
# simple games


@dataclass(frozen=True)
class SimpleGame:
    """A simple game given by its antichain of minimal winning coalitions.

    ``min_winning`` is kept in canonical order (lexicographic by player
    tuple).  ``rep`` / ``complete`` record provenance when the game was built
    from a weighted representation or a complete-game parameterization; they
    only speed up winning tests and dual-antichain computations and never
    change results.
    """

    n: int
    min_winning: tuple[int, ...]
    rep: Optional[WeightedRep] = field(default=None, compare=False, repr=False)
    complete: Optional["CompleteGame"] = field(
        default=None, compare=False, repr=False
    )

    def __post_init__(self):
        if not 1 <= self.n <= MAX_PLAYERS:
            raise CapacityError(f"player count {self.n} outside 1..{MAX_PLAYERS}")
        if not self.min_winning:
            raise InvalidGameError("at least one minimal winning coalition required")
        full = (1 << self.n) - 1
        for m in self.min_winning:
            if m == 0:
                raise InvalidGameError("the empty coalition cannot be winning")
            if m & ~full:
                raise InvalidGameError("coalition uses players beyond n")
        object.__setattr__(self, "min_winning", sort_coalitions(self.min_winning))

    @property
    def grand(self) -> int:
        return (1 << self.n) - 1

    def is_winning(self, mask: int) -> bool:
        if self.rep is not None:
            qhat, what = self.rep.integral()
            w = 0
            m = mask
            i = 0
            while m:
                if m & 1:
                    w += what[i]
                m >>= 1
                i += 1
            return w >= qhat
        if self.complete is not None:
            counts = []
            base = 0
            for nj in self.complete.class_sizes:
                block = ((1 << nj) - 1) << base
                counts.append((mask & block).bit_count())
                base += nj
            return any(shift_leq(row, counts) for row in self.complete.shift_min)
        return any(w & mask == w for w in self.min_winning)

    def vetoer_mask(self) -> int:
        mask = self.grand
        for w in self.min_winning:
            mask &= w
        return mask

    def null_mask(self) -> int:
        mask = 0
        for w in self.min_winning:
            mask |= w
        return self.grand & ~mask


def simple_game(n: int, coalitions, *, validate: bool = True) -> SimpleGame:
    """Build a ``SimpleGame`` from coalitions given as masks or player lists.

    With ``validate`` the antichain property is checked exhaustively.
    """
    masks = []
    for c in coalitions:
        masks.append(c if isinstance(c, int) else mask_from_players(c, n))
    g = SimpleGame(n, tuple(masks))
    if validate:
        ms = g.min_winning
        if len(set(ms)) != len(ms):
            raise InvalidGameError("duplicate minimal winning coalition")
        by_size = sorted(ms, key=lambda m: m.bit_count())
        for i, a in enumerate(by_size):
            for b in by_size[i + 1 :]:
                if a & b == a:
                    raise InvalidGameError(
                        f"coalition {players_from_mask(a)} is contained in "
                        f"{players_from_mask(b)}: not an antichain"
                    )
    return g


def game_from_weighted(rep: WeightedRep) -> SimpleGame:
    """Minimal winning coalitions of ``[q; w]``, enumerated exactly.

    The search descends over players in decreasing weight order and prunes
    any branch whose remaining weight cannot reach the quota, so the work is
    proportional to the number of viable prefixes rather than ``2^n``.
    Zero-weight players never occur in a minimal winning coalition and are
    skipped outright.
    """
    qhat, what = rep.integral()
    order = sorted(
        (i for i in range(rep.n) if what[i] > 0), key=lambda i: (-what[i], i)
    )
    suffix = [0] * (len(order) + 1)
    for k in range(len(order) - 1, -1, -1):
        suffix[k] = suffix[k + 1] + what[order[k]]
    found: list[int] = []

    def descend(k: int, mask: int, total: int, lightest: int) -> None:
        if total >= qhat:
            # every proper prefix was losing; minimal iff dropping the
            # lightest member loses
            if total - lightest < qhat:
                found.append(mask)
            return
        for j in range(k, len(order)):
            if total + suffix[j] < qhat:
                break
            p = order[j]
            descend(j + 1, mask | (1 << p), total + what[p], what[p])

    descend(0, 0, 0, 0)
    if not found:
        raise InvariantError("no minimal winning coalition found")  # pragma: no cover
    return SimpleGame(rep.n, tuple(found), rep=rep)


# ---------------------------------------------------------------------------
# player classification


@dataclass(frozen=True)
class PlayerClassification:
    """Vetoers, nulls, passers (as masks) and the dictator, if any."""

    vetoers: int
    nulls: int
    passers: int
    dictator: Optional[int]


def classify_players(game: SimpleGame) -> PlayerClassification:
    """Classify players from the minimal winning antichain.

    A vetoer sits in every minimal winning coalition, a null in none; a
    passer's singleton is itself minimal winning, and a dictator's singleton
    is the only minimal winning coalition.
    """
    vetoers = game.vetoer_mask()
    nulls = game.null_mask()
    passers = 0
    for w in game.min_winning:
        if w.bit_count() == 1:
            passers |= w
    dictator = None
    if len(game.min_winning) == 1 and game.min_winning[0].bit_count() == 1:
        dictator = players_from_mask(game.min_winning[0])[0]
    return PlayerClassification(vetoers, nulls, passers, dictator)


# ---------------------------------------------------------------------------
# desirability


def _group_geq(game: SimpleGame, i: int, j: int) -> bool:
    # i is at least as desirable as j: swapping j for i in any minimal
    # winning coalition containing j but not i must stay winning.  This
    # exchange test over the antichain is equivalent to the definition over
    # all coalitions because winning sets are up-closed.
    bi, bj = 1 << i, 1 << j
    for w in game.min_winning:
        if w & bj and not w & bi:
            if not game.is_winning((w & ~bj) | bi):
                return False
    return True


def desirability_classes(game: SimpleGame) -> tuple[tuple[tuple[int, ...], ...], bool]:
    """Equivalence classes of the desirability relation, strongest first.

    Returns ``(classes, is_complete)`` where each class is a tuple of
    1-based players in input order and ``is_complete`` says whether the
    relation is total.  For a complete game the class order (strictly
    decreasing desirability) is unique; otherwise classes are ordered by how
    many other classes they dominate, ties by smallest member.
    """
    if game.complete is not None:
        # expansion blocks are the classes, strongest first, by construction
        classes = []
        base = 0
        for nj in game.complete.class_sizes:
            classes.append(tuple(range(base + 1, base + nj + 1)))
            base += nj
        return tuple(classes), True
    if game.rep is not None:
        groups = weight_groups(game.rep)
    else:
        groups = [[i] for i in range(game.n)]
    reps = [g[0] for g in groups]
    k = len(groups)
    geq = [[True] * k for _ in range(k)]
    for a in range(k):
        for b in range(k):
            if a != b:
                geq[a][b] = _group_geq(game, reps[a], reps[b])

    # merge mutually-comparable groups
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(k):
        for b in range(a + 1, k):
            if geq[a][b] and geq[b][a]:
                parent[find(a)] = find(b)

    members: dict[int, list[int]] = {}
    for g_idx, g in enumerate(groups):
        members.setdefault(find(g_idx), []).extend(g)
    roots = list(members)

    def dominates(ra, rb) -> bool:
        return geq[ra][rb] and not geq[rb][ra]

    is_complete = True
    for x in range(len(roots)):
        for y in range(x + 1, len(roots)):
            if not (geq[roots[x]][roots[y]] or geq[roots[y]][roots[x]]):
                is_complete = False

    def rank(r) -> tuple[int, int]:
        dominated = sum(1 for s in roots if s != r and dominates(r, s))
        return (-dominated, min(members[r]))

    ordered = sorted(roots, key=rank)
    classes = tuple(
        tuple(p + 1 for p in sorted(members[r])) for r in ordered
    )
    return classes, is_complete


# ---------------------------------------------------------------------------
# dual antichain and flags


def _maximal_subsets_within_budget(values: Sequence[int], budget: int) -> list[int]:
    """Masks of inclusion-maximal subsets whose value sum is <= budget.

    Zero-value items belong to every maximal subset.  Deterministic DFS over
    items in decreasing value order.
    """
    forced = 0
    items = []
    for i, v in enumerate(values):
        if v == 0:
            forced |= 1 << i
        else:
            items.append(i)
    items.sort(key=lambda i: (-values[i], i))
    suffix = [0] * (len(items) + 1)
    for k in range(len(items) - 1, -1, -1):
        suffix[k] = suffix[k + 1] + values[items[k]]
    out: list[int] = []

    def descend(k: int, mask: int, total: int, min_excluded: int) -> None:
        if total + suffix[k] <= budget:
            # everything left fits, so take-all is the one maximal completion
            # here; it is maximal overall iff no excluded item would fit too
            if total + suffix[k] + min_excluded > budget:
                full = mask
                for j in range(k, len(items)):
                    full |= 1 << items[j]
                out.append(full)
            return
        p = items[k]
        v = values[p]
        if total + v <= budget:
            descend(k + 1, mask | (1 << p), total + v, min_excluded)
        descend(k + 1, mask, total, min(min_excluded, v))

    if budget < 0:
        return []
    descend(0, 0, 0, budget + 1)
    return [m | forced for m in out]


def dense_winning_table(game: SimpleGame) -> np.ndarray:
    """Boolean table of all 2^n coalition values (n <= DENSE_TABLE_CAP)."""
    if game.n > DENSE_TABLE_CAP:
        raise CapacityError(
            f"dense table needs n <= {DENSE_TABLE_CAP}, got {game.n}"
        )
    size = 1 << game.n
    win = np.zeros(size, dtype=bool)
    win[list(game.min_winning)] = True
    idx = np.arange(size)
    for i in range(game.n):
        bit = 1 << i
        has = (idx & bit) != 0
        win[has] |= win[idx[has] ^ bit]
    return win


def maximal_losing(game: SimpleGame) -> tuple[int, ...]:
    """The antichain of inclusion-maximal losing coalitions.

    Uses the weighted representation (maximal below-quota subsets) or the
    complete-game lattice when available; otherwise a dense monotone-closure
    table, which caps the generic path at ``DENSE_TABLE_CAP`` players.
    """
    if game.rep is not None:
        qhat, what = game.rep.integral()
        masks = _maximal_subsets_within_budget(what, qhat - 1)
    elif game.complete is not None:
        g = game.complete
        masks = []
        for v in maximal_losing_vectors(g):
            masks.extend(_masks_with_vector(g.class_sizes, v))
    else:
        win = dense_winning_table(game)
        idx = np.arange(1 << game.n)
        ok = ~win
        for i in range(game.n):
            bit = 1 << i
            absent = (idx & bit) == 0
            ok[absent] &= win[idx[absent] | bit]
        masks = [int(m) for m in np.nonzero(ok)[0]]
    return sort_coalitions(masks)


class StructureFlags(NamedTuple):
    proper: bool
    strong: bool
    constant_sum: bool


def structure_flags(game: SimpleGame) -> StructureFlags:
    """Proper/strong/constant-sum flags, decided on the two antichains.

    Properness needs only pairwise intersection of minimal winning
    coalitions: the complement of a winning S is losing iff no minimal
    winning coalition avoids S, and it suffices to check minimal S because
    complements shrink as S grows.  Strongness is checked on maximal losing
    coalitions for the dual reason: complements grow as T shrinks.
    Complete-game expansions run both checks on count vectors instead.
    """
    if game.complete is not None:
        g = game.complete
        sizes = g.class_sizes
        proper = all(
            not vector_is_winning(g, tuple(n - v for n, v in zip(sizes, vec)))
            for vec in minimal_winning_vectors(g)
        )
        strong = all(
            vector_is_winning(g, tuple(n - u for n, u in zip(sizes, vec)))
            for vec in maximal_losing_vectors(g)
        )
        return StructureFlags(proper, strong, proper and strong)
    proper = True
    ms = game.min_winning
    for i, a in enumerate(ms):
        for b in ms[i:]:
            if a & b == 0:
                proper = False
                break
        if not proper:
            break
    strong = True
    for t in maximal_losing(game):
        if not game.is_winning(game.grand & ~t):
            strong = False
            break
    return StructureFlags(proper, strong, proper and strong)


# ---------------------------------------------------------------------------
# complete games


def prefix_sums(v: Sequence[int]) -> tuple[int, ...]:
    out = []
    s = 0
    for x in v:
        s += x
        out.append(s)
    return tuple(out)


def shift_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Prefix-sum dominance: u precedes v when every prefix of u is no larger."""
    su = sv = 0
    for a, b in zip(u, v):
        su += a
        sv += b
        if su > sv:
            return False
    return True


def shift_incomparable(u: Sequence[int], v: Sequence[int]) -> bool:
    return not shift_leq(u, v) and not shift_leq(v, u)


@dataclass(frozen=True)
class CompleteGame:
    """Class sizes and shift-minimal winning vectors of a complete game.

    The rows of ``shift_min`` are pairwise incomparable under prefix-sum
    dominance, listed in decreasing lexicographic order; equal parameters
    mean isomorphic games, so this form is canonical.
    """

    class_sizes: tuple[int, ...]
    shift_min: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "class_sizes", tuple(int(x) for x in self.class_sizes))
        object.__setattr__(
            self, "shift_min", tuple(tuple(int(x) for x in row) for row in self.shift_min)
        )
        violations = validate_complete_parameters(self.class_sizes, self.shift_min)
        if violations:
            raise CompleteParameterError(violations)

    @property
    def n(self) -> int:
        return sum(self.class_sizes)

    @property
    def t(self) -> int:
        return len(self.class_sizes)

    @property
    def r(self) -> int:
        return len(self.shift_min)

    def has_vetoers(self) -> bool:
        # the strongest class is all-veto exactly when no row drops a player
        # from it
        return all(row[0] == self.class_sizes[0] for row in self.shift_min)


def validate_complete_parameters(class_sizes, rows) -> list[tuple[str, str]]:
    """Check conditions (i)-(iv) on ``(class_sizes, rows)``; [] when valid."""
    violations: list[tuple[str, str]] = []
    t = len(class_sizes)
    if t == 0 or any(n <= 0 for n in class_sizes):
        violations.append(("i", "class sizes must be positive"))
        return violations
    if not rows:
        violations.append(("i", "at least one row required"))
        return violations
    for i, row in enumerate(rows):
        if len(row) != t:
            violations.append(("i", f"row {i} has length {len(row)} != {t}"))
            return violations
        for j, x in enumerate(row):
            if not 0 <= x <= class_sizes[j]:
                violations.append(
                    ("i", f"entry ({i},{j}) = {x} outside 0..{class_sizes[j]}")
                )
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if not shift_incomparable(rows[i], rows[j]):
                violations.append(("ii", f"rows {i} and {j} are comparable"))
    if t == 1:
        if rows[0][0] <= 0:
            violations.append(("iii", "row 0 must have a positive first entry"))
    else:
        for j in range(t - 1):
            if not any(
                row[j] > 0 and row[j + 1] < class_sizes[j + 1] for row in rows
            ):
                violations.append(
                    ("iii", f"no row separates classes {j} and {j + 1}")
                )
    for i in range(len(rows) - 1):
        if not rows[i] > rows[i + 1]:
            violations.append(
                ("iv", f"rows {i} and {i + 1} not in decreasing lexicographic order")
            )
    return violations


def complete_from_parameters(class_sizes, rows) -> CompleteGame:
    """Validated ``CompleteGame``; raises ``CompleteParameterError`` listing
    every violated condition with row/column indices."""
    return CompleteGame(tuple(class_sizes), tuple(tuple(r) for r in rows))


def vector_is_winning(g: CompleteGame, c: Sequence[int]) -> bool:
    """True iff some shift-minimal row precedes ``c`` in prefix dominance."""
    if len(c) != g.t:
        raise ValueError(f"vector length {len(c)} != {g.t} classes")
    for j, x in enumerate(c):
        if not 0 <= x <= g.class_sizes[j]:
            raise ValueError(f"component {j} = {x} outside 0..{g.class_sizes[j]}")
    return any(shift_leq(row, c) for row in g.shift_min)


def _lattice(class_sizes):
    size = 1
    for nj in class_sizes:
        size *= nj + 1
    if size > LATTICE_CAP:
        raise CapacityError(
            f"coalition-vector lattice of size {size} exceeds {LATTICE_CAP}"
        )
    return itertools.product(*(range(nj + 1) for nj in class_sizes))


def minimal_winning_vectors(g: CompleteGame) -> list[tuple[int, ...]]:
    """Componentwise-minimal winning count vectors (lattice scan)."""
    out = []
    for c in _lattice(g.class_sizes):
        if not vector_is_winning(g, c):
            continue
        minimal = True
        for j in range(g.t):
            if c[j] > 0:
                d = list(c)
                d[j] -= 1
                if vector_is_winning(g, d):
                    minimal = False
                    break
        if minimal:
            out.append(c)
    return out


def maximal_losing_vectors(g: CompleteGame) -> list[tuple[int, ...]]:
    """Componentwise-maximal losing count vectors (lattice scan)."""
    out = []
    for c in _lattice(g.class_sizes):
        if vector_is_winning(g, c):
            continue
        maximal = True
        for j in range(g.t):
            if c[j] < g.class_sizes[j]:
                d = list(c)
                d[j] += 1
                if not vector_is_winning(g, d):
                    maximal = False
                    break
        if maximal:
            out.append(c)
    return out


def _class_player_masks(class_sizes) -> list[list[int]]:
    masks = []
    base = 0
    for nj in class_sizes:
        masks.append([1 << (base + k) for k in range(nj)])
        base += nj
    return masks


def _masks_with_vector(class_sizes, v) -> list[int]:
    per_class = _class_player_masks(class_sizes)
    choices = []
    for j, cnt in enumerate(v):
        opts = []
        for combo in itertools.combinations(per_class[j], cnt):
            m = 0
            for b in combo:
                m |= b
            opts.append(m)
        choices.append(opts)
    out = []
    for parts in itertools.product(*choices):
        m = 0
        for p in parts:
            m |= p
        out.append(m)
    return out


def expand_complete(g: CompleteGame) -> SimpleGame:
    """The simple game on ``sum(class_sizes)`` players induced by ``g``.

    Players are numbered class by class, strongest class first.  The minimal
    winning coalitions are all coalitions whose count vector is a
    componentwise-minimal winning vector.
    """
    if g.n > MAX_PLAYERS:
        raise CapacityError(f"{g.n} players exceed the capacity of {MAX_PLAYERS}")
    masks: list[int] = []
    for v in minimal_winning_vectors(g):
        masks.extend(_masks_with_vector(g.class_sizes, v))
    return SimpleGame(g.n, tuple(masks), complete=g)


def vector_of_mask(mask: int, classes: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Count vector of a coalition w.r.t. an ordered partition (1-based)."""
    counts = []
    for cls in classes:
        counts.append(sum(1 for p in cls if mask >> (p - 1) & 1))
    return tuple(counts)


def minimal_vectors(vectors) -> list[tuple[int, ...]]:
    """Componentwise-minimal elements of a set of count vectors."""
    vs = sorted(set(vectors), key=lambda v: (sum(v), v))
    out = []
    for v in vs:
        if not any(all(u[j] <= v[j] for j in range(len(v))) for u in out):
            out.append(v)
    return out


def shift_minimal_vectors(vectors) -> list[tuple[int, ...]]:
    """Minimal elements under prefix-sum dominance, decreasing lex order."""
    vs = sorted(set(vectors), reverse=True)
    out = []
    for v in vs:
        if not any(shift_leq(u, v) for u in vs if u != v):
            out.append(v)
    return out


def canonical_vector_form(game: SimpleGame):
    """Isomorphism invariant: class sizes in desirability order plus the
    sorted minimal winning count vectors, and the completeness flag.

    Two games with equal forms are isomorphic (relabel class by class); for
    complete games the converse holds as well since the class order is
    then unique.
    """
    classes, complete = desirability_classes(game)
    sizes = tuple(len(c) for c in classes)
    vectors = tuple(
        sorted(minimal_vectors(vector_of_mask(w, classes) for w in game.min_winning))
    )
    return sizes, vectors, complete
