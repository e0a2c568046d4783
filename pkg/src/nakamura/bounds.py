"""Lower and upper bounds on the Nakamura number, plus the exact-rational LPs.

Bound families:

* ``weighted_bounds`` -- the quota/weight ceilings for a weighted
  representation (lower from the given quota, upper from the smallest
  integral representation derived from it).
* ``greedy_upper`` -- the improved greedy that strips the heaviest still
  removable players round by round.
* ``cardinality_bounds`` -- ceilings using only the minimum/maximum
  cardinality of a minimal winning coalition.  The upper formula is
  implemented exactly as stated even though it can undercut the true value
  when not every coalition of the maximum cardinality wins; reports carry
  it as a heuristic and the sandwich tests exclude it.
* ``alpha_roughly_bounds`` -- ceilings for alpha-roughly weighted games.
* ``max_quota_lp`` -- the largest relative quota any normalized weight
  vector can certify, with the derived minimum maximum excess, price of
  stability, and lower bound.
* ``alpha_critical`` -- the least alpha admitting a rough representation;
  below 1 exactly for weighted games, which drives the weightedness filter
  of the census module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Optional, Sequence

from . import lp
from .games import (
    CapacityError,
    InvariantError,
    SimpleGame,
    WeightedRep,
    maximal_losing,
    min_winning_vectors_weighted,
    weight_groups,
)


@dataclass(frozen=True)
class BoundsReport:
    """One bound family's result; ``None`` components mean infinite.

    ``vetoer`` flags games whose Nakamura number is infinite regardless of
    the reported finite components (the cardinality formulas are only valid
    without vetoers).
    """

    method: str
    lower: Optional[int]
    upper: Optional[int]
    vetoer: bool = False


@dataclass(frozen=True)
class LpOutcome:
    """Quota-maximization outcome: q*, certifying weights, and derived values.

    ``weights`` sum to one and give every minimal winning coalition weight
    at least ``optimum``; ``nak_lower_bound`` is ``ceil(1/(1-q*))``, infinite
    (None) exactly when a vetoer lets q* reach 1.
    """

    optimum: Fraction
    weights: tuple[Fraction, ...]
    min_max_excess: Fraction
    price_of_stability: Fraction
    nak_lower_bound: Optional[int]


def _ceil_frac(num: Fraction, den: Fraction) -> Optional[int]:
    if den <= 0:
        return None
    return ceil(Fraction(num) / Fraction(den))


def weighted_bounds(rep: WeightedRep) -> BoundsReport:
    """Quota-based lower and integral-representation upper ceilings."""
    total = rep.total
    lower = _ceil_frac(total, total - rep.quota)
    qhat, what = rep.integral()
    shat = sum(what)
    omega_hat = max(what)
    upper = _ceil_frac(shat, shat - qhat - omega_hat + 1)
    return BoundsReport("weighted", lower, upper)


def greedy_upper(rep: WeightedRep) -> Optional[int]:
    """Rounds used by the improved greedy; None when it cannot finish.

    Each round keeps the grand coalition and strips the heaviest players not
    yet dropped in earlier rounds, as long as the coalition stays winning.
    The round count is an upper bound on the Nakamura number; with a vetoer
    no progress is possible and None is returned.
    """
    qhat, what = rep.integral()
    n = rep.n
    remaining = set(range(n))
    rounds = 0
    while remaining:
        weight = sum(what)
        dropped = []
        for p in sorted(remaining, key=lambda i: (-what[i], i)):
            if weight - what[p] >= qhat:
                weight -= what[p]
                dropped.append(p)
        if not dropped:
            return None
        remaining.difference_update(dropped)
        rounds += 1
    return rounds


def cardinality_bounds(game: SimpleGame) -> BoundsReport:
    """Ceilings from the extreme cardinalities of minimal winning coalitions.

    The upper component is the printed closed form ``1 + ceil(m/(n-M))``;
    see the module docstring for why it is heuristic.
    """
    n = game.n
    sizes = [w.bit_count() for w in game.min_winning]
    m, big = min(sizes), max(sizes)
    lower = _ceil_frac(n, n - m)
    upper = 1 + ceil(Fraction(m, n - big)) if big < n else None
    return BoundsReport(
        "cardinality", lower, upper, vetoer=game.vetoer_mask() != 0
    )


def alpha_roughly_bounds(weights: Sequence, alpha) -> BoundsReport:
    """Ceilings for a rough representation (winning >= 1, losing <= alpha).

    The upper ceiling applies only while its denominator ``w(N) - alpha -
    omega`` stays positive; otherwise it is reported as infinite.
    """
    ws = [Fraction(w) for w in weights]
    alpha = Fraction(alpha)
    total = sum(ws, Fraction(0))
    omega = max(ws)
    lower = _ceil_frac(total, total - 1)
    upper = _ceil_frac(total, total - alpha - omega)
    return BoundsReport("alpha_roughly", lower, upper)


def validate_alpha_roughly(game: SimpleGame, weights: Sequence, alpha) -> bool:
    """Check a claimed rough representation against the two antichains."""
    ws = [Fraction(w) for w in weights]
    if len(ws) != game.n or any(w < 0 for w in ws):
        return False
    alpha = Fraction(alpha)

    def wsum(mask: int) -> Fraction:
        s = Fraction(0)
        i = 0
        while mask:
            if mask & 1:
                s += ws[i]
            mask >>= 1
            i += 1
        return s

    if any(wsum(w) < 1 for w in game.min_winning):
        return False
    return all(wsum(t) <= alpha for t in maximal_losing(game))


def _symmetric_blocks(game: SimpleGame):
    """(sizes, players-per-block, minimal winning count vectors).

    Uses equal-weight groups when the game carries a weighted
    representation, or the class blocks of a complete-game expansion
    (members of a block are interchangeable, which is all the
    symmetrization below needs); otherwise every player is its own block
    and vectors are plain incidence rows.
    """
    if game.rep is not None:
        groups = weight_groups(game.rep)
        vectors = min_winning_vectors_weighted(game.rep)
        return [len(g) for g in groups], groups, vectors
    if game.complete is not None:
        from .games import minimal_winning_vectors

        sizes = list(game.complete.class_sizes)
        groups = []
        base = 0
        for nj in sizes:
            groups.append(list(range(base, base + nj)))
            base += nj
        return sizes, groups, minimal_winning_vectors(game.complete)
    groups = [[i] for i in range(game.n)]
    vectors = [
        tuple((w >> i) & 1 for i in range(game.n)) for w in game.min_winning
    ]
    return [1] * game.n, groups, vectors


def max_quota_lp(game: SimpleGame) -> LpOutcome:
    """Maximize the relative quota over normalized non-negative weights.

    Solved in the equivalent matrix-game orientation (few rows, one column
    per minimal winning count vector): minimize the largest per-player mass
    ``v`` of a distribution over minimal winning coalitions.  The optimal
    weights come back as the duals; feasibility and optimality of the
    returned pair are asserted exactly, so a wrong certificate cannot
    escape.
    """
    sizes, groups, vectors = _symmetric_blocks(game)
    t = len(sizes)
    nv = len(vectors)
    # variables: y_V for each vector, then v
    costs = [0] * nv + [1]
    rows = []
    for j in range(t):
        coeffs = [Fraction(vec[j], sizes[j]) for vec in vectors] + [-1]
        rows.append((coeffs, "<=", 0))
    rows.append(([1] * nv + [0], "==", 1))
    res = lp.solve_lp(costs, rows)
    if res.status != lp.OPTIMAL:  # pragma: no cover - always feasible/bounded
        raise InvariantError(f"quota LP unexpectedly {res.status}")
    qstar = res.objective
    # the dual of class row j is the total mass of the class; per-player
    # weight divides by the class size
    block_w = [-res.duals[j] / sizes[j] for j in range(t)]
    if any(w < 0 for w in block_w):  # pragma: no cover - certificate guard
        raise InvariantError("negative weight in quota LP certificate")
    scale = sum(sizes[j] * block_w[j] for j in range(t))
    if scale <= 0:  # pragma: no cover - certificate guard
        raise InvariantError("degenerate scaling in quota LP certificate")
    block_w = [w / scale for w in block_w]
    attained = min(
        sum(vec[j] * block_w[j] for j in range(t)) for vec in vectors
    )
    if attained != qstar:  # pragma: no cover - certificate guard
        raise InvariantError("quota LP certificate does not attain optimum")
    weights = [Fraction(0)] * game.n
    for j, players in enumerate(groups):
        for p in players:
            weights[p] = block_w[j]
    estar = 1 - qstar
    delta = estar / (1 - estar) if estar != 1 else None
    if delta is None:  # pragma: no cover - q* = 0 impossible (grand wins)
        raise InvariantError("relative quota of zero")
    bound = None if estar == 0 else ceil(1 / estar)
    return LpOutcome(qstar, tuple(weights), estar, delta, bound)


def lp_lower_bound(game: SimpleGame, *, cheap_only: bool = False) -> Optional[int]:
    """The quota-LP lower bound, or None when skipped under ``cheap_only``.

    Cheap means the game carries a weighted representation (class-reduced
    LP) or has a small antichain.
    """
    if cheap_only and game.rep is None and len(game.min_winning) > 300:
        return None
    return max_quota_lp(game).nak_lower_bound


# constraint-row cap for the player-level critical-threshold LP
_ALPHA_ROW_CAP = 3000


def alpha_critical(game: SimpleGame) -> Fraction:
    """Least alpha for which a rough representation exists.

    Solves: minimize alpha with every minimal winning coalition weighing at
    least 1 and every maximal losing coalition at most alpha.  Below 1
    exactly for weighted games.  Complete-game expansions are solved over
    one weight per class, which is lossless for class-symmetric games.
    """
    if game.complete is not None:
        from .games import maximal_losing_vectors, minimal_winning_vectors

        g = game.complete
        return alpha_critical_vectors(
            g.class_sizes, minimal_winning_vectors(g), maximal_losing_vectors(g)
        )
    losing = maximal_losing(game)
    n = game.n
    if len(game.min_winning) + len(losing) > _ALPHA_ROW_CAP:
        raise CapacityError(
            f"critical-threshold LP over {len(game.min_winning)} + "
            f"{len(losing)} antichain rows exceeds {_ALPHA_ROW_CAP}"
        )
    costs = [0] * n + [1]
    rows = []
    for w in game.min_winning:
        rows.append(([(w >> i) & 1 for i in range(n)] + [0], ">=", 1))
    for tmask in losing:
        rows.append(([(tmask >> i) & 1 for i in range(n)] + [-1], "<=", 0))
    res = lp.solve_lp(costs, rows)
    if res.status != lp.OPTIMAL:  # pragma: no cover
        raise InvariantError(f"critical threshold LP unexpectedly {res.status}")
    return res.objective


def alpha_critical_vectors(
    class_sizes: Sequence[int], winning, losing
) -> Fraction:
    """Critical threshold over per-class weights and count-vector antichains.

    Exact for any game that is invariant under class-preserving player
    permutations: some optimal rough representation is then constant on
    classes, so restricting the LP to one weight per class loses nothing.
    """
    t = len(class_sizes)
    costs = [0] * t + [1]
    rows = []
    for v in winning:
        rows.append((list(v) + [0], ">=", 1))
    for u in losing:
        rows.append((list(u) + [-1], "<=", 0))
    res = lp.solve_lp(costs, rows)
    if res.status != lp.OPTIMAL:  # pragma: no cover
        raise InvariantError(f"critical threshold LP unexpectedly {res.status}")
    return res.objective


def critical_rough_representation(
    game: SimpleGame,
) -> tuple[Fraction, tuple[Fraction, ...]]:
    """The critical threshold together with per-player weights attaining it."""
    if game.complete is not None:
        from .games import maximal_losing_vectors, minimal_winning_vectors

        g = game.complete
        t = len(g.class_sizes)
        costs = [0] * t + [1]
        rows = [
            (list(v) + [0], ">=", 1) for v in minimal_winning_vectors(g)
        ] + [
            (list(u) + [-1], "<=", 0) for u in maximal_losing_vectors(g)
        ]
        res = lp.solve_lp(costs, rows)
        weights = []
        for j, nj in enumerate(g.class_sizes):
            weights.extend([res.x[j]] * nj)
        return res.objective, tuple(weights)
    losing = maximal_losing(game)
    n = game.n
    if len(game.min_winning) + len(losing) > _ALPHA_ROW_CAP:
        raise CapacityError(
            f"critical-threshold LP over {len(game.min_winning)} + "
            f"{len(losing)} antichain rows exceeds {_ALPHA_ROW_CAP}"
        )
    costs = [0] * n + [1]
    rows = []
    for w in game.min_winning:
        rows.append(([(w >> i) & 1 for i in range(n)] + [0], ">=", 1))
    for tmask in losing:
        rows.append(([(tmask >> i) & 1 for i in range(n)] + [-1], "<=", 0))
    res = lp.solve_lp(costs, rows)
    if res.status != lp.OPTIMAL:  # pragma: no cover
        raise InvariantError(f"critical threshold LP unexpectedly {res.status}")
    return res.objective, tuple(res.x[:n])


def is_weighted_vectors(class_sizes, winning, losing) -> bool:
    """Weightedness test: critical threshold strictly below 1."""
    return alpha_critical_vectors(class_sizes, winning, losing) < 1
