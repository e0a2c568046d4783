"""Shared oracles and corpora.

The oracles deliberately avoid the library's own fast paths: winning tests
scan the antichain directly, dual antichains and desirability come from
full 2^n sweeps, and the Nakamura oracle enumerates coalition subsets.
"""

import itertools
import random

import pytest

from nakamura.games import SimpleGame, WeightedRep, game_from_weighted


def oracle_is_winning(game: SimpleGame, mask: int) -> bool:
    return any(w & mask == w for w in game.min_winning)


def oracle_maximal_losing(game: SimpleGame):
    out = []
    for mask in range(1 << game.n):
        if oracle_is_winning(game, mask):
            continue
        if all(
            oracle_is_winning(game, mask | (1 << i))
            for i in range(game.n)
            if not mask >> i & 1
        ):
            out.append(mask)
    return sorted(out)


def oracle_minimal_winning(rep: WeightedRep):
    qhat, what = rep.integral()
    masks = []
    for mask in range(1 << rep.n):
        w = sum(what[i] for i in range(rep.n) if mask >> i & 1)
        if w < qhat:
            continue
        if all(
            w - what[i] < qhat for i in range(rep.n) if mask >> i & 1
        ):
            masks.append(mask)
    return sorted(masks)


def oracle_nakamura(game: SimpleGame, max_size: int = 8):
    """Exhaustive search over subsets of the minimal winning antichain."""
    grand = game.grand
    inter_all = grand
    for w in game.min_winning:
        inter_all &= w
    if inter_all:
        return None
    for k in range(2, max_size + 1):
        for combo in itertools.combinations(game.min_winning, k):
            inter = grand
            for w in combo:
                inter &= w
            if inter == 0:
                return k
    raise AssertionError("oracle cap too small")


def oracle_geq(game: SimpleGame, i: int, j: int) -> bool:
    """Desirability by definition: check every coalition containing j, not i."""
    bi, bj = 1 << i, 1 << j
    for mask in range(1 << game.n):
        if mask & bj and not mask & bi:
            if oracle_is_winning(game, mask) and not oracle_is_winning(
                game, (mask & ~bj) | bi
            ):
                return False
    return True


def random_rep(rng: random.Random, n_max: int = 10, w_max: int = 9) -> WeightedRep:
    while True:
        n = rng.randint(2, n_max)
        ws = [rng.randint(0, w_max) for _ in range(n)]
        total = sum(ws)
        if total == 0:
            continue
        return WeightedRep(rng.randint(1, total), ws)


def random_vetoer_free(rng: random.Random, n_max: int = 10, w_max: int = 9):
    while True:
        rep = random_rep(rng, n_max, w_max)
        game = game_from_weighted(rep)
        if not game.vetoer_mask():
            return rep, game


@pytest.fixture(scope="session")
def weighted_corpus():
    """1000 vetoer-free weighted games, n <= 10, integer weights <= 9."""
    rng = random.Random(20250809)
    return [random_vetoer_free(rng) for _ in range(1000)]


def random_complete_games(rng, n, count, max_r=3):
    """Random valid complete-game parameterizations on n players."""
    from nakamura.census import compositions
    from nakamura.games import complete_from_parameters, shift_incomparable

    comps = list(compositions(n))
    made = 0
    guard = 0
    while made < count and guard < 6000:
        guard += 1
        sizes = comps[rng.randrange(len(comps))]
        lattice = list(
            itertools.product(*(range(s + 1) for s in sizes))
        )
        rows = []
        for _ in range(rng.randint(1, max_r)):
            v = lattice[rng.randrange(len(lattice))]
            if any(v) and all(shift_incomparable(v, u) for u in rows):
                rows.append(v)
        rows.sort(reverse=True)
        try:
            g = complete_from_parameters(sizes, rows)
        except Exception:
            continue
        made += 1
        yield g
