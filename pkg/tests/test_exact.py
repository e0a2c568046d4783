import itertools
import random
from math import ceil

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import oracle_nakamura, random_vetoer_free
from nakamura.exact import (
    nakamura_by_vectors,
    nakamura_complete,
    nakamura_exact,
    nakamura_symmetric,
    solve_covering_ilp,
    vector_instance,
    verify_witness,
)
from nakamura.games import (
    InvalidGameError,
    SimpleGame,
    WeightedRep,
    classify_players,
    complete_from_parameters,
    dense_winning_table,
    expand_complete,
    game_from_weighted,
    mask_from_players,
    players_from_mask,
    structure_flags,
)


def weighted(quota, *weights):
    return game_from_weighted(WeightedRep(quota, weights))


# ---------------------------------------------------------------------------
# symmetric closed form


def test_symmetric_examples():
    assert nakamura_symmetric(5, 3).value == 3
    assert nakamura_symmetric(5, 5).value is None
    assert nakamura_symmetric(4, 3).value == 4


def test_symmetric_witness_verifies():
    for n in range(2, 9):
        for qhat in range(1, n):
            res = nakamura_symmetric(n, qhat)
            game = weighted(qhat, *([1] * n))
            assert len(res.witness) == res.value
            assert verify_witness(game, res.witness)


def test_symmetric_quota_range():
    with pytest.raises(InvalidGameError):
        nakamura_symmetric(4, 0)
    with pytest.raises(InvalidGameError):
        nakamura_symmetric(4, 5)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), st.data())
def test_symmetric_matches_cover_solver(n, data):
    qhat = data.draw(st.integers(1, n - 1))
    game = weighted(qhat, *([1] * n))
    assert nakamura_exact(game).value == ceil(n / (n - qhat))


# ---------------------------------------------------------------------------
# exact solver


def test_exact_majority_golden_witness():
    res = nakamura_exact(weighted(2, 1, 1, 1))
    assert res.value == 3
    assert [players_from_mask(m) for m in res.witness] == [
        (1, 2), (1, 3), (2, 3),
    ]


def test_exact_homogeneous_16_players():
    game = weighted(90, *([9] * 10 + [2] * 4 + [1] * 2))
    res = nakamura_exact(game)
    assert res.value == 11
    assert len(res.witness) == 11
    assert verify_witness(game, res.witness)


def test_exact_vetoer_infinite():
    res = nakamura_exact(weighted(3, 2, 1, 1))
    assert res.value is None and res.witness == ()


def test_exact_two_heavy():
    assert nakamura_exact(weighted(11, 5, 5, 2, 2, 2, 2, 2, 2)).value == 2


def test_methods_agree():
    rng = random.Random(31)
    for _ in range(30):
        rep, game = random_vetoer_free(rng, n_max=9)
        cover = nakamura_exact(game, method="cover")
        vectors = nakamura_exact(game, method="vectors")
        assert cover.value == vectors.value
        assert verify_witness(game, cover.witness)
        assert verify_witness(game, vectors.witness)
        assert len(vectors.witness) == vectors.value


def test_exact_matches_subset_oracle():
    rng = random.Random(37)
    checked = 0
    while checked < 25:
        rep, game = random_vetoer_free(rng, n_max=8)
        if len(game.min_winning) > 22:
            continue
        assert nakamura_exact(game).value == oracle_nakamura(game)
        checked += 1


def test_restriction_to_minimal_coalitions_is_lossless():
    # also cover with complements of *all* winning coalitions; the optimum
    # must not change
    from nakamura.cover import min_cover

    rng = random.Random(41)
    for _ in range(15):
        rep, game = random_vetoer_free(rng, n_max=8)
        win = dense_winning_table(game)
        complements = [
            game.grand & ~mask
            for mask in range(1 << game.n)
            if win[mask]
        ]
        chosen = min_cover(game.grand, complements)
        assert len(chosen) == nakamura_exact(game).value


# ---------------------------------------------------------------------------
# structural consequences


def test_no_vetoer_value_range_and_passers(weighted_corpus):
    for rep, game in weighted_corpus[:300]:
        value = nakamura_exact(game).value
        assert 2 <= value <= game.n
        cls = classify_players(game)
        if cls.passers and cls.dictator is None:
            assert value == 2


def test_null_player_deletion_invariance(weighted_corpus):
    deleted = 0
    for rep, game in weighted_corpus:
        nulls = classify_players(game).nulls
        if not nulls:
            continue
        keep = [i for i in range(game.n) if not nulls >> i & 1]
        remap = {old: new for new, old in enumerate(keep)}
        masks = []
        for w in game.min_winning:
            m = 0
            for old in range(game.n):
                if w >> old & 1:
                    m |= 1 << remap[old]
            masks.append(m)
        reduced = SimpleGame(len(keep), tuple(masks))
        assert nakamura_exact(reduced).value == nakamura_exact(game).value
        deleted += 1
        if deleted >= 25:
            break
    assert deleted >= 10


def test_intersection_bound_small_subsets():
    rng = random.Random(43)
    for _ in range(10):
        rep, game = random_vetoer_free(rng, n_max=8)
        value = nakamura_exact(game).value
        ms = game.min_winning
        for k in (1, 2, 3):
            for combo in itertools.combinations(ms[:6], k):
                inter = game.grand
                for w in combo:
                    inter &= w
                assert value <= inter.bit_count() + k


def test_properness_characterization(weighted_corpus):
    for rep, game in weighted_corpus[:300]:
        value = nakamura_exact(game).value
        flags = structure_flags(game)
        assert (value == 2) == (not flags.proper)
        if flags.constant_sum:
            assert value == 3
        if value > 3:
            assert flags.proper and not flags.strong


# ---------------------------------------------------------------------------
# intersections and unions


def _game_from_table(n, win):
    idx = np.arange(1 << n)
    minimal = win.copy()
    for i in range(n):
        bit = 1 << i
        has = (idx & bit) != 0
        minimal[has] &= ~win[idx[has] ^ bit]
    masks = [int(m) for m in np.nonzero(minimal)[0] if m]
    if not masks or not win[(1 << n) - 1] or win[0]:
        return None
    return SimpleGame(n, tuple(masks))


def test_intersection_union_monotonicity():
    rng = random.Random(47)
    pairs = 0
    while pairs < 25:
        n = rng.randint(3, 8)
        rep1, g1 = random_vetoer_free(rng, n_max=n)
        rep2, g2 = random_vetoer_free(rng, n_max=n)
        if g1.n != n or g2.n != n:
            continue
        w1 = dense_winning_table(g1)
        w2 = dense_winning_table(g2)
        inter = _game_from_table(n, w1 & w2)
        union = _game_from_table(n, w1 | w2)
        v1 = nakamura_exact(g1).value
        v2 = nakamura_exact(g2).value
        if inter is not None:
            vi = nakamura_exact(inter).value
            if vi is not None:
                assert vi >= max(v1, v2)
        vu = nakamura_exact(union).value
        assert vu <= min(v1, v2)
        pairs += 1


# ---------------------------------------------------------------------------
# condensed solvers


def test_covering_ilp_infeasible():
    assert solve_covering_ilp([(0, 1)], (2, 2)) is None


def test_by_vectors_example():
    game = weighted(4, 2, 2, 1, 1, 1, 1)
    inst = vector_instance(game)
    assert inst.class_sizes == (2, 4)
    assert inst.vectors == ((2, 0), (1, 2), (0, 4))
    res = nakamura_by_vectors(inst)
    assert res.value == 2
    assert [players_from_mask(m) for m in res.witness] == [
        (1, 2), (3, 4, 5, 6),
    ]
    assert verify_witness(game, res.witness)


def test_by_vectors_two_class_game():
    game = weighted(7, 3, 3, 3, 1, 1, 1)
    res = nakamura_by_vectors(vector_instance(game))
    assert res.value == 3
    assert verify_witness(game, res.witness)


def test_by_vectors_symmetric_reduces_to_formula():
    for n, qhat in [(5, 3), (7, 4), (9, 6)]:
        game = weighted(qhat, *([1] * n))
        inst = vector_instance(game)
        assert inst.vectors == ((qhat,),)
        assert nakamura_by_vectors(inst).value == ceil(n / (n - qhat))


def test_by_vectors_rejects_vetoers():
    game = weighted(3, 2, 1, 1)
    with pytest.raises(InvalidGameError):
        nakamura_by_vectors(vector_instance(game))


def test_complete_prefix_program():
    g = complete_from_parameters((10, 10), [(7, 8)])
    res = nakamura_complete(g)
    assert res.value == 4
    assert verify_witness(expand_complete(g), res.witness)

    g2 = complete_from_parameters((5, 5), [(2, 3)])
    res2 = nakamura_complete(g2)
    assert res2.value == 2
    assert verify_witness(expand_complete(g2), res2.witness)

    g3 = complete_from_parameters((3, 3), [(2, 1)])
    res3 = nakamura_complete(g3)
    assert res3.value == 3
    assert verify_witness(expand_complete(g3), res3.witness)


def test_complete_vetoer_infinite():
    g = complete_from_parameters((2, 3), [(2, 1)])
    assert nakamura_complete(g).value is None


def test_consistency_triangle():
    from conftest import random_complete_games
    from nakamura.census import enumerate_complete

    # exhaustive for up to five players, random complete games beyond
    for n in range(2, 6):
        for g in enumerate_complete(n):
            if g.has_vetoers():
                continue
            expanded = expand_complete(g)
            v1 = nakamura_complete(g).value
            v2 = nakamura_exact(expanded).value
            v3 = nakamura_by_vectors(vector_instance(expanded)).value
            assert v1 == v2 == v3, (g.class_sizes, g.shift_min)
    rng = random.Random(53)
    for n in range(6, 15):
        for g in random_complete_games(rng, n, 12):
            if g.has_vetoers():
                continue
            expanded = expand_complete(g)
            v1 = nakamura_complete(g).value
            v2 = nakamura_exact(expanded).value
            v3 = nakamura_by_vectors(vector_instance(expanded)).value
            assert v1 == v2 == v3, (g.class_sizes, g.shift_min)


def test_replica_threshold_report():
    # replicas of (3, 2) at relative quota 3/5; the quota ceiling is 3
    results = {}
    for r in (1, 2):
        rep = WeightedRep(
            3 * 5 * r // 5, tuple(w for w in (3, 2) for _ in range(r))
        )
        value = nakamura_exact(game_from_weighted(rep)).value
        results[r] = value
    # report: the ceiling formula holds from r = 2 on within the tested range
    assert results[1] is None
    assert results[2] == 3
    threshold = min(r for r, v in results.items() if v == 3)
    assert threshold == 2


# ---------------------------------------------------------------------------
# witnesses


def test_verify_witness_examples():
    game = weighted(2, 1, 1, 1)
    w12 = mask_from_players([1, 2], 3)
    w13 = mask_from_players([1, 3], 3)
    w23 = mask_from_players([2, 3], 3)
    assert verify_witness(game, [w12, w23, w13])
    assert not verify_witness(game, [w12, w13])
    assert not verify_witness(game, [])


def test_verify_witness_eleven_family():
    game = weighted(90, *([9] * 10 + [2] * 4 + [1] * 2))
    n = 16
    family = [mask_from_players(range(1, 11), n)]
    for missing in range(1, 11):
        players = [p for p in range(1, 11) if p != missing] + [11, 12, 13, 14, 15]
        family.append(mask_from_players(players, n))
    assert len(family) == 11
    assert verify_witness(game, family)
