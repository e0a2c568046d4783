import random
from fractions import Fraction

from conftest import random_vetoer_free
from nakamura.bounds import (
    alpha_critical,
    alpha_critical_vectors,
    alpha_roughly_bounds,
    cardinality_bounds,
    greedy_upper,
    max_quota_lp,
    validate_alpha_roughly,
    weighted_bounds,
)
from nakamura.exact import nakamura_exact
from nakamura.games import WeightedRep, game_from_weighted, simple_game


def weighted(quota, *weights):
    return game_from_weighted(WeightedRep(quota, weights))


# ---------------------------------------------------------------------------
# quota/weight ceilings


def test_weighted_bounds_homogeneous():
    rep = WeightedRep(90, (9,) * 10 + (2,) * 4 + (1,) * 2)
    b = weighted_bounds(rep)
    assert (b.lower, b.upper) == (10, 50)


def test_weighted_bounds_majority():
    b = weighted_bounds(WeightedRep(2, (1, 1, 1)))
    assert (b.lower, b.upper) == (3, 3)


def test_weighted_bounds_parametric_k5():
    k = 5
    rep = WeightedRep(22 * k - 11, (5,) * (2 * k) + (2,) * (6 * k))
    assert weighted_bounds(rep).lower == 2 * k


def test_weighted_bounds_infinite_components():
    # quota equal to the total weight: lower bound already infinite
    b = weighted_bounds(WeightedRep(3, (1, 1, 1)))
    assert b.lower is None and b.upper is None
    # vetoer but quota below total: finite lower, infinite upper
    b = weighted_bounds(WeightedRep(3, (2, 1, 1)))
    assert b.lower == 4 and b.upper is None


def test_weighted_lower_bound_scale_invariant():
    rng = random.Random(61)
    for _ in range(20):
        rep, _ = random_vetoer_free(rng, n_max=8)
        for factor in (2, 3, 7):
            scaled = WeightedRep(
                rep.quota * factor, tuple(w * factor for w in rep.weights)
            )
            assert weighted_bounds(scaled).lower == weighted_bounds(rep).lower
            # the upper bound may move; it only has to stay a valid bound
            up = weighted_bounds(scaled).upper
            assert up is None or up >= nakamura_exact(
                game_from_weighted(rep)
            ).value


# ---------------------------------------------------------------------------
# greedy


def test_greedy_majority():
    assert greedy_upper(WeightedRep(2, (1, 1, 1))) == 3


def test_greedy_parametric_k1():
    value = greedy_upper(WeightedRep(11, (5, 5) + (2,) * 6))
    assert 2 <= value <= 3
    assert value == 3  # golden: two fives, then five twos, then the last two


def test_greedy_homogeneous_golden():
    assert greedy_upper(WeightedRep(90, (9,) * 10 + (2,) * 4 + (1,) * 2)) == 11


def test_greedy_vetoer_infinite():
    assert greedy_upper(WeightedRep(3, (2, 1, 1))) is None


def test_greedy_is_upper_bound(weighted_corpus):
    for rep, game in weighted_corpus[:200]:
        assert greedy_upper(rep) >= nakamura_exact(game).value


# ---------------------------------------------------------------------------
# cardinality ceilings


def test_cardinality_symmetric():
    game = weighted(4, 1, 1, 1, 1, 1, 1)
    b = cardinality_bounds(game)
    assert (b.lower, b.upper) == (3, 3)
    assert not b.vetoer


def test_cardinality_dictator_flagged():
    b = cardinality_bounds(simple_game(2, [[1]]))
    assert (b.lower, b.upper) == (2, 2)
    assert b.vetoer


def test_cardinality_upper_is_heuristic():
    # the printed closed form undercuts this game's true value
    game = weighted(7, 3, 3, 3, 1, 1, 1)
    b = cardinality_bounds(game)
    assert (b.lower, b.upper) == (2, 2)
    assert nakamura_exact(game).value == 3


def test_cardinality_lower_is_sound(weighted_corpus):
    for rep, game in weighted_corpus[:200]:
        assert cardinality_bounds(game).lower <= nakamura_exact(game).value


# ---------------------------------------------------------------------------
# rough-weights ceilings


def test_alpha_roughly_arithmetic():
    b = alpha_roughly_bounds([1, 1, 1], 1)
    assert (b.lower, b.upper) == (2, 3)


def test_alpha_roughly_matches_quota_form():
    # a weighted game scaled so its quota is 1
    rep = WeightedRep(5, (3, 2, 2, 1))
    scaled = [w / rep.quota for w in rep.weights]
    b = alpha_roughly_bounds(scaled, Fraction(4, 5))
    assert b.lower == weighted_bounds(rep).lower


def test_alpha_roughly_nonpositive_denominator():
    assert alpha_roughly_bounds([1, 1], 2).upper is None


def test_alpha_roughly_on_rough_game():
    # six players, winning pairs {1,2} and {3,4}: roughly weighted at 1
    game = simple_game(6, [[1, 2], [3, 4]])
    ws = [Fraction(1, 2)] * 4 + [Fraction(0)] * 2
    assert validate_alpha_roughly(game, ws, 1)
    assert not validate_alpha_roughly(game, ws, Fraction(1, 2))
    b = alpha_roughly_bounds(ws, 1)
    value = nakamura_exact(game).value
    assert b.lower <= value <= b.upper


# ---------------------------------------------------------------------------
# quota LP


def test_max_quota_majority():
    out = max_quota_lp(weighted(2, 1, 1, 1))
    assert out.optimum == Fraction(2, 3)
    assert out.nak_lower_bound == 3
    assert out.weights == (Fraction(1, 3),) * 3


def test_max_quota_vetoer():
    out = max_quota_lp(weighted(3, 2, 1, 1))
    assert out.optimum == 1
    assert out.min_max_excess == 0
    assert out.price_of_stability == 0
    assert out.nak_lower_bound is None


def test_max_quota_homogeneous_golden():
    out = max_quota_lp(weighted(90, *([9] * 10 + [2] * 4 + [1] * 2)))
    assert out.optimum == Fraction(10, 11)
    assert out.nak_lower_bound == 11


def test_max_quota_certificate(weighted_corpus):
    for rep, game in weighted_corpus[:120]:
        out = max_quota_lp(game)
        assert sum(out.weights) == 1
        assert all(w >= 0 for w in out.weights)
        attained = min(
            sum(out.weights[i] for i in range(game.n) if w >> i & 1)
            for w in game.min_winning
        )
        assert attained == out.optimum


def test_max_quota_dominates_given_representation(weighted_corpus):
    for rep, game in weighted_corpus[:200]:
        out = max_quota_lp(game)
        q_prime = rep.quota / rep.total
        assert out.optimum >= q_prime
        assert out.nak_lower_bound >= weighted_bounds(rep).lower


# ---------------------------------------------------------------------------
# critical threshold


def test_alpha_critical_majority():
    assert alpha_critical(weighted(2, 1, 1, 1)) == Fraction(1, 2)


def test_alpha_critical_weighted_games(weighted_corpus):
    for rep, game in weighted_corpus[:60]:
        assert alpha_critical(game) < 1


def test_alpha_critical_non_weighted():
    game = simple_game(4, [[1, 2], [3, 4]])
    assert alpha_critical(game) >= 1
    assert alpha_critical(game) == 1


def test_alpha_critical_vector_level_agrees():
    from nakamura.census import enumerate_r1
    from nakamura.games import (
        expand_complete,
        maximal_losing_vectors,
        minimal_winning_vectors,
    )

    for g in enumerate_r1(6):
        vec = alpha_critical_vectors(
            g.class_sizes, minimal_winning_vectors(g), maximal_losing_vectors(g)
        )
        player = alpha_critical(expand_complete(g))
        assert (vec < 1) == (player < 1)


def test_bound_sandwich(weighted_corpus):
    for rep, game in weighted_corpus[:200]:
        value = nakamura_exact(game).value
        wb = weighted_bounds(rep)
        assert wb.lower <= value
        assert wb.upper is None or value <= wb.upper
        assert greedy_upper(rep) >= value
        assert cardinality_bounds(game).lower <= value
        assert max_quota_lp(game).nak_lower_bound <= value
