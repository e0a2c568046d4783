"""Command-line front end.

Commands: ``analyze``, ``bounds``, ``nakamura``, ``census``, ``family``,
``csp-check``, ``maxnak``, ``conjectures``.  All outputs are deterministic:
rationals print as ``p/q``, infinite values as ``inf``, and JSON field
order is fixed (``schema`` versions the layout).  Exit codes: 0 success,
2 parse/input error, 3 capacity, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from . import cutting, families, gamefiles
from .census import COMPLETE_R1, WEIGHTED_R1, census as census_rows
from .exact import nakamura_complete, nakamura_exact, verify_witness
from .games import (
    CapacityError,
    CompleteGame,
    GameError,
    InvalidGameError,
    InvariantError,
    SimpleGame,
    WeightedRep,
    classify_players,
    desirability_classes,
    expand_complete,
    game_from_weighted,
    players_from_mask,
    structure_flags,
)

SCHEMA = 1

# antichains larger than this are summarized, not echoed, in reports
_ECHO_CAP = 200


def _fmt(x) -> str:
    if x is None:
        return "inf"
    if isinstance(x, Fraction):
        return gamefiles.format_rational(x)
    return str(x)


def _coalitions(masks) -> list[list[int]]:
    return [list(players_from_mask(m)) for m in masks]


def _load(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise gamefiles.ParseError(0, f"cannot read {path}: {exc}") from exc
    return gamefiles.parse_game(text)


def _as_game(obj):
    """(game, rep, complete, input_kind) for any parsed record."""
    if isinstance(obj, WeightedRep):
        return game_from_weighted(obj), obj, None, "weighted"
    if isinstance(obj, SimpleGame):
        return obj, None, None, "simple"
    if isinstance(obj, CompleteGame):
        return expand_complete(obj), None, obj, "complete"
    if isinstance(obj, cutting.CspInstance):
        rep = cutting.game_from_instance(obj)
        return game_from_weighted(rep), rep, None, "csp"
    raise InvalidGameError(f"unsupported record {type(obj).__name__}")


def _input_echo(kind, rep, complete, game) -> dict:
    if rep is not None:
        return {
            "kind": kind,
            "quota": _fmt(rep.quota),
            "weights": [_fmt(w) for w in rep.weights],
            "integral_input": rep.integral_input,
        }
    if complete is not None:
        return {
            "kind": kind,
            "classes": list(complete.class_sizes),
            "rows": [list(r) for r in complete.shift_min],
        }
    return {"kind": kind, "players": game.n}


def _nakamura_result(game, rep, complete):
    if complete is not None:
        return nakamura_complete(complete)
    return nakamura_exact(game)


def _bounds_list(game, rep) -> list[dict]:
    out = []
    if rep is not None:
        wb = bounds_mod.weighted_bounds(rep)
        out.append(
            {"method": wb.method, "lower": _fmt(wb.lower), "upper": _fmt(wb.upper)}
        )
        out.append({"method": "greedy", "upper": _fmt(bounds_mod.greedy_upper(rep))})
    cb = bounds_mod.cardinality_bounds(game)
    out.append(
        {
            "method": cb.method,
            "lower": _fmt(cb.lower),
            "upper": _fmt(cb.upper),
            "upper_is_heuristic": True,
            "vetoer": cb.vetoer,
        }
    )
    lpo = bounds_mod.max_quota_lp(game)
    out.append({"method": "lp_quota", "lower": _fmt(lpo.nak_lower_bound)})
    try:
        alpha, weights = bounds_mod.critical_rough_representation(game)
    except CapacityError:
        alpha = None
    if alpha is not None and alpha > 0:
        ab = bounds_mod.alpha_roughly_bounds(weights, alpha)
        out.append(
            {
                "method": ab.method,
                "lower": _fmt(ab.lower),
                "upper": _fmt(ab.upper),
                "alpha": _fmt(alpha),
            }
        )
    return out


def _check_report(value, witness, game, bounds_list) -> None:
    if value is not None and not verify_witness(game, witness):
        raise InvariantError("witness failed verification")
    for b in bounds_list:
        if b["method"] == "cardinality":
            continue  # printed-form upper bound is heuristic by design
        lo = b.get("lower")
        hi = b.get("upper")
        v = "inf" if value is None else value
        if lo not in (None, "inf") and v != "inf" and int(lo) > v:
            raise InvariantError(f"{b['method']} lower bound exceeds the value")
        if hi not in (None, "inf") and v == "inf":
            raise InvariantError(f"{b['method']} upper bound finite on a vetoer game")
        if hi not in (None, "inf") and v != "inf" and v > int(hi):
            raise InvariantError(f"{b['method']} upper bound below the value")


def build_analysis(obj) -> dict:
    game, rep, complete, kind = _as_game(obj)
    cls = classify_players(game)
    flags = structure_flags(game)
    classes, is_complete = desirability_classes(game)
    result = _nakamura_result(game, rep, complete)
    blist = _bounds_list(game, rep)
    _check_report(result.value, result.witness, game, blist)
    lpo = bounds_mod.max_quota_lp(game)
    report = {
        "schema": SCHEMA,
        "input": _input_echo(kind, rep, complete, game),
        "game": {
            "players": game.n,
            "min_winning_count": len(game.min_winning),
        },
        "classification": {
            "vetoers": list(players_from_mask(cls.vetoers)),
            "nulls": list(players_from_mask(cls.nulls)),
            "passers": list(players_from_mask(cls.passers)),
            "dictator": cls.dictator,
        },
        "flags": {
            "proper": flags.proper,
            "strong": flags.strong,
            "constant_sum": flags.constant_sum,
            "complete": is_complete,
        },
        "desirability_classes": [list(c) for c in classes],
        "nakamura": {
            "value": _fmt(result.value),
            "witness": _coalitions(result.witness),
        },
        "bounds": blist,
        "lp": {
            "max_quota": _fmt(lpo.optimum),
            "min_max_excess": _fmt(lpo.min_max_excess),
            "price_of_stability": _fmt(lpo.price_of_stability),
            "lower_bound": _fmt(lpo.nak_lower_bound),
            "weights": [_fmt(w) for w in lpo.weights],
        },
    }
    if len(game.min_winning) <= _ECHO_CAP:
        report["game"]["min_winning"] = _coalitions(game.min_winning)
    return report


def _print_human(report: dict, out) -> None:
    print(f"players: {report['game']['players']}", file=out)
    print(
        f"minimal winning coalitions: {report['game']['min_winning_count']}",
        file=out,
    )
    c = report["classification"]
    print(
        f"vetoers: {c['vetoers'] or '-'}  nulls: {c['nulls'] or '-'}  "
        f"passers: {c['passers'] or '-'}  dictator: {c['dictator'] or '-'}",
        file=out,
    )
    f = report["flags"]
    print(
        f"proper: {f['proper']}  strong: {f['strong']}  "
        f"constant-sum: {f['constant_sum']}  complete: {f['complete']}",
        file=out,
    )
    print(f"desirability classes: {report['desirability_classes']}", file=out)
    nak = report["nakamura"]
    print(f"nakamura number: {nak['value']}", file=out)
    if nak["witness"]:
        print(f"witness: {nak['witness']}", file=out)
    print("bounds:", file=out)
    for b in report["bounds"]:
        parts = [f"  {b['method']:<14}"]
        if "lower" in b:
            parts.append(f"lower {b['lower']}")
        if "upper" in b:
            parts.append(f"upper {b['upper']}")
        if b.get("upper_is_heuristic"):
            parts.append("(upper as printed, heuristic)")
        if b.get("alpha") is not None:
            parts.append(f"alpha {b['alpha']}")
        print(" ".join(parts), file=out)
    lp = report["lp"]
    print(
        f"quota LP: q* {lp['max_quota']}  e* {lp['min_max_excess']}  "
        f"price of stability {lp['price_of_stability']}  "
        f"bound {lp['lower_bound']}",
        file=out,
    )


def cmd_analyze(args) -> int:
    report = build_analysis(_load(args.file))
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        _print_human(report, sys.stdout)
    return 0


def cmd_bounds(args) -> int:
    game, rep, complete, _ = _as_game(_load(args.file))
    rows = _bounds_list(game, rep)
    print(f"{'method':<16}{'lower':>8}{'upper':>8}")
    for b in rows:
        lo = b.get("lower", "-")
        hi = b.get("upper", "-")
        note = " (heuristic upper)" if b.get("upper_is_heuristic") else ""
        print(f"{b['method']:<16}{lo:>8}{hi:>8}{note}")
    return 0


def cmd_nakamura(args) -> int:
    game, rep, complete, _ = _as_game(_load(args.file))
    result = _nakamura_result(game, rep, complete)
    print(_fmt(result.value))
    if args.witness and result.witness:
        for mask in result.witness:
            print(" ".join(str(p) for p in players_from_mask(mask)))
    return 0


def _census_columns(n_max: int) -> list:
    return [None] + list(range(2, n_max + 1))


def cmd_census(args) -> int:
    klass = args.klass
    cap = None if not args.force else 10 ** 9
    rows = []
    for n in range(args.nmin, args.nmax + 1):
        rows.append(
            census_rows(
                n, klass, cap=cap, shards=args.shards, shard=args.shard
            )
        )
    cols = _census_columns(args.nmax)
    if args.json:
        payload = [
            {
                "n": r.n,
                "class": r.klass,
                "counts": {("inf" if k is None else str(k)): v
                           for k, v in sorted(r.counts.items(),
                                              key=lambda kv: (kv[0] is not None, kv[0]))},
            }
            for r in rows
        ]
        text = json.dumps(payload, indent=2)
    else:
        header = "n," + ",".join("inf" if c is None else str(c) for c in cols)
        lines = [header]
        for r in rows:
            lines.append(
                f"{r.n}," + ",".join(str(r.column(c)) for c in cols)
            )
        text = "\n".join(lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def _family_params(args) -> dict:
    params = {}
    for key in ("n", "t", "k", "r"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    if args.weights:
        params["weights"] = [int(x) for x in args.weights.split(",")]
    if args.qbar:
        params["qbar"] = Fraction(args.qbar)
    return params


def cmd_family(args) -> int:
    spec = families.FamilySpec(args.tag, _family_params(args))
    built = families.construct_family(spec)
    if isinstance(built, families.PaddedGame):
        rep = built.rep
        text = gamefiles.write_game(rep)
        value = nakamura_exact(game_from_weighted(rep)).value
        print(text, end="")
        print(f"# nakamura: {_fmt(value)}")
        print(f"# quota ceiling: {built.ceiling}")
        if isinstance(built.threshold_met, bool):
            print(f"# padding threshold met: {built.threshold_met}")
        print(f"# ceiling attained: {value == built.ceiling}")
        out_text = text
    else:
        text = gamefiles.write_game(built)
        if isinstance(built, WeightedRep):
            game = game_from_weighted(built)
        else:
            game = built
        value = nakamura_exact(game).value
        print(text, end="")
        print(f"# nakamura: {_fmt(value)}")
        out_text = text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out_text)
    return 0


def cmd_csp_check(args) -> int:
    obj = _load(args.file)
    if not isinstance(obj, cutting.CspInstance):
        raise InvalidGameError("csp-check expects a csp record")
    rep = cutting.game_from_instance(obj)
    game = game_from_weighted(rep)
    result = nakamura_exact(game)
    gpats = cutting.patterns_from_game(game)
    probe = cutting.conjecture_roundup_probe(game, obj)
    wb = bounds_mod.weighted_bounds(rep)
    payload = {
        "schema": SCHEMA,
        "instance": {
            "stock": _fmt(obj.stock),
            "lengths": [_fmt(x) for x in obj.lengths],
        },
        "game": {
            "quota": _fmt(rep.quota),
            "weights": [_fmt(w) for w in rep.weights],
        },
        "nakamura": _fmt(result.value),
        "z_b_game_patterns": _fmt(cutting.z_b(gpats)),
        "z_c_game_patterns": _fmt(probe["z_c"]),
        "bounds": {"lower": _fmt(wb.lower), "upper": _fmt(wb.upper)},
        "roundup_bound": _fmt(probe["bound"]),
        "inside": probe["inside"],
        "instance_roundup": {
            "z_b": _fmt(probe["instance"]["z_b"]),
            "z_c": _fmt(probe["instance"]["z_c"]),
            "irup": probe["instance"]["irup"],
            "mirup": probe["instance"]["mirup"],
        },
    }
    print(json.dumps(payload, indent=2))
    return 0


def cmd_maxnak(args) -> int:
    res = families.max_nakamura(args.n, args.t, args.klass, mode=args.mode)
    kind = "exact maximum" if res.exact else "construction lower bound"
    print(f"{_fmt(res.value)} ({kind})")
    if res.family:
        print(f"family: {res.family}")
    if isinstance(res.witness, (WeightedRep, SimpleGame, CompleteGame)):
        print(gamefiles.write_game(res.witness), end="")
    return 0


def cmd_conjectures(args) -> int:
    target = args.target
    if ".." in target:
        lo, hi = target.split("..", 1)
        if args.t is None:
            raise InvalidGameError("range mode needs --t")
        probes = families.conjecture_band_probe(
            range(int(lo), int(hi) + 1), args.t
        )
        print(json.dumps(probes, indent=2))
        return 0
    obj = _load(target)
    if isinstance(obj, cutting.CspInstance):
        rep = cutting.game_from_instance(obj)
        probe = cutting.conjecture_roundup_probe(game_from_weighted(rep), obj)
    else:
        game, rep, complete, _ = _as_game(obj)
        probe = cutting.conjecture_roundup_probe(game)
    def show(v):
        if isinstance(v, bool):
            return v
        if isinstance(v, (Fraction, int, type(None))):
            return _fmt(v)
        return v

    printable = {k: show(v) for k, v in probe.items() if k != "instance"}
    if "instance" in probe:
        printable["instance"] = {
            k: show(v) for k, v in probe["instance"].items()
        }
    print(json.dumps(printable, indent=2))
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nakamura",
        description="Nakamura numbers, bounds, and censuses of voting games",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for a game file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bounds", help="bound table for a game file")
    p.add_argument("file")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("nakamura", help="exact Nakamura number")
    p.add_argument("file")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_nakamura)

    p = sub.add_parser("census", help="census rows as CSV or JSON")
    p.add_argument("nmin", type=int)
    p.add_argument("nmax", type=int)
    p.add_argument(
        "klass", choices=[COMPLETE_R1, WEIGHTED_R1]
    )
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--shard", type=int, default=0)
    p.add_argument("--csv", action="store_true", default=False)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.add_argument("--force", action="store_true", help="ignore size caps")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("family", help="instantiate a cataloged construction")
    p.add_argument("tag")
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--weights", help="comma-separated integers")
    p.add_argument("--qbar", help="rational relative quota")
    p.add_argument("--out")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("csp-check", help="cutting-stock report for an instance")
    p.add_argument("file")
    p.set_defaults(func=cmd_csp_check)

    p = sub.add_parser("maxnak", help="maximum Nakamura number for (n, t)")
    p.add_argument("n", type=int)
    p.add_argument("t", type=int)
    p.add_argument("klass", choices=["S", "C", "T"])
    p.add_argument(
        "--mode",
        choices=["auto", "exhaustive", "construction"],
        default="auto",
    )
    p.set_defaults(func=cmd_maxnak)

    p = sub.add_parser(
        "conjectures", help="probe reports for a file or an n range (a..b)"
    )
    p.add_argument("target")
    p.add_argument("--t", type=int)
    p.set_defaults(func=cmd_conjectures)

    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except gamefiles.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 3
    except InvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 4
    except (InvalidGameError, GameError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
