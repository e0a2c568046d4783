import json

from nakamura.cli import main

EX2 = "weighted\nquota: 90\nweights: 9 9 9 9 9 9 9 9 9 9 2 2 2 2 1 1\n"
VETO = "weighted\nquota: 3\nweights: 2 1 1\n"
COMPLETE = "complete\nclasses: 10 10\nrow: 7 8\n"
CSP = "csp\nstock: 155\nlengths: 9 12 12 16 16 46 46 54 69 77 102\n"

TABLE_1_TO_6 = """n,inf,2,3,4,5,6
1,1,0,0,0,0,0
2,2,1,0,0,0,0
3,4,2,1,0,0,0
4,8,5,1,1,0,0
5,16,9,4,1,1,0
6,32,19,8,2,1,1"""


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_analyze_json(tmp_path, capsys):
    path = write(tmp_path, "ex2.game", EX2)
    code, out = run(capsys, "analyze", path, "--json")
    assert code == 0
    report = json.loads(out)
    assert report["nakamura"]["value"] == "11"
    methods = {b["method"]: b for b in report["bounds"]}
    assert methods["weighted"]["lower"] == "10"
    assert methods["weighted"]["upper"] == "50"
    assert methods["greedy"]["upper"] == "11"
    assert methods["lp_quota"]["lower"] == "11"
    assert report["lp"]["max_quota"] == "10/11"
    assert report["classification"]["vetoers"] == []
    assert report["flags"]["proper"] and not report["flags"]["strong"]


def test_analyze_json_bit_stable(tmp_path, capsys):
    path = write(tmp_path, "ex2.game", EX2)
    _, first = run(capsys, "analyze", path, "--json")
    _, second = run(capsys, "analyze", path, "--json")
    assert first == second


def test_analyze_complete_file(tmp_path, capsys):
    path = write(tmp_path, "c.game", COMPLETE)
    code, out = run(capsys, "analyze", path, "--json")
    assert code == 0
    report = json.loads(out)
    assert report["nakamura"]["value"] == "4"
    assert report["input"]["classes"] == [10, 10]


def test_analyze_vetoer(tmp_path, capsys):
    path = write(tmp_path, "veto.game", VETO)
    code, out = run(capsys, "analyze", path, "--json")
    assert code == 0
    report = json.loads(out)
    assert report["nakamura"]["value"] == "inf"
    assert report["classification"]["vetoers"] == [1]


def test_nakamura_witness(tmp_path, capsys):
    path = write(tmp_path, "m.game", "weighted\nquota: 2\nweights: 1 1 1\n")
    code, out = run(capsys, "nakamura", path, "--witness")
    assert code == 0
    assert out.splitlines() == ["3", "1 2", "1 3", "2 3"]


def test_nakamura_infinite(tmp_path, capsys):
    path = write(tmp_path, "v.game", VETO)
    code, out = run(capsys, "nakamura", path, "--witness")
    assert code == 0
    assert out.strip() == "inf"


def test_bounds_table(tmp_path, capsys):
    path = write(tmp_path, "ex2.game", EX2)
    code, out = run(capsys, "bounds", path)
    assert code == 0
    assert "weighted" in out and "lp_quota" in out and "heuristic" in out


def test_census_csv_matches_table(capsys):
    code, out = run(capsys, "census", "1", "6", "complete_r1")
    assert code == 0
    assert out.strip() == TABLE_1_TO_6


def test_census_row10_first_column(capsys):
    code, out = run(capsys, "census", "10", "10", "complete_r1")
    assert code == 0
    row = out.strip().splitlines()[1].split(",")
    assert row[0] == "10" and row[1] == "512"


def test_census_json(capsys):
    code, out = run(capsys, "census", "5", "5", "complete_r1", "--json")
    payload = json.loads(out)
    assert payload[0]["counts"] == {
        "inf": 16, "2": 9, "3": 4, "4": 1, "5": 1,
    }


def test_census_shards_merge(capsys):
    code, full = run(capsys, "census", "7", "7", "complete_r1")
    totals = None
    merged = None
    for shard in (0, 1, 2):
        code, out = run(
            capsys, "census", "7", "7", "complete_r1",
            "--shards", "3", "--shard", str(shard),
        )
        vals = [int(x) for x in out.strip().splitlines()[1].split(",")[1:]]
        merged = vals if merged is None else [a + b for a, b in zip(merged, vals)]
    expected = [int(x) for x in full.strip().splitlines()[1].split(",")[1:]]
    assert merged == expected


def test_census_cap_exit_code(capsys):
    assert main(["census", "17", "17", "complete_r1"]) == 3
    capsys.readouterr()


def test_family_command(tmp_path, capsys):
    out_path = tmp_path / "family.game"
    code, out = run(
        capsys, "family", "nearmax-1", "--n", "5", "--out", str(out_path)
    )
    assert code == 0
    assert "quota: 6" in out
    assert "# nakamura: 4" in out
    from nakamura.gamefiles import parse_game
    from nakamura.games import WeightedRep

    rep = parse_game(out_path.read_text())
    assert rep == WeightedRep(6, (2, 2, 2, 1, 1))


def test_family_padding(capsys):
    code, out = run(
        capsys, "family", "unit-padding",
        "--weights", "2,1", "--qbar", "1/2", "--r", "8",
    )
    assert code == 0
    assert "# quota ceiling: 3" in out
    assert "# ceiling attained: True" in out


def test_family_bad_params_exit_code(capsys):
    assert main(["family", "nearmax-5", "--n", "4", "--k", "3"]) == 2
    capsys.readouterr()


def test_csp_check(tmp_path, capsys):
    path = write(tmp_path, "i.csp", CSP)
    code, out = run(capsys, "csp-check", path)
    assert code == 0
    payload = json.loads(out)
    assert payload["nakamura"] == "4"
    assert payload["bounds"]["lower"] == "3"
    assert payload["z_b_game_patterns"] == "4"
    assert payload["instance_roundup"]["irup"] is False
    assert payload["instance_roundup"]["mirup"] is True


def test_maxnak(capsys):
    code, out = run(capsys, "maxnak", "5", "2", "T")
    assert code == 0
    assert out.startswith("4 (exact maximum)")


def test_conjectures_range(capsys):
    code, out = run(capsys, "conjectures", "4..5", "--t", "3")
    assert code == 0
    rows = json.loads(out)
    assert [r["max_nakamura"] for r in rows] == [3, 4]
    assert all(r["inside"] for r in rows)


def test_conjectures_file(tmp_path, capsys):
    path = write(tmp_path, "m.game", "weighted\nquota: 2\nweights: 1 1 1\n")
    code, out = run(capsys, "conjectures", path)
    assert code == 0
    payload = json.loads(out)
    assert payload["nakamura"] == "3"
    assert payload["z_c"] == "3"
    assert payload["bound"] == "4"
    assert payload["inside"] is True


def test_parse_error_exit_code(tmp_path, capsys):
    path = write(tmp_path, "bad.game", "weighted\nquota: x\nweights: 1\n")
    assert main(["analyze", str(path)]) == 2
    err = capsys.readouterr().err
    assert "line 2" in err


def test_capacity_exit_code(tmp_path, capsys):
    text = "weighted\nquota: 2\nweights: " + " ".join(["1"] * 65) + "\n"
    path = write(tmp_path, "big.game", text)
    assert main(["analyze", str(path)]) == 3
    capsys.readouterr()


def test_missing_file_exit_code(capsys):
    assert main(["analyze", "/nonexistent/file.game"]) == 2
    capsys.readouterr()
