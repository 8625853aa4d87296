import json

import pytest

from slicescope.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_tsv(capsys):
    code, out, err = run(capsys, "classify", "--family", "gl", "--rank", "4")
    assert code == 0 and not err
    lines = out.splitlines()
    assert lines[0].startswith("family\trank\tjordan_type")
    assert len(lines) == 6      # header + five orbits
    row = dict(zip(lines[0].split("\t"), lines[2].split("\t")))
    assert row["jordan_type"] == "(3,1)"
    assert row["status"] == "HypersphericalHook"
    assert row["sdual"] == "gl(4|1)"
    assert row["slack"] == "0"


def test_classify_is_byte_identical(capsys):
    _, first, _ = run(capsys, "classify", "--family", "sp", "--rank", "3")
    _, second, _ = run(capsys, "classify", "--family", "sp", "--rank", "3")
    assert first == second


def test_classify_json_records(capsys):
    code, out, _ = run(capsys, "classify", "--family", "so", "--size", "7",
                       "--format", "json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 7
    by_type = {r["jordan_type"]: r for r in records}
    assert by_type["(5,1,1)"]["status"] == "HypersphericalHook"
    assert by_type["(5,1,1)"]["sdual"] == "osp(2|6)"
    assert by_type["(3,3,1)"]["status"] == "NotHyperspherical"
    assert by_type["(3,3,1)"]["sdual"] == "-"


def test_check_pretty_identity_line(capsys):
    code, out, _ = run(capsys, "check", "--family", "so", "--partition",
                       "5,1,1", "--rank-from-partition", "--format", "pretty")
    assert code == 0
    assert "identity: 26 - 22 = 4 = 3 + 1" in out


def test_check_sp6_33(capsys):
    code, out, _ = run(capsys, "check", "--family", "sp", "--rank", "3",
                       "--partition", "3,3", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["slice_dim"] == 7
    assert rec["lhs"] == 28 and rec["rhs"] == 28 and rec["slack"] == 0
    assert rec["status"].startswith("HypersphericalSpecial")
    assert rec["sdual"] == "f(4)"


def test_dual_command(capsys):
    code, out, _ = run(capsys, "dual", "--family", "gl", "--partition",
                       "3,1,1", "--rank-from-partition")
    assert code == 0
    assert out.strip() == "gl(5|2) [proved]"


def test_dual_of_non_hyperspherical_exits_1(capsys):
    code, out, _ = run(capsys, "dual", "--family", "gl", "--partition", "3,2",
                       "--rank-from-partition")
    assert code == 1
    assert "no S-dual" in out


def test_verify_case(capsys):
    code, out, _ = run(capsys, "verify", "--case", "so7-hook2", "--seed", "7")
    assert code == 0
    rec = json.loads(out)
    assert rec["case"] == "so7-hook2"
    assert rec["contained"] is True
    assert rec["dim_W_perp"] == 4
    assert rec["inconclusive"] is False


def test_verify_bad_case_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--case", "zz9-hook1")
    assert code == 2
    assert "usage error" in err


def test_scan_builtin_table(capsys):
    code, out, _ = run(capsys, "scan", "--format", "json")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    passing = [r["label"] for r in rows if r["passes_necessary_bound"]]
    assert passing == ["0", "~A1", "G2"]
    by_label = {r["label"]: r for r in rows}
    assert by_label["~A1"]["slack"] == 0
    assert by_label["~A1"]["lhs"] == 20 and by_label["~A1"]["rhs"] == 20


def test_sweep_command(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "sp", "--n-max", "10")
    assert code == 0
    assert "(2,2), (3,3)" in out
    assert "agrees with the direct bound everywhere" in out


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "classify", "--family", "so", "--rank", "3")
    assert code == 2 and "usage error" in err
    code, _, err = run(capsys, "classify", "--family", "gl", "--rank", "0")
    assert code == 2
    code, _, err = run(capsys, "check", "--family", "gl", "--rank", "4",
                       "--partition", "3,3")
    assert code == 2
    code, _, err = run(capsys, "check", "--family", "sp", "--partition",
                       "3,2,1", "--rank-from-partition")
    assert code == 2


def test_missing_subcommand_is_an_argparse_error(capsys):
    with pytest.raises(SystemExit):
        main([])
