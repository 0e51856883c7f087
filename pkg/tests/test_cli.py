import json

import pytest

from permfact.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_xi_single_value(capsys):
    code, out, _ = run(capsys, "xi", "--class", "3", "--class", "3", "--m", "1")
    assert code == 0 and out == "2\n"
    code, out, _ = run(capsys, "xi", "--class", "2", "--class", "2", "--m", "2")
    assert code == 0 and out == "1\n"


def test_xi_m_out_of_range_is_usage_error(capsys):
    code, _, err = run(capsys, "xi", "--class", "3", "--class", "2,1", "--m", "4")
    assert code == 2 and "between 1 and 3" in err


def test_xi_inconsistent_sizes(capsys):
    code, _, err = run(capsys, "xi", "--class", "3", "--class", "2,2", "--m", "1")
    assert code == 2 and "same size" in err


def test_xi_all_m_lists_nonzero_rows(capsys):
    code, out, _ = run(capsys, "xi", "--class", "3", "--class", "3", "--all-m",
                       "--format", "tsv")
    assert code == 0
    assert out.splitlines() == ["m\txi", "1\t2", "3\t2"]


def test_xi_exponent_notation(capsys):
    code, out, _ = run(capsys, "xi", "--class", "1^2,3", "--class", "5", "--m", "2")
    code2, out2, _ = run(capsys, "xi", "--class", "3,1,1", "--class", "5", "--m", "2")
    assert code == code2 == 0 and out == out2


def test_mu_single_and_genus(capsys):
    code, out, _ = run(capsys, "mu", "--gamma", "2,1", "--m", "2")
    assert code == 0 and out == "3\n"
    code, out, _ = run(capsys, "mu", "--gamma", "2,2", "--genus", "1")
    assert code == 0 and out == "1\n"


def test_mu_all_rows(capsys):
    code, out, _ = run(capsys, "mu", "--gamma", "3", "--all", "--format", "tsv")
    assert code == 0
    assert out.splitlines() == ["m\tmu", "1\t1", "3\t1"]


def test_mu_unrealizable_genus_prints_zero(capsys):
    # Genus too large for the class: cycle number falls below 1.
    code, out, _ = run(capsys, "mu", "--gamma", "2,1", "--genus", "2")
    assert code == 0 and out == "0\n"


def test_mu_bad_partition(capsys):
    code, _, err = run(capsys, "mu", "--gamma", "2,x", "--m", "1")
    assert code == 2 and "token" in err


def test_maps_table(capsys):
    code, out, _ = run(capsys, "maps", "--edges", "3", "--format", "tsv")
    assert code == 0
    assert out.splitlines() == ["edges\tgenus\tcount", "3\t0\t5", "3\t1\t10"]


def test_maps_single_genus(capsys):
    code, out, _ = run(capsys, "maps", "--edges", "2", "--genus", "1")
    assert code == 0 and out == "1\n"


def test_maps_one_edge(capsys):
    code, out, _ = run(capsys, "maps", "--edges", "1", "--format", "tsv")
    assert code == 0 and out.splitlines() == ["edges\tgenus\tcount", "1\t0\t1"]


def test_maps_genus_out_of_range(capsys):
    code, _, err = run(capsys, "maps", "--edges", "2", "--genus", "5")
    assert code == 2 and "genus" in err


def test_jsonl_format(capsys):
    code, out, _ = run(capsys, "maps", "--edges", "2", "--format", "jsonl")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows == [
        {"edges": 2, "genus": 0, "count": 2},
        {"edges": 2, "genus": 1, "count": 1},
    ]


def test_table_format_is_aligned(capsys):
    code, out, _ = run(capsys, "maps", "--edges", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["edges", "genus", "count"]
    assert lines[1].split() == ["3", "0", "5"]
    assert lines[2].split() == ["3", "1", "10"]


def test_output_is_deterministic(capsys):
    first = run(capsys, "mu", "--gamma", "4,2,1", "--all")
    second = run(capsys, "mu", "--gamma", "4,2,1", "--all")
    assert first == second


def test_threads_flag_does_not_change_output(capsys):
    base = run(capsys, "maps", "--edges", "4")
    threaded = run(capsys, "maps", "--edges", "4", "--threads", "8")
    assert base == threaded


def test_threads_env_default(capsys, monkeypatch):
    monkeypatch.setenv("PERMFACT_THREADS", "4")
    code, out, _ = run(capsys, "mu", "--gamma", "2,1", "--m", "2")
    assert code == 0 and out == "3\n"


def test_db_build_and_lookup(capsys, tmp_path):
    path = tmp_path / "db.tsv"
    code, out, _ = run(capsys, "db", "build", "--n-max", "6", "--out", str(path))
    assert code == 0
    assert "n_max=6" in out and path.exists()
    code, out, _ = run(capsys, "db", "lookup", "--db", str(path),
                       "--gamma", "2,2", "--m", "1")
    assert code == 0 and out == "1\n"
    code, out, _ = run(capsys, "db", "lookup", "--db", str(path),
                       "--gamma", "3,2,1", "--m", "6")
    assert code == 0 and out == "0\n"


def test_db_lookup_beyond_range(capsys, tmp_path):
    path = tmp_path / "db.tsv"
    run(capsys, "db", "build", "--n-max", "3", "--out", str(path))
    code, _, err = run(capsys, "db", "lookup", "--db", str(path),
                       "--gamma", "4", "--m", "1")
    assert code == 2 and "not built" in err


def test_db_lookup_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "db", "lookup", "--db", str(tmp_path / "no.tsv"),
                       "--gamma", "2", "--m", "1")
    assert code == 2


def test_verify_suite_pass(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "schur", "--n-max", "2")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].startswith("schur:")


def test_verify_unknown_suite(capsys):
    code = main(["verify", "--suite", "bogus"])
    capsys.readouterr()
    assert code == 2


def test_verify_hz(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hz", "--n-max", "4")
    assert code == 0 and "hz:" in out.splitlines()[-1]
