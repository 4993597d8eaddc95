import json

import pytest

from cycpres import cli
from cycpres.cyclic import gnkl
from cycpres.dynamics import shift_orbits
from cycpres.relative import RelativeWord, rho
from cycpres.taxonomy import classify

K_TEXT = """\
gens: b u
rels:
b^6
u u b^3 u b^2
"""


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rewrite_examples(capsys):
    code, out, _ = run(capsys, "rewrite", "--n", "3", "--f", "1", "--word", "x x x")
    assert code == 0 and out.strip() == "x0 x1 x2"
    code, out, _ = run(capsys, "rewrite", "--n", "6", "--f", "2", "--word", "x x x")
    assert code == 0 and out.strip() == "x0 x2 x4"
    code, out, _ = run(capsys, "rewrite", "--n", "3", "--f", "2", "--word", "x x x")
    assert code == 0 and out.strip() == "x0 x2 x1"


def test_rewrite_matches_library(capsys):
    W = RelativeWord.from_text("x a^2 x a^3 x a^-5")
    _, out, _ = run(capsys, "rewrite", "--n", "10", "--f", "0",
                    "--word", "x a^2 x a^3 x a^-5")
    assert out.strip() == str(rho(W, 10, 0))


def test_rewrite_invalid_exponent_exit_2(capsys):
    code, _, err = run(capsys, "rewrite", "--n", "18", "--f", "2",
                       "--word", "x x a^9 x a^6")
    assert code == 2
    assert "3*2 + 15" in err and "(mod 18)" in err


def test_rewrite_bad_token_exit_2(capsys):
    code, _, err = run(capsys, "rewrite", "--n", "3", "--f", "0", "--word", "q")
    assert code == 2 and "token" in err


def test_classify_human(capsys):
    code, out, _ = run(capsys, "classify", "--n", "18", "--k", "1", "--l", "11")
    assert code == 0
    assert "finite: False" in out
    assert "aspherical: False" in out
    assert "exceptional n=18" in out


def test_classify_json_round_trip(capsys):
    code, out, _ = run(capsys, "classify", "--n", "7", "--k", "0", "--l", "3", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep == cli._classification_report(classify(7, 0, 3))
    assert rep["finite"] is True and rep["order"] == 129


def test_sweep_matches_library(capsys):
    code, out, _ = run(capsys, "sweep", "--nmax", "4", "--json")
    assert code == 0
    rep = json.loads(out)
    triples = rep["triples"]
    assert len(triples) == sum(n * n for n in range(1, 5))
    for entry in triples:
        expect = cli._classification_report(
            classify(entry["n"], entry["k"], entry["l"])
        )
        assert entry == expect


def test_sweep_human_output(capsys):
    code, out, _ = run(capsys, "sweep", "--nmax", "3")
    assert code == 0
    assert "G_3(1,2):" in out


def test_enumerate_file(tmp_path, capsys):
    path = tmp_path / "k.txt"
    path.write_text(K_TEXT + "sub:\nb\n")
    code, out, _ = run(capsys, "enumerate", "--file", str(path))
    assert code == 0 and out.splitlines()[0] == "57 cosets"

    path2 = tmp_path / "k_full.txt"
    path2.write_text(K_TEXT)
    code, out, _ = run(capsys, "enumerate", "--file", str(path2))
    assert code == 0 and out.splitlines()[0] == "342 cosets"


def test_enumerate_table_dump(tmp_path, capsys):
    path = tmp_path / "c3.txt"
    path.write_text("gens: a\nrels:\na^3\n")
    code, out, _ = run(capsys, "enumerate", "--file", str(path), "--table")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "3 cosets"
    assert any(line.strip().startswith("1 |") for line in lines)


def test_enumerate_overflow_exit_3(tmp_path, capsys):
    path = tmp_path / "z2.txt"
    path.write_text("gens: a b\nrels:\na b A B\n")
    code, out, _ = run(capsys, "enumerate", "--file", str(path),
                       "--max-cosets", "100")
    assert code == 3 and "undecided" in out


def test_enumerate_missing_file_exit_2(capsys):
    code, _, err = run(capsys, "enumerate", "--file", "/nonexistent/x.txt")
    assert code == 2


def test_orbits_word(capsys):
    code, out, _ = run(capsys, "orbits", "--n", "5", "--word", "x0 x1 X2")
    assert code == 0
    assert out.splitlines()[0] == "11 points: 1 + 5 + 5"


def test_orbits_triple_json_round_trip(capsys):
    code, out, _ = run(capsys, "orbits", "--n", "5", "--k", "0", "--l", "1", "--json")
    assert code == 0
    rep = json.loads(out)
    lib = shift_orbits(5, gnkl(5, 0, 1).word)
    assert rep == cli._orbit_report_dict(lib)
    assert rep["total_points"] == 33


def test_orbits_overflow_exit_3(capsys):
    code, out, _ = run(capsys, "orbits", "--n", "6", "--k", "1", "--l", "5",
                       "--max-cosets", "200")
    assert code == 3 and "undecided" in out


def test_orbits_needs_word_or_triple(capsys):
    code, _, err = run(capsys, "orbits", "--n", "5")
    assert code == 2 and "--word" in err


def test_orbits_invalid_f_exit_2(capsys):
    code, _, err = run(capsys, "orbits", "--n", "5", "--word", "x0 x1 X2",
                       "--f", "1")
    assert code == 2 and "retraction" in err
