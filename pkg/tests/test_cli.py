import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from earring import Word, format_word, parse_word, run_table
from earring.cli import main
from earring.table import counterexample_row
from earring.text import ParseError
from earring.verify import random_word


def test_parse_examples():
    assert parse_word("-1 -2 1 2") == Word([-1, -2, 1, 2])
    assert parse_word("e") == Word()
    assert parse_word("  3\t-4\n") == Word([3, -4])


@pytest.mark.parametrize(
    "text, pos",
    [("1 0 2", 2), ("1 x", 2), ("1.5", 1), ("e 1", 1), ("", None), ("   ", None)],
)
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse_word(text)
    assert info.value.position == pos


def test_format_examples():
    assert format_word(Word()) == "e"
    assert format_word(Word([-1, 2])) == "-1 2"


def test_roundtrip_random_words():
    for i in range(10_000):
        w = random_word(np.random.default_rng([9, i]), max_len=20)
        assert parse_word(format_word(w)) == w


def test_rows():
    assert counterexample_row(2, 64).__dict__ == dict(
        n=2, word_length=8, oscillation=4, diverge_depth=2, log2_distance=-2
    )
    assert counterexample_row(5, 64).__dict__ == dict(
        n=5, word_length=20, oscillation=10, diverge_depth=5, log2_distance=-5
    )


def test_table_formats_agree():
    as_json = json.loads(run_table(12, 16, "json"))["rows"]
    as_csv = list(csv.DictReader(io.StringIO(run_table(12, 16, "csv"))))
    text = run_table(12, 16, "text").splitlines()
    header = text[0].split()
    as_text = [dict(zip(header, line.split())) for line in text[1:]]
    assert len(as_json) == len(as_csv) == len(as_text) == 11
    for j, c, t in zip(as_json, as_csv, as_text):
        assert {k: str(v) for k, v in j.items()} == c == t


def test_table_monotone_columns():
    rows = json.loads(run_table(20, 20, "json"))["rows"]
    osc = [r["oscillation"] for r in rows]
    dist = [r["log2_distance"] for r in rows]
    assert all(a < b for a, b in zip(osc, osc[1:]))
    assert all(a > b for a, b in zip(dist, dist[1:]))


def test_csv_layout():
    out = run_table(3, 3, "csv")
    assert out == "n,word_length,oscillation,diverge_depth,log2_distance\n2,8,4,2,-2\n3,12,6,3,-3\n"


def test_table_errors():
    with pytest.raises(ValueError):
        run_table(9, 8)
    with pytest.raises(ValueError):
        run_table(1, 8)
    with pytest.raises(ValueError):
        run_table(3, 8, "xml")


def test_cli_reduce(capsys):
    assert main(["reduce", "2 1 -1 -2 3"]) == 0
    assert capsys.readouterr().out == "3\n"
    assert main(["reduce", "1 -1"]) == 0
    assert capsys.readouterr().out == "e\n"


def test_cli_osc(capsys):
    assert main(["osc", "1 2 -2 -1 1"]) == 0
    assert capsys.readouterr().out == "oscillation 3\nclass_min 1\n"


def test_cli_phi(capsys):
    assert main(["phi", "--depth", "3", "1 -3 1 3"]) == 0
    assert capsys.readouterr().out == "depth 3\n1 1\n1 1\n1 -3 1 3\n"
    assert main(["phi", "--depth", "2", "--format", "json", "-1 -2 1 2"]) == 0
    assert json.loads(capsys.readouterr().out) == {"depth": 2, "entries": ["e", "-1 -2 1 2"]}


def test_cli_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("1 2 -2\n"))
    assert main(["reduce", "-"]) == 0
    assert capsys.readouterr().out == "1\n"


def test_cli_errors(capsys):
    assert main(["reduce", "1 0 2"]) == 2
    assert "token 2" in capsys.readouterr().err
    assert main(["table", "--max-n", "9", "--depth", "8"]) == 2
    assert main(["phi", "--depth", "0", "1"]) == 2
    assert main(["verify", "--cases", "0"]) == 2
    with pytest.raises(SystemExit) as info:
        main(["table", "--format", "xml"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_cli_table_deterministic():
    cmd = [sys.executable, "-m", "earring.cli", "table", "--max-n", "10", "--depth", "12", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_cli_verify_small(capsys):
    assert main(["verify", "--seed", "3", "--cases", "20", "--exhaustive-len", "4"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "--seed", "3", "--cases", "20", "--exhaustive-len", "4"]) == 0
    assert capsys.readouterr().out == first
    assert first.endswith("24/24 suites passed\n")
