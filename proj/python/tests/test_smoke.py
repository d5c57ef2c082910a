import re

import pytest

import lcdawg


def naive_find(text, pattern):
    return [i + 1 for i in range(len(text) - len(pattern) + 1) if text[i : i + len(pattern)] == pattern]


def test_find_and_count():
    idx = lcdawg.Index.build(b"abcdbcda")
    assert idx.find(b"bcd") == [2, 5]
    assert idx.count(b"a") == 2
    assert idx.exists(b"cdb")
    assert b"zz" not in idx
    assert idx.find("x") == []
    assert idx.n == len(idx) == 8
    assert idx.sigma == 4


def test_extract():
    idx = lcdawg.Index.build(b"abcdbcda")
    assert idx.extract(3, 2) == b"cd"
    assert idx.extract(1, 8) == b"abcdbcda"
    assert idx.extract(7, 100) == b"da"
    with pytest.raises(lcdawg.BoundsError):
        idx.extract(0, 1)
    with pytest.raises(lcdawg.BoundsError):
        idx.extract(9, 1)


def test_invalid_input():
    with pytest.raises(lcdawg.InputError):
        lcdawg.Index.build(b"a\x00b")
    idx = lcdawg.Index.build(b"abab")
    with pytest.raises(lcdawg.InputError):
        idx.find(b"")
    with pytest.raises(lcdawg.InputError):
        idx.count(b"\x00")


def test_round_trip(tmp_path):
    idx = lcdawg.Index.build(b"mississippi")
    data = idx.to_bytes()
    assert data[:4] == b"LCDW"
    assert lcdawg.Index.from_bytes(data) == idx
    path = tmp_path / "m.lcdw"
    idx.save(str(path))
    loaded = lcdawg.Index.load(str(path))
    assert loaded.find(b"ss") == [3, 6]
    with pytest.raises(lcdawg.FormatError):
        lcdawg.Index.from_bytes(b"XXXX" + data[4:])
    with pytest.raises(lcdawg.IoError):
        lcdawg.Index.load(str(tmp_path / "missing.lcdw"))


def test_stats():
    s = lcdawg.measure(b"ab", lz=True, bwt_runs=True)
    assert s["mu"] == 0
    assert s["e_tilde"] == 4
    assert s["z"] == 2 and s["r"] == 3
    idx = lcdawg.Index.build(b"abracadabra")
    st = idx.stats()
    assert st["e_tilde"] == 18
    assert "z" not in st
    assert st["production_count"] <= 8 * st["e_tilde"]


def test_grammar_text():
    text = lcdawg.Index.build(b"ab").grammar()
    lines = text.splitlines()
    assert re.fullmatch(r"root X\d+", lines[0])
    assert all(re.fullmatch(r"X\d+ -> (X\d+ X\d+|'.'|0x[0-9A-F]{2})", line) for line in lines[1:])


def test_random_against_naive():
    import random

    rng = random.Random(4)
    for _ in range(50):
        n = rng.randint(1, 200)
        text = bytes(rng.choice(b"abc") for _ in range(n))
        idx = lcdawg.Index.build(text)
        for _ in range(30):
            m = rng.randint(1, 5)
            start = rng.randint(0, max(0, n - m))
            pattern = text[start : start + m] if rng.random() < 0.7 else bytes(rng.choice(b"abcd") for _ in range(m))
            assert idx.find(pattern) == naive_find(text, pattern)
        assert idx.extract(1, n) == text
