from __future__ import annotations

import pytest
from hypothesis import given, settings
from strategies import complexes

from hakenkit import (
    Complex,
    FormatError,
    format_complex,
    format_ledger,
    format_pattern,
    parse_complex,
    parse_ledger,
    parse_pattern,
    read_pattern,
    write_pattern,
)
from hakenkit.corpus import LEDGERS, pattern_corpus
from hakenkit.io import RedundantSimplexWarning


def test_complex_format():
    K = Complex([(0, 1, 2), (2, 3)])
    assert format_complex(K) == "0 1 2\n2 3\n"
    assert parse_complex("# a comment\n\n2 3\n0 1 2\n") == K


def test_unsorted_line_rejected():
    with pytest.raises(FormatError, match="line 2"):
        parse_complex("0 1\n2 1\n")
    with pytest.raises(FormatError):
        parse_complex("0 x\n")


def test_redundant_simplex_warns_and_drops():
    with pytest.warns(RedundantSimplexWarning):
        K = parse_complex("0 1 2\n0 1\n")
    assert K.maximal == ((0, 1, 2),)


@settings(max_examples=50, deadline=None)
@given(complexes())
def test_complex_round_trip(K):
    text = format_complex(K)
    assert parse_complex(text) == K
    assert format_complex(parse_complex(text)) == text


def test_pattern_round_trip(tmp_path):
    for name, P in pattern_corpus().items():
        text = format_pattern(P)
        assert format_pattern(parse_pattern(text)) == text, name
    P = pattern_corpus()["polygon-5"]
    write_pattern(P, tmp_path / "p.pattern")
    assert read_pattern(tmp_path / "p.pattern") == P


def test_pattern_errors():
    with pytest.raises(FormatError):
        parse_pattern("[facet a]\n0 1\n")
    with pytest.raises(FormatError):
        parse_pattern("0 1\n[carrier]\n")
    with pytest.raises(FormatError):
        parse_pattern("[carrier]\n0 1 2\n[facet a]\n0 1\n[facet a]\n1 2\n")
    with pytest.raises(FormatError):
        parse_pattern("[carrier]\n0 1 2\n[bogus]\n")


def test_ledger_round_trip():
    for name, build in LEDGERS.items():
        text = format_ledger(build().cuts)
        assert format_ledger(parse_ledger(text)) == text, name


def test_ledger_errors():
    with pytest.raises(FormatError):
        parse_ledger("[step 1]\n[cut]\n0 1\n")
    with pytest.raises(FormatError):
        parse_ledger("[step 0]\n")
    with pytest.raises(FormatError):
        parse_ledger("[cut]\n0 1\n")
