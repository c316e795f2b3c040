import pytest

from idslearn.automata import Dfa
from idslearn.formats import FormatError, format_dfa, format_words, parse_dfa, parse_words
from idslearn.generators import random_dfa

FIG1_TEXT = """\
# worked-example target
alphabet a b
states 4
initial 0
finals 1 2
trans 0 a 3
trans 0 b 1
trans 1 a 3
trans 1 b 2
trans 2 a 3
trans 2 b 3
trans 3 a 3
trans 3 b 3
"""


def test_parse_fig1(fig1):
    assert parse_dfa(FIG1_TEXT) == fig1


def test_round_trip():
    for seed in range(20):
        d = random_dfa(7, 3, seed)
        assert parse_dfa(format_dfa(d)) == d


def test_empty_finals_line():
    d = parse_dfa("alphabet x\nstates 1\ninitial 0\nfinals\ntrans 0 x 0\n")
    assert d.finals == frozenset() and d.labels == ("x",)


@pytest.mark.parametrize("text, line, fragment", [
    ("alphabet a\nstates 1\ninitial 0\nfinals\n", 4, "missing transition"),
    ("alphabet a\nstates 1\ninitial 0\nfinals\ntrans 0 a 0\ntrans 0 a 0\n", 6, "duplicate"),
    ("alphabet a\nstates 2\ninitial 5\nfinals\n", 3, "out of range"),
    ("alphabet a\nstates x\ninitial 0\nfinals\n", 2, "integer"),
    ("alphabet a\nstates 1\ninitial 0\nfinals\ntrans 0 z 0\n", 5, "unknown symbol"),
    ("alphabet ab\nstates 1\ninitial 0\nfinals\n", 1, "single characters"),
    ("states 1\nalphabet a\ninitial 0\nfinals\n", 1, "expected 'alphabet'"),
])
def test_parse_errors_name_the_line(text, line, fragment):
    with pytest.raises(FormatError) as info:
        parse_dfa(text, source="t.dfa")
    assert info.value.line == line
    assert fragment in str(info.value)
    assert f"line {line}" in str(info.value) and "t.dfa" in str(info.value)


def test_words_round_trip():
    words = [(), (1,), (1, 0, 1), (0, 0)]
    text = format_words(words, "ab")
    assert text == "@eps\nb\nbab\naa\n"
    assert parse_words(text, "ab") == words


def test_words_skip_comments_and_blank_lines():
    assert parse_words("# hi\n\nab # trailing\n@eps\n", "ab") == [(0, 1), ()]


def test_words_bad_symbol():
    with pytest.raises(FormatError) as info:
        parse_words("ab\nac\n", "ab")
    assert info.value.line == 2
