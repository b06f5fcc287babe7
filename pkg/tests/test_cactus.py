import pytest
from hypothesis import given, strategies as st

from cactus_arcs import Generator, Word, parse_word, phi
from cactus_arcs.cactus import WordSyntaxError, interval, wrapped_interval


def test_phi_small():
    # s(1,3) s(1,2): first swap 1,2, then reverse 1..3
    perm = phi(parse_word("s(1,3) s(1,2)"), 3)
    assert perm.images == (2, 3, 1)
    assert perm.cycles() == [(1, 2, 3)]


def test_phi_single_reversal():
    assert phi(Word.of((2, 4)), 5).images == (1, 4, 3, 2, 5)


def test_parse_and_print():
    w = parse_word("s(1,2) s(2,4)", 4)
    assert w.factors == (Generator(1, 2), Generator(2, 4))
    assert str(w) == "s(1,2) s(2,4)"
    assert w.in_application_order() == (Generator(2, 4), Generator(1, 2))
    assert parse_word("") == Word()


@pytest.mark.parametrize("text", ["s(2,1)", "s(1,5)", "t(1,2)", "s(0,2)", "s(1;2)"])
def test_parse_rejects(text):
    with pytest.raises(WordSyntaxError):
        parse_word(text, 4)


def test_intervals():
    assert interval(3, 3) == Word()
    assert interval(4, 2) == Word.of((2, 4))
    assert wrapped_interval(2, 4) == Word.of((2, 4))
    # run 4..1 through infinity on n=5 -> complement 2..3
    assert wrapped_interval(4, 1) == Word.of((2, 3))
    assert wrapped_interval(3, 2) == Word()


gens = st.builds(lambda p, d: Generator(p, p + d), st.integers(1, 5), st.integers(1, 5)).filter(lambda g: g.q <= 6)
words = st.lists(gens, max_size=6).map(lambda fs: Word(tuple(fs)))


@given(words)
def test_phi_is_antihomomorphic_in_application(w):
    # phi(w1 w2) = phi(w2) then phi(w1)
    n = 6
    half = len(w) // 2
    w1, w2 = Word(w.factors[:half]), Word(w.factors[half:])
    assert phi(w1 * w2, n) == phi(w2, n).then(phi(w1, n))


@given(gens)
def test_generators_are_involutions(g):
    assert phi(Word((g, g)), 6).is_identity()


@given(words)
def test_word_times_reverse_is_identity(w):
    assert phi(w * w.reversed(), 6).is_identity()
