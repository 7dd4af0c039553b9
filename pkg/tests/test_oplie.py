import pytest

from rblie.oplie import (Bounds, degree, enumerate_rals_words, enumerate_rls_words, is_rals_word, is_rls_word,
                         level, rdegree)
from rblie.words import Alphabet, Letter, enumerate_ls_words, format_word, is_ls_word

from oracles import no_descending_operator_pair, rls_brute, wkey

X1 = Alphabet("x")
XY = Alphabet("xy")
x = X1["x"]


def R(*letters):
    return Letter.operator(tuple(letters))


def texts(words):
    return [format_word(w) for w in words]


def test_rls_single_generator_degree_one():
    words = enumerate_rls_words(X1, Bounds(1, 2))
    assert set(words) == {(x,), (R(x),), (R(R(x)),), (R(R(x), x),)}
    assert texts(words) == ["x", "R(x)", "R(R(x))", "R([R(x),x])"]


def test_rls_without_operators():
    assert enumerate_rls_words(X1, Bounds(4, 0)) == [(x,)]
    assert texts(enumerate_rls_words(XY, Bounds(2, 0))) == ["y", "x", "[x,y]"]


@pytest.mark.parametrize("degree_bound", [1, 2, 3, 5])
def test_rdegree_zero_is_ls(degree_bound):
    assert enumerate_rls_words(XY, Bounds(degree_bound, 0)) == enumerate_ls_words(XY.letters, degree_bound)


def test_degree_and_rdegree():
    assert (rdegree((x,)), degree((x,))) == (0, 1)
    assert (rdegree((R(R(x)),)), degree((R(R(x)),))) == (2, 1)
    w = (R(R(x), x), x)
    assert (rdegree(w), degree(w)) == (2, 2)
    assert level(w) == 2 and level((x,)) == 0


@pytest.mark.parametrize("alph, d, r", [(X1, 1, 2), (X1, 2, 2), (X1, 3, 2), (XY, 2, 1), (XY, 3, 1), (XY, 2, 2)])
def test_rls_matches_level_construction(alph, d, r):
    bounds = Bounds(d, r)
    words = enumerate_rls_words(alph, bounds)
    assert len(words) == len(set(words))
    assert set(words) == rls_brute(alph.letters, d, r, bounds.arg_degree)
    assert words == sorted(words, key=lambda w: (len(w), wkey(w)))


def test_every_word_ls_at_every_depth():
    for w in enumerate_rls_words(XY, Bounds(3, 2)):
        assert is_rls_word(w)


def test_is_rls_word():
    assert is_rls_word((R(x), x))
    assert not is_rls_word((x, R(x)))
    assert not is_rls_word(())


def test_monotone_in_bounds():
    small = enumerate_rls_words(XY, Bounds(2, 1))
    big = enumerate_rls_words(XY, Bounds(3, 2))
    assert set(small) <= set(big)
    assert set(enumerate_rls_words(X1, Bounds(2, 2, max_level=1))) <= set(enumerate_rls_words(X1, Bounds(2, 2)))


def test_level_bound():
    words = enumerate_rls_words(X1, Bounds(1, 2, max_level=1))
    assert texts(words) == ["x", "R(x)"]
    assert all(level(w) <= 1 for w in enumerate_rls_words(XY, Bounds(3, 2, max_level=1)))


def test_argument_degree_bound():
    # at (D, R) = (1, 2) operator arguments may reach degree 2 by default
    assert Bounds(1, 2).arg_degree == 2
    words = enumerate_rls_words(X1, Bounds(1, 2, max_arg_degree=1))
    assert texts(words) == ["x", "R(x)", "R(R(x))"]


def test_bounds_validation():
    with pytest.raises(ValueError):
        Bounds(-1)
    with pytest.raises(ValueError):
        Bounds(2, -1)


def test_bounds_contains():
    b = Bounds(2, 1)
    assert b.contains((R(x), x))
    assert not b.contains((R(R(x)),))
    assert not b.contains((x, x, x))


# RALS ------------------------------------------------------------------------
def test_is_rals_word():
    y = XY["y"]
    assert is_rals_word((R(x), x))
    assert is_rals_word((x,))
    w = (R(x, y), R(x))
    assert is_ls_word(w) and not is_rals_word(w)
    assert not is_rals_word((R(R(x, y), R(x)),))


def test_rals_degree_one_same_as_rls():
    assert enumerate_rals_words(X1, Bounds(1, 2)) == enumerate_rls_words(X1, Bounds(1, 2))


def test_rals_single_generator_degree_two():
    words = enumerate_rals_words(X1, Bounds(2, 2))
    assert len(words) == 7
    assert set(texts(words)) == {"x", "R(x)", "R(R(x))", "R([R(x),x])",
                                 "[R(x),x]", "[R(R(x)),x]", "[R([R(x),x]),x]"}


@pytest.mark.parametrize("alph, d, r", [(X1, 3, 2), (XY, 3, 2), (XY, 2, 2)])
def test_rals_matches_filtered_brute(alph, d, r):
    bounds = Bounds(d, r)
    brute = {w for w in rls_brute(alph.letters, d, r, bounds.arg_degree) if no_descending_operator_pair(w)}
    assert set(enumerate_rals_words(alph, bounds)) == brute


def test_rals_subset_of_rls():
    assert set(enumerate_rals_words(XY, Bounds(3, 2))) <= set(enumerate_rls_words(XY, Bounds(3, 2)))


def test_rals_without_operators():
    assert enumerate_rals_words(XY, Bounds(4, 0)) == enumerate_ls_words(XY.letters, 4)
