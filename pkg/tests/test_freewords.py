import pytest
from hypothesis import given

from surfbraid import freewords as fw
from surfbraid.freewords import FreeWord, WordParseError

from .strategies import letters, words

X, Y = FreeWord.gen(1), FreeWord.gen(2)


def test_reduce_examples():
    assert fw.reduce([1, -1]) == FreeWord.identity()
    assert fw.reduce([1, 2, -2, 1]) == X ** 2
    assert fw.reduce([1, -2, -1, 2]).letters == (1, -2, -1, 2)


def test_multiply_invert_examples(word):
    assert fw.multiply(word("x y"), word("y^-1 x^-1")) == FreeWord.identity()
    assert fw.multiply(FreeWord.identity(), word("x y^2")) == word("x y^2")
    assert fw.multiply(X, Y).letters == (1, 2)
    assert fw.invert(word("x y^-1")) == word("y x^-1")
    assert fw.invert(FreeWord.identity()) == FreeWord.identity()
    assert fw.invert(X ** 2) == X ** -2


def test_invert_letters_examples(word):
    assert fw.invert_letters(word("x y^-1")) == word("x^-1 y")
    assert fw.invert_letters(word("x y^-1 x^-1 y")) == word("x^-1 y x y^-1")
    assert fw.invert_letters(FreeWord.identity()) == FreeWord.identity()


def test_exponent_sum_and_length(word):
    w = word("x y^-1 x")
    assert fw.exponent_sum(w, 1) == 2
    assert fw.exponent_sum(w, 2) == -1
    assert fw.exponent_sum(FreeWord.identity(), 1) == 0
    assert fw.word_length(FreeWord.identity()) == 0
    assert fw.word_length(w) == 3
    assert fw.word_length(X ** 2) == 2


def test_palindrome_examples(word):
    assert fw.is_palindrome(word("x y x"))
    assert not fw.is_palindrome(word("x y"))
    assert fw.is_palindrome(X ** 2)


@pytest.mark.parametrize("n,count", [(0, 1), (1, 5), (2, 17), (3, 53)])
def test_enumeration_counts(n, count):
    ws = list(fw.enumerate_reduced(n))
    assert len(ws) == count
    assert ws[0] == FreeWord.identity()


def test_enumeration_order_and_uniqueness():
    ws = list(fw.enumerate_reduced(4))
    assert len(set(ws)) == len(ws)
    assert ws == sorted(ws, key=fw.sort_key)
    assert [w.letters for w in ws[1:5]] == [(1,), (-1,), (2,), (-2,)]
    for L in range(1, 6):
        assert sum(1 for w in fw.enumerate_reduced(L) if len(w) == L) == fw.count_of_length(L) == 4 * 3 ** (L - 1)
    for w in ws:
        assert fw.reduce(w.letters) == w


def test_enumeration_rejects_negative():
    with pytest.raises(ValueError):
        list(fw.enumerate_reduced(-1))


def test_parse_and_format_round_trip(word):
    w = word("x^2 y^-1 x")
    assert w.letters == (1, 1, -2, 1)
    assert fw.format_word(w) == "x^2 y^-1 x"
    assert fw.format_word(FreeWord.identity()) == "1"
    assert word("x x^-1") == FreeWord.identity()
    assert fw.parse_word("u v^-1", ("u", "v")).letters == (1, -2)
    for bad in ("z", "x^", "x^a", "x^1.5"):
        with pytest.raises(WordParseError):
            fw.parse_word(bad)


def test_invalid_letter_code():
    with pytest.raises(ValueError):
        FreeWord([3])


def test_immutable():
    with pytest.raises(AttributeError):
        X.letters = ()


@given(letters)
def test_reduce_idempotent(s):
    r = fw.reduce(s)
    assert fw.reduce(r.letters) == r
    assert all(a != -b for a, b in zip(r.letters, r.letters[1:]))


@given(words, words, words)
def test_group_laws(a, b, c):
    e = FreeWord.identity()
    assert (a * b) * c == a * (b * c)
    assert a * ~a == e == ~a * a
    assert a * e == a == e * a


@given(words, words)
def test_exponent_sum_additive(a, b):
    for g in (1, 2):
        assert fw.exponent_sum(a * b, g) == fw.exponent_sum(a, g) + fw.exponent_sum(b, g)


@given(words, words)
def test_invert_letters_is_involutive_automorphism(a, b):
    assert a.invert_letters().invert_letters() == a
    assert (a * b).invert_letters() == a.invert_letters() * b.invert_letters()


@given(words)
def test_palindrome_means_reversal_fixed(w):
    assert w.is_palindrome() == (w == fw.invert(fw.invert_letters(w)))
    assert w.is_palindrome() == (w.letters == w.letters[::-1])


@given(words, words)
def test_substitute_is_homomorphism(a, b):
    img1, img2 = FreeWord([1, 2]), FreeWord([-2])
    assert (a * b).substitute(img1, img2) == a.substitute(img1, img2) * b.substitute(img1, img2)
    assert a.substitute(X, Y) == a


@given(words)
def test_format_parse_round_trip(w):
    assert fw.parse_word(fw.format_word(w)) == w


@given(words)
def test_pickle_round_trip(w):
    import pickle
    assert pickle.loads(pickle.dumps(w)) == w


def test_power_requires_integer_exponent():
    with pytest.raises(TypeError):
        FreeWord.gen(1) ** 1.0
    assert FreeWord.gen(1) ** -2 == FreeWord.gen(1, -2)
