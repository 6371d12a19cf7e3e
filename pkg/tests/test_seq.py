"""Sign sequences and folding words against brute-force recursions."""

import pytest
from hypothesis import given, strategies as st

from foldcat import seq
from foldcat.errors import SizeGuardError


def test_s_prefix():
    assert [seq.s(n) for n in range(8)] == [1, 1, -1, 1, -1, -1, -1, 1]


def test_s_boundary():
    assert seq.s(-1) == 0
    with pytest.raises(ValueError):
        seq.s(-2)


def test_s_doubling_rules():
    for i in range(4000):
        assert seq.s(2 * i) == (-1) ** i * seq.s(i)
        assert seq.s(2 * i + 1) == seq.s(i)


@given(st.integers(0, 1 << 30))
def test_s_closed_form(n):
    # number of "10" factors in the binary expansion
    count = bin((n >> 1) & ~n & ((1 << n.bit_length()) - 1)).count("1")
    assert seq.b0(n) == count
    assert seq.s(n) == (-1) ** count


def test_mu_prefix():
    assert [seq.mu(n) for n in range(16)] == \
        [1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1]


@given(st.integers(0, 1 << 30))
def test_mu_power_of_two_support(n):
    assert seq.mu(n) == (1 if (n + 1) & n == 0 else 0)


def test_s_tilde_prefix():
    assert [seq.s_tilde(n) for n in range(8)] == [1, 1, -1, 1, 1, -1, -1, 1]


def test_s_tilde_recursion():
    for i in range(2000):
        assert seq.s_tilde(2 * i) == (-1) ** i
        if i >= 1:
            assert seq.s_tilde(2 * i + 1) == seq.s_tilde(i)


def test_t_tilde_recursion():
    assert seq.t_tilde(0) == 1
    for i in range(2000):
        assert seq.t_tilde(2 * i + 1) == seq.t_tilde(i)
        if i >= 1:
            assert seq.t_tilde(4 * i) == (-1) ** i * seq.t_tilde(2 * i)
            assert seq.t_tilde(4 * i + 2) == seq.t_tilde(2 * i)


def test_t_tilde_even_entries_follow_s():
    for i in range(4000):
        assert seq.t_tilde(2 * i) == seq.s(i)


def test_d_prefix():
    assert [seq.d(n) for n in range(1, 9)] == [1, -2, 0, 0, 2, 0, -2, 0]


def test_d_three_term_identity():
    for n in range(1, 3000):
        prev2 = seq.s(n - 2) if n >= 2 else 0
        assert seq.s(n) == seq.d(n) * seq.s(n - 1) + prev2


def brute_word(k):
    word = [seq.FoldLetter(1, -1), seq.FoldLetter(1, 1)]
    for level in range(2, k + 1):
        word = word + [seq.FoldLetter(level, 1), seq.FoldLetter(level, -1)] \
            + word[::-1]
    return word


def test_word_length():
    for k in range(1, 12):
        assert seq.word_length(k) == 2 * ((1 << k) - 1)
        assert len(seq.fold_word(k)) == seq.word_length(k)


def test_fold_word_small():
    assert seq.fold_word(1) == [seq.FoldLetter(1, -1), seq.FoldLetter(1, 1)]
    assert seq.fold_word(2) == [
        seq.FoldLetter(1, -1), seq.FoldLetter(1, 1), seq.FoldLetter(2, 1),
        seq.FoldLetter(2, -1), seq.FoldLetter(1, 1), seq.FoldLetter(1, -1)]


def test_fold_word_against_brute_recursion():
    for k in range(1, 11):
        assert seq.fold_word(k) == brute_word(k)


def test_fold_stream_matches_words():
    word = seq.fold_word(10)
    for n, letter in enumerate(word, start=1):
        assert seq.fold_stream(n) == letter


def test_fold_word_guard():
    with pytest.raises(SizeGuardError):
        seq.fold_word(seq.MAX_WORD_LEVEL + 1)
    with pytest.raises(SizeGuardError):
        seq.fold_word(0)


def test_example1_sign_matches_stream():
    for n in range(1, 5000):
        assert seq.example1_sign(n) == seq.fold_stream(n).sign
