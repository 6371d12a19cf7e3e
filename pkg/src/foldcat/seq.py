"""Recursively defined sign sequences and folding words.

Houses the sequence s (with s(-1) = 0), its zero-block count b0, the
power-of-two indicator mu, the shifted-Hankel signs s~ and t~, the
Jacobi coefficients d, the sign sequence of the all-variables-equal
continued fraction, and the folding words W_k / their letter stream.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .errors import SizeGuardError

MAX_WORD_LEVEL = 20


class FoldLetter(NamedTuple):
    var_index: int
    sign: int


def b0(n: int) -> int:
    """Number of "10" factors in the binary expansion of n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return ((n >> 1) & ~n).bit_count()


@lru_cache(maxsize=None)
def s(n: int) -> int:
    """s(-1)=0, s(0)=1, s(2i)=(-1)^i s(i), s(2i+1)=s(i)."""
    if n < -1:
        raise ValueError("n must be >= -1")
    if n == -1:
        return 0
    if n == 0:
        return 1
    i, r = divmod(n, 2)
    if r:
        return s(i)
    return s(i) if i % 2 == 0 else -s(i)


def mu(n: int) -> int:
    """1 iff n+1 is a power of two (parity of the n-th Catalan number)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return 1 if (n + 1) & n == 0 else 0


@lru_cache(maxsize=None)
def s_tilde(n: int) -> int:
    """s~(2i) = (-1)^i, s~(2i+1) = s~(i)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    i, r = divmod(n, 2)
    if r:
        return s_tilde(i)
    return 1 if i % 2 == 0 else -1


@lru_cache(maxsize=None)
def t_tilde(n: int) -> int:
    """t~(0)=1, t~(2i+1)=t~(i), t~(4i)=(-1)^i t~(2i), t~(4i+2)=t~(2i)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    if n % 2:
        return t_tilde(n // 2)
    if n % 4 == 0:
        i = n // 4
        return t_tilde(n // 2) if i % 2 == 0 else -t_tilde(n // 2)
    return t_tilde(n // 2 - 1)  # n = 4i+2 recurses to index 2i


def d(n: int) -> int:
    """(s(n) - s(n-2)) / s(n-1), exact integer division; defined for n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    num = s(n) - s(n - 2)
    den = s(n - 1)
    assert den != 0, "s(n-1) vanishes only at n = 0"
    q, r = divmod(num, den)
    assert r == 0, "quotient must be exact"
    return q


def example1_sign(n: int) -> int:
    """Sign of the n-th numerator when every variable is set to x.

    w(4i+1) = -w(4i+2) = (-1)^(i+1); w(8i+3) = -w(8i+4) = (-1)^i;
    w(8i+7) = -w(8i+8) = w(4i+3).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    r4 = n % 4
    if r4 == 1:
        i = n // 4
        return -1 if i % 2 == 0 else 1
    if r4 == 2:
        i = (n - 2) // 4
        return 1 if i % 2 == 0 else -1
    r8 = n % 8
    if r8 == 3:
        i = n // 8
        return 1 if i % 2 == 0 else -1
    if r8 == 4:
        i = (n - 4) // 8
        return -1 if i % 2 == 0 else 1
    if r8 == 7:
        return example1_sign(n // 2)  # 4i+3 with i = n//8
    # r8 == 0, n = 8i+8
    return -example1_sign((n - 8) // 2 + 3)


def word_length(k: int) -> int:
    return 2 * ((1 << k) - 1)


def fold_word(k: int) -> list[FoldLetter]:
    """The word W_k: W_1 = (-x1) x1, W_k = W_{k-1} xk (-xk) reverse(W_{k-1})."""
    if not 1 <= k <= MAX_WORD_LEVEL:
        raise SizeGuardError(f"word level must be in [1, {MAX_WORD_LEVEL}]")
    word = [FoldLetter(1, -1), FoldLetter(1, 1)]
    for level in range(2, k + 1):
        word = word + [FoldLetter(level, 1), FoldLetter(level, -1)] + word[::-1]
    return word


def fold_stream(n: int) -> FoldLetter:
    """The n-th letter of the infinite word, without materializing any W_k."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k = 1
    while word_length(k) < n:
        k += 1
    while k > 1:
        m = word_length(k - 1)
        if n <= m:
            k -= 1
        elif n == m + 1:
            return FoldLetter(k, 1)
        elif n == m + 2:
            return FoldLetter(k, -1)
        else:
            n = 2 * m + 3 - n  # position inside the reversed copy of W_{k-1}
            k -= 1
    return FoldLetter(1, -1 if n == 1 else 1)
