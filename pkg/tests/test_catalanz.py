"""Exact integer Catalan matrices, triangle, and nilpotent exp/log."""

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from foldcat import catalanz, gf2sign, seq
from foldcat.errors import SizeGuardError


def test_catalan_values():
    assert [catalanz.catalan(n) for n in range(10)] == \
        [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]
    for n in range(0, 200, 17):
        assert catalanz.catalan(n) == math.comb(2 * n, n) - math.comb(2 * n, n + 1)


def test_catalan_guard():
    with pytest.raises(SizeGuardError):
        catalanz.catalan(-1)
    with pytest.raises(SizeGuardError):
        catalanz.catalan(catalanz.MAX_CATALAN_INDEX + 1)


def test_matrix_entry_oracles():
    n = 12
    c = lambda a, b: math.comb(a, b) if 0 <= b <= a else 0
    oracles = {
        catalanz.LZ: lambda i, j: c(2 * i, i - j) - c(2 * i, i - j - 1),
        catalanz.LTILDEZ:
            lambda i, j: c(2 * i + 1, i - j) - c(2 * i + 1, i - j - 1),
        catalanz.MZ: lambda i, j: c(i + j, 2 * j),
        catalanz.MTILDEZ: lambda i, j: c(i + j + 1, 2 * j + 1),
        catalanz.H_CAT: lambda i, j: catalanz.catalan(i + j),
        catalanz.H_CAT_SHIFT: lambda i, j: catalanz.catalan(i + j + 1),
    }
    for kind, entry in oracles.items():
        mat = catalanz.build_catalan_matrix(kind, n)
        for i in range(n):
            for j in range(n):
                assert mat[i, j] == entry(i, j), (kind, i, j)


def test_triangle_against_ballot_recursion():
    tri = catalanz.catalan_triangle(20)
    lmat = catalanz.build_catalan_matrix(catalanz.LZ, 10)
    lt = catalanz.build_catalan_matrix(catalanz.LTILDEZ, 10)
    for r in range(10):
        assert tri[2 * r] == [lmat[r, j] for j in range(r + 1)]
    for r in range(9):
        assert tri[2 * r + 1] == [lt[r, j] for j in range(r + 1)]


def test_triangle_first_rows():
    assert catalanz.catalan_triangle(6) == \
        [[1], [1], [1, 1], [2, 1], [2, 3, 1], [5, 4, 1]]


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 16, 32])
def test_hankel_factorizations(n):
    assert catalanz.verify_catalan_lu(n).ok


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 16, 32])
def test_product_exponentials(n):
    assert catalanz.verify_exp_products(n).ok


def test_log_stripes_flagged_as_conjecture():
    report = catalanz.check_log_conjecture(16)
    assert report.ok
    assert report.conjecture
    assert report.as_dict().get("conjecture") is True


def random_strictly_lower(rng, n, lo=-9, hi=9):
    mat = np.zeros((n, n), dtype=object)
    for i in range(n):
        for j in range(i):
            mat[i, j] = rng.randint(lo, hi)
    return mat


def test_exp_log_round_trip_integer_matrices():
    rng = random.Random(20260826)
    for n in (1, 2, 3, 5, 8, 12, 16):
        g = random_strictly_lower(rng, n)
        u = catalanz.nilpotent_exp(g)
        back = catalanz.nilpotent_log(u)
        for i in range(n):
            for j in range(n):
                assert back[i, j] == g[i, j]
        # exp is unipotent lower-triangular
        for i in range(n):
            assert u[i, i] == 1
            for j in range(i + 1, n):
                assert u[i, j] == 0


def test_log_exp_round_trip_unipotent_matrices():
    rng = random.Random(7)
    for n in (2, 4, 9, 14):
        u = random_strictly_lower(rng, n) + catalanz._identity(n)
        g = catalanz.nilpotent_log(u)
        back = catalanz.nilpotent_exp(g)
        for i in range(n):
            for j in range(n):
                assert back[i, j] == u[i, j]


def test_exp_log_fraction_entries():
    g = np.zeros((4, 4), dtype=object)
    g[1, 0] = Fraction(1, 2)
    g[2, 1] = Fraction(-3, 5)
    g[3, 0] = Fraction(7, 3)
    u = catalanz.nilpotent_exp(g)
    back = catalanz.nilpotent_log(u)
    for i in range(4):
        for j in range(4):
            assert back[i, j] == g[i, j]


def test_exp_rejects_non_nilpotent():
    with pytest.raises(ValueError):
        catalanz.nilpotent_exp(catalanz._identity(3))
    with pytest.raises(ValueError):
        catalanz.nilpotent_log(catalanz.subdiag_matrix([1, 1], 3))


def test_exp_of_known_subdiagonal():
    # exp of the subdiagonal (1, 2, 3, ...) has entries C(i, j) scaled
    n = 6
    g = catalanz.subdiag_matrix(list(range(1, n)), n)
    u = catalanz.nilpotent_exp(g)
    for i in range(n):
        for j in range(i + 1):
            want = Fraction(math.comb(i, j))
            assert u[i, j] == want


def test_gf_mod2_matches_parity():
    order = 1024
    bits = catalanz.catalan_gf_mod2(order)
    for n in range(order):
        assert bits[n] == seq.mu(n)
    for n in range(0, order, 37):
        assert bits[n] == catalanz.catalan(n) % 2


def test_gf_mod2_guard():
    with pytest.raises(SizeGuardError):
        catalanz.catalan_gf_mod2(0)
    with pytest.raises(SizeGuardError):
        catalanz.catalan_gf_mod2(catalanz.MAX_GF_ORDER + 1)


def test_matrix_size_guard():
    with pytest.raises(SizeGuardError):
        catalanz.build_catalan_matrix(catalanz.LZ, catalanz.MAX_MATRIX_SIZE + 1)
    with pytest.raises(ValueError):
        catalanz.build_catalan_matrix("bogus", 4)


def test_mod2_reduction_matches_bit_matrices():
    n = 32
    pairs = [
        (catalanz.LZ, gf2sign.L), (catalanz.MZ, gf2sign.M),
        (catalanz.LTILDEZ, gf2sign.LTILDE), (catalanz.MTILDEZ, gf2sign.MTILDE),
    ]
    for big_kind, bit_kind in pairs:
        big = catalanz.build_catalan_matrix(big_kind, n)
        bits = gf2sign.build_tri(bit_kind, n)
        for i in range(n):
            for j in range(n):
                assert big[i, j] % 2 == bits[i, j], (big_kind, i, j)
