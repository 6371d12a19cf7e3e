"""Integer-level Catalan objects: triangle, matrices, exp/log identities.

All arithmetic is arbitrary precision (python ints, Fractions for the
nilpotent exp/log); matrices are numpy object arrays so @ stays exact.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import SizeGuardError
from .report import VerifyReport

MAX_CATALAN_INDEX = 10 ** 4
MAX_MATRIX_SIZE = 128
MAX_GF_ORDER = 1 << 16

LZ = "LZ"
LTILDEZ = "LTILDEZ"
MZ = "MZ"
MTILDEZ = "MTILDEZ"
H_CAT = "H_CAT"
H_CAT_SHIFT = "H_CAT_SHIFT"


def catalan(n: int) -> int:
    """C(2n, n) / (n + 1), exact."""
    if not 0 <= n <= MAX_CATALAN_INDEX:
        raise SizeGuardError(f"index must be in [0, {MAX_CATALAN_INDEX}]")
    return math.comb(2 * n, n) // (n + 1)


def _choose(n: int, k: int) -> int:
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def _obj(entry_fn, n: int) -> np.ndarray:
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = entry_fn(i, j)
    return out


def build_catalan_matrix(kind: str, n: int) -> np.ndarray:
    """Integer matrix of the given kind at size n (numpy object array)."""
    if not 1 <= n <= MAX_MATRIX_SIZE:
        raise SizeGuardError(f"size must be in [1, {MAX_MATRIX_SIZE}]")
    if kind == LZ:
        return _obj(lambda i, j: _choose(2 * i, i - j) - _choose(2 * i, i - j - 1), n)
    if kind == LTILDEZ:
        return _obj(lambda i, j: _choose(2 * i + 1, i - j) - _choose(2 * i + 1, i - j - 1), n)
    if kind == MZ:
        return _obj(lambda i, j: _choose(i + j, 2 * j), n)
    if kind == MTILDEZ:
        return _obj(lambda i, j: _choose(i + j + 1, 2 * j + 1), n)
    if kind == H_CAT:
        return _obj(lambda i, j: catalan(i + j), n)
    if kind == H_CAT_SHIFT:
        return _obj(lambda i, j: catalan(i + j + 1), n)
    raise ValueError(f"unknown kind {kind!r}")


def catalan_triangle(rows: int) -> list[list[int]]:
    """The staggered ballot-number triangle, one list per printed row.

    Entry (r, c) with c = r mod 2, r mod 2 + 2, ... is the sum of its
    upper-left and upper-right neighbours.  Even rows give the Catalan L
    matrix rows, odd rows the shifted variant.
    """
    if rows < 1:
        raise ValueError("rows must be >= 1")
    dense = {(0, 0): 1}
    out = [[1]]
    for r in range(1, rows):
        row = []
        for c in range(r % 2, r + 1, 2):
            v = dense.get((r - 1, c - 1), 0) + dense.get((r - 1, c + 1), 0)
            dense[(r, c)] = v
            row.append(v)
        out.append(row)
    return out


def _identity(n: int) -> np.ndarray:
    return _obj(lambda i, j: 1 if i == j else 0, n)


def _alt_conj(mat: np.ndarray) -> np.ndarray:
    """D_a mat D_a with the alternating sign diagonal."""
    n = mat.shape[0]
    sv = np.array([(-1) ** (i % 2) for i in range(n)], dtype=object)
    return sv[:, None] * mat * sv[None, :]


def _compare(report: VerifyReport, got: np.ndarray, expected: np.ndarray) -> None:
    n = got.shape[0]
    for i in range(n):
        for j in range(n):
            if got[i, j] != expected[i, j]:
                report.add(i, j, expected[i, j], got[i, j])


def verify_catalan_lu(n: int) -> VerifyReport:
    """H == L L^t, shifted H == L~ L~^t, and both inverses via D_a M D_a."""
    report = VerifyReport("catalan-lu", n)
    lmat = build_catalan_matrix(LZ, n)
    lt = build_catalan_matrix(LTILDEZ, n)
    mmat = build_catalan_matrix(MZ, n)
    mt = build_catalan_matrix(MTILDEZ, n)
    _compare(report, lmat @ lmat.T, build_catalan_matrix(H_CAT, n))
    _compare(report, lt @ lt.T, build_catalan_matrix(H_CAT_SHIFT, n))
    ident = _identity(n)
    _compare(report, lmat @ _alt_conj(mmat), ident)
    _compare(report, lt @ _alt_conj(mt), ident)
    return report


def _is_strictly_lower(g: np.ndarray) -> bool:
    n = g.shape[0]
    return all(g[i, j] == 0 for i in range(n) for j in range(i, n))


def subdiag_matrix(values: list[int] | list[Fraction], n: int) -> np.ndarray:
    """Strictly lower matrix with the given first-subdiagonal entries."""
    out = _obj(lambda i, j: 0, n)
    for i, v in enumerate(values[:n - 1]):
        out[i + 1, i] = v
    return out


def _all_int(mat: np.ndarray) -> bool:
    return all(isinstance(v, int) for v in mat.flat)


def nilpotent_exp(g: np.ndarray) -> np.ndarray:
    """exp of a strictly lower-triangular matrix, exact over the rationals."""
    if not _is_strictly_lower(g):
        raise ValueError("input must be strictly lower-triangular")
    n = g.shape[0]
    if _all_int(g):
        # accumulate f * g^k / k! as integer matrices, divide once at the end
        f = math.factorial(max(n - 1, 1))
        term = _obj(lambda i, j: f if i == j else 0, n)
        acc = term.copy()
        for k in range(1, n):
            term = (term @ g) // k  # exact: term holds f * g^k / k!
            acc = acc + term
        return _obj(lambda i, j: Fraction(int(acc[i, j]), f), n)
    acc = _obj(lambda i, j: Fraction(1 if i == j else 0), n)
    term = acc.copy()
    for k in range(1, n):
        term = (term @ g) * Fraction(1, k)
        acc = acc + term
    return acc


def nilpotent_log(u: np.ndarray) -> np.ndarray:
    """log of a unipotent lower-triangular matrix, exact over the rationals."""
    n = u.shape[0]
    if any(u[i, i] != 1 for i in range(n)) or \
            any(u[i, j] != 0 for i in range(n) for j in range(i + 1, n)):
        raise ValueError("input must be unipotent lower-triangular")
    nil = u - _identity(n)
    if _all_int(nil):
        lcm = math.lcm(*range(1, n)) if n > 1 else 1
        term = _identity(n)
        acc = _obj(lambda i, j: 0, n)
        for k in range(1, n):
            term = term @ nil
            sign = 1 if k % 2 == 1 else -1
            acc = acc + (sign * (lcm // k)) * term
        return _obj(lambda i, j: Fraction(int(acc[i, j]), lcm), n)
    term = _identity(n)
    acc = _obj(lambda i, j: Fraction(0), n)
    for k in range(1, n):
        term = term @ nil
        acc = acc + Fraction(1 if k % 2 == 1 else -1, k) * term
    return acc


def verify_exp_products(n: int) -> VerifyReport:
    """LM and (shifted) LM closed forms and exponential forms."""
    report = VerifyReport("exp-products", n)
    lmat = build_catalan_matrix(LZ, n)
    mmat = build_catalan_matrix(MZ, n)
    lt = build_catalan_matrix(LTILDEZ, n)
    mt = build_catalan_matrix(MTILDEZ, n)

    def p_entry(i, j):
        if i < j:
            return 0
        return (math.factorial(2 * i) * math.factorial(j)) // (
            math.factorial(i) * math.factorial(2 * j) * math.factorial(i - j))

    _compare(report, lmat @ mmat, _obj(p_entry, n))
    _compare(report, lmat @ mmat,
             nilpotent_exp(subdiag_matrix([4 * j + 2 for j in range(n)], n)))
    _compare(report, lt @ mt,
             _obj(lambda i, j: 4 ** (i - j) * _choose(i, j) if i >= j else 0, n))
    _compare(report, lt @ mt,
             nilpotent_exp(subdiag_matrix([4 * j + 4 for j in range(n)], n)))
    return report


def check_log_conjecture(n: int) -> VerifyReport:
    """log(ML) and log(M~L~) against the striped 4j+2 / 4j+4 patterns."""
    report = VerifyReport("log-conjecture", n, conjecture=True)
    lmat = build_catalan_matrix(LZ, n)
    mmat = build_catalan_matrix(MZ, n)
    lt = build_catalan_matrix(LTILDEZ, n)
    mt = build_catalan_matrix(MTILDEZ, n)
    stripe2 = _obj(lambda i, j: 4 * j + 2 if i > j and (i - j) % 2 == 1 else 0, n)
    stripe4 = _obj(lambda i, j: 4 * j + 4 if i > j and (i - j) % 2 == 1 else 0, n)
    _compare(report, nilpotent_log(mmat @ lmat), stripe2)
    _compare(report, nilpotent_log(mt @ lt), stripe4)
    return report


def catalan_gf_mod2(order: int) -> list[int]:
    """Coefficients of the Catalan series mod 2 via c = 1 + x c^2 on bits.

    Squaring mod 2 doubles exponents, so the iteration stays sparse; the
    fixed point truncated at the given order is returned as a bit list.
    """
    if not 1 <= order <= MAX_GF_ORDER:
        raise SizeGuardError(f"order must be in [1, {MAX_GF_ORDER}]")
    mask = (1 << order) - 1
    c = 1
    while True:
        sq = 0
        bits = c
        while bits:
            low = bits & -bits
            sq |= 1 << (2 * low.bit_length() - 2)
            bits ^= low
        nxt = (1 | (sq << 1)) & mask
        if nxt == c:
            break
        c = nxt
    return [(c >> k) & 1 for k in range(order)]
