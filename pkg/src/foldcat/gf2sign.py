"""The {0,1} triangular matrices, sign diagonals and block recursions.

Builds L, M, their shifted variants, the strictly-lower shifts, the sign
diagonals, and the 0/1 Hankel matrices, and checks the factorization and
inverse identities between them with exact integer arithmetic.
All matrices are dense numpy int arrays, 0-indexed.
"""

from __future__ import annotations

import numpy as np

from . import seq
from .binom2 import binom_mod2_grid
from .errors import SizeGuardError
from .report import VerifyReport

MAX_SIZE = 1 << 14
MAX_BLOCK_STEPS = 12

# triangular kinds
L = "L"
M = "M"
LTILDE = "LTILDE"
MTILDE = "MTILDE"
LTILDE0 = "LTILDE0"
MTILDE0 = "MTILDE0"
A_STRICT = "A_STRICT"

# block recursion rules
L_RULE = "L_RULE"
M_RULE = "M_RULE"
LTILDE0_RULE = "LTILDE0_RULE"
MTILDE0_RULE = "MTILDE0_RULE"
LM_RULE = "LM_RULE"

# Hankel sources
MU_SHIFT0 = "MU_SHIFT0"
MU_SHIFT1 = "MU_SHIFT1"


def _check_size(n: int, limit: int = MAX_SIZE) -> None:
    if not 1 <= n <= limit:
        raise SizeGuardError(f"size must be in [1, {limit}], got {n}")


def build_tri(kind: str, n: int) -> np.ndarray:
    """Triangular matrix of the given kind at size n, entries in {0,1}."""
    _check_size(n)
    i = np.arange(n, dtype=np.int64)[:, None]
    j = np.arange(n, dtype=np.int64)[None, :]
    if kind == L:
        return binom_mod2_grid(2 * i + 1, i - j)
    if kind == M:
        return binom_mod2_grid(i + j, 2 * j)
    if kind == LTILDE:
        return binom_mod2_grid(2 * i + 2, i - j)
    if kind == MTILDE:
        return binom_mod2_grid(i + j + 1, 2 * j + 1)
    if kind in (LTILDE0, MTILDE0):
        base = build_tri(LTILDE if kind == LTILDE0 else MTILDE, n)
        out = np.zeros_like(base)
        out[1:] = base[:-1]
        return out
    if kind == A_STRICT:
        return (i > j).astype(np.int8)
    raise ValueError(f"unknown kind {kind!r}")


_SEEDS = {
    L_RULE: [[1, 0], [1, 1]],
    M_RULE: [[1, 0], [1, 1]],
    LTILDE0_RULE: [[0, 0], [1, 0]],
    MTILDE0_RULE: [[0, 0], [1, 0]],
    LM_RULE: [[1, 0], [2, 1]],
}


def babab_expand(rule: str, steps: int) -> np.ndarray:
    """Iterate the block doubling map; step k yields size 2^(k+1)."""
    if rule not in _SEEDS:
        raise ValueError(f"unknown rule {rule!r}")
    if not 0 <= steps <= MAX_BLOCK_STEPS:
        raise SizeGuardError(f"steps must be in [0, {MAX_BLOCK_STEPS}]")
    cur = np.array(_SEEDS[rule], dtype=np.int64)
    for _ in range(steps):
        h = cur.shape[0] // 2
        a, b = cur[:h, :h], cur[h:, :h]
        z = np.zeros_like(a)
        if rule in (L_RULE, LTILDE0_RULE):
            cur = np.block([[a, z, z, z], [b, a, z, z],
                            [z, b, a, z], [b, a, b, a]])
        elif rule in (M_RULE, MTILDE0_RULE):
            cur = np.block([[a, z, z, z], [b, a, z, z],
                            [a, b, a, z], [b, z, b, a]])
        else:  # LM_RULE
            cur = np.block([[a, z, z, z], [b, a, z, z],
                            [2 * a, b, a, z], [2 * b, 2 * a, b, a]])
    return cur


def hankel_bits(source: str, n: int) -> np.ndarray:
    """Hankel matrix of mu (shift 0) or of its shift by one."""
    _check_size(n)
    shift = {MU_SHIFT0: 0, MU_SHIFT1: 1}[source]
    vals = np.array([seq.mu(m + shift) for m in range(2 * n - 1)],
                    dtype=np.int8)
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    return vals[i + j]


def sign_diag(kind: str, n: int) -> np.ndarray:
    """Diagonal of the named sign matrix as a 1-D int vector."""
    _check_size(n)
    idx = range(n)
    if kind == "s":
        return np.array([seq.s(i) for i in idx], dtype=np.int64)
    if kind == "a":
        return np.array([(-1) ** (i % 2) for i in idx], dtype=np.int64)
    if kind == "e":
        return np.array([1 - i % 2 for i in idx], dtype=np.int64)
    if kind == "o":
        return np.array([i % 2 for i in idx], dtype=np.int64)
    if kind == "stilde":
        return np.array([seq.s_tilde(i) for i in idx], dtype=np.int64)
    if kind == "ttilde":
        return np.array([seq.t_tilde(i) for i in idx], dtype=np.int64)
    raise ValueError(f"unknown sign kind {kind!r}")


def mat_mul_small(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact integer product of two same-size square matrices."""
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("operands must be equal-size square matrices")
    return a.astype(np.int64) @ b.astype(np.int64)


def _compare(report: VerifyReport, got: np.ndarray,
             expected: np.ndarray) -> None:
    diff = np.argwhere(got != expected)
    for i, j in diff:
        report.add(int(i), int(j), int(expected[i, j]), int(got[i, j]))


def _five_factor(n: int) -> np.ndarray:
    """D_s L D_a L^t D_s, exact."""
    lmat = build_tri(L, n).astype(np.int64)
    sv = sign_diag("s", n)
    av = sign_diag("a", n)
    core = (lmat * av[None, :]) @ lmat.T
    return sv[:, None] * core * sv[None, :]


def verify_thm2(n: int) -> VerifyReport:
    """D_s L D_a L^t D_s == Hankel(mu)."""
    _check_size(n, 4096)
    report = VerifyReport("thm2", n)
    _compare(report, _five_factor(n), hankel_bits(MU_SHIFT0, n))
    return report


def verify_thm3(n: int) -> VerifyReport:
    """L D_a M == D_a, and the signed inverse P (D_s L D_s) == identity."""
    _check_size(n)
    report = VerifyReport("thm3", n)
    lmat = build_tri(L, n).astype(np.int64)
    mmat = build_tri(M, n).astype(np.int64)
    sv = sign_diag("s", n)
    av = sign_diag("a", n)
    _compare(report, (lmat * av[None, :]) @ mmat, np.diag(av))
    p = (sv * av)[:, None] * mmat * (av * sv)[None, :]
    sls = sv[:, None] * lmat * sv[None, :]
    _compare(report, p @ sls, np.eye(n, dtype=np.int64))
    return report


def verify_prop_mdl(n: int) -> VerifyReport:
    """M D_e L == A + D_e and M D_o L == A + D_o."""
    _check_size(n)
    report = VerifyReport("mdl", n)
    lmat = build_tri(L, n).astype(np.int64)
    mmat = build_tri(M, n).astype(np.int64)
    a_strict = build_tri(A_STRICT, n).astype(np.int64)
    for kind in ("e", "o"):
        mask = sign_diag(kind, n)
        _compare(report, (mmat * mask[None, :]) @ lmat,
                 a_strict + np.diag(mask))
    return report


def verify_prop_ml_lm(n: int) -> VerifyReport:
    """ML entry pattern 0/1/2, LM block recursion, and both inverses."""
    _check_size(n)
    report = VerifyReport("ml-lm", n)
    lmat = build_tri(L, n).astype(np.int64)
    mmat = build_tri(M, n).astype(np.int64)
    av = sign_diag("a", n)
    ml = mmat @ lmat
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    pattern = np.where(i < j, 0, np.where(i == j, 1, 2))
    _compare(report, ml, pattern)
    lm = lmat @ mmat
    steps = max(0, (max(n - 1, 1)).bit_length() - 1)
    _compare(report, lm, babab_expand(LM_RULE, steps)[:n, :n])
    ident = np.eye(n, dtype=np.int64)
    _compare(report, ml @ (av[:, None] * ml * av[None, :]), ident)
    _compare(report, lm @ (av[:, None] * lm * av[None, :]), ident)
    return report


def verify_thm5(n: int) -> VerifyReport:
    """Shifted-Hankel factorization, its inverses, and the interleavings."""
    _check_size(n)
    report = VerifyReport("thm5", n)
    lt = build_tri(LTILDE, n).astype(np.int64)
    mt = build_tri(MTILDE, n).astype(np.int64)
    sv = sign_diag("stilde", n)
    tv = sign_diag("ttilde", n)
    core = (lt * sv[None, :]) @ lt.T
    _compare(report, tv[:, None] * core * tv[None, :],
             hankel_bits(MU_SHIFT1, n))
    dstilde = np.diag(sv)
    _compare(report, (lt * sv[None, :]) @ mt, dstilde)
    _compare(report, (mt * sv[None, :]) @ lt, dstilde)
    # parity vanishing and interleaving recursions
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    odd_parity = (i - j) % 2 == 1
    _compare(report, lt * odd_parity, np.zeros_like(lt))
    h = n // 2
    if h >= 1:
        lmat = build_tri(L, h).astype(np.int64)
        mmat = build_tri(M, h).astype(np.int64)
        _compare(report, lt[0:2 * h:2, 0:2 * h:2], lmat)
        _compare(report, mt[0:2 * h:2, 0:2 * h:2], mmat)
        _compare(report, lt[1:2 * h:2, 1:2 * h:2], lt[:h, :h])
        _compare(report, mt[1:2 * h:2, 1:2 * h:2], mt[:h, :h])
    return report


def verify_babab(n: int) -> VerifyReport:
    """Every block-recursion chain equals its formula-built matrix."""
    _check_size(n)
    report = VerifyReport("babab", n)
    pairs = [(L_RULE, L), (M_RULE, M), (LTILDE0_RULE, LTILDE0),
             (MTILDE0_RULE, MTILDE0)]
    size = 2
    steps = 0
    while size <= n:
        for rule, kind in pairs:
            got = babab_expand(rule, steps)
            _compare(report, got, build_tri(kind, size).astype(np.int64))
        size *= 2
        steps += 1
    return report


def general_eps_diag(eps: list[int], n: int) -> np.ndarray:
    """Conjugating diagonal for the sign-twisted Hankel factorization.

    d_m is the product, over set bits j of m, of c_j where c_0 = eps[1]
    and c_j = eps[j] * eps[j+1] for j >= 1.
    """
    _check_size(n)
    if not eps or eps[0] != 1:
        raise ValueError("eps[0] must be +1 (negate D_a to handle -1)")
    if any(e not in (-1, 1) for e in eps):
        raise ValueError("eps entries must be +-1")
    if (1 << (len(eps) - 1)) < n:
        raise SizeGuardError("eps too short: need 2^(len(eps)-1) >= size")
    c = [eps[1] if len(eps) > 1 else 1]
    for j in range(1, len(eps) - 1):
        c.append(eps[j] * eps[j + 1])
    out = np.ones(n, dtype=np.int64)
    for m in range(1, n):
        sign = 1
        bits = m
        j = 0
        while bits:
            if bits & 1:
                sign *= c[j]
            bits >>= 1
            j += 1
        out[m] = sign
    return out


def signed_hankel(eps: list[int], n: int) -> np.ndarray:
    """Hankel matrix of the series with coefficient eps[k] at index 2^k - 1."""
    _check_size(n)
    vals = np.zeros(2 * n - 1, dtype=np.int64)
    k = 0
    while (1 << k) - 1 < 2 * n - 1:
        if k < len(eps):
            vals[(1 << k) - 1] = eps[k]
        k += 1
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    return vals[i + j]


def verify_eps(eps: list[int], n: int) -> VerifyReport:
    """Conjugated factorization reproduces the sign-twisted Hankel matrix."""
    report = VerifyReport("eps", n)
    dvec = general_eps_diag(eps, n)
    got = dvec[:, None] * _five_factor(n) * dvec[None, :]
    _compare(report, got, signed_hankel(eps, n))
    return report
