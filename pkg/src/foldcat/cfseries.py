"""Formal-series and continued-fraction engine.

Truncated rational power series, sparse multivariate polynomials, 2x2
word-matrix products, the multivariate closed forms behind the folded
continued fraction, Hankel LU over the rationals, Stieltjes/Jacobi
extraction, determinant identities and the Hankel uniqueness checker.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence

from . import catalanz, gf2sign, seq
from .errors import (NoConvergenceError, NonUnitError, SingularMinorError,
                     SizeGuardError)
from .report import VerifyReport

MAX_WORD_LEN = 2 * ((1 << 12) - 1)
MAX_VARS = 6
CF_STEP_BUDGET = 10 * MAX_WORD_LEN
MAX_LU_SIZE = 64


# ---------------------------------------------------------------------------
# truncated power series over exact rationals

class TruncSeries:
    """Power series over Fractions, truncated at a fixed order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        if order is None:
            order = len(coeffs)
        cs = [Fraction(c) for c in coeffs[:order]]
        cs += [Fraction(0)] * (order - len(cs))
        self.order = order
        self.coeffs = cs

    @classmethod
    def monomial(cls, exponent: int, order: int, coefficient=1) -> "TruncSeries":
        cs = [Fraction(0)] * order
        if exponent < order:
            cs[exponent] = Fraction(coefficient)
        return cls(cs, order)

    def _check(self, other: "TruncSeries") -> None:
        if self.order != other.order:
            raise ValueError("truncation orders differ")

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncSeries) and self.order == other.order \
            and self.coeffs == other.coeffs

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)],
                           self.order)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries([a - b for a, b in zip(self.coeffs, other.coeffs)],
                           self.order)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        out = [Fraction(0)] * self.order
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(self.order - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return TruncSeries(out, self.order)

    def inverse(self) -> "TruncSeries":
        if self.coeffs[0] == 0:
            raise NonUnitError("constant term is zero")
        inv0 = 1 / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * (self.order - 1)
        for k in range(1, self.order):
            acc = Fraction(0)
            for i in range(1, k + 1):
                acc += self.coeffs[i] * out[k - i] if i < self.order else 0
            out[k] = -inv0 * acc
        return TruncSeries(out, self.order)

    def __truediv__(self, other: "TruncSeries") -> "TruncSeries":
        return self * other.inverse()

    def nonzero_exponents(self) -> list[int]:
        return [k for k, c in enumerate(self.coeffs) if c]

    def to_strings(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" if c.denominator != 1
                else str(c.numerator) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"TruncSeries({self.coeffs!r})"


def series_arith(a: TruncSeries, b: TruncSeries, op: str) -> TruncSeries:
    if op == "ADD":
        return a + b
    if op == "MUL":
        return a * b
    if op == "INV_B":
        return b.inverse()
    if op == "DIV":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def mu_series(order: int) -> TruncSeries:
    return TruncSeries([seq.mu(k) for k in range(order)], order)


def power_of_two_series(order: int) -> TruncSeries:
    """Sum of x^(2^k), truncated."""
    cs = [0] * order
    k = 0
    while (1 << k) < order:
        cs[1 << k] = 1
        k += 1
    return TruncSeries(cs, order)


# ---------------------------------------------------------------------------
# sparse multivariate polynomials with integer coefficients

class MultiPoly:
    """Polynomial in x1..x_nvars, exponent-tuple -> int coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, c: int, nvars: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, index: int, nvars: int, sign: int = 1,
            power: int = 1) -> "MultiPoly":
        e = [0] * nvars
        e[index - 1] = power
        return cls(nvars, {tuple(e): sign})

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiPoly) and self.terms == other.terms

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.nvars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self.terms!r})"


class Mat2(NamedTuple):
    """2x2 matrix over any ring with + and *."""

    a: object
    b: object
    c: object
    d: object

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                    self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def det(self):
        return self.a * self.d - self.b * self.c


def word_matrix(word: Sequence[seq.FoldLetter],
                subst: dict[int, int] | None = None) -> Mat2:
    """Product of [[0, u], [1, 1]] over the letters u of the word.

    Without subst the entries are multivariate polynomials; with subst
    each variable index is replaced by a power of a single variable x.
    """
    if len(word) > MAX_WORD_LEN:
        raise SizeGuardError(f"word longer than {MAX_WORD_LEN}")
    if subst is None:
        nvars = max((let.var_index for let in word), default=1)
        if nvars > MAX_VARS:
            raise SizeGuardError(f"more than {MAX_VARS} variables")
        letters = [MultiPoly.var(let.var_index, nvars, let.sign)
                   for let in word]
        one = MultiPoly.const(1, nvars)
        zero = MultiPoly.const(0, nvars)
    else:
        nvars = 1
        letters = [MultiPoly.var(1, 1, let.sign, subst[let.var_index])
                   for let in word]
        one = MultiPoly.const(1, 1)
        zero = MultiPoly.const(0, 1)
    out = Mat2(one, zero, zero, one)
    for u in letters:
        out = out @ Mat2(zero, u, one, one)
    return out


def x_polys(k: int) -> tuple[MultiPoly, MultiPoly]:
    """The closed-form convergent polynomials X_k and its sign-flipped twin."""
    if not 0 <= k <= MAX_VARS:
        raise SizeGuardError(f"k must be in [0, {MAX_VARS}]")
    nvars = max(k, 1)
    x = MultiPoly.const(1, nvars)
    x_t = MultiPoly.const(1, nvars)
    for j in range(1, k + 1):
        e = [0] * nvars
        for i in range(1, j + 1):
            e[i - 1] = 1 << (j - i)
        term = MultiPoly(nvars, {tuple(e): 1})
        x = x + term
        x_t = (x_t + term) if j < k else (x_t - term)
    return x, x_t


def verify_lemma5(n: int) -> VerifyReport:
    """Closed form of the word-matrix products and the convergent identity."""
    if not 1 <= n <= 5:
        raise SizeGuardError("n must be in [1, 5]")
    report = VerifyReport("lemma5", n)
    word = seq.fold_word(n)
    nvars = n
    xn, xn_t = x_polys(n)
    xprev, _ = x_polys(n - 1)
    # embed lower-variable polynomials into n variables
    def embed(p: MultiPoly) -> MultiPoly:
        return MultiPoly(nvars, {tuple(e) + (0,) * (nvars - p.nvars): c
                                 for e, c in p.terms.items()})
    xn, xn_t, xprev = embed(xn), embed(xn_t), embed(xprev)
    one = MultiPoly.const(1, nvars)
    sq = xprev * xprev
    got = word_matrix(word)
    expect = Mat2(xn_t - sq, one - xn, sq, xn)
    for pos, (g, e) in enumerate(zip(got, expect)):
        if g != e:
            report.add(pos // 2, pos % 2, e.terms, g.terms)
    got_rev = word_matrix(word[::-1])
    expect_rev = Mat2(xn - sq, one - xn_t, sq, xn_t)
    for pos, (g, e) in enumerate(zip(got_rev, expect_rev)):
        if g != e:
            report.add(pos // 2, pos % 2, e.terms, g.terms)
    # partial convergent identity: prefixing the unit numerator gives X_n
    zero = MultiPoly.const(0, nvars)
    m = Mat2(zero, one, one, one) @ got
    if m.b != xn or m.d != one:
        report.add(0, 1, xn.terms, m.b.terms)
    return report


# ---------------------------------------------------------------------------
# continued fractions with monomial numerators (integer coefficients)

def _poly_inv(q: list[int], order: int) -> list[int]:
    if not q or q[0] not in (1, -1):
        raise NonUnitError("constant term must be a unit for integer inversion")
    inv0 = q[0]
    out = [0] * order
    out[0] = inv0
    for k in range(1, order):
        acc = 0
        for i in range(1, min(k, len(q) - 1) + 1):
            acc += q[i] * out[k - i]
        out[k] = -inv0 * acc
    return out


def _poly_mul(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * order
    for i, ca in enumerate(a[:order]):
        if ca:
            for j, cb in enumerate(b[:order - i]):
                if cb:
                    out[i + j] += ca * cb
    return out


def _series_div(p: list[int], q: list[int], order: int) -> list[int]:
    return _poly_mul(p, _poly_inv(q, order), order)


def cf_limit(numerators: Iterable[tuple[int, int]], order: int,
             b0: int = 0) -> TruncSeries:
    """Limit of b0 + a1/(1 + a2/(1 + ...)) with monomial numerators.

    numerators yields (sign, exponent) pairs for a_k = sign * x^exponent
    (exponent >= 1 so the agreement order of consecutive convergents
    grows).  Stabilization is declared when two consecutive convergents
    agree to the truncation order, which is checked by explicit division.
    """
    p_prev, q_prev = [1], [0]          # index -1
    p_cur, q_cur = [b0], [1]           # index 0
    expsum = 0
    steps = 0
    for sign, exp in numerators:
        if exp < 1:
            raise ValueError("numerator exponents must be >= 1")
        steps += 1
        if steps > CF_STEP_BUDGET:
            break
        p_new = [0] * min(max(len(p_cur), len(p_prev) + exp), order)
        q_new = [0] * min(max(len(q_cur), len(q_prev) + exp), order)
        for arr, cur, prev in ((p_new, p_cur, p_prev), (q_new, q_cur, q_prev)):
            for k, c in enumerate(cur[:order]):
                arr[k] += c
            for k, c in enumerate(prev):
                if k + exp < order:
                    arr[k + exp] += sign * c
        p_prev, q_prev, p_cur, q_cur = p_cur, q_cur, p_new, q_new
        expsum += exp
        if expsum >= order:
            cur = _series_div(p_cur, q_cur, order)
            prev = _series_div(p_prev, q_prev, order)
            if cur == prev:
                return TruncSeries(cur, order)
    raise NoConvergenceError(
        f"no stabilization to order {order} within {steps} steps")


def _example_exponent(example: int, var_index: int) -> int:
    if example == 1:
        return 1
    if example == 2:
        return 1 + 3 ** (var_index - 1)
    if example == 3:
        import math
        return 1 + (var_index - 1) * math.factorial(var_index)
    raise ValueError("example must be 1, 2 or 3")


def example_numerators(example: int) -> Iterator[tuple[int, int]]:
    """a_1 = x, then the folded word letters under the example substitution."""
    yield (1, 1)
    for n in itertools.count(1):
        var, sign = seq.fold_stream(n)
        yield (sign, _example_exponent(example, var))


def cf_limit_example(example: int, order: int) -> TruncSeries:
    return cf_limit(example_numerators(example), order)


def jacobi_series(a: Sequence, b: Sequence, order: int,
                  depth: int | None = None) -> TruncSeries:
    """Series of the Jacobi fraction 1/(1 - a0 x - b1 x^2/(1 - a1 x - ...)).

    a = (a0, a1, ...), b = (b1, b2, ...); the convergent of the given
    depth (default len(a)) is expanded to the truncation order.
    """
    if depth is None:
        depth = len(a)
    if depth < 1 or depth > len(a) or depth - 1 > len(b):
        raise ValueError("depth out of range for the given coefficients")
    p_prev, q_prev = TruncSeries([1], order), TruncSeries([0], order)
    p_cur, q_cur = TruncSeries([0], order), TruncSeries([1], order)
    for k in range(depth):
        den = TruncSeries([1, -Fraction(a[k])], order)
        num = TruncSeries([0, 0, -Fraction(b[k - 1])], order) if k >= 1 \
            else TruncSeries([1], order)
        p_cur, p_prev = den * p_cur + num * p_prev, p_cur
        q_cur, q_prev = den * q_cur + num * q_prev, q_cur
    return p_cur / q_cur


# ---------------------------------------------------------------------------
# moment functionals, Hankel LU, Stieltjes extraction

class MomentFunctional:
    """Linear form with <x^i, x^j> = moments(i + j)."""

    def __init__(self, moments: Callable[[int], object], name: str = ""):
        self._moments = moments
        self.name = name

    def __call__(self, k: int):
        return self._moments(k)

    def pair(self, p: Sequence, q: Sequence):
        """<P, Q> for coefficient sequences P, Q."""
        acc = 0
        for i, a in enumerate(p):
            if a:
                for j, b in enumerate(q):
                    if b:
                        acc += a * b * self._moments(i + j)
        return acc


def mu_moments() -> MomentFunctional:
    return MomentFunctional(seq.mu, "mu")


def mu_shifted_moments() -> MomentFunctional:
    return MomentFunctional(lambda k: seq.mu(k + 1), "mu-shift")


def catalan_moments() -> MomentFunctional:
    return MomentFunctional(catalanz.catalan, "catalan")


def hankel_lu_rational(moments: MomentFunctional,
                       n: int) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Exact L D L^t factorization of the n-th Hankel matrix.

    Returns unipotent lower-triangular L (dense row lists) and the
    diagonal D; raises SingularMinorError on a vanishing leading minor.
    """
    if not 1 <= n <= MAX_LU_SIZE:
        raise SizeGuardError(f"size must be in [1, {MAX_LU_SIZE}]")
    h = [[Fraction(moments(i + j)) for j in range(n)] for i in range(n)]
    low = [[Fraction(0)] * n for _ in range(n)]
    diag: list[Fraction] = []
    for j in range(n):
        dj = h[j][j] - sum(low[j][k] * low[j][k] * diag[k] for k in range(j))
        if dj == 0:
            raise SingularMinorError(j)
        diag.append(dj)
        low[j][j] = Fraction(1)
        for i in range(j + 1, n):
            v = h[i][j] - sum(low[i][k] * low[j][k] * diag[k] for k in range(j))
            low[i][j] = v / dj
    return low, diag


class JacobiCF(NamedTuple):
    a: list[Fraction]
    b: list[Fraction]


def stieltjes_extract(moments: MomentFunctional, n: int) -> JacobiCF:
    """Three-term recursion coefficients from the Hankel LU factor.

    Solves L S = L_minus (L with its first row removed) for the
    tridiagonal matrix S with unit superdiagonal; also validates
    det H(n) == prod b_k^(n-k) against the LU diagonal.
    """
    if not 1 <= n <= MAX_LU_SIZE:
        raise SizeGuardError(f"size must be in [1, {MAX_LU_SIZE}]")
    low, diag = hankel_lu_rational(moments, n + 1)
    # S = L(n)^{-1} L_minus(n) by forward substitution, column by column
    s = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        for i in range(n):
            v = low[i + 1][j] - sum(low[i][k] * s[k][j] for k in range(i))
            s[i][j] = v
    # structural checks: unit superdiagonal, zero beyond the tridiagonal band
    for i in range(n):
        for j in range(n):
            if j == i + 1:
                assert s[i][j] == 1, "superdiagonal of the Stieltjes matrix"
            elif j > i + 1 or j < i - 1:
                assert s[i][j] == 0, "Stieltjes matrix must be tridiagonal"
    a = [s[i][i] for i in range(n)]
    b = [s[i][i - 1] for i in range(1, n)]
    det_lu = Fraction(1)
    for k in range(n):
        det_lu *= diag[k]
    det_cf = Fraction(1)
    for k in range(1, n):
        det_cf *= b[k - 1] ** (n - k)
    assert det_lu == det_cf, "det H(n) must equal prod b_k^(n-k)"
    return JacobiCF(a, b)


def verify_thm4(n: int) -> VerifyReport:
    """Jacobi coefficients of the mu moments: a matches d, b is -1."""
    report = VerifyReport("thm4", n)
    cf = stieltjes_extract(mu_moments(), n)
    for k in range(1, n + 1):
        if cf.a[k - 1] != seq.d(k):
            report.add(k - 1, k - 1, seq.d(k), cf.a[k - 1])
    for k in range(1, n):
        if cf.b[k - 1] != -1:
            report.add(k, k - 1, -1, cf.b[k - 1])
    # det S(k) via the three-term recursion equals s(k)
    det_prev2, det_prev = 1, cf.a[0]
    if det_prev != seq.s(1):
        report.add(0, 0, seq.s(1), det_prev)
    for k in range(2, n + 1):
        det_k = seq.d(k) * det_prev + det_prev2
        if det_k != seq.s(k):
            report.add(k - 1, k - 1, seq.s(k), det_k)
        det_prev2, det_prev = det_prev, det_k
    return report


def det_int(mat: list[list[int]]) -> int:
    """Exact determinant of an integer matrix (Bareiss with row pivoting)."""
    a = [row[:] for row in mat]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def hankel_det(moments: MomentFunctional, n: int) -> int:
    return det_int([[moments(i + j) for j in range(n)] for i in range(n)])


def verify_det_identities(n_max: int) -> VerifyReport:
    """det H(n) of the mu Hankel: sign formula and the mirror symmetry."""
    report = VerifyReport("dets", n_max)
    moments = mu_moments()
    dets = {n: hankel_det(moments, n) for n in range(1, n_max + 1)}
    for n, val in dets.items():
        want = (-1) ** (n * (n - 1) // 2)
        if val != want:
            report.add(n, 0, want, val)
    if n_max >= 2 and dets[2] != -1:
        report.add(2, 0, -1, dets[2])
    k = 1
    while (1 << k) <= n_max:
        p = 1 << k
        for a in range(0, p):
            if p + a > n_max or p - a < 1:
                continue
            lhs = dets[p + a]
            rhs = (-1) ** a * dets[p - a]
            if lhs != rhs:
                report.add(p + a, p - a, rhs, lhs)
        k += 1
    return report


def orth_polys(n: int) -> list[list[int]]:
    """Coefficient rows of the formal orthogonal polynomials for mu.

    Row i comes from the signed inverse D_s D_a M D_a D_s; verifies the
    pairwise orthogonality, nonzero norms and the three-term recursion
    Q_{k+1} = (x - d(k+1)) Q_k + Q_{k-1} with Q_0 = 1, Q_1 = x - 1.
    """
    if not 1 <= n <= MAX_LU_SIZE:
        raise SizeGuardError(f"size must be in [1, {MAX_LU_SIZE}]")
    mmat = gf2sign.build_tri(gf2sign.M, n)
    rows = []
    for i in range(n):
        si = seq.s(i) * (-1) ** (i % 2)
        row = [si * int(mmat[i, k]) * seq.s(k) * (-1) ** (k % 2)
               for k in range(i + 1)]
        rows.append(row)
    functional = mu_moments()
    for i in range(n):
        for j in range(i + 1):
            pairing = functional.pair(rows[i], rows[j])
            if i == j:
                assert pairing != 0, "orthogonal polynomial with zero norm"
            else:
                assert pairing == 0, f"rows {i} and {j} not orthogonal"
    for i in range(2, n):
        prev, cur = rows[i - 2], rows[i - 1]
        dn = seq.d(i)
        want = [0] * (i + 1)
        for k, c in enumerate(cur):
            want[k + 1] += c
            want[k] -= dn * c
        for k, c in enumerate(prev):
            want[k] += c
        assert want == rows[i], f"three-term recursion fails at {i}"
    return rows


# ---------------------------------------------------------------------------
# uniqueness of the power-of-two sign pattern

class UniquenessResult(NamedTuple):
    ok: bool
    eps: list[int] | None
    fail_index: int | None
    which: str | None


def uniqueness_check(c: Sequence[int]) -> UniquenessResult:
    """Hankel/shifted-Hankel determinant test and pattern recovery.

    If every computable det is +-1, recovers eps_k = c[2^k - 1] and
    requires every other entry to vanish; otherwise reports the first
    violated determinant or off-pattern entry.
    """
    if len(c) < 2:
        raise ValueError("need at least two terms")
    if any(v not in (-1, 0, 1) for v in c):
        raise ValueError("entries must lie in {-1, 0, +1}")
    length = len(c)
    for n in range(1, (length + 1) // 2 + 1):
        det = det_int([[c[i + j] for j in range(n)] for i in range(n)])
        if det not in (-1, 1):
            return UniquenessResult(False, None, n, "hankel")
    for n in range(1, length // 2 + 1):
        det = det_int([[c[i + j + 1] for j in range(n)] for i in range(n)])
        if det not in (-1, 1):
            return UniquenessResult(False, None, n, "shifted-hankel")
    eps = []
    for m, v in enumerate(c):
        if (m + 1) & m == 0:  # m = 2^k - 1
            eps.append(v)
        elif v != 0:
            return UniquenessResult(False, None, m, "pattern")
    return UniquenessResult(True, eps, None, None)


def uniqueness_search(length: int) -> list[tuple[int, ...]]:
    """All length-n sequences over {-1,0,1} passing the determinant test.

    Depth-first enumeration with pruning: each new entry completes at
    most one new Hankel or shifted-Hankel determinant, which is checked
    immediately.  Every survivor is asserted to match the +-power-of-two
    pattern via uniqueness_check.
    """
    if not 2 <= length <= 10:
        raise SizeGuardError("length must be in [2, 10]")
    survivors: list[tuple[int, ...]] = []

    def newly_complete(prefix: list[int]) -> bool:
        m = len(prefix) - 1  # index just placed
        if m % 2 == 0:
            n = m // 2 + 1
            det = det_int([[prefix[i + j] for j in range(n)] for i in range(n)])
        else:
            n = (m + 1) // 2
            det = det_int([[prefix[i + j + 1] for j in range(n)]
                           for i in range(n)])
        return det in (-1, 1)

    def descend(prefix: list[int]) -> None:
        if len(prefix) == length:
            survivors.append(tuple(prefix))
            return
        for v in (-1, 0, 1):
            prefix.append(v)
            if newly_complete(prefix):
                descend(prefix)
            prefix.pop()

    descend([])
    for cand in survivors:
        result = uniqueness_check(cand)
        assert result.ok, f"survivor {cand} fails the pattern check"
    return survivors


# ---------------------------------------------------------------------------
# bundled verifications used by the CLI

def verify_thm1(orders: tuple[int, int, int] = (600, 250, 750)) -> VerifyReport:
    """Examples 1-3: the folded fraction reproduces its sparse series."""
    report = VerifyReport("thm1", max(orders))
    targets = [
        lambda t: power_of_two_series(t),
        lambda t: _sparse_series(t, lambda k: 3 ** k),
        lambda t: _sparse_series(t, _factorial_stream),
    ]
    for example, (order, target) in enumerate(zip(orders, targets), start=1):
        got = cf_limit_example(example, order)
        want = target(order)
        if got != want:
            report.add(example, 0, want.nonzero_exponents(),
                       got.nonzero_exponents())
    return report


def _factorial_stream(k: int) -> int:
    import math
    return math.factorial(k + 1)


def _sparse_series(order: int, exponent: Callable[[int], int]) -> TruncSeries:
    cs = [0] * order
    k = 0
    while exponent(k) < order:
        cs[exponent(k)] = 1
        k += 1
    return TruncSeries(cs, order)
