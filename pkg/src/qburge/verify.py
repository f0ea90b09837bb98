"""Identity catalogue, verification campaigns, positivity scanning, and the
brute-force partition oracle.

Every catalogue case computes its two sides independently and compares them
exactly (polynomial equality, or series equality to the requested order).
Product sides of series cases are themselves computed two independent ways
(factor expansion vs. triple-product sum) and must agree before use.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from .qpoly import (LaurentPoly, TruncatedSeries, first_poly_difference,
                    first_series_difference)
from .qcombinat import qbin, q_poch, b_kernel, g_poly, d_poly, borwein_split
from .cf import bar_pair, cf_expand
from .fermionic import (eval_F, eval_f, eval_H, eval_I, eval_limit_M,
                        eval_limit_L, eval_limit_both)
from .burge import (bosonic_eval, spec_main, spec_recip, spec_even,
                    spec_shifted, tree_walk, BosonicSpec)


# ---------------------------------------------------------------------------
# report types

@dataclass(frozen=True)
class IdentityCase:
    id: str
    kind: str               # polynomial | truncated-series | positivity
    description: str
    param_domain: str
    sides: object = field(compare=False)   # params dict -> (lhs, rhs)


@dataclass
class VerifyReport:
    case: str
    params: dict
    status: str             # pass | fail
    first_diff_exponent: int = None
    lhs_coeff: int = None
    rhs_coeff: int = None
    elapsed_ms: float = 0.0

    def key(self):
        return (self.case, tuple(sorted(self.params.items())))


@dataclass
class PositivityReport:
    case: str
    params: dict
    nonneg: bool
    first_negative: tuple = None   # (exponent, coefficient)


def positivity_scan(p, case="", params=None):
    """Report the first negative coefficient of a Laurent polynomial, if any."""
    neg = p.min_negative()
    return PositivityReport(case, dict(params or {}), neg is None, neg)


# ---------------------------------------------------------------------------
# product-side series, computed two independent ways

def _jtp_series(x, z, order):
    """(q^x, q^(z-x), q^z; q^z)_inf via the triple-product sum
    sum_j (-1)^j q^(x j + z j(j-1)/2), truncated."""
    s = TruncatedSeries(order)
    j = 0
    while x * j + z * j * (j - 1) // 2 <= order:
        s.coeffs[x * j + z * j * (j - 1) // 2] += -1 if j % 2 else 1
        j += 1
    j = -1
    while x * j + z * j * (j - 1) // 2 <= order:
        s.coeffs[x * j + z * j * (j - 1) // 2] += -1 if (-j) % 2 else 1
        j -= 1
    return s


def product_series(x, y, z, order):
    """(q^x, q^y, q^z; q^z)_inf / (q)_inf with y = z - x, cross-checked."""
    if y != z - x:
        raise ValueError("product_series expects y = z - x")
    factors = []
    for n in range(0, order // z + 1):
        for e in (x + n * z, y + n * z, z + n * z):
            if e <= order:
                factors.append((e, 1))
    factors.extend((e, -1) for e in range(1, order + 1))
    via_factors = TruncatedSeries.from_factors(factors, order)
    via_jtp = _jtp_series(x, z, order)
    for e in range(1, order + 1):
        via_jtp = via_jtp.div_one_minus(e)
    d = first_series_difference(via_factors, via_jtp)
    if d is not None:
        raise AssertionError(f"product-side self-check failed at q^{d}")
    return via_factors


# ---------------------------------------------------------------------------
# partition oracle

def _partitions_in_box(N, M):
    """All partitions with at most M parts, each part at most N."""
    def rec(maxpart, slots, prefix):
        yield prefix
        if slots == 0:
            return
        for p in range(min(maxpart, N), 0, -1):
            yield from rec(p, slots - 1, prefix + [p])
    yield from rec(N, M, [])


def _conjugate(lam):
    if not lam:
        return []
    return [sum(1 for p in lam if p >= c) for c in range(1, lam[0] + 1)]


def partition_oracle(K, i, N, M, alpha, beta):
    """Generating function of partitions in the N x M box whose hook
    differences are >= beta-i+1 on diagonal 1-beta and <= K-alpha-i-1 on
    diagonal alpha-1.  Exhaustive enumeration; integer alpha,beta >= 1 only.
    """
    if alpha < 1 or beta < 1:
        raise ValueError("oracle requires integer alpha, beta >= 1")
    if not (beta - i <= N - M <= K - alpha - i):
        raise ValueError(f"(K={K},i={i},N={N},M={M}) outside beta-i <= N-M <= K-alpha-i")
    lo = beta - i + 1
    hi = K - alpha - i - 1
    counts = {}
    for lam in _partitions_in_box(N, M):
        conj = _conjugate(lam)
        ok = True
        for r, part in enumerate(lam, start=1):
            # node on diagonal 1-beta: (r, r+beta-1)
            c = r + beta - 1
            if 1 <= c <= part and part - conj[c - 1] < lo:
                ok = False
                break
            # node on diagonal alpha-1: (r, r-alpha+1)
            c = r - alpha + 1
            if 1 <= c <= part and part - conj[c - 1] > hi:
                ok = False
                break
        if ok:
            w = sum(lam)
            counts[w] = counts.get(w, 0) + 1
    return LaurentPoly(counts)


# ---------------------------------------------------------------------------
# explicit sum sides used as independent transcription oracles

def _sum_bnewp(L, M):
    tot = LaurentPoly.zero()
    for n in range(0, min(L, M) + 1):
        tot = tot + (qbin(2 * L + M - n, 2 * L) * qbin(L, n)).scale(n * n)
    return tot


def _sum_bnewp2(L, M):
    tot = LaurentPoly.zero()
    for n in range(0, L + 1):
        t = qbin(2 * L + M - n - 1, 2 * L - 1) * qbin(L - 1, n)
        if not t.is_zero():
            tot = tot + t.scale(n * n)
    return tot


def _sum_comp(L, M, shift=0):
    # shift=0: right side of the n(n+1) companion; shift=1: its +1 variant
    tot = LaurentPoly.zero()
    for n in range(0, L + 1):
        t = qbin(2 * L + M - n + shift, 2 * L + 1) * qbin(L, n)
        if not t.is_zero():
            tot = tot + t.scale(n * (n + 1))
    return tot


def _qbin_altsum(L, M, term):
    """sum over j of term(j) where term returns (exponent, poly) or None."""
    tot = LaurentPoly.zero()
    for j in range(-(L + M) - 2, L + M + 3):
        r = term(j)
        if r is None:
            continue
        e, p = r
        if not p.is_zero():
            tot = tot + p.scale(e, -1 if j % 2 else 1)
    return tot


def _lhs_comp(L, M):
    return _qbin_altsum(L, M, lambda j: (
        j * (5 * j + 3) // 2,
        qbin(L + M + j, M - j - 1) * qbin(L + M - j, M + j))
        if (j * (5 * j + 3)) % 2 == 0 else None)


def _lhs_comp2(L, M):
    return _qbin_altsum(L, M, lambda j: (
        j * (5 * j + 3) // 2,
        qbin(L + M + j + 1, M - j) * qbin(L + M - j, M + j)))


def _lhs_brep(L, M):
    return _qbin_altsum(L, M, lambda j: (
        j * (5 * j + 1) // 2,
        qbin(L + M + j, M - j) * qbin(L + M - j - 1, M + j)))


def _lhs_rr1(L):
    return _qbin_altsum(L, L, lambda j: (j * (5 * j + 1) // 2, qbin(2 * L, L - 3 * j)))


def _rhs_rr1(L):
    tot = LaurentPoly.zero()
    for n in range(0, L + 1):
        for i in range(0, L - n + 1):
            t = qbin(2 * L - 2 * i - n, n) * qbin(L - i - n, i)
            if not t.is_zero():
                tot = tot + t.scale(n * n + i * (L + n))
    return tot


def _lhs_rr2(L):
    return _qbin_altsum(L, L, lambda j: (j * (5 * j + 3) // 2, qbin(2 * L, L - 3 * j - 1)))


def _rhs_rr2(L):
    tot = LaurentPoly.zero()
    for n in range(0, L + 1):
        for i in range(0, L + 1):
            t = qbin(2 * L - 2 * i - n - 1, n) * qbin(L - i - n - 1, i)
            if not t.is_zero():
                tot = tot + t.scale(n * (n + 1) + i * (L + n + 1))
    return tot


def _rhs_f31_display(L, M):
    # (3,1) double sum: second doubly-bounded first-Rogers-Ramanujan analogue
    tot = LaurentPoly.zero()
    for n in range(0, L + 1):
        for i in range(0, L - n + 1):
            t = (qbin(2 * L + M - n - i, 2 * L) * qbin(2 * L - 2 * i - n, n)
                 * qbin(L - i - n, i))
            if not t.is_zero():
                tot = tot + t.scale(n * n + i * (L + n))
    return tot


def _rhs_ab32_display(L, M):
    tot = LaurentPoly.zero()
    for i in range(0, min(L, M) + 1):
        for n in range(0, i + 1):
            t = (qbin(2 * L + M - i, 2 * L) * qbin(L + i - n - 1, 2 * i - 1)
                 * qbin(i - 1, n))
            if not t.is_zero():
                tot = tot + t.scale(i * i + n * n)
    return tot


def _lhs_ab32(L, M):
    return _qbin_altsum(L, M, lambda j: (
        j * (13 * j + 9) // 2 + 1,
        b_kernel(L, M, 3 * j + 1, 2 * j + 1)))


def _lhs_rr2inv(L, M):
    return _qbin_altsum(L, M, lambda j: (
        j * (7 * j + 1) // 2,
        b_kernel(L, M, 3 * j + 1, j)))


def _rhs_rr2inv_display(L, M):
    tot = LaurentPoly.zero()
    for m1 in range(0, L + 1):
        for m2 in range(0, m1 + 1):
            t = (qbin(L + M + m1, 2 * L) * qbin(L + m2, 2 * m1 - 1)
                 * qbin(m1 - 1, m2))
            if not t.is_zero():
                tot = tot + t.scale((L - m1) ** 2 + (m1 - m2 - 1) ** 2)
    return tot


def _lhs_isolated(L):
    return _qbin_altsum(L, L, lambda j: (j * (5 * j + 3) // 2, qbin(2 * L + 1, L - 2 * j)))


def _rhs_isolated(L):
    tot = LaurentPoly.zero()
    for n in range(0, L + 1):
        tot = tot + qbin(L, n).scale(n * (n + 1))
    return tot


# explicit quadruple-sum transcriptions of the two on-going-example displays

def _series_display75(T, barred):
    tot = TruncatedSeries(T)
    r = isqrt(T) + 1
    for m1 in range(0, r + 1):
        for m2 in range(0, m1 + r + 1):
            for m3 in range(0, r + 1):
                for m4 in range(0, m3 + 1):
                    e = m1 * m1 + (m1 - m2) ** 2 + m3 * m3
                    e += m3 * m4 if barred else m4 * m4
                    if e > T:
                        continue
                    p = (qbin(m1 + m2 - m3, 2 * m2) * qbin(m2 + m3 - m4, 2 * m3)
                         * qbin(m3, m4))
                    if p.is_zero():
                        continue
                    s = TruncatedSeries.from_poly(p.scale(e), T)
                    for k in range(1, 2 * m1 + 1):
                        if k <= T:
                            s = s.div_one_minus(k)
                    tot = tot + s
    return tot


def _series_display72(T, barred):
    tot = TruncatedSeries(T)
    r = isqrt(T) + 1
    for n1 in range(0, r + 1):
        for n2 in range(0, r + 1):
            for m3 in range(0, r + 1):
                for m4 in range(0, m3 + 1):
                    e = (n1 + n2 + m3) ** 2 + (n2 + m3) ** 2 + m3 * m3
                    e += m3 * m4 if barred else m4 * m4
                    if e > T:
                        continue
                    p = qbin(m3, m4)
                    if p.is_zero():
                        continue
                    s = TruncatedSeries.from_poly(p.scale(e), T)
                    for k in list(range(1, n1 + 1)) + list(range(1, n2 + 1)) \
                            + list(range(1, 2 * m3 + 1)):
                        if k <= T:
                            s = s.div_one_minus(k)
                    tot = tot + s
    return tot


def _series_agid(k, T):
    # (k-1)-fold sum with exponent N_1^2+...+N_{k-1}^2 over 1/(q)_{n_j}
    tot = TruncatedSeries(T)
    r = isqrt(T) + 1

    def rec(j, ns):
        nonlocal tot
        if j == k - 1:
            big_n = 0
            e = 0
            for n in reversed(ns):
                big_n += n
                e += big_n * big_n
            if e > T:
                return
            s = TruncatedSeries(T)
            s.coeffs[e] = 1
            for n in ns:
                for kk in range(1, n + 1):
                    if kk <= T:
                        s = s.div_one_minus(kk)
            tot = tot + s
            return
        for n in range(0, r + 1):
            if sum(ns) + n > r:
                break
            rec(j + 1, ns + [n])

    rec(0, [])
    return tot


# ---------------------------------------------------------------------------
# the catalogue

CATALOGUE = {}


def _register(id, kind, description, domain):
    def deco(fn):
        CATALOGUE[id] = IdentityCase(id, kind, description, domain, fn)
        return fn
    return deco


def _pairs(a_max, a_min=2):
    return [(a, b) for a in range(a_min, a_max + 1)
            for b in range(1, a) if gcd(a, b) == 1]


@_register("main", "polynomial",
           "alternating kernel sum with j((2ab+1)j+1)/2 equals the F lattice sum",
           "(a,b) coprime, L,M >= 0")
def _case_main(p):
    a, b, L, M = p["a"], p["b"], p["L"], p["M"]
    return bosonic_eval(spec_main(a, b), L, M), eval_F(a, b, L, M)


@_register("main_tree", "polynomial",
           "transform-tree recursion reproduces the F lattice sum",
           "(a,b) coprime, L,M >= 0")
def _case_main_tree(p):
    a, b, L, M = p["a"], p["b"], p["L"], p["M"]
    return tree_walk(a, b, "F", L, M), eval_F(a, b, L, M)


@_register("recip", "polynomial",
           "alternating kernel sum with j((2ab-1)j+1)/2 equals the f lattice sum",
           "(a,b) coprime, L,M >= 0")
def _case_recip(p):
    a, b, L, M = p["a"], p["b"], p["L"], p["M"]
    return bosonic_eval(spec_recip(a, b), L, M), eval_f(a, b, L, M)


@_register("shifted", "polynomial",
           "bar-shifted alternating kernel sum equals the H lattice sum",
           "(a,b) coprime, (2,1) excluded, L,M >= 0")
def _case_shifted(p):
    a, b, L, M = p["a"], p["b"], p["L"], p["M"]
    return bosonic_eval(spec_shifted(a, b), L, M), eval_H(a, b, L, M)


@_register("shifted_tree", "polynomial",
           "transform-tree recursion reproduces the H lattice sum",
           "(a,b) coprime, (2,1) excluded, L,M >= 0")
def _case_shifted_tree(p):
    a, b, L, M = p["a"], p["b"], p["L"], p["M"]
    return tree_walk(a, b, "H", L, M), eval_H(a, b, L, M)


@_register("even", "polynomial",
           "alternating kernel sum with exponent ab j^2 equals the I lattice sum",
           "(a,b) coprime, L,M >= 0")
def _case_even(p):
    a, b, L, M = p["a"], p["b"], p["L"], p["M"]
    return bosonic_eval(spec_even(a, b), L, M), eval_I(a, b, L, M)


@_register("even_tree", "polynomial",
           "transform-tree recursion reproduces the I lattice sum",
           "(a,b) coprime, L,M >= 0")
def _case_even_tree(p):
    a, b, L, M = p["a"], p["b"], p["L"], p["M"]
    return tree_walk(a, b, "I", L, M), eval_I(a, b, L, M)


@_register("bnew", "polynomial",
           "seed lemma: kernel sum with j(3j+1)/2 equals a single binomial",
           "L,M >= 0")
def _case_bnew(p):
    L, M = p["L"], p["M"]
    return bosonic_eval(BosonicSpec(1, 1, c2=Fraction(3, 2), c1=Fraction(1, 2)), L, M), \
        qbin(L + M, M)


@_register("bnewp", "polynomial",
           "doubly-bounded first Rogers-Ramanujan analogue", "L,M >= 0")
def _case_bnewp(p):
    L, M = p["L"], p["M"]
    return bosonic_eval(spec_main(2, 1), L, M), _sum_bnewp(L, M)


@_register("bnewp2", "polynomial",
           "shifted-kernel doubly-bounded first Rogers-Ramanujan analogue",
           "L,M >= 0")
def _case_bnewp2(p):
    L, M = p["L"], p["M"]
    lhs = bosonic_eval(BosonicSpec(2, 1, abar=1, bbar=0,
                                   c2=Fraction(5, 2), c1=Fraction(1, 2)), L, M)
    return lhs, _sum_bnewp2(L, M)


@_register("brep", "polynomial",
           "binomial-kernel companion of the shifted doubly-bounded analogue",
           "L,M >= 0")
def _case_brep(p):
    L, M = p["L"], p["M"]
    return _lhs_brep(L, M), _sum_bnewp2(L, M)


@_register("comp", "polynomial",
           "n(n+1) companion with off-kernel binomial product", "L,M >= 0")
def _case_comp(p):
    L, M = p["L"], p["M"]
    return _lhs_comp(L, M), _sum_comp(L, M, 0)


@_register("comp2", "polynomial",
           "second n(n+1) companion", "L,M >= 0")
def _case_comp2(p):
    L, M = p["L"], p["M"]
    return _lhs_comp2(L, M), _sum_comp(L, M, 1)


@_register("comp_sum", "polynomial",
           "comp2 equals comp plus q^M times the doubly-bounded analogue",
           "L,M >= 0")
def _case_comp_sum(p):
    L, M = p["L"], p["M"]
    lhs = _lhs_comp2(L, M)
    rhs = _lhs_comp(L, M) + bosonic_eval(spec_main(2, 1), L, M).scale(M)
    return lhs, rhs


@_register("isolated", "polynomial",
           "large-M limit of the n(n+1) companion", "L >= 0")
def _case_isolated(p):
    L = p["L"]
    return _lhs_isolated(L), _rhs_isolated(L)


@_register("rr1", "polynomial",
           "single-binomial bosonic sum vs (n,i) double sum, j(5j+1)/2", "L >= 0")
def _case_rr1(p):
    return _lhs_rr1(p["L"]), _rhs_rr1(p["L"])


@_register("rr2", "polynomial",
           "single-binomial bosonic sum vs (n,i) double sum, j(5j+3)/2", "L >= 0")
def _case_rr2(p):
    return _lhs_rr2(p["L"]), _rhs_rr2(p["L"])


@_register("f31_display", "polynomial",
           "(3,1) barred lattice sum equals its explicit (n,i) double-sum form",
           "L,M >= 0")
def _case_f31(p):
    L, M = p["L"], p["M"]
    return eval_f(3, 1, L, M), _rhs_f31_display(L, M)


@_register("ab32", "polynomial",
           "(3,2) shifted kernel sum vs explicit (i,n) double sum", "L,M >= 0")
def _case_ab32(p):
    L, M = p["L"], p["M"]
    return _lhs_ab32(L, M), _rhs_ab32_display(L, M)


@_register("rr2inv", "polynomial",
           "(3,1) shifted kernel sum vs explicit (m1,m2) double sum", "L,M >= 0")
def _case_rr2inv(p):
    L, M = p["L"], p["M"]
    return _lhs_rr2inv(L, M), _rhs_rr2inv_display(L, M)


@_register("g_eq_limF", "polynomial",
           "G(L,L;b,b+1/a,a) equals the large-M limit polynomial of F",
           "(a,b) coprime, L >= 0")
def _case_g_limF(p):
    a, b, L = p["a"], p["b"], p["L"]
    return g_poly(L, L, Fraction(b), Fraction(a * b + 1, a), a), \
        eval_limit_M("F", a, b, L)


@_register("g_eq_limFt", "polynomial",
           "G(M,M;a,a+1/b,b) equals the large-L limit polynomial of F",
           "(a,b) coprime, M >= 0")
def _case_g_limFt(p):
    a, b, M = p["a"], p["b"], p["M"]
    return g_poly(M, M, Fraction(a), Fraction(a * b + 1, b), b), \
        eval_limit_L("F", a, b, M)


@_register("g_eq_limf", "polynomial",
           "G(L,L;b-1/a,b,a) equals the large-M limit polynomial of f",
           "(a,b) coprime, L >= 0")
def _case_g_limf(p):
    a, b, L = p["a"], p["b"], p["L"]
    return g_poly(L, L, Fraction(a * b - 1, a), Fraction(b), a), \
        eval_limit_M("f", a, b, L)


@_register("g_eq_limft", "polynomial",
           "G(M,M;a-1/b,a,b) equals the large-L limit polynomial of f",
           "(a,b) coprime, M >= 0")
def _case_g_limft(p):
    a, b, M = p["a"], p["b"], p["M"]
    return g_poly(M, M, Fraction(a * b - 1, b), Fraction(a), b), \
        eval_limit_L("f", a, b, M)


@_register("series_F", "truncated-series",
           "F-family double limit equals the modulus-(2ab+1) triple product",
           "(a,b) coprime, order T")
def _case_series_F(p):
    a, b, T = p["a"], p["b"], p["T"]
    return eval_limit_both("F", a, b, T), \
        product_series(a * b, a * b + 1, 2 * a * b + 1, T)


@_register("series_f", "truncated-series",
           "f-family double limit equals the modulus-(2ab-1) triple product",
           "(a,b) coprime, b > 1, order T")
def _case_series_f(p):
    a, b, T = p["a"], p["b"], p["T"]
    return eval_limit_both("f", a, b, T), \
        product_series(a * b - 1, a * b, 2 * a * b - 1, T)


@_register("series_I", "truncated-series",
           "I-family double limit equals the modulus-2ab triple product",
           "(a,b) coprime, order T")
def _case_series_I(p):
    a, b, T = p["a"], p["b"], p["T"]
    return eval_limit_both("I", a, b, T), \
        product_series(a * b, a * b, 2 * a * b, T)


@_register("series_agid", "truncated-series",
           "(k-1)-fold multisum display equals the modulus-(2k+1) product",
           "k >= 2, order T")
def _case_series_agid(p):
    k, T = p["k"], p["T"]
    return _series_agid(k, T), product_series(k, k + 1, 2 * k + 1, T)


@_register("series_display75F", "truncated-series",
           "explicit (7,5) quadruple-sum display, modulus 71", "order T")
def _case_series_75F(p):
    T = p["T"]
    return _series_display75(T, barred=False), product_series(35, 36, 71, T)


@_register("series_display72F", "truncated-series",
           "explicit (7,2) quadruple-sum display, modulus 29", "order T")
def _case_series_72F(p):
    T = p["T"]
    return _series_display72(T, barred=False), product_series(14, 15, 29, T)


@_register("series_display75f", "truncated-series",
           "explicit (7,5) quadruple-sum display, modulus 69", "order T")
def _case_series_75f(p):
    T = p["T"]
    return _series_display75(T, barred=True), product_series(34, 35, 69, T)


@_register("series_display72f", "truncated-series",
           "explicit (7,2) quadruple-sum display, modulus 27", "order T")
def _case_series_72f(p):
    T = p["T"]
    return _series_display72(T, barred=True), product_series(13, 14, 27, T)


@_register("hookp", "polynomial",
           "two-part alternating sum equals the hook-difference partition count",
           "K >= 1, integer alpha,beta >= 1, beta-i <= N-M <= K-alpha-i")
def _case_hookp(p):
    K, i, N, M, alpha, beta = p["K"], p["i"], p["N"], p["M"], p["alpha"], p["beta"]
    return d_poly(K, i, N, M, Fraction(alpha), Fraction(beta)), \
        partition_oracle(K, i, N, M, alpha, beta)


_SECTION8 = [
    # (id-suffix, alpha, beta, K, rhs)
    ("a1", Fraction(1, 2), Fraction(1), 2,
     lambda n: sum((qbin(n, m).scale(m * n) for m in range(n + 1)),
                   LaurentPoly.zero())),
    ("a2", Fraction(3, 3), Fraction(4, 3), 3, None),   # rhs below (double sum)
    ("a3", Fraction(5, 4), Fraction(6, 4), 4, None),
    ("b1", Fraction(2, 2), Fraction(3, 2), 2,
     lambda n: sum((qbin(n, m).scale(m * m) for m in range(n + 1)),
                   LaurentPoly.zero())),
    ("b3", Fraction(6, 4), Fraction(7, 4), 4, None),
]


def _s8_a2(n):
    tot = LaurentPoly.zero()
    for m1 in range(0, 2 * n + 2):
        for m2 in range(0, m1 + 1):
            t = qbin(n + m2, 2 * m1) * qbin(m1, m2)
            if not t.is_zero():
                tot = tot + t.scale((n - m1) ** 2 + (m1 - m2) ** 2)
    return tot


def _s8_triple(n, middle_sq):
    tot = LaurentPoly.zero()
    for m1 in range(0, n + 1):
        for m2 in range(0, m1 // 2 + 1):
            for m3 in range(0, m2 + 1):
                t = qbin(n, m1) * qbin(m1, 2 * m2) * qbin(m2, m3)
                if t.is_zero():
                    continue
                e = n * (n - m1)
                e += m2 * m2 + m3 * m3 if middle_sq else m2 * (m2 + m3)
                tot = tot + t.scale(e)
    return tot


@_register("section8", "polynomial",
           "closing-display identities for G(n,n;alpha,beta,K) with "
           "noninteger parameters", "entry in {a1,a2,a3,b1,b3}, n >= 0")
def _case_section8(p):
    entry, n = p["entry"], p["n"]
    table = {e[0]: e for e in _SECTION8}
    _, alpha, beta, K, rhs = table[entry]
    lhs = g_poly(n, n, alpha, beta, K)
    if entry == "a2":
        return lhs, _s8_a2(n)
    if entry == "a3":
        return lhs, _s8_triple(n, middle_sq=False)
    if entry == "b3":
        return lhs, _s8_triple(n, middle_sq=True)
    return lhs, rhs(n)


# ---------------------------------------------------------------------------
# campaign driver

@dataclass
class CampaignBudget:
    a_max: int = 5
    lm_max: int = 6
    n_max: int = 12
    T: int = 40
    pos_l_max: int = 20


def _compare(lhs, rhs):
    """Return (status, first_diff, lc, rc)."""
    if isinstance(lhs, TruncatedSeries):
        d = first_series_difference(lhs, rhs)
        if d is None:
            return ("pass", None, None, None)
        return ("fail", d, lhs.coeffs[d], rhs.coeffs[d])
    d = first_poly_difference(lhs, rhs)
    if d is None:
        return ("pass", None, None, None)
    return ("fail", d, lhs.coeff(d), rhs.coeff(d))


def check_identity(case, params):
    """Evaluate both sides of a catalogue case and compare exactly."""
    if isinstance(case, str):
        case = CATALOGUE[case]
    t0 = time.perf_counter()
    lhs, rhs = case.sides(params)
    status, d, lc, rc = _compare(lhs, rhs)
    ms = (time.perf_counter() - t0) * 1000.0
    return VerifyReport(case.id, dict(params), status, d, lc, rc, ms)


def _pos_report(case, params, poly):
    rep = positivity_scan(poly, case, params)
    vr = VerifyReport(case, dict(params), "pass" if rep.nonneg else "fail")
    if not rep.nonneg:
        vr.first_diff_exponent, vr.lhs_coeff = rep.first_negative
        vr.rhs_coeff = 0
    return vr


SUITES = ("thmmain", "thmmain2", "even", "corollaries", "series",
          "positivity", "section8", "comp", "hookp")


def run_campaign(suite, budget=None):
    """Run one verification suite over the budgeted grid; reports sorted by
    (case, params) so output is deterministic."""
    bud = budget or CampaignBudget()
    out = []

    def grid(case_ids, pairs, lm):
        for cid in case_ids:
            for (a, b) in pairs:
                for L in range(0, lm + 1):
                    for M in range(0, lm + 1):
                        out.append(check_identity(
                            cid, {"a": a, "b": b, "L": L, "M": M}))

    if suite == "thmmain":
        grid(["main", "main_tree"], _pairs(bud.a_max), bud.lm_max)
    elif suite == "thmmain2":
        grid(["shifted", "shifted_tree"], _pairs(bud.a_max, a_min=3), bud.lm_max)
        for L in range(0, bud.lm_max + 1):
            for M in range(0, bud.lm_max + 1):
                out.append(check_identity("ab32", {"L": L, "M": M}))
                out.append(check_identity("rr2inv", {"L": L, "M": M}))
    elif suite == "even":
        grid(["even", "even_tree"], _pairs(bud.a_max), bud.lm_max)
    elif suite == "corollaries":
        grid(["recip"], _pairs(bud.a_max), bud.lm_max)
        for cid, idx in (("g_eq_limF", "L"), ("g_eq_limf", "L"),
                         ("g_eq_limFt", "M"), ("g_eq_limft", "M")):
            for (a, b) in _pairs(bud.a_max):
                for v in range(0, bud.lm_max + 1):
                    out.append(check_identity(cid, {"a": a, "b": b, idx: v}))
        for L in range(0, bud.lm_max + 1):
            out.append(check_identity("isolated", {"L": L}))
    elif suite == "comp":
        for cid in ("bnew", "bnewp", "bnewp2", "brep", "comp", "comp2",
                    "comp_sum", "f31_display"):
            for L in range(0, bud.lm_max + 1):
                for M in range(0, bud.lm_max + 1):
                    out.append(check_identity(cid, {"L": L, "M": M}))
        for L in range(0, bud.lm_max + 1):
            out.append(check_identity("rr1", {"L": L}))
            out.append(check_identity("rr2", {"L": L}))
    elif suite == "series":
        for k in (2, 3, 4):
            out.append(check_identity("series_F", {"a": k, "b": 1, "T": bud.T}))
            out.append(check_identity("series_agid", {"k": k, "T": bud.T}))
        for k in (2, 3):
            out.append(check_identity("series_I", {"a": k, "b": 1, "T": bud.T}))
        for (a, b) in ((3, 2), (5, 2), (5, 3), (7, 2), (7, 5)):
            out.append(check_identity("series_F", {"a": a, "b": b, "T": bud.T}))
            out.append(check_identity("series_f", {"a": a, "b": b, "T": bud.T}))
        for cid in ("series_display75F", "series_display72F",
                    "series_display75f", "series_display72f"):
            out.append(check_identity(cid, {"T": bud.T}))
        # Fibonacci pairs (F_k, F_{k-1}) and (F_k, F_{k-2}) at k = 5, 6
        for (a, b) in ((5, 3), (8, 5), (5, 2), (8, 3)):
            out.append(check_identity("series_F", {"a": a, "b": b, "T": bud.T}))
            out.append(check_identity("series_f", {"a": a, "b": b, "T": bud.T}))
        # even-modulus Fibonacci cases
        for (a, b) in ((3, 2), (5, 3)):
            out.append(check_identity("series_I", {"a": a, "b": b, "T": bud.T}))
    elif suite == "hookp":
        # valid region determined by exhaustive scan: the stated window on
        # N-M plus 1 <= i <= K-1 and alpha+beta < K; outside it the
        # alternating sum picks up uncancelled wrap-around terms and stops
        # being a generating function
        for K in (3, 4, 5):
            for alpha in (1, 2):
                for beta in (1, 2):
                    if alpha + beta >= K:
                        continue
                    for N in range(0, bud.lm_max + 1):
                        for M in range(0, bud.lm_max + 1):
                            ilo = max(1, beta - N + M)
                            ihi = min(K - 1, K - alpha - N + M)
                            for i in range(ilo, ihi + 1):
                                out.append(check_identity(
                                    "hookp", {"K": K, "i": i, "N": N, "M": M,
                                              "alpha": alpha, "beta": beta}))
    elif suite == "section8":
        for entry in ("a1", "a2", "a3", "b1", "b3"):
            for n in range(0, bud.n_max + 1):
                out.append(check_identity("section8", {"entry": entry, "n": n}))
    elif suite == "positivity":
        for (a, b) in _pairs(bud.a_max):
            for L in range(0, bud.pos_l_max + 1):
                g = g_poly(L, L, Fraction(b), Fraction(a * b + 1, a), a)
                out.append(_pos_report("pos_gen", {"a": a, "b": b, "L": L}, g))
        for (a, b) in _pairs(bud.a_max, a_min=3):
            abar, bbar = bar_pair(a, b)
            n = cf_expand(a, b).order
            one = (a < 2 * b and n % 2 == 0) or (a > 2 * b and n % 2 == 1)
            if one:
                alpha = Fraction(b) - Fraction(2 * abar * b, a)
                beta = Fraction(b) + Fraction(1, a) + Fraction(2 * abar * b, a)
            else:
                alpha = Fraction(b - 2 * bbar)
                beta = Fraction(b) + Fraction(1, a) + Fraction(2 * bbar)
            for L in range(abar, bud.pos_l_max + 1):
                g = g_poly(L + abar, L - abar, alpha, beta, a)
                out.append(_pos_report("pos_shifted", {"a": a, "b": b, "L": L}, g))
        for n in range(0, 31):
            an, bn, cn = borwein_split(n)
            for name, poly in (("A", an), ("B", bn), ("C", cn)):
                out.append(_pos_report("pos_split", {"part": name, "n": n}, poly))
        for entry, alpha, beta, K, _rhs in _SECTION8:
            for n in range(0, bud.n_max + 1):
                g = g_poly(n, n, alpha, beta, K)
                out.append(_pos_report("pos_section8",
                                       {"entry": entry, "n": n}, g))
        # the one open slot of the closing display, positivity only
        for n in range(0, bud.n_max + 1):
            g = g_poly(n, n, Fraction(4, 3), Fraction(5, 3), 3)
            out.append(_pos_report("pos_section8", {"entry": "b2", "n": n}, g))
    else:
        raise ValueError(f"unknown suite {suite!r}")

    out.sort(key=VerifyReport.key)
    return out
