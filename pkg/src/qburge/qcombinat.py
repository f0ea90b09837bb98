"""q-binomial coefficients, q-Pochhammer products, the two-binomial kernel,
the G and D alternating sums, and the Borwein residue split.

All results are exact LaurentPoly values. Rational parameters are carried
as Fractions and every exponent is asserted integral per contributing term,
so invalid parameter combinations fail loudly instead of silently rounding.
"""

from __future__ import annotations

from fractions import Fraction

from .qpoly import LaurentPoly

# memo keyed (n, m, base); values immutable, concurrent re-insert harmless
_QBIN_CACHE = {}
_POCH_CACHE = {}


class NonIntegerExponentError(ValueError):
    """An alternating sum produced a fractional q-exponent at a contributing term."""


def qbin(n, m, base=1):
    """Gaussian binomial [n choose m] in q**base; 0 when m < 0 or n-m < 0.

    Computed bottom-up via the Pascal recurrence
    [n,m] = [n-1,m-1] + q^(base*m) [n-1,m], exact by construction.
    """
    if m < 0 or n - m < 0:
        return LaurentPoly.zero()
    m = min(m, n - m)
    key = (n, m, base)
    hit = _QBIN_CACHE.get(key)
    if hit is not None:
        return hit
    # row k of the table holds [k choose j] for j <= m
    row = [LaurentPoly.one()]
    for k in range(1, n + 1):
        top = min(m, k)
        new = [LaurentPoly.one()]
        for j in range(1, top + 1):
            left = row[j - 1]
            right = row[j] if j < len(row) else None
            if right is None:
                new.append(left)  # j == k: [k choose k] = [k-1 choose k-1]
            else:
                new.append(left + right.scale(base * j))
        row = new
        _QBIN_CACHE.setdefault((k, top, base), row[top])
    res = row[m]
    _QBIN_CACHE[key] = res
    return res


def q_poch(n, base=1):
    """(q^base; q^base)_n = prod_{k=1..n} (1 - q^(base*k)); empty product for n=0."""
    if n < 0:
        raise ValueError("q_poch requires n >= 0")
    key = (n, base)
    hit = _POCH_CACHE.get(key)
    if hit is not None:
        return hit
    if n == 0:
        res = LaurentPoly.one()
    else:
        res = q_poch(n - 1, base) * (LaurentPoly.one() - LaurentPoly.monomial(base * n))
    _POCH_CACHE[key] = res
    return res


def poch_range(lo, hi):
    """prod_{k=lo..hi} (1 - q^k); empty product when lo > hi."""
    res = LaurentPoly.one()
    for k in range(lo, hi + 1):
        res = res * (LaurentPoly.one() - LaurentPoly.monomial(k))
    return res


def b_kernel(L, M, a, b):
    """The doubly-bounded kernel [L+M+a-b, L+a] * [L+M-a+b, L-a].

    Vanishes unless |a| <= L and |b| <= M.
    """
    return qbin(L + M + a - b, L + a) * qbin(L + M - a + b, L - a)


def _as_fraction(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def _int_exponent(e, context):
    e = _as_fraction(e)
    if e.denominator != 1:
        raise NonIntegerExponentError(f"non-integer exponent {e} in {context}")
    return e.numerator


def g_poly(N, M, alpha, beta, K):
    """Alternating sum sum_j (-1)^j q^(K j ((a+b)j + a-b)/2) [M+N, N-Kj].

    alpha, beta may be Fractions as long as every contributing exponent is
    an integer; otherwise NonIntegerExponentError is raised.
    """
    if K <= 0:
        raise ValueError("K must be a positive integer")
    alpha = _as_fraction(alpha)
    beta = _as_fraction(beta)
    total = LaurentPoly.zero()
    # [M+N, N-Kj] nonzero iff 0 <= N-Kj <= M+N
    jlo = -(M // K) - 1
    jhi = N // K + 1
    for j in range(jlo, jhi + 1):
        if not (0 <= N - K * j <= M + N):
            continue
        binom = qbin(M + N, N - K * j)
        if binom.is_zero():
            continue
        e = Fraction(K * j, 2) * ((alpha + beta) * j + alpha - beta)
        exp = _int_exponent(e, f"g_poly(N={N},M={M},alpha={alpha},beta={beta},K={K}) at j={j}")
        term = binom.scale(exp, -1 if j % 2 else 1)
        total = total + term
    return total


def d_poly(K, i, N, M, alpha, beta):
    """Two-part alternating sum for the hook-difference generating function.

    sum_j q^(j((a+b)Kj + Kb - (a+b)i)) [M+N, M-Kj]
         - q^(((a+b)j+b)(Kj+i)) [M+N, M-Kj-i].
    """
    if K <= 0:
        raise ValueError("K must be a positive integer")
    alpha = _as_fraction(alpha)
    beta = _as_fraction(beta)
    total = LaurentPoly.zero()
    span = (M + N) // K + abs(i) + 2
    for j in range(-span, span + 1):
        ctx = f"d_poly(K={K},i={i},N={N},M={M},alpha={alpha},beta={beta}) at j={j}"
        b1 = qbin(M + N, M - K * j)
        if not b1.is_zero():
            e1 = j * ((alpha + beta) * K * j + K * beta - (alpha + beta) * i)
            total = total + b1.scale(_int_exponent(e1, ctx))
        b2 = qbin(M + N, M - K * j - i)
        if not b2.is_zero():
            e2 = ((alpha + beta) * j + beta) * (K * j + i)
            total = total - b2.scale(_int_exponent(e2, ctx))
    return total


def borwein_split(n):
    """Split (q,q^2;q^3)_n by exponent residue mod 3.

    Returns (A, B, C) with the exact reconstruction
    (q,q^2;q^3)_n = A(q^3) - q B(q^3) - q^2 C(q^3).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    prod = LaurentPoly.one()
    for k in range(1, n + 1):
        prod = prod * (LaurentPoly.one() - LaurentPoly.monomial(3 * k - 2))
        prod = prod * (LaurentPoly.one() - LaurentPoly.monomial(3 * k - 1))
    a, b, c = {}, {}, {}
    for e, coef in prod.coeffs.items():
        r, d = e % 3, e // 3
        if r == 0:
            a[d] = coef
        elif r == 1:
            b[d] = -coef
        else:
            c[d] = -coef
    return LaurentPoly(a), LaurentPoly(b), LaurentPoly(c)
