"""Fermionic lattice sums attached to a coprime pair: the four families
F, f, H, I, their one-sided large-bound limits and the double-limit series.

Every value is computed by exhaustive enumeration of the finite support.
The depth-first search fixes m_1, m_2, ... in order; the binomial factor at
position j-1 is fully determined once m_j is chosen and a branch is cut as
soon as a factor vanishes. Search ranges come from the support inequalities
(m_1 <= L resp. M, and m_j <= m_{j-1} within the nonincreasing lattice),
widened by a slack margin; the exact kernel filter makes the slack harmless
and the test suite checks that enlarging it never changes any result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cf import CartanData, CFData, build_cartan, cf_expand, mn_solve, quad_form
from .qpoly import LaurentPoly, TruncatedSeries
from .qcombinat import poch_range, q_poch, qbin

DEFAULT_SLACK = 3

_CARTAN_CACHE = {}


def cartan_for(a, b, last_ge2=True):
    key = (a, b, last_ge2)
    hit = _CARTAN_CACHE.get(key)
    if hit is None:
        hit = build_cartan(cf_expand(a, b, last_ge2=last_ge2))
        _CARTAN_CACHE[key] = hit
    return hit


@dataclass(frozen=True)
class FermionicSpec:
    """One fermionic evaluation request: which family, pair, and bound mode."""

    a: int
    b: int
    family: str           # "F", "f", "H" or "I"
    bound_mode: str       # "double", "limit_M", "limit_L", "limit_both"
    last_ge2: bool = True


def _factor(cd, j, mj, nj, family):
    """Binomial factor at 1-based position j of the kernel product."""
    d = cd.d
    tau = cd.tau[j - 1]
    up = tau * mj + nj
    lo = tau * mj
    base = 1
    if family == "H":
        up -= j == d
        lo -= j == d - 1
    elif family == "I":
        base = 3 - tau
    return qbin(up, lo, base)


def _row_n(cd, j, m, L):
    """n_j for 1-based j, from the fixed entries of m (length d)."""
    car = cd.cartan[j - 1]
    d = cd.d
    val = L if j == 1 else 0
    for k in (j - 2, j - 1, j):
        if 0 <= k < d:
            val -= car[k] * m[k]
    return val


def _exponent(cd, m, L, family, ge, bounded_L):
    e = quad_form(cd, m, barred=(family == "f"))
    if ge and bounded_L:
        e += L * (L - 2 * m[0])
    if family == "H":
        d = cd.d
        e += 2 * m[d - 1] - 2 * m[d - 2] + 1
    return e


def _sum_m_lattice(cd, L, M, family, ge, bounded_M=True, slack=DEFAULT_SLACK):
    """Sum over the m-lattice; bounded_M=False drops the boundary binomial
    (the large-M limit normalized by (q)_2L)."""
    d = cd.d
    total = LaurentPoly.zero()
    m = [0] * d
    sub = LaurentPoly.zero()

    def boundary(m1):
        if not bounded_M:
            return LaurentPoly.one()
        if ge:
            return qbin(L + M + m1, 2 * L)
        return qbin(2 * L + M - m1, 2 * L)

    def rec(j, partial):
        # depth j chooses m_j (1-based); factors up to j-1 are in `partial`
        nonlocal sub
        if j > d:
            nd = _row_n(cd, d, m, L)
            last = _factor(cd, d, m[d - 1], nd, family)
            if last.is_zero():
                return
            exp = _exponent(cd, m, L, family, ge, bounded_L=True)
            sub = sub + (partial * last).scale(exp)
            return
        for v in range(0, m[j - 2] + slack + 1):
            m[j - 1] = v
            nj = _row_n(cd, j - 1, m, L)
            p = partial * _factor(cd, j - 1, m[j - 2], nj, family)
            if p.is_zero():
                continue
            rec(j + 1, p)
        m[j - 1] = 0

    # the boundary binomial is by far the largest factor; sum the small
    # inner products per m_1 and multiply it in once per branch
    lo = max(0, L - M) if (bounded_M and ge) else 0
    hi = L + slack
    if bounded_M and not ge:
        hi = min(hi, M)
    for v in range(lo, hi + 1):
        m[0] = v
        head = boundary(v)
        if head.is_zero():
            continue
        sub = LaurentPoly.zero()
        rec(2, LaurentPoly.one())
        if not sub.is_zero():
            total = total + head * sub
    m[0] = 0
    return total


def eval_F(a, b, L, M, last_ge2=True, slack=DEFAULT_SLACK):
    """Doubly-bounded fermionic polynomial for the pair (a,b)."""
    cd = cartan_for(a, b, last_ge2)
    return _sum_m_lattice(cd, L, M, "F", ge=(a > 2 * b), slack=slack)


def eval_f(a, b, L, M, last_ge2=True, slack=DEFAULT_SLACK):
    """Barred-quadratic-form variant; (2,1) uses the explicit q^(L m) kernel."""
    if (a, b) == (2, 1):
        total = LaurentPoly.zero()
        for mm in range(0, min(L, M) + 1):
            t = qbin(2 * L + M - mm, 2 * L) * qbin(L, mm)
            total = total + t.scale(L * mm)
        return total
    cd = cartan_for(a, b, last_ge2)
    return _sum_m_lattice(cd, L, M, "f", ge=(a > 2 * b), slack=slack)


def eval_H(a, b, L, M, slack=DEFAULT_SLACK):
    """Shifted-kernel family; (2,1) is the explicit seed sum."""
    if (a, b) == (2, 1):
        total = LaurentPoly.zero()
        for n in range(0, min(L, M) + 1):
            t = qbin(2 * L + M - n - 1, 2 * L - 1) * qbin(L - 1, n)
            total = total + t.scale(n * n)
        return total
    cd = cartan_for(a, b, last_ge2=True)  # the shifted kernel is rep-sensitive
    return _sum_m_lattice(cd, L, M, "H", ge=(a > 2 * b), slack=slack)


def eval_I(a, b, L, M, last_ge2=True, slack=DEFAULT_SLACK):
    """Even-modulus family: factor j is a Gaussian binomial in q^(3-tau_j)."""
    cd = cartan_for(a, b, last_ge2)
    return _sum_m_lattice(cd, L, M, "I", ge=(a > 2 * b), slack=slack)


def eval_limit_M(family, a, b, L, last_ge2=True, slack=DEFAULT_SLACK):
    """Large-M limit times (q)_2L: the singly-bounded polynomial at L."""
    if family == "H":
        raise NotImplementedError("large-M limit not provided for family H")
    if family == "f" and (a, b) == (2, 1):
        total = LaurentPoly.zero()
        for n in range(0, L + 1):
            total = total + qbin(L, n).scale(n * L)
        return total
    cd = cartan_for(a, b, last_ge2)
    return _sum_m_lattice(cd, L, None, family, ge=(a > 2 * b), bounded_M=False, slack=slack)


def _poch_quotient(top, xs):
    """(q)_top / prod (q)_x for x in xs, as binomial chain times a Pochhammer.

    Exact polynomial whenever all partial remainders stay nonnegative,
    which holds on the support of the limit sums. Returns None (term is 0)
    when some x is negative.
    """
    poly = LaurentPoly.one()
    rem = top
    for x in xs:
        if x < 0:
            return None
        poly = poly * qbin(rem, x)
        if poly.is_zero():
            return None
        rem -= x
    return poly * q_poch(rem)


def eval_limit_L(family, a, b, M, slack=DEFAULT_SLACK):
    """Large-L limit times (q)_2M: the tilde polynomial at M.

    Families F and f only; f has the overrides ftilde_(a,1) = Ftilde_(a-1,1)
    and ftilde_(2,1) = (q)_2M/(q)_M.
    """
    if family not in ("F", "f"):
        raise NotImplementedError("large-L limit provided for families F and f only")
    if family == "f" and b == 1:
        if a == 2:
            return poch_range(M + 1, 2 * M)
        return eval_limit_L("F", a - 1, 1, M, slack=slack)
    cd = cartan_for(a, b, last_ge2=True)
    d = cd.d
    barred = family == "f"
    total = LaurentPoly.zero()
    if a <= 2 * b:
        m = [0] * d
        sub = LaurentPoly.zero()

        def rec(j, partial):
            nonlocal sub
            if j > d:
                nd = _row_n(cd, d, m, 0)
                last = _factor(cd, d, m[d - 1], nd, family) if d >= 2 else LaurentPoly.one()
                if last.is_zero():
                    return
                exp = quad_form(cd, m, barred=barred)
                sub = sub + (partial * last).scale(exp)
                return
            for v in range(0, m[j - 2] + slack + 1):
                m[j - 1] = v
                p = partial
                if 3 <= j:  # factor j-1 (j-1 >= 2) now fully determined
                    nj = _row_n(cd, j - 1, m, 0)
                    p = partial * _factor(cd, j - 1, m[j - 2], nj, family)
                    if p.is_zero():
                        continue
                rec(j + 1, p)
            m[j - 1] = 0

        # the Pochhammer-quotient head depends only on m_1; multiply it in
        # once per branch
        for v in range(0, M + 1):
            m[0] = v
            head = _poch_quotient(2 * M, [M - v, cd.tau[0] * v])
            if head is None:
                continue
            sub = LaurentPoly.zero()
            rec(2, LaurentPoly.one())
            if not sub.is_zero():
                total = total + head * sub
        m[0] = 0
        return total
    # a > 2b: coordinates n_1..n_{a0}, m_{a0+1}..m_d
    a0 = cd.cf.quotients[0]
    has_mm = d > a0

    if not has_mm:
        # pure chain (b = 1 pairs): the Pochhammer quotient factors as
        #   qbin(2M, M-N_1) * (q)_M * prod_j qbin(M+N_j, N_j - N_{j+1})
        # in the partial sums N_j = n_j + ... + n_{a0}, so the multisum
        # collapses to a quadratic-time inner recursion over N.
        V = [qbin(M + N, N) for N in range(M + 1)]
        for _ in range(a0 - 1):
            prev = V
            V = []
            for N in range(0, M + 1):
                acc = LaurentPoly.zero()
                for Np in range(0, N + 1):
                    t = qbin(M + N, N - Np) * prev[Np]
                    acc = acc + t.scale(Np * Np)
                V.append(acc)
        for N in range(0, M + 1):
            total = total + (qbin(2 * M, M - N) * V[N]).scale(N * N)
        return total * q_poch(M)

    def rec_ms(j, ns, n1, rem, partial):
        # j is the 1-based lattice position being chosen (a0+2 .. d);
        # factor j-1 becomes fully determined once m_j is fixed
        nonlocal total
        mm = m_tail[0]
        if j > d:
            nd = _row_n(cd, d, mfull, 0)
            last = _factor(cd, d, mfull[d - 1], nd, family)
            if last.is_zero():
                return
            x = M - n1 - mm
            if x < 0:
                return
            p = partial * last * qbin(rem, x)
            if p.is_zero():
                return
            big_n = 0
            exp = 0
            for v in reversed(ns):
                big_n += v
                exp += (big_n + mm) ** 2
            exp += sum(
                mfull[r] * cd.cartan[r][k] * mfull[k]
                for r in range(a0, d)
                for k in range(a0, d)
            )
            if barred:
                exp += mfull[d - 1] * (mfull[d - 2] - mfull[d - 1])
            total = total + (p * q_poch(rem - x)).scale(exp)
            return
        for v in range(0, m_tail[j - a0 - 2] + slack + 1):
            m_tail[j - a0 - 1] = v
            mfull[j - 1] = v
            p = partial
            if j - 1 >= a0 + 2:
                # position a0+1 has no binomial factor (the Pochhammer head
                # plays its role); factors start at a0+2
                nj = _row_n(cd, j - 1, mfull, 0)
                p = partial * _factor(cd, j - 1, mfull[j - 2], nj, family)
            if not p.is_zero():
                rec_ms(j + 1, ns, n1, rem, p)
        m_tail[j - a0 - 1] = 0
        mfull[j - 1] = 0

    m_tail = [0] * (d - a0)
    mfull = [0] * d

    def rec_n(i, ns, budget, rem, partial):
        # choose n_i, folding qbin(rem, n_i) into the running product so the
        # Pochhammer-quotient chain is shared along the search tree
        if i == a0:
            for mm in range(0, budget + 1):
                m_tail[0] = mm
                mfull[a0] = mm
                head = qbin(rem, cd.tau[a0] * mm)
                if head.is_zero():
                    continue
                rec_ms(a0 + 2, ns, M - budget, rem - cd.tau[a0] * mm,
                       partial * head)
            m_tail[0] = 0
            mfull[a0] = 0
            return
        for v in range(0, budget + 1):
            p = partial * qbin(rem, v)
            if p.is_zero():
                continue
            rec_n(i + 1, ns + [v], budget - v, rem - v, p)

    rec_n(0, [], M, 2 * M, LaurentPoly.one())
    return total


def eval_limit_both(family, a, b, T, last_ge2=True, slack=DEFAULT_SLACK):
    """Both bounds to infinity: the Rogers-Ramanujan-type sum side, truncated
    to order T. Families F, f (b >= 2) and I."""
    if T < 0:
        raise ValueError("truncation order must be >= 0")
    if family == "H":
        raise NotImplementedError("double limit not provided for family H")
    if family == "f" and b == 1:
        raise NotImplementedError("the reciprocal family has no product form for b = 1")
    cd = cartan_for(a, b, last_ge2)
    d = cd.d
    barred = family == "f"
    total = TruncatedSeries(T)
    root = math.isqrt(T)
    if a <= 2 * b:
        m = [0] * d

        def leaf():
            nonlocal total
            exp = quad_form(cd, m, barred=barred)
            if exp > T:
                return
            prod = LaurentPoly.one()
            for j in range(2, d + 1):
                nj = _row_n(cd, j, m, 0)
                prod = prod * _factor(cd, j, m[j - 1], nj, family)
                if prod.is_zero():
                    return
            base1 = (3 - cd.tau[0]) if family == "I" else 1
            s = TruncatedSeries.from_poly(prod.scale(exp), T)
            for k in range(1, cd.tau[0] * m[0] + 1):
                s = s.div_one_minus(base1 * k)
            total = total + s

        def rec(j):
            if j > d:
                leaf()
                return
            hi = root + slack if j == 1 else m[j - 2] + slack
            for v in range(0, hi + 1):
                m[j - 1] = v
                rec(j + 1)
            m[j - 1] = 0

        rec(1)
        return total
    # a > 2b
    a0 = cd.cf.quotients[0]
    has_mm = d > a0

    def leaf2(ns, ms):
        nonlocal total
        mm = ms[0] if has_mm else 0
        big_n = [0] * (a0 + 1)
        for j in range(a0 - 1, -1, -1):
            big_n[j] = big_n[j + 1] + ns[j]
        exp = sum((big_n[j] + mm) ** 2 for j in range(a0))
        mfull = [0] * d
        for i, v in enumerate(ms):
            mfull[a0 + i] = v
        exp += sum(
            mfull[j] * cd.cartan[j][k] * mfull[k]
            for j in range(a0, d)
            for k in range(a0, d)
        )
        if barred and has_mm:
            exp += mfull[d - 1] * (mfull[d - 2] - mfull[d - 1])
        if exp > T:
            return
        prod = LaurentPoly.one()
        for j in range(a0 + 2, d + 1):
            nj = _row_n(cd, j, mfull, 0)
            prod = prod * _factor(cd, j, mfull[j - 1], nj, family)
            if prod.is_zero():
                return
        s = TruncatedSeries.from_poly(prod.scale(exp), T)
        for i in range(a0):
            base = 1
            if family == "I" and i == a0 - 1:
                base = 3 - cd.tau[a0 - 1]
            for k in range(1, ns[i] + 1):
                s = s.div_one_minus(base * k)
        if has_mm:
            base = (3 - cd.tau[a0]) if family == "I" else 1
            for k in range(1, cd.tau[a0] * mm + 1):
                s = s.div_one_minus(base * k)
        total = total + s

    def rec_n(i, ns, budget):
        if i == a0:
            if has_mm:
                for mm in range(0, budget + 1):
                    rec_m(a0 + 2, ns, [mm] + [0] * (d - a0 - 1))
            else:
                leaf2(ns, [])
            return
        for v in range(0, budget + 1):
            rec_n(i + 1, ns + [v], budget - v)

    def rec_m(j, ns, ms):
        if j > d:
            leaf2(ns, ms)
            return
        for v in range(0, ms[j - a0 - 2] + slack + 1):
            ms[j - a0 - 1] = v
            rec_m(j + 1, ns, ms)
        ms[j - a0 - 1] = 0

    rec_n(0, [], root + slack)
    return total


def eval_spec(spec, L=None, M=None, T=None, slack=DEFAULT_SLACK):
    """Dispatch a FermionicSpec to the matching evaluator."""
    fam = spec.family
    if spec.bound_mode == "double":
        if fam == "H":
            return eval_H(spec.a, spec.b, L, M, slack=slack)
        fn = {"F": eval_F, "f": eval_f, "I": eval_I}[fam]
        return fn(spec.a, spec.b, L, M, last_ge2=spec.last_ge2, slack=slack)
    if spec.bound_mode == "limit_M":
        return eval_limit_M(fam, spec.a, spec.b, L, last_ge2=spec.last_ge2, slack=slack)
    if spec.bound_mode == "limit_L":
        return eval_limit_L(fam, spec.a, spec.b, M, slack=slack)
    if spec.bound_mode == "limit_both":
        return eval_limit_both(fam, spec.a, spec.b, T, last_ge2=spec.last_ge2, slack=slack)
    raise ValueError(f"unknown bound mode {spec.bound_mode!r}")
