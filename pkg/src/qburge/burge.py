"""Bosonic alternating sums, the two summation transforms, and the tree
walker that rebuilds the fermionic polynomials by iterating the transforms
along the continued-fraction reduction of a coprime pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cf import bar_pair, cf_expand
from .qpoly import LaurentPoly
from .qcombinat import NonIntegerExponentError, b_kernel, qbin, _as_fraction, _int_exponent


@dataclass(frozen=True)
class BosonicSpec:
    """One alternating sum  sum_j (-1)^j q^(c2 j^2 + c1 j + c0) B(L,M,aj+abar,bj+bbar)."""

    a: int
    b: int
    abar: int = 0
    bbar: int = 0
    c2: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)
    c0: Fraction = Fraction(0)
    alternating: bool = True


def bosonic_eval(spec, L, M):
    """Evaluate the alternating kernel sum; j runs over the kernel support."""
    if spec.a <= 0:
        raise ValueError("spec.a must be positive")
    total = LaurentPoly.zero()
    c2 = _as_fraction(spec.c2)
    c1 = _as_fraction(spec.c1)
    c0 = _as_fraction(spec.c0)
    # |a j + abar| <= L is necessary for a nonzero kernel
    jlo = -((L + spec.abar) // spec.a) - 1
    jhi = (L - spec.abar) // spec.a + 1
    for j in range(jlo, jhi + 1):
        ker = b_kernel(L, M, spec.a * j + spec.abar, spec.b * j + spec.bbar)
        if ker.is_zero():
            continue
        e = _int_exponent(c2 * j * j + c1 * j + c0, f"bosonic spec {spec} at j={j}")
        sign = -1 if (spec.alternating and j % 2) else 1
        total = total + ker.scale(e, sign)
    return total


def spec_main(a, b):
    """Kernel B(L,M,aj,bj) with exponent j((2ab+1)j+1)/2."""
    return BosonicSpec(a, b, c2=Fraction(2 * a * b + 1, 2), c1=Fraction(1, 2))


def spec_recip(a, b):
    """Kernel B(L,M,aj,bj) with exponent j((2ab-1)j+1)/2 (the 1/q companion)."""
    return BosonicSpec(a, b, c2=Fraction(2 * a * b - 1, 2), c1=Fraction(1, 2))


def spec_even(a, b):
    """Kernel B(L,M,aj,bj) with exponent a*b*j^2 (even-modulus seed)."""
    return BosonicSpec(a, b, c2=Fraction(a * b))


def spec_shifted(a, b):
    """Kernel B(L,M,aj+abar,bj+bbar) with the parity-dependent linear term.

    The linear coefficient is (4*abar*b+1)/2 when cf(a,b) (last quotient >= 2)
    has even order and a < 2b, or odd order and a > 2b; otherwise (4*a*bbar+1)/2.
    """
    abar, bbar = bar_pair(a, b)
    n = cf_expand(a, b, last_ge2=True).order
    branch_one = (a < 2 * b and n % 2 == 0) or (a > 2 * b and n % 2 == 1)
    lin = 4 * abar * b if branch_one else 4 * a * bbar
    return BosonicSpec(
        a, b, abar=abar, bbar=bbar,
        c2=Fraction(2 * a * b + 1, 2),
        c1=Fraction(lin + 1, 2),
        c0=Fraction(abar * bbar),
    )


def condition_check(L, M, a, b):
    """Parameter guard for the transforms: the sum side must not vanish
    while the kernel side does not."""
    chain1 = (-L + a <= -b) and (-b <= L + a) and (L + a < b) and (b <= M)
    chain2 = (-L - a <= b) and (b <= L - a) and (L - a < -b) and (-b <= M)
    return not (chain1 or chain2)


def transform_step(direction, inner, L, M):
    """One summation transform applied to a two-index polynomial family.

    direction "B1": sum_i q^(i^2) [2L+M-i, 2L] inner(L-i, i)
    direction "B2": sum_i q^(i^2) [2L+M-i, 2L] inner(i, L-i)
    """
    total = LaurentPoly.zero()
    for i in range(0, min(L, M) + 1):
        outer = qbin(2 * L + M - i, 2 * L)
        if outer.is_zero():
            continue
        if direction == "B1":
            val = inner(L - i, i)
        elif direction == "B2":
            val = inner(i, L - i)
        else:
            raise ValueError("direction must be 'B1' or 'B2'")
        if val.is_zero():
            continue
        total = total + (outer * val).scale(i * i)
    return total


def _seed_F(L, M):
    # doubly-bounded first Rogers-Ramanujan sum
    total = LaurentPoly.zero()
    for n in range(0, min(L, M) + 1):
        t = qbin(2 * L + M - n, 2 * L) * qbin(L, n)
        total = total + t.scale(n * n)
    return total


def _seed_I(L, M):
    total = LaurentPoly.zero()
    for n in range(0, min(L, M) + 1):
        t = qbin(2 * L + M - n, 2 * L) * qbin(L, n, base=2)
        total = total + t.scale(n * n)
    return total


def _seed_H31(L, M):
    total = LaurentPoly.zero()
    for i in range(0, L + 1):
        for n in range(0, L - i + 1):
            t = qbin(2 * L + M - i, 2 * L) * qbin(2 * L - i - n - 1, 2 * L - 2 * i - 1) * qbin(L - i - 1, n)
            if not t.is_zero():
                total = total + t.scale(i * i + n * n)
    return total


def _seed_H32(L, M):
    total = LaurentPoly.zero()
    for i in range(0, min(L, M) + 1):
        for n in range(0, i + 1):
            t = qbin(2 * L + M - i, 2 * L) * qbin(L + i - n - 1, 2 * i - 1) * qbin(i - 1, n)
            if not t.is_zero():
                total = total + t.scale(i * i + n * n)
    return total


_WALK_CACHE = {}


def tree_walk(a, b, family, L, M):
    """Fermionic value at (L,M) via the transform recursion along the
    continued-fraction reduction (a,b) -> (b,a-b) or (a-b,b).

    Seeds: (2,1) for families F and I, (3,1)/(3,2) for family H.
    """
    if L < 0 or M < 0:
        return LaurentPoly.zero()
    key = (a, b, family, L, M)
    hit = _WALK_CACHE.get(key)
    if hit is not None:
        return hit
    if family == "H":
        if (a, b) == (3, 1):
            res = _seed_H31(L, M)
        elif (a, b) == (3, 2):
            res = _seed_H32(L, M)
        elif (a, b) == (2, 1):
            raise ValueError("family H is not defined for the pair (2,1)")
        else:
            res = _walk_step(a, b, family, L, M)
    elif (a, b) == (2, 1):
        res = _seed_F(L, M) if family == "F" else _seed_I(L, M)
    else:
        res = _walk_step(a, b, family, L, M)
    _WALK_CACHE[key] = res
    return res


def _walk_step(a, b, family, L, M):
    if a < 2 * b:
        inner = lambda l, m: tree_walk(b, a - b, family, l, m)
        return transform_step("B2", inner, L, M)
    inner = lambda l, m: tree_walk(a - b, b, family, l, m)
    return transform_step("B1", inner, L, M)
