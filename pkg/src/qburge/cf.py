"""Continued fractions of coprime pairs, tadpole-block incidence matrices,
the (m,n)-system, quadratic forms and the convergent (bar) pair.

A pair (a, b) with gcd(a,b)=1 and 1 <= b < a is expanded as the continued
fraction of (a/b - 1)^sign(a-2b), sign(0)=0. Every rational except the
pair (2,1) has two representations, [.., c] with c >= 2 and [.., c-1, 1];
the canonical choice here is last quotient >= 2, with an explicit toggle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction


def check_pair(a, b):
    if not (1 <= b < a):
        raise ValueError(f"need 1 <= b < a, got ({a},{b})")
    if math.gcd(a, b) != 1:
        raise ValueError(f"({a},{b}) is not coprime")


@dataclass(frozen=True)
class CFData:
    """Partial quotients of cf(a,b) plus the derived index data."""

    a: int
    b: int
    quotients: tuple
    t: tuple = field(init=False)  # t[0]=0, t[j+1]-t[j] = quotients[j]
    d: int = field(init=False)    # sum of quotients

    def __post_init__(self):
        t = [0]
        for q in self.quotients:
            t.append(t[-1] + q)
        object.__setattr__(self, "t", tuple(t))
        object.__setattr__(self, "d", t[-1])

    @property
    def order(self):
        """n in [a_0, ..., a_n]."""
        return len(self.quotients) - 1

    def last_ge2(self):
        return self.quotients[-1] >= 2 or self.quotients == (1,)


def cf_expand(a, b, last_ge2=True):
    """Continued fraction of (a/b - 1)^sign(a-2b) in the requested representation.

    The pair (2,1) has the single representation [1] under either flag.
    """
    check_pair(a, b)
    if (a, b) == (2, 1):
        return CFData(a, b, (1,))
    if a > 2 * b:
        p, q = a - b, b
    else:
        p, q = b, a - b
    quots = []
    while q:
        quots.append(p // q)
        p, q = q, p % q
    c = CFData(a, b, tuple(quots))
    if last_ge2:
        return c
    return cf_toggle(c)


def cf_toggle(c):
    """Switch between the [.., x] (x>=2) and [.., x-1, 1] representations."""
    if c.quotients == (1,):
        raise ValueError("the pair (2,1) has a single representation")
    q = list(c.quotients)
    if q[-1] >= 2:
        q[-1] -= 1
        q.append(1)
    else:
        q.pop()
        q[-1] += 1
    return CFData(c.a, c.b, tuple(q))


@dataclass(frozen=True)
class CartanData:
    """Incidence matrix (tadpole blocks), Cartan matrix 2*Id - I, and tau."""

    cf: CFData
    incidence: tuple
    cartan: tuple
    tau: tuple

    @property
    def d(self):
        return self.cf.d


def build_cartan(c):
    d = c.d
    ends = set(c.t[1:])  # block-terminating indices t_1..t_{n+1}
    inc = [[0] * d for _ in range(d)]
    for j in range(1, d + 1):
        for k in range(1, d + 1):
            if j in ends:
                v = (j == k + 1) + (j == k) - (j == k - 1)
            else:
                v = (j == k + 1) + (j == k - 1)
            inc[j - 1][k - 1] = v
    car = [[2 * (j == k) - inc[j][k] for k in range(d)] for j in range(d)]
    tau = tuple([2] * (d - 1) + [1])
    return CartanData(c, tuple(map(tuple, inc)), tuple(map(tuple, car)), tau)


def mn_solve(cd, L, m):
    """Auxiliary vector n_j = L*delta(j,1) - sum_k C_jk m_k."""
    car = cd.cartan
    d = cd.d
    if len(m) != d:
        raise ValueError("m must have length d")
    return [
        (L if j == 0 else 0) - sum(car[j][k] * m[k] for k in range(d))
        for j in range(d)
    ]


def quad_form(cd, m, barred=False):
    """m C m, or the barred variant m C m + m_d (m_{d-1} - m_d) (m_0 := 0)."""
    car = cd.cartan
    d = cd.d
    if len(m) != d:
        raise ValueError("m must have length d")
    full = sum(m[j] * car[j][k] * m[k] for j in range(d) for k in range(d))
    if not barred:
        return full
    prev = m[d - 2] if d >= 2 else 0
    return full + m[d - 1] * (prev - m[d - 1])


def quad_form_squares(c, m):
    """m C m as the block sum of squares; used as an independent cross-check."""
    total = 0
    for i, (lo, hi) in enumerate(zip(c.t[:-1], c.t[1:])):
        total += m[lo] ** 2
        for k in range(lo + 1, hi):
            total += (m[k - 1] - m[k]) ** 2
    return total


def _cf_value(quots):
    v = Fraction(quots[-1])
    for q in reversed(quots[:-1]):
        v = q + 1 / v
    return v


def bar_pair(a, b):
    """The convergent pair (abar, bbar) of a/b, from the last-quotient>=2 rep.

    Special cases: (a,1) -> (1,0); (a,a-1) -> (1,1) for a > 2.
    """
    check_pair(a, b)
    if b == 1:
        return (1, 0)
    if b == a - 1 and a > 2:
        return (1, 1)
    c = cf_expand(a, b, last_ge2=True)
    head = list(c.quotients[:-1])
    if a < 2 * b:
        quots = [1] + head
    else:
        quots = [head[0] + 1] + head[1:]
    v = _cf_value(quots)
    return (v.numerator, v.denominator)
