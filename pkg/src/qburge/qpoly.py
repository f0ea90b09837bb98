"""Exact Laurent polynomials and truncated power series over Python ints.

A Laurent polynomial is stored as a dict {exponent: coefficient} with no
zero coefficients, so structural equality is mathematical equality.
A truncated series keeps coefficients 0..order in a list; arithmetic on
two series truncates to the smaller order.
"""

from __future__ import annotations


class LaurentPoly:
    """Finite map exponent -> integer coefficient; exponents may be negative."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            self.coeffs = {}
        else:
            self.coeffs = {e: c for e, c in coeffs.items() if c}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls({exponent: coefficient})

    def is_zero(self):
        return not self.coeffs

    def coeff(self, exponent):
        return self.coeffs.get(exponent, 0)

    def degree(self):
        """Top degree, or None for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else None

    def valuation(self):
        """Bottom degree, or None for the zero polynomial."""
        return min(self.coeffs) if self.coeffs else None

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = dict(a)
        for e, c in b.items():
            s = res.get(e, 0) + c
            if s:
                res[e] = s
            else:
                res.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = res
        return out

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(0, other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LaurentPoly()
        if len(a) > len(b):
            a, b = b, a
        if len(a) * len(b) > 256:
            out = self._mul_packed(a, b)
            if out is not None:
                return out
        res = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                s = res.get(e, 0) + c1 * c2
                if s:
                    res[e] = s
                else:
                    del res[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = res
        return out

    @staticmethod
    def _mul_packed(a, b):
        """Multiply two coefficient dicts with nonnegative coefficients by
        packing each into a single big integer (one digit of k bits per
        exponent) and doing one bigint multiplication. Returns None when a
        negative coefficient makes the packing invalid."""
        ma = max(a.values())
        mb = max(b.values())
        if min(a.values()) < 0 or min(b.values()) < 0:
            return None
        va, vb = min(a), min(b)
        k = ma.bit_length() + mb.bit_length() + min(len(a), len(b)).bit_length() + 1
        k = (k + 7) & ~7          # whole bytes so digits can be sliced out
        kb = k // 8
        pa = 0
        for e, c in a.items():
            pa |= c << (k * (e - va))
        pb = 0
        for e, c in b.items():
            pb |= c << (k * (e - vb))
        pr = pa * pb
        raw = pr.to_bytes((pr.bit_length() + k) // 8 + 1, "little")
        res = {}
        off = va + vb
        for i in range(len(raw) // kb):
            c = int.from_bytes(raw[i * kb:(i + 1) * kb], "little")
            if c:
                res[i + off] = c
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = res
        return out

    __rmul__ = __mul__

    def scale(self, exponent, coefficient=1):
        """Multiply by coefficient * q**exponent."""
        if coefficient == 0:
            return LaurentPoly()
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e + exponent: c * coefficient for e, c in self.coeffs.items()}
        return out

    def inverse_q(self):
        """Substitute q -> 1/q, i.e. negate every exponent. Involutive."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {-e: c for e, c in self.coeffs.items()}
        return out

    def subs_power(self, k):
        """Substitute q -> q**k."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e * k: c for e, c in self.coeffs.items()}
        return out

    def has_negative_exponent(self):
        return any(e < 0 for e in self.coeffs)

    def min_negative(self):
        """First (lowest-exponent) negative coefficient as (exponent, coeff), or None."""
        for e in sorted(self.coeffs):
            if self.coeffs[e] < 0:
                return (e, self.coeffs[e])
        return None

    def items_sorted(self):
        return sorted(self.coeffs.items())

    def __repr__(self):
        if not self.coeffs:
            return "LaurentPoly(0)"
        terms = " ".join(f"{e}:{c}" for e, c in self.items_sorted())
        return f"LaurentPoly({terms})"


class TruncatedSeries:
    """Power series known exactly up to q**order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=None):
        if order < 0:
            raise ValueError("series order must be >= 0")
        self.order = order
        if coeffs is None:
            self.coeffs = [0] * (order + 1)
        else:
            if len(coeffs) != order + 1:
                raise ValueError("coefficient list must have length order+1")
            self.coeffs = list(coeffs)

    @classmethod
    def one(cls, order):
        s = cls(order)
        s.coeffs[0] = 1
        return s

    @classmethod
    def from_poly(cls, p, order):
        """Truncate a polynomial with no negative exponents to a series."""
        if p.has_negative_exponent():
            raise ValueError("cannot truncate a Laurent polynomial with negative exponents")
        s = cls(order)
        for e, c in p.coeffs.items():
            if e <= order:
                s.coeffs[e] = c
        return s

    @classmethod
    def from_factors(cls, factors, order):
        """Exact truncation of prod (1 - q**e)**sign over (e, sign) pairs.

        sign +1 is an ordinary factor, sign -1 a reciprocal factor expanded
        as a geometric series. Factors with e > order are dropped (they do
        not affect coefficients 0..order).
        """
        s = cls.one(order)
        for e, sign in factors:
            if e <= 0:
                raise ValueError("factor exponents must be >= 1")
            if e > order:
                continue
            if sign == 1:
                s = s.mul_one_minus(e)
            elif sign == -1:
                s = s.div_one_minus(e)
            else:
                raise ValueError("factor sign must be +1 or -1")
        return s

    def mul_one_minus(self, e):
        """Multiply by (1 - q**e)."""
        out = TruncatedSeries(self.order, self.coeffs)
        for i in range(self.order, e - 1, -1):
            out.coeffs[i] -= self.coeffs[i - e]
        return out

    def div_one_minus(self, e):
        """Multiply by 1/(1 - q**e) = 1 + q**e + q**2e + ..."""
        out = TruncatedSeries(self.order, self.coeffs)
        for i in range(e, self.order + 1):
            out.coeffs[i] += out.coeffs[i - e]
        return out

    def __add__(self, other):
        t = min(self.order, other.order)
        return TruncatedSeries(t, [self.coeffs[i] + other.coeffs[i] for i in range(t + 1)])

    def __sub__(self, other):
        t = min(self.order, other.order)
        return TruncatedSeries(t, [self.coeffs[i] - other.coeffs[i] for i in range(t + 1)])

    def __mul__(self, other):
        t = min(self.order, other.order)
        res = [0] * (t + 1)
        for i in range(t + 1):
            ci = self.coeffs[i]
            if ci:
                for j in range(t + 1 - i):
                    res[i + j] += ci * other.coeffs[j]
        return TruncatedSeries(t, res)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, {self.coeffs})"


def poly_agrees_with_series(p, s):
    """True iff p (no negative exponents) and s agree on exponents 0..s.order."""
    if p.has_negative_exponent():
        raise ValueError("polynomial has negative exponents")
    return all(p.coeff(e) == s.coeffs[e] for e in range(s.order + 1))


def first_series_difference(a, b):
    """First exponent where two series disagree, or None (compared to min order)."""
    t = min(a.order, b.order)
    for e in range(t + 1):
        if a.coeffs[e] != b.coeffs[e]:
            return e
    return None


def first_poly_difference(a, b):
    """First exponent where two Laurent polynomials disagree, or None."""
    exps = set(a.coeffs) | set(b.coeffs)
    for e in sorted(exps):
        if a.coeff(e) != b.coeff(e):
            return e
    return None
