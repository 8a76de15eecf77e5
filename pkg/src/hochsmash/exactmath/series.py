"""Truncated Laurent series and rational functions in one variable ``t``."""

from gmpy2 import mpq

from ..errors import PoleError
from .polynomial import Polynomial, poly_gcd

_ZERO = mpq(0)


class PowerSeries:
    """Coefficients of ``t**offset ... t**trunc``; unknown beyond ``trunc``.

    Coefficients below ``offset`` are zero.  Coefficients are exact
    rationals in every public table; intermediate series may carry
    cyclotomic coefficients.
    """

    __slots__ = ("offset", "coeffs", "trunc")

    def __init__(self, offset, coeffs, trunc=None):
        coeffs = list(coeffs)
        if trunc is None:
            trunc = offset + len(coeffs) - 1
        if trunc < offset - 1:
            raise ValueError("trunc must be >= offset - 1")
        size = trunc - offset + 1
        if len(coeffs) < size:
            coeffs += [_ZERO] * (size - len(coeffs))
        self.offset = offset
        self.coeffs = tuple(coeffs[:size])
        self.trunc = trunc

    @classmethod
    def zero(cls, offset, trunc):
        return cls(offset, [], trunc)

    @classmethod
    def from_polynomial(cls, poly, trunc, offset=0):
        """Expand ``t**offset * poly`` on ``[offset, trunc]``."""
        return cls(offset, list(poly.coeffs)[: max(trunc - offset + 1, 0)], trunc)

    def __getitem__(self, k):
        if k > self.trunc:
            raise IndexError(f"exponent {k} beyond truncation {self.trunc}")
        if k < self.offset:
            return _ZERO
        return self.coeffs[k - self.offset]

    def window(self, lo, hi):
        """Coefficient list for exponents ``lo..hi`` inclusive."""
        return [self[k] for k in range(lo, hi + 1)]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        return f"PowerSeries(offset={self.offset}, coeffs={[str(c) for c in self.coeffs]}, trunc={self.trunc})"

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        lo = min(self.offset, other.offset)
        hi = min(self.trunc, other.trunc)
        return all(self[k] == other[k] for k in range(lo, hi + 1))

    __hash__ = None

    def _binary(self, other, op):
        lo = min(self.offset, other.offset)
        hi = min(self.trunc, other.trunc)
        return PowerSeries(lo, [op(self[k], other[k]) for k in range(lo, hi + 1)], hi)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __neg__(self):
        return PowerSeries(self.offset, [-c for c in self.coeffs], self.trunc)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries(self.offset, [c * other for c in self.coeffs], self.trunc)
        offset = self.offset + other.offset
        trunc = min(self.trunc + other.offset, other.trunc + self.offset)
        out = [_ZERO] * (trunc - offset + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                k = i + j
                if k >= len(out):
                    break
                if b:
                    out[k] = out[k] + a * b
        return PowerSeries(offset, out, trunc)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by ``t**k``."""
        return PowerSeries(self.offset + k, self.coeffs, self.trunc + k)

    def truncate(self, trunc):
        if trunc > self.trunc:
            raise ValueError("cannot extend a truncated series")
        return PowerSeries(self.offset, self.coeffs[: trunc - self.offset + 1], trunc)

    def reframe(self, offset, trunc):
        """Same series on the window ``[offset, trunc]``.

        Dropping nonzero coefficients below the new offset is an error.
        """
        if trunc > self.trunc:
            raise ValueError(f"series only valid up to {self.trunc}, asked for {trunc}")
        for k in range(self.offset, min(offset, self.trunc + 1)):
            if self[k]:
                raise ValueError(f"nonzero coefficient at {k} below new offset {offset}")
        return PowerSeries(offset, [self[k] for k in range(offset, trunc + 1)], trunc)

    def map(self, fn):
        return PowerSeries(self.offset, [fn(c) for c in self.coeffs], self.trunc)

    def is_zero(self):
        return not any(self.coeffs)


class RationalFunction:
    """Reduced quotient ``num/den`` of rational polynomials in ``t``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Polynomial):
            num = Polynomial([num], "t")
        if den is None:
            den = Polynomial([1], num.var)
        elif not isinstance(den, Polynomial):
            den = Polynomial([den], num.var)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.leading()
        if lead != 1:
            num, den = num * (1 / lead), den * (1 / lead)
        if num.is_zero():
            den = Polynomial([1], den.var)
        self.num = num
        self.den = den

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __repr__(self):
        return f"RationalFunction(({self.num}) / ({self.den}))"

    __str__ = __repr__

    def pole_order(self):
        """Order of vanishing of the denominator minus that of the numerator at 0."""
        if self.num.is_zero():
            return 0
        return self.den.valuation() - self.num.valuation()


def laurent_expand(f, offset, trunc):
    """Exact Laurent coefficients of ``f`` on ``[offset, trunc]``."""
    if trunc < offset:
        raise ValueError("trunc must be >= offset")
    if f.num.is_zero():
        return PowerSeries.zero(offset, trunc)
    vn, vd = f.num.valuation(), f.den.valuation()
    lead_exp = vn - vd
    if lead_exp < offset:
        raise PoleError(f"leading exponent {lead_exp} lies below offset {offset}")
    num = Polynomial(f.num.coeffs[vn:], f.num.var)
    den = Polynomial(f.den.coeffs[vd:], f.den.var)
    n = trunc - lead_exp + 1
    out = []
    if n > 0:
        inv = den.inverse_series(n)
        out = [_ZERO] * n
        for i, a in enumerate(num.coeffs):
            if i >= n:
                break
            if a:
                for j in range(n - i):
                    out[i + j] = out[i + j] + a * inv[j]
    return PowerSeries(offset, [_ZERO] * (lead_exp - offset) + out, trunc)
