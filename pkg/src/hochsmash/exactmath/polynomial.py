"""Dense univariate polynomials over an exact field.

Coefficients are stored lowest degree first.  They may be ``mpq`` rationals
or :class:`~hochsmash.exactmath.cyclotomic.CyclotomicNumber` values; the
class only relies on ring operations, truthiness for zero tests, and
division for the field-only routines (``divmod``, ``gcd``,
``inverse_series``).
"""

from gmpy2 import mpq

#: Degree reported for the zero polynomial.
ZERO_DEGREE = -1

_ZERO = mpq(0)
_ONE = mpq(1)


def _strip(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return coeffs[:n]


def _as_coeff(c):
    if isinstance(c, (int, str)) or type(c).__name__ == "Fraction":
        return mpq(c)
    return c


class Polynomial:
    """Immutable univariate polynomial ``sum(coeffs[i] * var**i)``."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="t"):
        self.coeffs = tuple(_strip([_as_coeff(c) for c in coeffs]))
        self.var = var

    @classmethod
    def monomial(cls, k, coeff=_ONE, var="t"):
        return cls([_ZERO] * k + [coeff], var)

    @classmethod
    def constant(cls, c, var="t"):
        return cls([c], var)

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _ZERO

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if not self.coeffs:
            return other == 0
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            cs = str(c)
            if mono and cs == "1":
                term = mono
            elif mono and cs == "-1":
                term = "-" + mono
            elif mono:
                term = f"({cs})*{mono}" if any(ch in cs[1:] for ch in "+-") else f"{cs}*{mono}"
            else:
                term = f"({cs})" if any(ch in cs[1:] for ch in "+-") else cs
            parts.append(term)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    # -- arithmetic --------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other], self.var)

    def __add__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial([c * other for c in self.coeffs], self.var)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial((), self.var)
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return Polynomial(out, self.var)

    def __rmul__(self, other):
        return Polynomial([other * c for c in self.coeffs], self.var)

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial([_ONE], self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead_inv = 1 / other.coeffs[-1]
        if len(rem) <= db:
            return Polynomial((), self.var), Polynomial(rem, self.var)
        quot = [_ZERO] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c * lead_inv
            quot[k - db] = q
            for j, bj in enumerate(other.coeffs):
                if bj:
                    rem[k - db + j] = rem[k - db + j] - q * bj
        return Polynomial(quot, self.var), Polynomial(rem[:db], self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self):
        if not self.coeffs:
            return self
        return self * (1 / self.coeffs[-1])

    def map(self, fn):
        return Polynomial([fn(c) for c in self.coeffs], self.var)

    def truncate(self, n):
        """Keep terms of degree < n."""
        return Polynomial(self.coeffs[:n], self.var)

    def shift(self, k):
        """Multiply by ``var**k`` (k >= 0)."""
        if not self.coeffs:
            return self
        return Polynomial([_ZERO] * k + list(self.coeffs), self.var)

    def valuation(self):
        """Lowest exponent with a nonzero coefficient (``ZERO_DEGREE`` for 0)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return ZERO_DEGREE

    def reverse(self, n=None):
        """Return ``var**n * self(1/var)``; ``n`` defaults to the degree."""
        n = self.degree if n is None else n
        if self.degree > n:
            raise ValueError("reversal length below degree")
        padded = list(self.coeffs) + [_ZERO] * (n + 1 - len(self.coeffs))
        return Polynomial(padded[::-1], self.var)

    def inverse_series(self, n):
        """Coefficients of ``1/self`` modulo ``var**n`` as a list of length n.

        Requires an invertible constant term.
        """
        if not self.coeffs or not self.coeffs[0]:
            raise ZeroDivisionError("constant term is zero; no power series inverse")
        a = self.coeffs
        c0inv = 1 / a[0]
        out = []
        for k in range(n):
            acc = _ONE if k == 0 else _ZERO
            for j in range(1, min(k, len(a) - 1) + 1):
                if a[j]:
                    acc = acc - a[j] * out[k - j]
            out.append(acc * c0inv)
        return out


def poly_gcd(a, b):
    """Monic gcd over a field (zero if both inputs are zero)."""
    while b.coeffs:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic."""
    var = a.var
    r0, r1 = a, b
    s0, s1 = Polynomial([_ONE], var), Polynomial((), var)
    t0, t1 = Polynomial((), var), Polynomial([_ONE], var)
    while r1.coeffs:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0.coeffs:
        return r0, s0, t0
    inv = 1 / r0.coeffs[-1]
    return r0 * inv, s0 * inv, t0 * inv
