"""Exact arithmetic in the cyclotomic field Q(zeta_m).

Elements are stored in the power basis ``1, z, ..., z^(phi(m)-1)`` reduced
modulo the m-th cyclotomic polynomial, so two elements are equal exactly
when their coefficient tuples are equal.
"""

import re
from fractions import Fraction
from functools import lru_cache

from gmpy2 import mpq

from ..errors import CyclotomicOrderError, LiteralParseError, NotRational
from .polynomial import Polynomial, poly_xgcd

Rational = type(mpq(0))

_ZERO = mpq(0)
_ONE = mpq(1)


def rational(x):
    """Coerce an int, str, Fraction or mpq to an exact rational."""
    if isinstance(x, Rational):
        return x
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass an int, str or Fraction")
    return mpq(x)


def _divisors(n):
    return [k for k in range(1, n + 1) if n % k == 0]


def _mobius(n):
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """The m-th cyclotomic polynomial in the variable ``z``.

    Uses the Moebius product ``prod_{k | m} (z^k - 1)^mu(m/k)``.
    """
    if m < 1:
        raise ValueError("cyclotomic order must be positive")
    num = Polynomial([_ONE], "z")
    den = Polynomial([_ONE], "z")
    for k in _divisors(m):
        mu = _mobius(m // k)
        if mu == 0:
            continue
        factor = Polynomial([-_ONE] + [_ZERO] * (k - 1) + [_ONE], "z")
        if mu == 1:
            num = num * factor
        else:
            den = den * factor
    quot, rem = divmod(num, den)
    assert rem.is_zero()
    return quot


def euler_phi(m):
    return cyclotomic_polynomial(m).degree


class _Field:
    """Per-order constants: phi(m) and the reduced powers z^k, 0 <= k < m."""

    __slots__ = ("order", "phi", "modulus", "powers", "zero", "one")

    def __init__(self, m):
        self.order = m
        self.modulus = cyclotomic_polynomial(m)
        self.phi = self.modulus.degree
        powers = []
        for k in range(m):
            r = Polynomial.monomial(k, _ONE, "z") % self.modulus
            powers.append(tuple(r[i] for i in range(self.phi)))
        self.powers = tuple(powers)
        self.zero = (_ZERO,) * self.phi
        self.one = powers[0]


@lru_cache(maxsize=None)
def _field(m):
    return _Field(m)


def _reduce(field, coeffs):
    """Reduce an arbitrary-length coefficient list (power of z = index)."""
    phi, m = field.phi, field.order
    out = list(coeffs[:phi]) + [_ZERO] * (phi - len(coeffs[:phi]))
    for k in range(phi, len(coeffs)):
        c = coeffs[k]
        if c:
            row = field.powers[k % m]
            for j in range(phi):
                if row[j]:
                    out[j] = out[j] + c * row[j]
    return tuple(out)


class CyclotomicNumber:
    """An element of Q(zeta_m) in canonical power-basis form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        field = _field(order)
        coeffs = [rational(c) for c in coeffs]
        if len(coeffs) != field.phi:
            coeffs = list(_reduce(field, coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def _raw(cls, order, coeffs):
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    @classmethod
    def from_rational(cls, m, q):
        field = _field(m)
        return cls._raw(m, (rational(q),) + field.zero[1:])

    @classmethod
    def zero(cls, m):
        return cls._raw(m, _field(m).zero)

    @classmethod
    def one(cls, m):
        return cls._raw(m, _field(m).one)

    @classmethod
    def zeta(cls, m, k=1):
        """The root of unity ``zeta_m ** k``."""
        field = _field(m)
        return cls._raw(m, field.powers[k % m])

    @property
    def phi(self):
        return len(self.coeffs)

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other):
        if type(other) is CyclotomicNumber:
            if other.order != self.order:
                raise CyclotomicOrderError(
                    f"cannot combine elements of Q(zeta_{self.order}) and Q(zeta_{other.order})"
                )
            return other
        if isinstance(other, (int, Rational, Fraction)):
            return CyclotomicNumber.from_rational(self.order, other)
        return NotImplemented

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        if type(other) is CyclotomicNumber:
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber._raw(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.order, tuple(-a for a in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber._raw(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if type(other) is not CyclotomicNumber:
            if isinstance(other, (int, Rational, Fraction)):
                q = rational(other)
                return CyclotomicNumber._raw(self.order, tuple(a * q for a in self.coeffs))
            return NotImplemented
        if other.order != self.order:
            raise CyclotomicOrderError(
                f"cannot combine elements of Q(zeta_{self.order}) and Q(zeta_{other.order})"
            )
        a, b = self.coeffs, other.coeffs
        n = len(a)
        if n == 1:
            return CyclotomicNumber._raw(self.order, (a[0] * b[0],))
        prod = [_ZERO] * (2 * n - 1)
        for i in range(n):
            ai = a[i]
            if ai:
                for j in range(n):
                    bj = b[j]
                    if bj:
                        prod[i + j] += ai * bj
        return CyclotomicNumber._raw(self.order, _reduce(_field(self.order), prod))

    __rmul__ = __mul__

    def inverse(self):
        if not any(self.coeffs):
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if len(self.coeffs) == 1:
            return CyclotomicNumber._raw(self.order, (1 / self.coeffs[0],))
        field = _field(self.order)
        g, s, _ = poly_xgcd(Polynomial(self.coeffs, "z"), field.modulus)
        assert g.degree == 0
        return CyclotomicNumber._raw(self.order, _reduce(field, list(s.coeffs)))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = CyclotomicNumber.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- text --------------------------------------------------------------

    def __str__(self):
        return format_cyclotomic(self)

    def __repr__(self):
        return f"CyclotomicNumber({self.order}, {format_cyclotomic(self)!r})"

    def __reduce__(self):
        return (CyclotomicNumber, (self.order, [str(c) for c in self.coeffs]))


# Module-level operations mirroring the documented API.

def cyc_add(a, b):
    return a + b


def cyc_neg(a):
    return -a


def cyc_mul(a, b):
    return a * b


def cyc_inv(a):
    return a.inverse()


def as_rational(a):
    """Return ``a`` as an exact rational, or raise :class:`NotRational`."""
    if isinstance(a, (int, Rational, Fraction)):
        return rational(a)
    if any(a.coeffs[1:]):
        raise NotRational(f"{format_cyclotomic(a)} is not rational in Q(zeta_{a.order})")
    return a.coeffs[0]


def embed(m, x):
    """Embed a rational, a cyclotomic literal string or a cyclotomic number into Q(zeta_m)."""
    if type(x) is CyclotomicNumber:
        if x.order != m:
            raise CyclotomicOrderError(f"expected order {m}, got {x.order}")
        return x
    if isinstance(x, str):
        return parse_cyclotomic(x, m)
    return CyclotomicNumber.from_rational(m, x)


# -- literal syntax ----------------------------------------------------------

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+(?:/\d+)?)\s*(?:\*?\s*(?P<zc>z)(?:\s*\^\s*(?P<pc>\d+))?)?
        | (?P<z>z)(?:\s*\^\s*(?P<p>\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_cyclotomic(text, m):
    """Parse a literal such as ``"1/2*z^3 - z + 2"`` into Q(zeta_m)."""
    if not isinstance(text, str):
        raise LiteralParseError(f"expected a string literal, got {type(text).__name__}")
    field = _field(m)
    pos = 0
    coeffs = {}
    s = text.strip()
    if not s:
        raise LiteralParseError("empty cyclotomic literal")
    first = True
    while pos < len(s):
        match = _TERM.match(s, pos)
        if not match or match.end() == pos:
            raise LiteralParseError(f"cannot parse {text!r} at position {pos}")
        if not first and match.group("sign") is None:
            raise LiteralParseError(f"missing '+' or '-' in {text!r} at position {pos}")
        first = False
        sign = -1 if match.group("sign") == "-" else 1
        if match.group("coef") is not None:
            coef = mpq(match.group("coef"))
            if match.group("zc"):
                power = int(match.group("pc")) if match.group("pc") else 1
            else:
                power = 0
        elif match.group("z"):
            coef = _ONE
            power = int(match.group("p")) if match.group("p") else 1
        else:
            raise LiteralParseError(f"cannot parse {text!r} at position {pos}")
        coeffs[power] = coeffs.get(power, _ZERO) + sign * coef
        pos = match.end()
    top = max(coeffs)
    dense = [coeffs.get(k, _ZERO) for k in range(top + 1)]
    return CyclotomicNumber._raw(m, _reduce(field, dense))


def format_cyclotomic(a):
    """Canonical literal: descending powers, e.g. ``"1/2*z^3 - z + 2"``."""
    terms = []
    for k in range(len(a.coeffs) - 1, -1, -1):
        c = a.coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        terms.append((neg, body))
    if not terms:
        return "0"
    neg, body = terms[0]
    out = ("-" if neg else "") + body
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out
