"""Poincare series of Hochschild (co)homology of S(V)#G from class averages.

Grading convention (shared with :mod:`hochsmash.oracle`):

* V sits in internal degree 1, so ``Lambda^n V`` contributes ``t^n``;
* every dual generator in ``V*`` sits in degree -1, including those of the
  moving space, so the factor ``det|_{V_g}^{-1}[d_g]`` of a class with
  ``d_g = dim V_g`` sits in internal degree ``-d_g``;
* the full determinant twist ``det^{-1}`` of the twisted homology sits in
  degree 0, and the global duality shift is ``t^-d``.

Every series is an average over a centralizer of expressions
``weight(h) / det(I - t h|_{V^g})`` computed in Q(zeta_m); the average is
then forced back to Q and checked to be a nonnegative integer.
"""

from dataclasses import dataclass, field
from math import lcm

from gmpy2 import mpq

from .errors import NegativeDimension
from .exactmath import CyclotomicNumber, Polynomial, PowerSeries, RationalFunction, as_rational
from .groups import fixed_space, moving_space
from .linalg import det, exterior_traces, inverse, restrict

HOMOLOGY = "homology"
COHOMOLOGY = "cohomology"
TWISTED = "twisted-homology"
COHOMOLOGY_DUAL = "cohomology-duality"

GRADING_TAG = "V=+1;V*=-1;det|V_g^-1=-d_g;twist det^-1=0;duality shift t^-d"


@dataclass
class SeriesTable:
    """Per homological degree n in ``[0, d]``, a truncated Laurent series in t."""

    group: str
    side: str
    dim: int
    trunc: int
    offset: int
    series: tuple
    per_class: dict = field(default=None)

    def __getitem__(self, n):
        if 0 <= n < len(self.series):
            return self.series[n]
        return PowerSeries.zero(self.offset, self.trunc)

    def coefficient(self, n, degree):
        return self[n][degree]

    def row(self, n):
        """Integer coefficients of degree ``offset .. trunc`` for H_n / H^n."""
        return [int(c) for c in self[n].window(self.offset, self.trunc)]

    def rows(self):
        return [self.row(n) for n in range(self.dim + 1)]


@dataclass
class DualityReport:
    group: str
    dim: int
    trunc: int
    in_sl: bool
    twisted_match: list
    untwisted_match: list
    first_twisted_mismatch: tuple = None
    first_untwisted_mismatch: tuple = None

    @property
    def twisted_ok(self):
        return all(self.twisted_match)

    @property
    def untwisted_ok(self):
        return all(self.untwisted_match)


class _CentralizerTerm:
    """Data for one h in Z_g restricted to V^g and V_g."""

    __slots__ = ("fixed", "ext", "ext_dual", "det_full", "det_moving", "inv_series")

    def __init__(self, h, fixed_basis, moving_basis, length):
        H = restrict(h, fixed_basis)
        self.fixed = H
        self.ext = exterior_traces(H)
        # dual action on (V^g)* in the dual basis is the inverse transpose
        self.ext_dual = exterior_traces(inverse(H).transpose()) if H.rows else self.ext
        self.det_full = det(h)
        self.det_moving = det(restrict(h, moving_basis)) if moving_basis.cols else \
            CyclotomicNumber.one(h.order)
        # det(I - tH) = sum_i (-1)^i e_i t^i
        den = Polynomial([e if i % 2 == 0 else -e for i, e in enumerate(self.ext)], "t")
        self.inv_series = den.inverse_series(length)


class _ClassData:
    def __init__(self, G, cls, length):
        g = G.elements[cls.rep]
        self.cls = cls
        self.fixed = fixed_space(g)
        self.moving = moving_space(g)
        self.k = self.fixed.dim
        self.dg = self.moving.dim
        self.terms = [
            _CentralizerTerm(G.elements[h], self.fixed.basis, self.moving.basis, length)
            for h in cls.centralizer
        ]

    def average(self, weight, length):
        """Rational coefficients of ``(1/|Z|) sum_h weight(h)/det(I - t H)``, length terms."""
        m = self.terms[0].det_full.order
        acc = [CyclotomicNumber.zero(m)] * length
        for term in self.terms:
            w = weight(term)
            if not w:
                continue
            inv = term.inv_series
            acc = [a + w * inv[i] for i, a in enumerate(acc)]
        scale = mpq(1, len(self.terms))
        return [as_rational(a) * scale for a in acc]


def _class_data(G, length):
    cache = G.__dict__.setdefault("_closedform_cache", {})
    data = cache.get("classes")
    if data is None or data[0] < length:
        data = (length, [_ClassData(G, c, length) for c in G.classes()])
        cache["classes"] = data
    return data[1]


def _check_dims(series, where):
    for k, c in zip(range(series.offset, series.trunc + 1), series.coeffs):
        if c < 0 or c.denominator != 1:
            raise NegativeDimension(f"{where}: coefficient {c} at t^{k} is not a dimension")
    return series


def _assemble(G, N, side, per_class, contributions):
    """Sum per-class series lists into a SeriesTable."""
    d = G.dim
    offset = 0 if side in (HOMOLOGY, TWISTED) else -d
    total = [PowerSeries.zero(offset, N) for _ in range(d + 1)]
    breakdown = {} if per_class else None
    for cd, by_n in contributions:
        row = [PowerSeries.zero(offset, N) for _ in range(d + 1)]
        for n, s in by_n.items():
            row[n] = s.reframe(offset, N)
        for n in range(d + 1):
            total[n] = total[n] + row[n]
        if per_class:
            breakdown[cd.cls.rep] = tuple(
                _check_dims(s, f"{side} class {cd.cls.rep} n={n}") for n, s in enumerate(row)
            )
    total = tuple(_check_dims(s, f"{side} n={n}") for n, s in enumerate(total))
    return SeriesTable(G.name, side, d, N, offset, total, breakdown)


def _shifted(coeffs, shift, N):
    """``t**shift * sum coeffs[i] t^i`` valid up to N."""
    if shift > N:
        return PowerSeries.zero(N + 1, N)
    return PowerSeries(shift, coeffs[: N - shift + 1], N)


def homology_series(G, N, per_class=False):
    """H_n(S(V)#G): class g gives ``(S(V^g) (x) Lambda^n V^g)^{Z_g}``."""
    if N < 0:
        raise ValueError("truncation must be >= 0")
    length = N + G.dim + 1
    contributions = []
    for cd in _class_data(G, length):
        by_n = {}
        for n in range(cd.k + 1):
            avg = cd.average(lambda T, n=n: T.ext[n], N - n + 1)
            by_n[n] = _shifted(avg, n, N)
        contributions.append((cd, by_n))
    return _assemble(G, N, HOMOLOGY, per_class, contributions)


def twisted_homology_series(G, N, per_class=False):
    """Homology with coefficients in ``(S(V) (x) det^-1) # G``; twist in degree 0."""
    if N < 0:
        raise ValueError("truncation must be >= 0")
    length = N + G.dim + 1
    contributions = []
    for cd in _class_data(G, length):
        by_n = {}
        for n in range(cd.k + 1):
            avg = cd.average(lambda T, n=n: T.ext[n] * T.det_full.inverse(), N - n + 1)
            by_n[n] = _shifted(avg, n, N)
        contributions.append((cd, by_n))
    return _assemble(G, N, TWISTED, per_class, contributions)


def cohomology_series_direct(G, N, per_class=False):
    """H^n(S(V)#G) from ``S(V^g) (x) Lambda^p (V^g)* (x) det|_{V_g}^{-1}[d_g]``.

    Class g contributes at ``n = d_g + p`` the series
    ``t^(-p-d_g) * avg_h e_p(h*|V^g) det(h|V_g)^-1 / det(I - t h|V^g)``.
    """
    if N < 0:
        raise ValueError("truncation must be >= 0")
    d = G.dim
    length = N + d + 1
    contributions = []
    for cd in _class_data(G, length):
        by_n = {}
        for p in range(cd.k + 1):
            shift = -p - cd.dg
            avg = cd.average(
                lambda T, p=p: T.ext_dual[p] * T.det_moving.inverse(), N - shift + 1
            )
            by_n[cd.dg + p] = _shifted(avg, shift, N)
        contributions.append((cd, by_n))
    return _assemble(G, N, COHOMOLOGY, per_class, contributions)


def cohomology_series_via_duality(G, N, per_class=False):
    """H^n(S(V)#G) from ``S(V^g) (x) Lambda^(d-n) V^g (x) det^-1``.

    The exterior-power isomorphism leaves ``det|_{V^g}^-1`` in degree 0
    while ``det|_{V_g}^-1`` keeps its Koszul degree ``-d_g``, so class g
    contributes ``t^(k_g - n) * avg_h e_(d-n)(h|V^g) det(h)^-1 / det(I - t h|V^g)``
    with ``k_g = dim V^g``: exactly ``t^(k_g)`` times the direct-route series.
    """
    if N < 0:
        raise ValueError("truncation must be >= 0")
    d = G.dim
    length = N + 2 * d + 1
    contributions = []
    for cd in _class_data(G, length):
        by_n = {}
        for n in range(cd.dg, d + 1):
            shift = cd.k - n
            avg = cd.average(
                lambda T, n=n: T.ext[d - n] * T.det_full.inverse(), N - shift + 1
            )
            by_n[n] = _shifted(avg, shift, N)
        contributions.append((cd, by_n))
    return _assemble(G, N, COHOMOLOGY_DUAL, per_class, contributions)


def invariant_molien(G, N):
    """Molien series ``(1/|G|) sum_g 1/det(I - t g)`` of S(V)^G up to t^N."""
    if N < 0:
        raise ValueError("truncation must be >= 0")
    m = G.order_m
    acc = [CyclotomicNumber.zero(m)] * (N + 1)
    for g in G.elements:
        e = exterior_traces(g)
        den = Polynomial([x if i % 2 == 0 else -x for i, x in enumerate(e)], "t")
        inv = den.inverse_series(N + 1)
        acc = [a + b for a, b in zip(acc, inv)]
    scale = mpq(1, len(G))
    return _check_dims(PowerSeries(0, [as_rational(a) * scale for a in acc], N), "molien")


def _compare(lhs, rhs, lo, hi):
    for k in range(lo, hi + 1):
        if lhs[k] != rhs[k]:
            return k, int(lhs[k]), int(rhs[k])
    return None


def duality_check(G, N):
    """Compare H^n with ``t^-d H_(d-n)`` twisted by det^-1 and untwisted."""
    d = G.dim
    if N < d:
        raise ValueError(f"duality check needs trunc >= dim V = {d}")
    coh = cohomology_series_direct(G, N)
    tw = twisted_homology_series(G, N)
    hom = homology_series(G, N)
    lo, hi = -d, N - d
    twisted_match, untwisted_match = [], []
    first_tw = first_un = None
    for n in range(d + 1):
        bad = _compare(coh[n], tw[d - n].shift(-d), lo, hi)
        twisted_match.append(bad is None)
        if bad and first_tw is None:
            first_tw = (n,) + bad
        bad = _compare(coh[n], hom[d - n].shift(-d), lo, hi)
        untwisted_match.append(bad is None)
        if bad and first_un is None:
            first_un = (n,) + bad
    return DualityReport(
        group=G.name,
        dim=d,
        trunc=N,
        in_sl=G.determinant_character().in_sl,
        twisted_match=twisted_match,
        untwisted_match=untwisted_match,
        first_twisted_mismatch=first_tw,
        first_untwisted_mismatch=first_un,
    )


_SERIES_FUNCTIONS = {
    HOMOLOGY: homology_series,
    TWISTED: twisted_homology_series,
    COHOMOLOGY: cohomology_series_direct,
    COHOMOLOGY_DUAL: cohomology_series_via_duality,
}


def series_table(G, side, N, per_class=False):
    try:
        fn = _SERIES_FUNCTIONS[side]
    except KeyError:
        raise ValueError(f"unknown side {side!r}") from None
    return fn(G, N, per_class=per_class)


def exponent(G):
    """Least common multiple of the element orders."""
    return lcm(*(G.element_order(i) for i in range(len(G))))


def rational_form(G, side, n):
    """Reduced rational function whose Laurent expansion is the H_n / H^n series.

    Every ``det(I - t h|V^g)`` divides ``(1 - t^E)^d`` with E the group
    exponent, so the series times that polynomial is a Laurent polynomial
    whose degree is bounded a priori.
    """
    d = G.dim
    E = exponent(G)
    bound = d * E + 2 * d
    N = bound + 4
    table = series_table(G, side, N)
    s = table[n]
    lo = table.offset
    den = Polynomial([1, *([0] * (E - 1)), -1], "t") ** d
    prod = s * PowerSeries(0, den.coeffs, N)
    tail = prod.window(bound + lo + 1, prod.trunc)
    assert not any(tail), "numerator degree bound violated"
    num = Polynomial(prod.window(lo, bound + lo), "t")
    shift = Polynomial.monomial(-lo) if lo < 0 else Polynomial([1])
    return RationalFunction(num, den * shift)
